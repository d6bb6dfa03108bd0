#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "lcsz/reductions.hpp"
#include "lcsz/text.hpp"

namespace lcsz::io {

enum class Encoding { ascii, ints };

struct Instance {
    Text x, y;
    Encoding encoding = Encoding::ints;
};

// Header "lcsz v1 sigma=<k> enc=<ascii|ints>", then the x line and the y line.
// sigma must equal the number of distinct symbols of x and y. Errors are ParseError.
Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

// ascii is used only when every symbol has a code; ints always works.
void write_instance(std::ostream& out, const Text& x, const Text& y, Encoding enc);
void save_instance(const std::string& path, const Text& x, const Text& y, Encoding enc);
Encoding preferred_encoding(const Text& x, const Text& y);

// Header "ov v1 D=<D>", A rows, one blank line, B rows; rows are D characters of 0/1.
reductions::OVInstance parse_ov(std::istream& in);
reductions::OVInstance load_ov(const std::string& path);
void write_ov(std::ostream& out, const reductions::OVInstance& inst);

} // namespace lcsz::io
