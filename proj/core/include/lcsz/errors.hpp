#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcsz {

// Raised when an operation would materialize more DP cells than allowed.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(std::size_t cells, std::size_t budget)
        : std::runtime_error("size guard: " + std::to_string(cells) + " cells exceed budget of " +
                             std::to_string(budget)),
          cells_(cells), budget_(budget) {}
    std::size_t cells() const noexcept { return cells_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t cells_;
    std::size_t budget_;
};

// A precondition of a construction or a setting is not met.
class InfeasibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace lcsz
