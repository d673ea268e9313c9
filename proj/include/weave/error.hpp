#pragma once

#include <stdexcept>
#include <string>

namespace weave {

/// Two operands of a binary matrix operation have different orders.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(int lhs, int rhs);
    int lhs_order() const noexcept { return lhs_; }
    int rhs_order() const noexcept { return rhs_; }

private:
    int lhs_;
    int rhs_;
};

/// Matrix order, row word, index or configuration value outside its valid range.
class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A predicate restricted to interweavings was called on a matrix outside Q_n.
class NotAnInterweaving : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual matrix. Line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Invalid enumeration or report configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace weave
