#pragma once

#include <stdexcept>
#include <string>

namespace leviscope {

/// Base class for all leviscope errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in different variable spaces.
class space_mismatch_error : public error {
public:
    using error::error;
};

/// Input violates an operation precondition (zero germ, non-I2 germ, ...).
class domain_error : public error {
public:
    using error::error;
};

/// A catalog parameter violates its constraint column.
class parameter_error : public error {
public:
    using error::error;
};

/// Term-count or degree guardrail exceeded.
class resource_limit_error : public error {
public:
    using error::error;
};

/// The ideal contains a unit; the variety is empty.
class empty_variety_error : public error {
public:
    using error::error;
};

/// No unit multiple of the polynomial satisfies the reality condition.
class not_real_error : public error {
public:
    using error::error;
};

/// A supplied P/H split does not sum back to the complexified polynomial.
class inconsistent_split_error : public error {
public:
    using error::error;
};

/// Syntax error with source position.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace leviscope
