#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nashseq/arc.hpp"
#include "nashseq/polynomial.hpp"

namespace nashseq {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar: sums and products of variables and literals (integers or p/q),
/// '^' with a non-negative integer exponent, unary minus, parentheses.
/// Division is accepted only by nonzero constants.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names, Field field);

/// ';'-separated polynomial list; empty entries are rejected.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const std::vector<std::string>& names,
                                              Field field);

/// "(p_1(t), ..., p_n(t))" with each coordinate a polynomial in t.
Arc parse_arc(std::string_view text, Field field);

/// "(c_1, ..., c_n)" of constants.
std::vector<FieldElement> parse_vector(std::string_view text, Field field);

/// Splits "a,b,c" honoring parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep);

} // namespace nashseq
