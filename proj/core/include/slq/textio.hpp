#pragma once

// Expression parser and printers.
//
// Grammar (whitespace ignored):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' ['-'] int)?
//   base   := int | 'q' | generator | '(' expr ')'
// Generators are a|alpha, b|beta, c|gamma, d|delta (algebra) and z (the
// Laurent algebra). Products are noncommutative and explicit. Division and
// negative exponents are only allowed on scalars and on z.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/qscalar.hpp"
#include "slq/tensor.hpp"

namespace slq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Format { plain, latex, json };

/// Parse tree of an expression, before evaluation.
struct ExprAst {
  enum class Kind { integer, q, symbol, sum, difference, product, quotient, power, negate };
  Kind kind;
  std::size_t position = 0;
  std::string text;  // integer literal or symbol name
  int exponent = 0;  // for power
  std::vector<std::unique_ptr<ExprAst>> children;
};

std::unique_ptr<ExprAst> parse_expression(std::string_view text);

QScalar parse_scalar(std::string_view text);
AlgebraElement parse_algebra(std::string_view text);
HElement parse_h(std::string_view text);

std::string print_scalar(const QScalar& x, Format format = Format::plain);
std::string print_algebra(const AlgebraElement& x, Format format = Format::plain);
std::string print_h(const HElement& x, Format format = Format::plain);
std::string print_monomial(const PbwMonomial& x, Format format = Format::plain);

std::string print_tensor(const TensorAA& t, Format format = Format::plain);
std::string print_tensor(const TensorAH& t, Format format = Format::plain);
std::string print_tensor(const TensorHA& t, Format format = Format::plain);
std::string print_tensor(const TensorHH& t, Format format = Format::plain);

}  // namespace slq
