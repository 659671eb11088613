// Element syntax for the command line: coefficient series inside brackets,
// Robba elements outside. See README for the grammar.
#pragma once

#include "robba/robba.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace robba::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Integer,  // value
    T,        // the series variable t
    Gen,      // generator g of F_{q^m} over F_p
    Varpi,    // w
    Teich,    // [arg]
    Prec,     // O(arg)
    Neg,
    Add,
    Sub,
    Mul,
    Pow,  // base ^ exponent
  };

  Kind kind;
  std::int64_t value = 0;
  Rational exponent{0};
  ExprPtr lhs;
  ExprPtr rhs;
  /// 1-based column of the first character.
  int column = 0;
};

/// Throws Error(Parse, "syntax") with the column in location().
ExprPtr parse_expr(std::string_view src);

/// Canonical text; parse_expr(print_expr(e)) is structurally equal to e.
std::string print_expr(const Expr& e);

bool same_tree(const Expr& a, const Expr& b);

/// Element of L. Throws Error(Parse, "semantic") for w or brackets.
CoeffElem eval_coeff(const Expr& e, const FieldPtr& field);
/// Element of the Robba ring. Throws Error(Parse, "semantic") for t or g
/// outside brackets.
RobbaElem eval_robba(const Expr& e, const RingPtr& ring);

CoeffElem parse_coeff(std::string_view src, const FieldPtr& field);
RobbaElem parse_element(std::string_view src, const RingPtr& ring);

/// Same stored digits and precision.
bool same_element(const RobbaElem& a, const RobbaElem& b);

}  // namespace robba::cli
