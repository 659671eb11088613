#include "robba/cli/expr.hpp"

#include "robba/error.hpp"

#include <cctype>
#include <optional>

namespace robba::cli {

namespace {

[[noreturn]] void syntax_error(const std::string& what, int column) {
  throw Error(ErrorCategory::Parse, "syntax", what, "column " + std::to_string(column));
}

[[noreturn]] void semantic_error(const std::string& what, int column) {
  throw Error(ErrorCategory::Parse, "semantic", what, "column " + std::to_string(column));
}

enum class Tok { Int, T, G, W, O, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBrack, RBrack, End };

struct Token {
  Tok kind;
  std::int64_t value = 0;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const int col = static_cast<int>(i) + 1;
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::int64_t v = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        if (v > (INT64_MAX - 9) / 10) syntax_error("integer literal too large", col);
        v = v * 10 + (src[i] - '0');
        ++i;
      }
      out.push_back({Tok::Int, v, col});
      continue;
    }
    // UTF-8 middle dot and varpi.
    if (src.substr(i, 2) == "\xC2\xB7") {
      out.push_back({Tok::Star, 0, col});
      i += 2;
      continue;
    }
    if (src.substr(i, 2) == "\xCF\x96") {
      out.push_back({Tok::W, 0, col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case 't': kind = Tok::T; break;
      case 'g': kind = Tok::G; break;
      case 'w': kind = Tok::W; break;
      case 'O': kind = Tok::O; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      default: syntax_error(std::string("unexpected character '") + src[i] + "'", col);
    }
    out.push_back({kind, 0, col});
    ++i;
  }
  out.push_back({Tok::End, 0, static_cast<int>(src.size()) + 1});
  return out;
}

ExprPtr node(Expr::Kind kind, int column, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->column = column;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = sum();
    if (peek().kind != Tok::End) syntax_error("unexpected trailing input", peek().column);
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) syntax_error(std::string("expected ") + what, peek().column);
    return take();
  }

  // sum = product { ("+" | "-") product }
  ExprPtr sum() {
    auto lhs = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto op = take();
      auto rhs = product();
      lhs = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.column, lhs, rhs);
    }
    return lhs;
  }

  // product = unary { "*" unary }
  ExprPtr product() {
    auto lhs = unary();
    while (peek().kind == Tok::Star) {
      const auto op = take();
      lhs = node(Expr::Kind::Mul, op.column, lhs, unary());
    }
    return lhs;
  }

  // unary = "-" unary | power
  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const auto op = take();
      return node(Expr::Kind::Neg, op.column, unary());
    }
    return power();
  }

  // power = atom [ "^" exponent ]
  ExprPtr power() {
    auto base = atom();
    if (peek().kind != Tok::Caret) return base;
    const auto op = take();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->column = op.column;
    e->lhs = base;
    e->exponent = exponent();
    return e;
  }

  // exponent = ["-"] integer | "(" ["-"] integer ["/" integer] ")"
  Rational exponent() {
    if (accept(Tok::LParen)) {
      const bool neg = accept(Tok::Minus);
      const auto num = expect(Tok::Int, "integer exponent");
      std::int64_t den = 1;
      if (accept(Tok::Slash)) {
        const auto d = expect(Tok::Int, "denominator");
        if (d.value == 0) syntax_error("zero denominator", d.column);
        den = d.value;
      }
      expect(Tok::RParen, "')'");
      return Rational(neg ? -num.value : num.value, den);
    }
    const bool neg = accept(Tok::Minus);
    const auto num = expect(Tok::Int, "integer exponent");
    return Rational(neg ? -num.value : num.value);
  }

  ExprPtr atom() {
    const auto tok = take();
    switch (tok.kind) {
      case Tok::Int: {
        auto e = node(Expr::Kind::Integer, tok.column);
        std::const_pointer_cast<Expr>(e)->value = tok.value;
        return e;
      }
      case Tok::T: return node(Expr::Kind::T, tok.column);
      case Tok::G: return node(Expr::Kind::Gen, tok.column);
      case Tok::W: return node(Expr::Kind::Varpi, tok.column);
      case Tok::LBrack: {
        auto inner = sum();
        expect(Tok::RBrack, "']'");
        return node(Expr::Kind::Teich, tok.column, inner);
      }
      case Tok::O: {
        expect(Tok::LParen, "'(' after O");
        auto inner = sum();
        expect(Tok::RParen, "')'");
        return node(Expr::Kind::Prec, tok.column, inner);
      }
      case Tok::LParen: {
        auto inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End: syntax_error("unexpected end of input", tok.column);
      default: syntax_error("expected an operand", tok.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string print_at(const Expr& e, int parent);

std::string print_exponent(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return "(" + to_string(r) + ")";
}

std::string print_bare(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer: return std::to_string(e.value);
    case Expr::Kind::T: return "t";
    case Expr::Kind::Gen: return "g";
    case Expr::Kind::Varpi: return "w";
    case Expr::Kind::Teich: return "[" + print_at(*e.lhs, 0) + "]";
    case Expr::Kind::Prec: return "O(" + print_at(*e.lhs, 0) + ")";
    case Expr::Kind::Neg: return "-" + print_at(*e.lhs, 3);
    case Expr::Kind::Add: return print_at(*e.lhs, 1) + " + " + print_at(*e.rhs, 2);
    case Expr::Kind::Sub: return print_at(*e.lhs, 1) + " - " + print_at(*e.rhs, 2);
    case Expr::Kind::Mul: return print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
    case Expr::Kind::Pow: return print_at(*e.lhs, 5) + "^" + print_exponent(e.exponent);
  }
  throw_internal("unknown expression kind");
}

std::string print_at(const Expr& e, int parent) {
  auto s = print_bare(e);
  return precedence(e) < parent ? "(" + s + ")" : s;
}

// ---------------------------------------------------------------- evaluation

std::uint64_t nonnegative_power(const Expr& e) {
  if (e.exponent.denominator() != 1 || e.exponent < 0) {
    semantic_error("exponent " + to_string(e.exponent) + " must be a nonnegative integer here", e.column);
  }
  return static_cast<std::uint64_t>(e.exponent.numerator());
}

/// t^e or t written as a precision marker.
Rational t_exponent_of(const Expr& e) {
  if (e.kind == Expr::Kind::T) return Rational(1);
  if (e.kind == Expr::Kind::Pow && e.lhs->kind == Expr::Kind::T) return e.exponent;
  if (e.kind == Expr::Kind::Integer && e.value == 1) return Rational(0);
  semantic_error("O(...) inside brackets takes t^e", e.column);
}

int w_exponent_of(const Expr& e) {
  if (e.kind == Expr::Kind::Varpi) return 1;
  if (e.kind == Expr::Kind::Pow && e.lhs->kind == Expr::Kind::Varpi && e.exponent.denominator() == 1) {
    return static_cast<int>(e.exponent.numerator());
  }
  if (e.kind == Expr::Kind::Integer && e.value == 1) return 0;
  semantic_error("O(...) outside brackets takes w^k", e.column);
}


bool mentions(const Expr& e, std::initializer_list<Expr::Kind> kinds) {
  for (auto k : kinds) {
    if (e.kind == k) return true;
  }
  return (e.lhs && mentions(*e.lhs, kinds)) || (e.rhs && mentions(*e.rhs, kinds));
}

void flatten_sum(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->kind == Expr::Kind::Add) {
    flatten_sum(e->lhs, out);
    flatten_sum(e->rhs, out);
  } else {
    out.push_back(e);
  }
}

/// c*t^a with c built from integers and g only.
std::optional<std::pair<Rational, FqElem>> monomial_of(const Expr& e, const FieldPtr& field) {
  using K = Expr::Kind;
  auto constant = [&](const Expr& c) -> std::optional<FqElem> {
    if (mentions(c, {K::T, K::Prec, K::Varpi, K::Teich})) return std::nullopt;
    const auto v = eval_coeff(c, field);
    if (v.is_zero()) return FqElem{0};
    if (v.terms().size() != 1 || v.terms().begin()->first != 0) return std::nullopt;
    return v.terms().begin()->second;
  };
  auto t_power = [](const Expr& t) -> std::optional<Rational> {
    if (t.kind == K::T) return Rational(1);
    if (t.kind == K::Pow && t.lhs->kind == K::T) return t.exponent;
    return std::nullopt;
  };
  if (auto a = t_power(e)) return std::pair{*a, FqElem{1}};
  if (e.kind == K::Mul) {
    if (auto a = t_power(*e.rhs)) {
      if (auto c = constant(*e.lhs)) return std::pair{*a, *c};
      return std::nullopt;
    }
  }
  if (auto c = constant(e)) return std::pair{Rational(0), *c};
  return std::nullopt;
}

/// A sum of monomials and at most one O(t^k) denotes the series with exactly
/// those terms, known to t^k (the default precision without O).
std::optional<CoeffElem> series_literal(const ExprPtr& e, const FieldPtr& field) {
  std::vector<ExprPtr> parts;
  flatten_sum(e, parts);
  if (parts.size() < 2) return std::nullopt;
  const auto& fq = field->fq();
  CoeffElem::Terms terms;
  std::optional<Rational> prec;
  for (const auto& part : parts) {
    if (part->kind == Expr::Kind::Prec) {
      if (prec) return std::nullopt;
      prec = t_exponent_of(*part->lhs);
      continue;
    }
    const auto m = monomial_of(*part, field);
    if (!m) return std::nullopt;
    if (!has_p_power_denominator(m->first, field->p())) return std::nullopt;
    auto& slot = terms[m->first];
    slot = fq.add(slot, m->second);
  }
  return CoeffElem(field, std::move(terms), prec.value_or(field->config().default_tprec));
}

/// w^k*[c]; [c] is level 0 and w^k is w^k*[1].
std::optional<std::pair<int, ExprPtr>> digit_of(const ExprPtr& e) {
  using K = Expr::Kind;
  auto level = [](const Expr& w) -> std::optional<int> {
    if (w.kind == K::Varpi) return 1;
    if (w.kind == K::Pow && w.lhs->kind == K::Varpi && w.exponent.denominator() == 1) {
      return static_cast<int>(w.exponent.numerator());
    }
    return std::nullopt;
  };
  if (e->kind == K::Teich) return std::pair{0, e->lhs};
  if (auto k = level(*e)) return std::pair{*k, ExprPtr{}};
  if (e->kind == K::Mul && e->rhs->kind == K::Teich) {
    if (auto k = level(*e->lhs)) return std::pair{*k, e->rhs->lhs};
  }
  return std::nullopt;
}

/// A sum of digit terms at distinct levels and at most one O(w^k) denotes
/// the element with exactly those Teichmuller digits. Adding them with ring
/// arithmetic would be the same element but, in mixed characteristic, the
/// carries cost t-precision.
std::optional<RobbaElem> digit_literal(const ExprPtr& e, const RingPtr& ring) {
  std::vector<ExprPtr> parts;
  flatten_sum(e, parts);
  const auto& field = ring->field();
  RobbaElem::Digits digits;
  std::optional<int> wprec;
  for (const auto& part : parts) {
    if (part->kind == Expr::Kind::Prec) {
      if (wprec) return std::nullopt;
      wprec = w_exponent_of(*part->lhs);
      continue;
    }
    const auto d = digit_of(part);
    if (!d || digits.contains(d->first)) return std::nullopt;
    digits.emplace(d->first, d->second ? eval_coeff(*d->second, field) : CoeffElem::constant(field, field->fq().one()));
  }
  if (digits.empty() && !wprec) return std::nullopt;
  return RobbaElem(ring, std::move(digits), wprec.value_or(ring->wprec()));
}

}  // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(tokenize(src)).parse(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr) || (a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !same_tree(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_tree(*a.rhs, *b.rhs)) return false;
  return true;
}

CoeffElem eval_coeff(const Expr& e, const FieldPtr& field) {
  const auto& fq = field->fq();
  if (e.kind == Expr::Kind::Add) {
    if (auto lit = series_literal(std::shared_ptr<const Expr>(std::shared_ptr<const Expr>{}, &e), field)) return *lit;
  }
  switch (e.kind) {
    case Expr::Kind::Integer: return CoeffElem::constant(field, fq.from_int(e.value));
    case Expr::Kind::T: return CoeffElem::t_power(field, Rational(1));
    case Expr::Kind::Gen: return CoeffElem::constant(field, fq.generator_symbol());
    case Expr::Kind::Varpi: semantic_error("w is not a coefficient; use it outside brackets", e.column);
    case Expr::Kind::Teich: semantic_error("nested Teichmuller brackets", e.column);
    case Expr::Kind::Prec: return CoeffElem::zero(field, t_exponent_of(*e.lhs));
    case Expr::Kind::Neg: return coeff_neg(eval_coeff(*e.lhs, field));
    case Expr::Kind::Add: return coeff_add(eval_coeff(*e.lhs, field), eval_coeff(*e.rhs, field));
    case Expr::Kind::Sub: return coeff_sub(eval_coeff(*e.lhs, field), eval_coeff(*e.rhs, field));
    case Expr::Kind::Mul: return coeff_mul(eval_coeff(*e.lhs, field), eval_coeff(*e.rhs, field));
    case Expr::Kind::Pow: {
      if (e.lhs->kind == Expr::Kind::T) {
        if (!has_p_power_denominator(e.exponent, field->p())) {
          semantic_error("t-exponent " + to_string(e.exponent) + " needs a p-power denominator", e.column);
        }
        return CoeffElem::t_power(field, e.exponent);
      }
      auto base = eval_coeff(*e.lhs, field);
      if (e.exponent.denominator() == 1 && e.exponent < 0) {
        return coeff_pow(coeff_inv(base), static_cast<std::uint64_t>(-e.exponent.numerator()));
      }
      return coeff_pow(base, nonnegative_power(e));
    }
  }
  throw_internal("unknown expression kind");
}

RobbaElem eval_robba(const Expr& e, const RingPtr& ring) {
  if (e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Mul || e.kind == Expr::Kind::Teich) {
    if (auto lit = digit_literal(std::shared_ptr<const Expr>(std::shared_ptr<const Expr>{}, &e), ring)) return *lit;
  }
  switch (e.kind) {
    case Expr::Kind::Integer: return robba_from_witt(WittElem::from_int(ring, e.value));
    case Expr::Kind::T:
    case Expr::Kind::Gen: semantic_error("coefficient symbols belong inside [...]", e.column);
    case Expr::Kind::Varpi: return RobbaElem::varpi_power(ring, 1);
    case Expr::Kind::Teich: return RobbaElem::teichmuller(ring, eval_coeff(*e.lhs, ring->field()));
    case Expr::Kind::Prec: return RobbaElem(ring, {}, w_exponent_of(*e.lhs));
    case Expr::Kind::Neg: return robba_neg(eval_robba(*e.lhs, ring));
    case Expr::Kind::Add: return robba_add(eval_robba(*e.lhs, ring), eval_robba(*e.rhs, ring));
    case Expr::Kind::Sub: return robba_sub(eval_robba(*e.lhs, ring), eval_robba(*e.rhs, ring));
    case Expr::Kind::Mul: return robba_mul(eval_robba(*e.lhs, ring), eval_robba(*e.rhs, ring));
    case Expr::Kind::Pow: {
      if (e.exponent.denominator() != 1) semantic_error("w-level exponents must be integers", e.column);
      if (e.lhs->kind == Expr::Kind::Varpi) {
        return RobbaElem::varpi_power(ring, static_cast<int>(e.exponent.numerator()));
      }
      return robba_pow(eval_robba(*e.lhs, ring), static_cast<unsigned>(nonnegative_power(e)));
    }
  }
  throw_internal("unknown expression kind");
}

CoeffElem parse_coeff(std::string_view src, const FieldPtr& field) { return eval_coeff(*parse_expr(src), field); }

RobbaElem parse_element(std::string_view src, const RingPtr& ring) { return eval_robba(*parse_expr(src), ring); }

bool same_element(const RobbaElem& a, const RobbaElem& b) {
  return a.wprec() == b.wprec() && a.digits() == b.digits();
}

}  // namespace robba::cli
