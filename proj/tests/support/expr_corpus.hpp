// Deterministic corpus of element strings for the parser round-trip checks.
#pragma once

#include "robba/cli/expr.hpp"

#include <random>
#include <string>
#include <vector>

namespace robba::testing {

struct CorpusEntry {
  RingPtr ring;
  std::string text;
};

class ExprCorpusGen {
 public:
  ExprCorpusGen(RingPtr ring, std::uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  std::string coeff_atom() {
    const int p = ring_->p();
    const bool has_g = ring_->field()->fq().degree() > 1;
    switch (pick(has_g ? 6 : 5)) {
      case 0: return std::to_string(pick(2 * p));
      case 1: return "t";
      case 2: return "t^" + std::to_string(pick(5));
      case 3: return "t^(" + std::to_string(1 + pick(2 * p)) + "/" + std::to_string(p) + ")";
      case 4: return "t^(-" + std::to_string(1 + pick(2)) + ")";
      default: return pick(2) ? "g" : "(g + 1)";
    }
  }

  std::string coeff_expr() {
    std::string out = pick(4) == 0 ? "-" + coeff_atom() : coeff_atom();
    for (int k = pick(3); k > 0; --k) {
      const auto term = pick(3) == 0 ? std::to_string(1 + pick(ring_->p())) + "*" + coeff_atom() : coeff_atom();
      out += (pick(2) ? " + " : " - ") + term;
    }
    if (pick(3) == 0) out += " + O(t^" + std::to_string(4 + pick(12)) + ")";
    return out;
  }

  std::string robba_term() {
    const auto bracket = "[" + coeff_expr() + "]";
    switch (pick(8)) {
      case 0: return std::to_string(pick(5));
      case 1: return "w";
      case 2: return "w*" + bracket;
      case 3: return "w^" + std::to_string(pick(5) - 1) + "*" + bracket;
      case 4: return "-" + bracket;
      case 5: return bracket + "^" + std::to_string(1 + pick(2));
      case 6: return "(w - " + bracket + ")*(" + bracket + " + w^2)";
      default: return bracket;
    }
  }

  std::string robba_expr() {
    std::string out = robba_term();
    for (int k = pick(3); k > 0; --k) out += (pick(3) ? " + " : " - ") + robba_term();
    if (pick(4) == 0) out += " + O(w^" + std::to_string(2 + pick(ring_->wprec() - 1)) + ")";
    return out;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  RingPtr ring_;
  std::mt19937_64 rng_;
};

inline RingPtr corpus_ring(int p, int q, EMode mode, int wprec) {
  RingConfig cfg;
  cfg.field.p = p;
  cfg.field.q = q;
  cfg.e_mode = mode;
  cfg.wprec = wprec;
  return RingContext::create(cfg);
}

/// 200 strings over three rings: F_2 and F_9 coefficients in equal
/// characteristic, F_2 in mixed characteristic.
inline std::vector<CorpusEntry> expr_corpus() {
  const std::vector<RingPtr> rings{corpus_ring(2, 2, EMode::EqualChar, 6), corpus_ring(3, 9, EMode::EqualChar, 5),
                                   corpus_ring(2, 2, EMode::MixedCharPTypical, 4)};
  const std::vector<std::string> fixed{"w - [t]",
                                       "w^-1*[t^(1/2)] + [1] + O(w^3)",
                                       "(w-[t])*(w-[t^2])",
                                       "-w^2",
                                       "[1 + t + O(t^4)]",
                                       "2*w - [t^(-1)]",
                                       "w·[t]",
                                       "((w))",
                                       "O(w^2)",
                                       "0"};
  std::vector<CorpusEntry> out;
  for (const auto& s : fixed) out.push_back({rings[0], s});
  std::uint64_t seed = 20261016;
  while (out.size() < 200) {
    const auto& ring = rings[out.size() % rings.size()];
    ExprCorpusGen gen(ring, seed++);
    out.push_back({ring, gen.robba_expr()});
  }
  return out;
}

/// Parse, print the syntax tree, parse again; evaluate, print the element,
/// evaluate again. Returns an empty string on success, else a diagnostic.
inline std::string round_trip_failure(const CorpusEntry& e) {
  using namespace robba::cli;
  try {
    const auto tree = parse_expr(e.text);
    const auto printed = print_expr(*tree);
    if (!same_tree(*tree, *parse_expr(printed))) return "tree mismatch after printing as '" + printed + "'";
    const auto x = eval_robba(*tree, e.ring);
    if (!same_element(x, eval_robba(*parse_expr(printed), e.ring))) return "printed tree evaluates differently";
    const auto text = x.to_string();
    const auto y = parse_element(text, e.ring);
    if (!same_element(x, y)) return "element '" + text + "' reparses as '" + y.to_string() + "'";
  } catch (const std::exception& ex) {
    return std::string("exception: ") + ex.what();
  }
  return {};
}

}  // namespace robba::testing
