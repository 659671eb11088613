#include "robba/valuations.hpp"

#include "robba/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace robba {

namespace {

// Exponent functions of rho′ are piecewise linear; each piece is a Line.
struct Line {
  Rational slope;
  Rational icpt;
  Rational at(const Rational& r) const { return slope * r + icpt; }
};

Line operator+(const Line& a, const Line& b) { return {a.slope + b.slope, a.icpt + b.icpt}; }
Line operator-(const Line& a, const Line& b) { return {a.slope - b.slope, a.icpt - b.icpt}; }

const Line& argmin(const std::vector<Line>& lines, const Rational& r) {
  return *std::min_element(lines.begin(), lines.end(),
                           [&](const Line& a, const Line& b) { return a.at(r) < b.at(r); });
}

// Lines describing F(rho′) = exponent of H(u, rho′)(core) through one
// presentation: F >= min(lower families[D]) for every truncation depth D,
// and F <= min(upper) when that stays below the ϖ^L floor.
struct CoreLines {
  std::vector<std::vector<Line>> lower;
  std::vector<Line> upper;
  std::vector<Line> floor;
};

CoreLines core_lines(const WittElem& core, const CoeffElem& u) {
  const auto pres = stable_presentation(core, u);
  const Rational t_exp = core.ctx()->field()->config().t_exponent;
  CoreLines out;
  const Rational L(pres.source_levels);
  out.floor.push_back({L, L});
  if (!u.is_zero()) out.floor.push_back({Rational(0), L * t_exp * u.valuation()});
  std::vector<Line> entries;
  for (int i = 0; i < pres.depth(); ++i) {
    const auto n = *digit_lambda(pres.entries[i]);
    const Line line{Rational(i), Rational(i) + n.value()};
    entries.push_back(line);
    if (n.is_exact()) out.upper.push_back(line);
  }
  for (int D = 0; D <= pres.depth(); ++D) {
    std::vector<Line> fam(entries.begin(), entries.begin() + D);
    if (const auto& r = pres.residual_norms[static_cast<std::size_t>(D)]) {
      fam.push_back({Rational(D), Rational(D) + r->value()});
    }
    fam.insert(fam.end(), out.floor.begin(), out.floor.end());
    out.lower.push_back(std::move(fam));
  }
  return out;
}

// F(x) = F(core) - m·t_exp - k·min(rho′ + 1, E) with E = t_exp·v(u).
struct Normalized {
  CoreLines core;
  int k;
  Rational shift;
  std::optional<Rational> E;

  Line adjust(const Rational& r) const {
    Line adj{Rational(0), -shift};
    if (k == 0) return adj;
    const Line varpi = (E && *E <= r + 1) ? Line{Rational(0), *E} : Line{Rational(1), Rational(1)};
    return adj - Line{varpi.slope * k, varpi.icpt * k};
  }
};

Normalized normalized(const RobbaElem& x, const CoeffElem& u) {
  const auto nf = robba_normalize(x);
  const Rational t_exp = x.ctx()->field()->config().t_exponent;
  std::optional<Rational> E;
  if (!u.is_zero()) E = t_exp * u.valuation();
  return {core_lines(nf.core, u), nf.k, nf.m * t_exp, E};
}

void add_crossings(std::set<Rational>& out, const std::vector<Line>& lines) {
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].slope == lines[b].slope) continue;
      out.insert((lines[b].icpt - lines[a].icpt) / (lines[a].slope - lines[b].slope));
    }
  }
}

// The active linear piece of G = max(lower F_x, lower F_{x-y}) - upper F_y at
// rho′ = m, or nothing when the upper bound for y is not trustworthy there.
std::optional<Line> active_gap(const std::vector<const Normalized*>& lows, const Normalized& y, const Rational& m) {
  std::optional<Line> low;
  for (const auto* n : lows) {
    for (const auto& fam : n->core.lower) {
      const Line l = argmin(fam, m) + n->adjust(m);
      if (!low || l.at(m) > low->at(m)) low = l;
    }
  }
  if (y.core.upper.empty()) return std::nullopt;
  const Line up = argmin(y.core.upper, m);
  if (up.at(m) >= argmin(y.core.floor, m).at(m)) return std::nullopt;
  return *low - (up + y.adjust(m));
}

}  // namespace

Rational persistence_interval(const RobbaElem& x, const RobbaElem& y, const CoeffElem& u, const Rational& rho,
                              Sign sign) {
  require_admissible_center(u);
  const auto bx = eval_beta5(u, rho, sign, x);
  const auto by = eval_beta5(u, rho, sign, y);
  if (by.below) {
    if (!bx.below) throw_indeterminate("β(y) vanishes at precision while β(x) does not");
  } else if (!bx.below && bx.value > by.value) {
    throw_precondition("precondition", "β(x) = " + bx.value.to_string() + " exceeds β(y) = " + by.value.to_string());
  }

  const auto nx = normalized(x, u);
  const auto nz = normalized(robba_sub(x, y), u);
  const auto ny = normalized(y, u);
  std::set<Rational> cuts;
  std::vector<Line> all;
  for (const auto* n : {&nx, &nz, &ny}) {
    for (const auto& fam : n->core.lower) all.insert(all.end(), fam.begin(), fam.end());
    all.insert(all.end(), n->core.upper.begin(), n->core.upper.end());
    if (n->E) cuts.insert(*n->E - 1);
  }
  add_crossings(cuts, all);
  const std::vector<const Normalized*> lows{&nx, &nz};

  // Walk away from rho one linear piece at a time.
  const bool down = sign == Sign::Plus;
  std::vector<Rational> stops;
  for (const auto& c : cuts) {
    if (down ? (c < rho && c > 0) : c > rho) stops.push_back(c);
  }
  if (down) {
    std::sort(stops.begin(), stops.end(), std::greater<>());
    stops.push_back(Rational(0));
  } else {
    stops.push_back((stops.empty() ? rho : stops.back()) + 1);
  }
  Rational from = rho;
  for (std::size_t j = 0; j < stops.size(); ++j) {
    const Rational to = stops[j];
    const bool last = j + 1 == stops.size();
    const auto gap = active_gap(lows, ny, (from + to) / 2);
    if (!gap || gap->at(from) < 0) {
      if (from == rho) throw_indeterminate("the inequality cannot be confirmed next to rho at this precision");
      return from;
    }
    if (gap->at(to) >= 0) {
      if (last && !down && gap->slope < 0) return to - gap->at(to) / gap->slope;
      from = to;
      continue;
    }
    // Linear crossing inside the piece.
    const Rational s = from - gap->at(from) / gap->slope;
    if (s == rho) throw_indeterminate("the inequality cannot be confirmed next to rho at this precision");
    return s;
  }
  return from;
}

namespace {

bool leq(const NormExp& a, const NormExp& b) {
  // |a| <= |b| in norm, i.e. exponent a >= exponent b.
  return norm_leq(a, b);
}

bool leq(const Beta5Value& a, const Beta5Value& b) {
  if (a.below) {
    // a has e >= bound with unknown k.
    if (a.bound > b.value.e()) return true;
    throw_indeterminate("β(f) is below precision at a level comparable with β(g)");
  }
  return a.value <= b.value;
}

}  // namespace

bool rational_subset_member(const PointDescriptor& d, const RationalSubset& subset) {
  const RingPtr& ctx = subset.g.ctx();
  validate(ctx, d);
  if (const auto* c = std::get_if<CenterPoint>(&d)) {
    const auto vg = eval_H(c->u, c->r, subset.g);
    if (vg.is_below()) throw_precondition("zero_denominator", "v(g) vanishes at precision: " + vg.to_string());
    for (const auto& f : subset.fs) {
      if (!leq(eval_H(c->u, c->r, f), vg)) return false;
    }
    return true;
  }
  if (const auto* t5 = std::get_if<Type5Point>(&d)) {
    const auto vg = eval_beta5(t5->u, t5->rho, t5->sign, subset.g);
    if (vg.below) throw_precondition("zero_denominator", "v(g) vanishes at precision p^-" + to_string(vg.bound));
    for (const auto& f : subset.fs) {
      if (!leq(eval_beta5(t5->u, t5->rho, t5->sign, f), vg)) return false;
    }
    return true;
  }
  throw_precondition("point_not_evaluable", "type-4 prefixes cannot be evaluated pointwise");
}

CoverReport covering_check(const std::vector<RationalSubset>& subsets, const std::vector<PointDescriptor>& samples) {
  CoverReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    std::vector<Membership> row;
    std::vector<std::string> errs;
    bool any_in = false, any_error = false;
    for (const auto& subset : subsets) {
      try {
        const bool in = rational_subset_member(samples[s], subset);
        row.push_back(in ? Membership::In : Membership::Out);
        errs.emplace_back();
        any_in = any_in || in;
      } catch (const Error& e) {
        row.push_back(Membership::Error);
        errs.emplace_back(e.what());
        any_error = true;
      }
    }
    if (!any_in) (any_error ? report.undetermined : report.uncovered).push_back(s);
    report.matrix.push_back(std::move(row));
    report.errors.push_back(std::move(errs));
  }
  return report;
}

}  // namespace robba
