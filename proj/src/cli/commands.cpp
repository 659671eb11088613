#include "robba/cli/cli.hpp"
#include "robba/cli/expr.hpp"

#include "robba/error.hpp"
#include "robba/factor.hpp"
#include "robba/points.hpp"
#include "robba/presentation.hpp"
#include "robba/tate_descent.hpp"
#include "robba/valuations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace robba::cli {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void input_error(const std::string& what, const std::string& where) {
  throw Error(ErrorCategory::Parse, "bad_input", what, where);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::Parse, "io", "cannot read '" + path + "'", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// JSON argument, inline or "@path".
json parse_json_arg(const std::string& text, const std::string& option) {
  const auto body = !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    input_error(std::string("invalid JSON: ") + e.what(), option);
  }
}

/// Rational from a JSON string "a/b" or an integer; floats are refused.
Rational json_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) input_error("expected a rational as \"a/b\"", where);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    input_error("expected a rational as \"a/b\", got '" + j.get<std::string>() + "'", where);
  }
}

std::string json_string(const json& j, const std::string& where) {
  if (!j.is_string()) input_error("expected a string", where);
  return j.get<std::string>();
}

/// Re-tags expression errors with the option that carried the text.
template <class F>
auto with_location(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::Parse) throw;
    const auto loc = e.location().empty() ? where : where + ", " + e.location();
    throw Error(e.category(), e.id(), e.what(), loc);
  }
}

CoeffElem coeff_arg(const std::string& text, const RingPtr& ring, const std::string& where) {
  return with_location(where, [&] { return parse_coeff(text, ring->field()); });
}

RobbaElem robba_arg(const std::string& text, const RingPtr& ring, const std::string& where) {
  return with_location(where, [&] { return parse_element(text, ring); });
}

/// Integral elements only.
WittElem witt_arg(const std::string& text, const RingPtr& ring, const std::string& where) {
  const auto x = robba_arg(text, ring, where);
  if (x.kind() != RobbaKind::A) {
    throw Error(ErrorCategory::Parse, "semantic", "element must lie in W(O_L): negative w or t exponent", where);
  }
  return robba_to_witt(x);
}

Radius radius_of(const json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "inf") return Radius::zero();
  return Radius::exp(json_rational(j, where));
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) input_error("expected a JSON object", where);
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      input_error("unknown key '" + key + "'", where);
    }
  }
}

CenterPoint center_point(const json& j, const RingPtr& ring, const std::string& where) {
  check_keys(j, {"center", "rho"}, where);
  if (!j.contains("center") || !j.contains("rho")) input_error("a disc needs center and rho", where);
  return {coeff_arg(json_string(j["center"], where + ".center"), ring, where + ".center"),
          radius_of(j["rho"], where + ".rho")};
}

/// {"center", "rho"} for β_{u,r}; with "sign" for a type-5 point; {"discs":
/// [...]} for a type-4 prefix. An optional "type" (rank1, type4, type5) must
/// agree with the shape.
PointDescriptor point_arg(const json& j, const RingPtr& ring, const std::string& where) {
  check_keys(j, {"type", "center", "rho", "sign", "discs"}, where);
  std::string shape = j.contains("discs") ? "type4" : j.contains("sign") ? "type5" : "rank1";
  if (j.contains("type") && json_string(j["type"], where + ".type") != shape) {
    input_error("type '" + j["type"].get<std::string>() + "' does not match the descriptor shape " + shape, where);
  }
  if (shape == "type4") {
    if (!j["discs"].is_array()) input_error("discs must be an array", where + ".discs");
    Type4Prefix out;
    for (std::size_t i = 0; i < j["discs"].size(); ++i) {
      out.discs.push_back(center_point(j["discs"][i], ring, where + ".discs[" + std::to_string(i) + "]"));
    }
    return out;
  }
  if (shape == "type5") {
    if (!j.contains("center") || !j.contains("rho")) input_error("a type-5 point needs center and rho", where);
    const auto sign = with_location(where + ".sign", [&] { return parse_sign(json_string(j["sign"], where)); });
    return Type5Point{coeff_arg(json_string(j["center"], where + ".center"), ring, where + ".center"),
                      json_rational(j["rho"], where + ".rho"), sign};
  }
  json plain = j;
  plain.erase("type");
  return center_point(plain, ring, where);
}

PointDescriptor point_option(const std::string& text, const RingPtr& ring, const std::string& option) {
  return point_arg(parse_json_arg(text, option), ring, option);
}

json norm_json(const NormExp& n) { return n.to_string(); }

json beta5_json(const Beta5Value& v) {
  json out;
  out["gamma"] = v.value.to_string();
  out["level"] = v.level;
  out["coincides_with_rank1"] = v.coincides_with_rank1;
  out["below"] = v.below;
  if (v.below) out["bound"] = to_string(v.bound);
  return out;
}

json string_list(const std::vector<CoeffElem>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::string witt_text(const WittElem& x) { return robba_from_witt(x).to_string(); }

// ---------------------------------------------------------------- Tate ideals

using LRing = std::shared_ptr<const TateRing<LaurentDomain>>;
using LPoly = TatePoly<LaurentDomain>;

struct Ideal {
  LRing ring;
  std::vector<LPoly> gens;
  json source;
};

/// [{"index": [..], "coeff": "<coefficient>"}, ...]
LPoly tate_terms(const json& j, const LRing& ring, const std::string& where) {
  if (!j.is_array()) input_error("expected an array of terms", where);
  LPoly::Terms terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = where + "[" + std::to_string(i) + "]";
    check_keys(j[i], {"index", "coeff"}, at);
    if (!j[i].contains("index") || !j[i].contains("coeff")) input_error("a term needs index and coeff", at);
    const auto& idx = j[i]["index"];
    if (!idx.is_array() || static_cast<int>(idx.size()) != ring->n()) {
      input_error("index must list " + std::to_string(ring->n()) + " exponents", at + ".index");
    }
    std::vector<int> exps;
    for (const auto& e : idx) {
      if (!e.is_number_integer() || e.get<int>() < 0) input_error("exponents must be nonnegative integers", at);
      exps.push_back(e.get<int>());
    }
    const auto c = with_location(at + ".coeff", [&] {
      return ring->domain().from(parse_coeff(json_string(j[i]["coeff"], at), ring->domain().ctx()));
    });
    const MonomialIndex index(std::move(exps));
    auto it = terms.find(index);
    if (it != terms.end()) {
      it->second = ring->domain().add(it->second, c);
    } else {
      terms.emplace(index, c);
    }
  }
  return LPoly(ring, std::move(terms), ring->default_prec());
}

/// {"weights": [..], "prec": "a/b", "generators": [terms, ...], ...}
Ideal ideal_arg(const std::string& text, const RingPtr& ctx, std::initializer_list<const char*> extra) {
  auto j = parse_json_arg(text, "--ideal");
  std::vector<const char*> allowed{"weights", "prec", "generators"};
  allowed.insert(allowed.end(), extra.begin(), extra.end());
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      input_error("unknown key '" + key + "'", "--ideal");
    }
  }
  if (!j.contains("weights") || !j["weights"].is_array()) input_error("weights must be an array", "--ideal.weights");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    input_error("generators must be a nonempty array", "--ideal.generators");
  }
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < j["weights"].size(); ++i) {
    weights.push_back(json_rational(j["weights"][i], "--ideal.weights[" + std::to_string(i) + "]"));
  }
  const Rational prec = j.contains("prec") ? json_rational(j["prec"], "--ideal.prec") : ctx->field()->config().default_tprec;
  auto ring = TateRing<LaurentDomain>::create(LaurentDomain(ctx->field()), std::move(weights), prec);
  Ideal out{ring, {}, j};
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    out.gens.push_back(tate_terms(j["generators"][i], ring, "--ideal.generators[" + std::to_string(i) + "]"));
  }
  return out;
}

json poly_list(const std::vector<LPoly>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

// ---------------------------------------------------------------- commands

struct Args {
  std::string point, elem, a, b, center, x, y, rho, sign = "+", subset, subsets, samples, ideal, dividend,
      u_exp, strategy = "first-stable", rule = "field";
  int depth = -1;
};

json cmd_eval_norm(const RingPtr& ring, const Args& a) {
  const auto point = point_option(a.point, ring, "--point");
  const auto x = robba_arg(a.elem, ring, "--elem");
  validate(ring, point);
  json out;
  if (const auto* c = std::get_if<CenterPoint>(&point)) {
    out["norm_exp"] = norm_json(eval_H(c->u, c->r, x));
  } else if (const auto* t5 = std::get_if<Type5Point>(&point)) {
    out = beta5_json(eval_beta5(t5->u, t5->rho, t5->sign, x));
  } else {
    // A type-4 point is only known through its prefix; its innermost disc
    // bounds the value from above.
    const auto& disc = std::get<Type4Prefix>(point).discs.back();
    out["norm_exp"] = norm_json(eval_H(disc.u, disc.r, x));
    out["prefix_length"] = std::get<Type4Prefix>(point).discs.size();
  }
  return out;
}

json cmd_stable_pres(const RingPtr& ring, const Args& a) {
  const auto u = coeff_arg(a.center, ring, "--center");
  const auto x = witt_arg(a.elem, ring, "--elem");
  ReduceStrategy strategy;
  if (a.strategy == "first-stable") {
    strategy = ReduceStrategy::FirstStable;
  } else if (a.strategy == "full-substitution") {
    strategy = ReduceStrategy::FullSubstitution;
  } else {
    input_error("strategy must be first-stable or full-substitution", "--strategy");
  }
  const auto pres = stable_presentation(x, u, a.depth, strategy);
  json out;
  out["center"] = pres.center.to_string();
  out["entries"] = json::array();
  for (const auto& e : pres.entries) out["entries"].push_back(witt_text(e));
  out["residual"] = witt_text(pres.residual);
  out["source_levels"] = pres.source_levels;
  out["residual_norms"] = json::array();
  for (const auto& n : pres.residual_norms) out["residual_norms"].push_back(n ? norm_json(*n) : json(nullptr));
  return out;
}

json cmd_classify(const RingPtr& ring, const Args& a) {
  const auto point = point_option(a.point, ring, "--point");
  return json{{"type", static_cast<int>(classify(ring, point))}};
}

json cmd_same_point(const RingPtr& ring, const Args& a) {
  const auto pa = point_option(a.a, ring, "--a");
  const auto pb = point_option(a.b, ring, "--b");
  validate(ring, pa);
  validate(ring, pb);
  json out;
  const auto* ca = std::get_if<CenterPoint>(&pa);
  const auto* cb = std::get_if<CenterPoint>(&pb);
  const auto* fa = std::get_if<Type5Point>(&pa);
  const auto* fb = std::get_if<Type5Point>(&pb);
  const auto* qa = std::get_if<Type4Prefix>(&pa);
  const auto* qb = std::get_if<Type4Prefix>(&pb);
  if (ca && cb) {
    out["same"] = ca->r == cb->r && same_point(ring, ca->u, cb->u, ca->r);
    out["disc_relation"] = to_string(disc_relation(ring, *ca, *cb));
  } else if (fa && fb) {
    out["same"] = fa->sign == fb->sign && fa->rho == fb->rho && same_point(ring, fa->u, fb->u, Radius::exp(fa->rho));
  } else if (qa && qb) {
    bool same = qa->discs.size() == qb->discs.size();
    for (std::size_t i = 0; same && i < qa->discs.size(); ++i) {
      same = disc_relation(ring, qa->discs[i], qb->discs[i]) == DiscRelation::Equal;
    }
    out["same"] = same;
    out["up_to_prefix"] = true;
  } else {
    out["same"] = false;
  }
  return out;
}

json cmd_factor(const RingPtr& ring, const Args& a) {
  const auto f = factor_linear(witt_arg(a.elem, ring, "--elem"));
  return json{{"roots", string_list(f.roots)}, {"y", witt_text(f.y)}};
}

json cmd_persist_interval(const RingPtr& ring, const Args& a) {
  const auto x = robba_arg(a.x, ring, "--x");
  const auto y = robba_arg(a.y, ring, "--y");
  const auto u = coeff_arg(a.center, ring, "--center");
  const auto rho = json_rational(json(a.rho), "--rho");
  const auto sign = with_location("--sign", [&] { return parse_sign(a.sign); });
  return json{{"s", to_string(persistence_interval(x, y, u, rho, sign))}};
}

/// {"fs": ["<elem>", ...], "g": "<elem>"}
RationalSubset subset_arg(const json& j, const RingPtr& ring, const std::string& where) {
  check_keys(j, {"fs", "g"}, where);
  if (!j.contains("fs") || !j["fs"].is_array() || !j.contains("g")) input_error("a subset needs fs and g", where);
  RationalSubset out{{}, robba_arg(json_string(j["g"], where + ".g"), ring, where + ".g")};
  for (std::size_t i = 0; i < j["fs"].size(); ++i) {
    const auto at = where + ".fs[" + std::to_string(i) + "]";
    out.fs.push_back(robba_arg(json_string(j["fs"][i], at), ring, at));
  }
  return out;
}

json cmd_member(const RingPtr& ring, const Args& a) {
  const auto point = point_option(a.point, ring, "--point");
  const auto subset = subset_arg(parse_json_arg(a.subset, "--subset"), ring, "--subset");
  validate(ring, point);
  return json{{"member", rational_subset_member(point, subset)}};
}

json cmd_cover_check(const RingPtr& ring, const Args& a) {
  const auto js = parse_json_arg(a.subsets, "--subsets");
  const auto jp = parse_json_arg(a.samples, "--samples");
  if (!js.is_array()) input_error("expected an array of subsets", "--subsets");
  if (!jp.is_array()) input_error("expected an array of points", "--samples");
  std::vector<RationalSubset> subsets;
  for (std::size_t i = 0; i < js.size(); ++i) {
    subsets.push_back(subset_arg(js[i], ring, "--subsets[" + std::to_string(i) + "]"));
  }
  std::vector<PointDescriptor> samples;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    samples.push_back(point_arg(jp[i], ring, "--samples[" + std::to_string(i) + "]"));
  }
  const auto report = covering_check(subsets, samples);
  json out;
  out["covered"] = report.covered();
  out["matrix"] = json::array();
  for (const auto& row : report.matrix) {
    json r = json::array();
    for (const auto m : row) r.push_back(m == Membership::In ? "in" : m == Membership::Out ? "out" : "error");
    out["matrix"].push_back(r);
  }
  out["errors"] = report.errors;
  out["uncovered"] = report.uncovered;
  out["undetermined"] = report.undetermined;
  return out;
}

json cmd_ideal_reduce(const RingPtr& ring, const Args& a) {
  auto ideal = ideal_arg(a.ideal, ring, {"x0", "varpi", "target"});
  const auto& j = ideal.source;
  if (!j.contains("x0")) input_error("ideal-reduce needs x0", "--ideal.x0");
  const auto x0 = tate_terms(j["x0"], ideal.ring, "--ideal.x0");
  const auto& d = ideal.ring->domain();
  const auto varpi = with_location("--ideal.varpi", [&] {
    return d.from(parse_coeff(j.contains("varpi") ? json_string(j["varpi"], "--ideal.varpi") : "t", d.ctx()));
  });
  const Rational target = j.contains("target") ? json_rational(j["target"], "--ideal.target") : Rational(1);
  const auto state = make_descent_state(ideal.gens, varpi, x0);
  const auto res = munshi_descent(state, target);
  json out;
  out["eps"] = to_string(state.eps);
  out["psi_norms"] = json::array();
  for (const auto& n : res.psi_norms) out["psi_norms"].push_back(norm_json(n));
  out["steps"] = res.steps;
  out["c"] = res.c.to_string();
  out["x"] = res.x.to_string();
  out["cofactors"] = poly_list(res.state.cofactors);
  out["residual_zero"] = membership_residual(res.state).is_zero();
  return out;
}

json cmd_divide(const RingPtr& ring, const Args& a) {
  auto ideal = ideal_arg(a.ideal, ring, {});
  const auto y = tate_terms(parse_json_arg(a.dividend, "--dividend"), ideal.ring, "--dividend");
  DivisionRule rule;
  if (a.rule == "field") {
    rule = DivisionRule::Field;
  } else if (a.rule == "integral") {
    rule = DivisionRule::Integral;
  } else {
    input_error("rule must be field or integral", "--rule");
  }
  const auto div = norm_bounded_divide(y, ideal.gens, rule);
  return json{{"quotients", poly_list(div.quotients)},
              {"remainder", div.remainder.to_string()},
              {"steps", div.steps},
              {"reassembles", equal_at_precision(reassemble(div, ideal.gens), y)}};
}

json cmd_afg_witness(const RingPtr& ring, const Args& a) {
  auto ideal = ideal_arg(a.ideal, ring, {});
  const auto w = afg_witness(ideal.gens, json_rational(json(a.u_exp), "--u-exp"));
  json out;
  out["u_exp"] = to_string(w.u_exp);
  out["delta_exp"] = to_string(w.delta_exp);
  out["m"] = w.m;
  out["base"] = poly_list(w.base);
  out["levels"] = json::array();
  for (const auto& level : w.levels) out["levels"].push_back(poly_list(level));
  return out;
}

json provenance(const SessionConfig& cfg) {
  json out;
  out["p"] = cfg.p;
  out["q"] = cfg.q;
  out["m"] = cfg.m;
  out["modulus"] = cfg.modulus;
  out["t_exponent"] = to_string(cfg.t_exponent);
  out["tprec"] = to_string(cfg.default_tprec);
  out["wprec"] = cfg.wprec;
  out["backend"] = backend_name(cfg.e_mode);
  return out;
}

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Parse: return kExitParse;
    case ErrorCategory::Indeterminate: return kExitIndeterminate;
    case ErrorCategory::Precondition: return kExitPrecondition;
    case ErrorCategory::Internal: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated Witt vectors, Robba rings, their points and Tate ideals", "robba"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, prec_t, backend;
  int prec_w = 0;
  bool compact = false;
  app.add_option("--config", config_path, "flat key = value configuration file");
  app.add_flag("--json", compact, "print compact single-line JSON");
  app.add_option("--prec-t", prec_t, "default t-precision a/b");
  app.add_option("--prec-w", prec_w, "number of w-levels N")->check(CLI::PositiveNumber);
  app.add_option("--backend", backend, "equalchar or mixed");

  Args a;
  using Handler = std::function<json(const RingPtr&, const Args&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  auto* s = add("eval-norm", "H(u, r)(x), or beta at a type-5 point", cmd_eval_norm);
  s->add_option("--point", a.point, "point descriptor JSON")->required();
  s->add_option("--elem", a.elem, "element")->required();

  s = add("stable-pres", "stable presentation around a center", cmd_stable_pres);
  s->add_option("--center", a.center, "center u in L")->required();
  s->add_option("--elem", a.elem, "element of W(O_L)")->required();
  s->add_option("--depth", a.depth, "number of entries; -1 uses every level");
  s->add_option("--strategy", a.strategy, "first-stable or full-substitution");

  s = add("classify", "type of a point descriptor", cmd_classify);
  s->add_option("--point", a.point, "point descriptor JSON")->required();

  s = add("same-point", "compare two point descriptors", cmd_same_point);
  s->add_option("--a", a.a, "point descriptor JSON")->required();
  s->add_option("--b", a.b, "point descriptor JSON")->required();

  s = add("factor", "linear Teichmuller factors of an element", cmd_factor);
  s->add_option("--elem", a.elem, "element of W(O_L)")->required();

  s = add("persist-interval", "interval on which an inequality persists", cmd_persist_interval);
  s->add_option("--x", a.x, "element")->required();
  s->add_option("--y", a.y, "element")->required();
  s->add_option("--center", a.center, "center u")->required();
  s->add_option("--rho", a.rho, "radius exponent a/b")->required();
  s->add_option("--sign", a.sign, "+ or -");

  s = add("member", "membership in a rational subset", cmd_member);
  s->add_option("--point", a.point, "point descriptor JSON")->required();
  s->add_option("--subset", a.subset, "{\"fs\": [...], \"g\": ...}")->required();

  s = add("cover-check", "pointwise covering check on samples", cmd_cover_check);
  s->add_option("--subsets", a.subsets, "array of subsets")->required();
  s->add_option("--samples", a.samples, "array of point descriptors")->required();

  s = add("ideal-reduce", "descent of 1 + w*x0 inside an ideal", cmd_ideal_reduce);
  s->add_option("--ideal", a.ideal, "ideal JSON with x0, varpi, target")->required();

  s = add("divide", "norm-bounded division by generators", cmd_divide);
  s->add_option("--ideal", a.ideal, "ideal JSON")->required();
  s->add_option("--dividend", a.dividend, "term list JSON")->required();
  s->add_option("--rule", a.rule, "field or integral");

  s = add("afg-witness", "level generators of an ideal of the integral subring", cmd_afg_witness);
  s->add_option("--ideal", a.ideal, "ideal JSON")->required();
  s->add_option("--u-exp", a.u_exp, "norm exponent of the unit")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = nullptr;
    doc["error"] = {{"code", "usage"}, {"message", e.what()}, {"location", "arguments"}};
    out << doc.dump(compact ? -1 : 2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::string name;
  Handler handler;
  for (const auto& [sub, h] : commands) {
    if (sub->parsed()) {
      name = sub->get_name();
      handler = h;
    }
  }

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = name;
  SessionConfig cfg;
  int status = kExitOk;
  try {
    if (!config_path.empty()) cfg = SessionConfig::parse(read_file(config_path));
    if (!prec_t.empty()) cfg.set("tprec", prec_t);
    if (prec_w > 0) cfg.wprec = prec_w;
    if (!backend.empty()) cfg.set("backend", backend);
    const auto ring = cfg.ring();
    doc["result"] = handler(ring, a);
  } catch (const Error& e) {
    doc["error"] = {{"code", e.id()}, {"message", e.what()}, {"location", e.location()}};
    err << "error: " << e.id() << ": " << e.what() << "\n";
    status = exit_code(e.category());
  } catch (const std::exception& e) {
    doc["error"] = {{"code", "internal"}, {"message", e.what()}, {"location", ""}};
    err << "error: internal: " << e.what() << "\n";
    status = kExitInternal;
  }
  doc["provenance"] = provenance(cfg);
  out << doc.dump(compact ? -1 : 2) << "\n";
  return status;
}

}  // namespace robba::cli
