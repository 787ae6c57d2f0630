#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2/acceptance.hpp"
#include "g2/g2.hpp"
#include "g2/serialize.hpp"

namespace g2::cli {

struct Provenance {
  std::string formula;
  std::string description;
};

struct CommandResult {
  std::string status = "ok";  // ok | error
  json payload = json::object();
  std::vector<Provenance> provenance;
  int exit_code = 0;
  std::string output = "json";
  std::string help;  // set when --help was requested

  json to_json() const {
    json prov = json::array();
    for (const auto& p : provenance) prov.push_back({{"formula", p.formula}, {"description", p.description}});
    return {{"status", status}, {"payload", payload}, {"provenance", prov}};
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage_error"; }
};

namespace detail {

inline json parse_json_arg(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON for " + flag + ": " + e.what());
  }
}

inline Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError("expected a rational p/q for " + flag + ", got '" + text + "'");
  }
}

/// A rational "p/q" or a number field record {"min_poly": [...], "coeffs": [...]}.
inline NumberField parse_scalar(const std::string& text, const std::string& flag) {
  if (!text.empty() && text.front() == '{') {
    try {
      return decode<NumberField>(parse_json_arg(text, flag));
    } catch (const ParseError& e) {
      throw UsageError(flag + ": " + e.what());
    }
  }
  return NumberField(parse_rational(text, flag));
}

template <class K>
json curve_json(const Genus2Curve<K>& c) {
  json out = {{"coeffs", encode(c.f())}};
  if constexpr (std::is_same_v<K, Rational>) out["text"] = "Y^2 = " + to_string(c.f(), "x");
  return out;
}

template <class K>
json invariants_json(const Genus2Curve<K>& c) {
  auto J = igusa_invariants(c);
  json out = encode(J);
  if (is_zero(J.J2)) {
    out["i1"] = out["i2"] = out["i3"] = nullptr;
    out["note"] = "J2 = 0, absolute invariants undefined";
  } else {
    out.update(encode(absolute_invariants(J)));
  }
  return out;
}

inline json roots_json(const std::vector<ExactRoot>& roots) {
  json out = json::array();
  for (const auto& r : roots)
    out.push_back({{"value", encode(r.value)}, {"multiplicity", r.multiplicity}, {"conjugates", r.conjugates}});
  return out;
}

template <class K>
json report_json(const CoverReport& r) {
  json fibers = json::array();
  for (const auto& f : r.fibers)
    fibers.push_back({{"point", f.point}, {"expected", f.expected}, {"actual", f.actual}, {"match", f.match}});
  return {{"degree", r.degree},           {"claimed_degree", r.claimed_degree},
          {"fibers", fibers},             {"defect_listed", r.defect_listed},
          {"unramified_elsewhere", r.unramified_elsewhere}, {"match", r.match},
          {"diffs", r.diffs}};
}

template <class K>
std::function<std::string(const ProjectivePoint<K>&)> point_label() {
  return [](const ProjectivePoint<K>& p) { return p.is_infinity() ? std::string("inf") : to_string(*p.value); };
}

inline void pretty(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.contains("min_poly") && j.contains("coeffs") && j.size() == 2) {
      os << " [";
      for (std::size_t i = 0; i < j["coeffs"].size(); ++i) os << (i ? ", " : "") << j["coeffs"][i].dump();
      os << "] mod " << j["min_poly"].dump() << "\n";
      return;
    }
    os << "\n";
    for (const auto& [k, v] : j.items()) {
      os << pad << k << ":";
      if (!v.is_structured()) os << " ";
      pretty(os, v, indent + 2);
    }
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_structured(); });
    if (flat) {
      os << " " << j.dump() << "\n";
      return;
    }
    os << "\n";
    for (const auto& v : j) {
      os << pad << "-";
      if (!v.is_structured()) os << " ";
      pretty(os, v, indent + 2);
    }
  } else if (j.is_string()) {
    os << j.get<std::string>() << "\n";
  } else {
    os << j.dump() << "\n";
  }
}

}  // namespace detail

inline std::string render(const CommandResult& r) {
  if (!r.help.empty()) return r.help;
  if (r.output == "pretty") {
    std::ostringstream os;
    os << "status: " << r.status;
    detail::pretty(os, json{{"payload", r.payload}}, 0);
    if (!r.provenance.empty()) {
      os << "provenance:\n";
      for (const auto& p : r.provenance) os << "  " << p.formula << ": " << p.description << "\n";
    }
    return os.str();
  }
  return r.to_json().dump(2) + "\n";
}

// ------------------------------------------------------------ commands

inline CommandResult cmd_invariants(const std::string& curve_text) {
  CommandResult r;
  json spec = detail::parse_json_arg(curve_text, "--curve");
  RationalPolynomial f;
  try {
    f = decode_polynomial(spec.is_object() && spec.contains("coeffs") ? spec["coeffs"] : spec);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--curve: ") + e.what());
  }
  Genus2Curve<Rational> c(f);
  if (!c.is_smooth()) throw DegenerateParameter("disc(f)", "the curve polynomial has a repeated root");
  r.payload = detail::invariants_json(c);
  r.payload["curve"] = detail::curve_json(c);
  r.provenance = {{"igusa-clebsch", "I2, I4, I6, I10 from the Clebsch transvectant invariants A, B, C, D"},
                  {"absolute-invariants", "i1 = 144 J4/J2^2, i2 = -1728 (J2 J4 - 3 J6)/J2^3, i3 = 486 J10/J2^5"}};
  return r;
}

struct JArgs {
  std::string model = "legendre";
  std::string t, points, a, b;
};

inline CommandResult cmd_j(const JArgs& args) {
  CommandResult r;
  NumberField j;
  if (args.model == "legendre") {
    if (args.t.empty()) throw UsageError("--model legendre needs --t");
    NumberField t = detail::parse_scalar(args.t, "--t");
    j = j_from_lambda(t);
    r.payload["t"] = encode(t);
    r.provenance = {{"legendre-j", "j = 256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2)"}};
  } else if (args.model == "branch-points") {
    if (args.points.empty()) throw UsageError("--model branch-points needs --points");
    json pts = detail::parse_json_arg(args.points, "--points");
    if (!pts.is_array() || pts.size() != 4) throw UsageError("--points must be a list of four points");
    std::array<ProjectivePoint<NumberField>, 4> q;
    try {
      for (std::size_t i = 0; i < 4; ++i) q[i] = decode<ProjectivePoint<NumberField>>(pts[i]);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--points: ") + e.what());
    }
    j = j_from_branch_points(q);
    r.payload["cross_ratio"] = encode(cross_ratio(q));
    r.provenance = {{"cross-ratio", "lambda = (q3-q1)(q2-q4) / ((q2-q1)(q3-q4)), factors with infinity dropped"},
                    {"legendre-j", "j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)"}};
  } else if (args.model == "weierstrass") {
    if (args.a.empty() || args.b.empty()) throw UsageError("--model weierstrass needs --a and --b");
    j = j_from_short_weierstrass(detail::parse_scalar(args.a, "--a"), detail::parse_scalar(args.b, "--b"));
    r.provenance = {{"weierstrass-j", "j = 1728 * 4a^3 / (4a^3 + 27b^2)"}};
  } else {
    throw UsageError("unknown model '" + args.model + "' (legendre, branch-points, weierstrass)");
  }
  r.payload["model"] = args.model;
  r.payload["j"] = encode(j);
  return r;
}

inline CommandResult cmd_ramification(int n) {
  CommandResult r;
  auto e = enumerate_profiles(n);
  json list = json::array();
  for (const auto& p : e.profiles) {
    json item = {{"case", p.label.name},
                 {"parity", p.label.odd ? "odd" : "even"},
                 {"profile", to_string(p.profile)},
                 {"fibers", p.profile.fibers},
                 {"defect", p.profile.rh_defect()},
                 {"rh_ok", p.rh_ok},
                 {"lemma2_ok", p.parity_ok},
                 {"fits", p.fits}};
    if (p.rh_inconsistent()) item["flags"] = json::array({"rh_inconsistent"});
    if (!p.notes.empty()) item["notes"] = p.notes;
    list.push_back(item);
  }
  json dropped = json::array();
  for (const auto& d : e.dropped) dropped.push_back({{"case", d.label.name}, {"reason", d.reason}});
  r.payload = {{"degree", n}, {"required_defect", 2 * n - 2}, {"profiles", list}, {"dropped", dropped}};
  r.provenance = {{n % 2 ? "odd-degree-templates" : "even-degree-templates",
                   "branching templates of the induced degree-n map of the line"},
                  {"riemann-hurwitz", "total defect sum(e - 1) = 2n - 2"}};
  return r;
}

inline CommandResult cmd_verify_cover(const std::string& map_text, const std::string& points_text,
                                      const std::string& case_name) {
  CommandResult r;
  json m = detail::parse_json_arg(map_text, "--map");
  json pts = detail::parse_json_arg(points_text, "--branch-points");
  RationalPolynomial num, den{Rational(1)};
  std::vector<ProjectivePoint<Rational>> bp;
  try {
    if (m.is_object()) {
      if (!m.contains("num")) throw ParseError("map needs a num field");
      num = decode_polynomial(m["num"]);
      if (m.contains("den")) den = decode_polynomial(m["den"]);
    } else {
      num = decode_polynomial(m);
    }
    if (!pts.is_array()) throw ParseError("branch points must be a list");
    for (const auto& p : pts) bp.push_back(decode<ProjectivePoint<Rational>>(p));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  RationalMap<Rational> phi(num, den);
  const int n = phi.degree();
  std::vector<std::vector<int>> observed;
  json fibers = json::array();
  int defect = 0;
  for (const auto& q : bp) {
    auto f = fiber_profile(phi, q);
    for (int e : f) defect += e - 1;
    fibers.push_back({{"point", encode(q)}, {"indices", f}});
    observed.push_back(f);
  }
  json cases = json::array();
  for (const auto& c : matching_cases(n, observed)) cases.push_back(c.name);
  r.payload = {{"degree", n}, {"fibers", fibers}, {"defect_listed", defect}, {"required_defect", 2 * n - 2},
               {"matching_cases", cases}};
  bool ok = defect == 2 * n - 2;
  if (!case_name.empty()) {
    auto rep = verify_cover<Rational>(phi, bp, claimed_profile(n, case_name), detail::point_label<Rational>());
    r.payload["case"] = case_name;
    r.payload["report"] = detail::report_json<Rational>(rep);
    ok = ok && rep.match;
  } else {
    ok = ok && !cases.empty();
  }
  r.payload["passed"] = ok;
  r.exit_code = ok ? 0 : 1;
  r.provenance = {{"fiber-multiplicities", "indices over q from the squarefree decomposition of num - q den"},
                  {"riemann-hurwitz", "total defect sum(e - 1) = 2n - 2"}};
  return r;
}

inline CommandResult cmd_deg3_generic(const Rational& a, const Rational& c) {
  CommandResult r;
  auto p = generic_family<Rational>(a, c);
  Rational j1 = generic_j1<Rational>(a, c), j2 = generic_j2<Rational>(a, c);
  Rational oracle = j_from_branch_points<Rational>({Rational(0), Rational(1), p.t, p.s});
  auto rep = verify_cover<Rational>(generic_cover(p), generic_branch_points(p), claimed_profile(3, "I"),
                                    detail::point_label<Rational>());
  bool match = j1 == oracle;
  r.payload = {{"a", encode(a)},           {"c", encode(c)},         {"b", encode(p.b)},
               {"d", encode(p.d)},         {"t", encode(p.t)},       {"s", encode(p.s)},
               {"curve", detail::curve_json(p.curve)},               {"j1", encode(j1)},
               {"j2", encode(j2)},         {"oracle_j1", encode(oracle)}, {"match", match},
               {"cover", detail::report_json<Rational>(rep)}};
  r.exit_code = match && rep.match ? 0 : 1;
  r.provenance = {{"generic-cubic-family", "a, b, c, d, t, s of the generic degree-3 family"},
                  {"generic-j1", "j1 = 256 A(a, c) / C(a, c)"},
                  {"cross-ratio", "oracle j of y^2 = z(z-1)(z-t)(z-s)"}};
  return r;
}

inline CommandResult cmd_deg3_degenerate(const Rational& w1) {
  CommandResult r;
  Rational j1 = degenerate_j1(w1), j = degenerate_j(w1);
  json pts = json::array();
  bool ok = is_zero(pair_cubic_value(j, j1));
  for (const auto& p : degenerate_family<Rational>(w1)) {
    NumberField oj1 = j_from_lambda(p.s);
    NumberField oj = j_from_branch_points<NumberField>({p.w1, p.w2, p.w3, ProjectivePoint<NumberField>::infinity()});
    auto rep = verify_cover(p.cover, p.branch_points, claimed_profile(3, "III.ii"), detail::point_label<NumberField>());
    bool m = oj1 == NumberField(j1) && oj == NumberField(j) && rep.match;
    ok = ok && m;
    pts.push_back({{"w2", encode(p.w2)},
                   {"w3", encode(p.w3)},
                   {"s", encode(p.s)},
                   {"k2", encode(p.k2)},
                   {"curve", detail::curve_json(p.curve)},
                   {"oracle_j1", encode(oj1)},
                   {"oracle_j", encode(oj)},
                   {"cover", detail::report_json<NumberField>(rep)},
                   {"match", m}});
  }
  r.payload = {{"w1", encode(w1)}, {"j1", encode(j1)}, {"j", encode(j)},
               {"pair_cubic_residual", encode(pair_cubic_value(j, j1))}, {"points", pts}, {"match", ok}};
  r.exit_code = ok ? 0 : 1;
  r.provenance = {{"degenerate-w2-quadratic", "w2^2 - (4w1^3 - 6w1^2 + 4w1) w2 + w1^4 = 0"},
                  {"degenerate-j1-relation", "j1 as the root of the j1-w1 relation"},
                  {"degenerate-j-relation", "j as the root of the j-w1 relation"},
                  {"pair-cubic", "256 A(j) j1^3 + 3 B(j) j1^2 + 6 C(j) j1 - D(j)"}};
  return r;
}

inline CommandResult cmd_deg3_table() {
  CommandResult r;
  json rows = json::array();
  auto tab = both_degenerate_table();
  for (const auto& row : tab)
    rows.push_back({{"t1", encode(row.t1)},
                    {"t2", encode(row.t2)},
                    {"j1", encode(row.j1)},
                    {"j2", encode(row.j2)},
                    {"curve", detail::curve_json(row.curve)},
                    {"invariants", encode(row.invariants)}});
  bool distinct = tab.size() == 2 && !(tab[0].invariants == tab[1].invariants);
  r.payload = {{"rows", rows}, {"distinct_invariants", distinct}};
  r.exit_code = distinct ? 0 : 1;
  r.provenance = {{"triple-point-family", "Y^2 = x(x-1)(x^3 - 3/2 x^2 + 9/16 x - t/16)"},
                  {"legendre-j", "j = 256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2)"}};
  return r;
}

inline CommandResult cmd_deg3_pair(const Rational& j) {
  CommandResult r;
  auto roots = j_pair_cubic(j);
  r.payload = {{"j", encode(j)}, {"cubic", encode(pair_cubic(j))}, {"roots", detail::roots_json(roots)}};
  r.provenance = {{"pair-cubic", "256 A(j) j1^3 + 3 B(j) j1^2 + 6 C(j) j1 - D(j)"}};
  return r;
}

inline CommandResult cmd_deg5(const Rational& u, int branch) {
  CommandResult r;
  if (branch != 0 && branch != 1) throw UsageError("--v-branch must be 0 or 1");
  auto vs = deg5_solve_v<Rational>(u);
  NumberField v = branch ? vs.second : vs.first;
  auto p = deg5_family<NumberField>(NumberField(u), v);
  auto jq = deg5_j_quadratic<NumberField>(NumberField(u));
  NumberField residual = deg5_membership_residual(p);
  NumberField j = j_from_lambda(p.t);
  bool ok = is_zero(residual);
  r.payload = {{"u", encode(u)},
               {"v", encode(v)},
               {"d", encode(p.d)},
               {"w", encode(p.w)},
               {"t", encode(p.t)},
               {"curve", detail::curve_json(p.curve)},
               {"quadratic", {{"A", encode(jq.A)}, {"B", encode(jq.B)}, {"C", encode(jq.C)}}},
               {"j_roots", json::array({encode(jq.roots.first), encode(jq.roots.second)})},
               {"j", encode(j)},
               {"membership_residual", encode(residual)},
               {"membership", ok}};
  r.exit_code = ok ? 0 : 1;
  r.provenance = {{"deg5-conic", "15u^4 - 82u^3 - 8vu^2 + 159u^2 - 140u + 56vu - 16v^2 - 52v + 50 = 0"},
                  {"deg5-family", "d, w, t of the degree-5 family"},
                  {"deg5-j-quadratic", "A(u) j^2 + B(u) j + C(u)"}};
  return r;
}

inline CommandResult cmd_deg7(const Rational& d, int branch) {
  CommandResult r;
  auto roots = deg7_solve_t(d);
  if (branch < 0 || branch >= static_cast<int>(roots.size()))
    throw UsageError("--t-branch must lie in [0, " + std::to_string(roots.size()) + ")");
  NumberField dd(d), t = roots[branch].value;
  NumberField residual = deg7_constraint(dd, t);
  auto p = deg7_family<NumberField>(dd, t);
  bool smooth = p.curve.is_smooth();
  json inv = detail::invariants_json(p.curve);
  bool square = deg7_c_numerator_is_square(d);
  r.payload = {{"d", encode(d)},
               {"t", encode(t)},
               {"t_roots", detail::roots_json(roots)},
               {"a", encode(p.coefficients.a)},
               {"b", encode(p.coefficients.b)},
               {"c", encode(p.coefficients.c)},
               {"A", encode(p.coefficients.A)},
               {"constraint_residual", encode(residual)},
               {"c_numerator_square", square},
               {"J10_nonzero", smooth},
               {"i1", inv["i1"]},
               {"i2", inv["i2"]},
               {"i3", inv["i3"]}};
  r.exit_code = is_zero(residual) && smooth && square ? 0 : 1;
  r.provenance = {{"deg7-constraint", "the degree-16 constraint in (d, t)"},
                  {"deg7-coefficients", "a, b, c with common denominator A = d first(d, t) second(d, t)"},
                  {"igusa-clebsch", "J10 of x(x-1)(x-d)(x^3 - a x^2 + b x - c)"}};
  return r;
}

inline CommandResult cmd_selftest() {
  CommandResult r;
  json list = json::array();
  bool ok = true;
  for (const auto& c : acceptance::run_all()) {
    ok = ok && c.passed;
    list.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  r.payload = {{"criteria", list}, {"all_passed", ok}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

// ------------------------------------------------------------------ run

inline CommandResult error_result(const std::string& kind, const std::string& message, int code) {
  CommandResult r;
  r.status = "error";
  r.payload = {{"error", {{"kind", kind}, {"message", message}}}};
  r.exit_code = code;
  return r;
}

inline CommandResult run(int argc, const char* const* argv) {
  CLI::App app{"Exact invariants of genus-2 curves with split Jacobians", "g2"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  app.add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  std::function<CommandResult()> action;

  std::string curve;
  auto* inv = app.add_subcommand("invariants", "Igusa and absolute invariants of Y^2 = f(x)");
  inv->add_option("--curve", curve, "coefficients low degree first, or a polynomial in x")->required();
  inv->callback([&] { action = [&] { return cmd_invariants(curve); }; });

  JArgs jargs;
  auto* jc = app.add_subcommand("j", "j-invariant of an elliptic curve");
  jc->add_option("--model", jargs.model, "legendre, branch-points or weierstrass");
  jc->add_option("--t", jargs.t, "Legendre parameter");
  jc->add_option("--points", jargs.points, "four branch points as JSON, \"inf\" allowed");
  jc->add_option("--a", jargs.a, "y^2 = x^3 + a x + b");
  jc->add_option("--b", jargs.b, "y^2 = x^3 + a x + b");
  jc->callback([&] { action = [&] { return cmd_j(jargs); }; });

  int degree = 0;
  auto* rc = app.add_subcommand("ramification", "enumerate branching profiles at degree n");
  rc->add_option("--degree", degree, "cover degree n >= 3")->required();
  rc->callback([&] { action = [&] { return cmd_ramification(degree); }; });

  std::string map_text, points_text, case_name;
  auto* vc = app.add_subcommand("verify-cover", "fiber-by-fiber check of a rational map");
  vc->add_option("--map", map_text, "{\"num\": ..., \"den\": ...}")->required();
  vc->add_option("--branch-points", points_text, "JSON list of branch points")->required();
  vc->add_option("--case", case_name, "case name to compare against, e.g. III.ii");
  vc->callback([&] { action = [&] { return cmd_verify_cover(map_text, points_text, case_name); }; });

  std::string a_text, c_text, w1_text, j_text;
  auto* d3 = app.add_subcommand("deg3", "degree-3 families");
  d3->require_subcommand(1);
  auto* gen = d3->add_subcommand("generic", "generic family at (a, c)");
  gen->add_option("--a", a_text)->required();
  gen->add_option("--c", c_text)->required();
  gen->callback([&] {
    action = [&] { return cmd_deg3_generic(detail::parse_rational(a_text, "--a"), detail::parse_rational(c_text, "--c")); };
  });
  auto* deg = d3->add_subcommand("degenerate", "degenerate family at w1");
  deg->add_option("--w1", w1_text)->required();
  deg->callback([&] { action = [&] { return cmd_deg3_degenerate(detail::parse_rational(w1_text, "--w1")); }; });
  auto* tab = d3->add_subcommand("table1", "the two classes with both subcovers degenerate");
  tab->callback([&] { action = [&] { return cmd_deg3_table(); }; });
  auto* pair = d3->add_subcommand("pair", "j1 roots of the pair cubic at j");
  pair->add_option("--j", j_text)->required();
  pair->callback([&] { action = [&] { return cmd_deg3_pair(detail::parse_rational(j_text, "--j")); }; });

  std::string u_text;
  int v_branch = 0;
  auto* d5 = app.add_subcommand("deg5", "degree-5 family at u");
  d5->add_option("--u", u_text)->required();
  d5->add_option("--v-branch", v_branch, "0 or 1");
  d5->callback([&] { action = [&] { return cmd_deg5(detail::parse_rational(u_text, "--u"), v_branch); }; });

  std::string d_text;
  int t_branch = 0;
  auto* d7 = app.add_subcommand("deg7", "degree-7 family at d");
  d7->add_option("--d", d_text)->required();
  d7->add_option("--t-branch", t_branch, "index into the roots in t");
  d7->callback([&] { action = [&] { return cmd_deg7(detail::parse_rational(d_text, "--d"), t_branch); }; });

  auto* st = app.add_subcommand("selftest", "run the acceptance checks");
  st->callback([&] { action = [&] { return cmd_selftest(); }; });

  CommandResult result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    result.help = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.help = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result = error_result("usage_error", e.what(), 2);
    result.output = output;
    return result;
  }
  try {
    result = action();
  } catch (const UsageError& e) {
    result = error_result(e.kind(), e.what(), 2);
  } catch (const Error& e) {
    result = error_result(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    result = error_result("internal", e.what(), 1);
  }
  result.output = output;
  return result;
}

}  // namespace g2::cli
