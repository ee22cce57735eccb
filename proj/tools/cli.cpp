#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delzant/classify.hpp"
#include "delzant/error.hpp"
#include "delzant/geometry.hpp"
#include "delzant/io.hpp"
#include "delzant/polytope.hpp"
#include "delzant/smoothness.hpp"
#include "delzant/subspace.hpp"
#include "delzant/svg.hpp"

namespace delzant::cli {

namespace {

using ojson = nlohmann::ordered_json;

const char* const kPolytopeFormat =
    "Polytope files are JSON: {\"dim\": n, \"facets\": [{\"normal\": [..], \"offset\": c}, ..]}, each facet being "
    "<xi, normal> >= offset. Offsets are integers, fractions \"p/q\" or decimals with at most 12 significant digits.";
const char* const kSubspaceFormat =
    "Slopes are comma-separated integers (--slope 1,1), reduced to primitive vectors. Anchors are comma-separated "
    "reals in the coordinates x = grad G of the moment image; an entry log:c stands for ln(c), so --anchor log:2,0 "
    "is (0.693147..., 0).";

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0 ? 0.0 : x);
  return buf;
}

std::string fmt(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v(i));
  return s + ")";
}

ojson to_json(const Eigen::VectorXd& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ojson to_json(const IntVec& v) {
  ojson a = ojson::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

[[noreturn]] void bad(const std::string& field, const std::string& text, const std::string& why) {
  throw Error(ErrorCode::Parse, "Parse: " + field + " '" + text + "': " + why);
}

IntVec parse_ints(const std::string& field, const std::string& text) {
  IntVec v;
  for (const auto& part : split(text, ',')) {
    Rational r;
    try {
      r = parse_rational(part);
    } catch (const Error&) {
      bad(field, text, "expected comma-separated integers");
    }
    if (denominator(r) != 1) bad(field, text, "expected comma-separated integers");
    v.push_back(numerator(r));
  }
  return v;
}

double parse_real(const std::string& field, const std::string& whole, const std::string& text) {
  if (text.rfind("log:", 0) == 0) {
    const double c = parse_real(field, whole, text.substr(4));
    if (!(c > 0)) bad(field, whole, "log: needs a positive argument");
    return std::log(c);
  }
  double x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(x))
    bad(field, whole, "expected comma-separated reals or log:c");
  return x;
}

Eigen::VectorXd parse_reals(const std::string& field, const std::string& text) {
  const auto parts = split(text, ',');
  Eigen::VectorXd v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_real(field, text, parts[i]);
  return v;
}

AffineSubspace parse_subspace(std::size_t n, const std::vector<std::string>& slopes, const std::string& anchor) {
  std::vector<IntVec> ps;
  for (const auto& s : slopes) {
    ps.push_back(parse_ints("--slope", s));
    if (ps.back().size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "DimensionMismatch: --slope '" + s + "' has " + std::to_string(ps.back().size()) + " entries, expected " + std::to_string(n));
  }
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  if (!anchor.empty()) {
    a = parse_reals("--anchor", anchor);
    if (static_cast<std::size_t>(a.size()) != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "DimensionMismatch: --anchor '" + anchor + "' has " + std::to_string(a.size()) + " entries, expected " + std::to_string(n));
  }
  return AffineSubspace::make(ps, a);
}

// "slope=1,0;anchor=log:2,0"
AffineSubspace parse_curve_spec(std::size_t n, const std::string& spec) {
  std::string slope;
  std::string anchor;
  for (const auto& item : split(spec, ';')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) bad("--curve", spec, "expected slope=..;anchor=..");
    const std::string key = item.substr(0, eq);
    if (key == "slope") slope = item.substr(eq + 1);
    else if (key == "anchor") anchor = item.substr(eq + 1);
    else bad("--curve", spec, "unknown key '" + key + "'");
  }
  if (slope.empty()) bad("--curve", spec, "missing slope=");
  return parse_subspace(n, {slope}, anchor);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "Parse: cannot open '" + path + "' for writing");
  f << content;
}

std::string extension(const std::string& path) {
  const std::size_t dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot + 1);
}

std::string set_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string status_label(const StratumReport& r) {
  if (r.status == StratumStatus::Infeasible) return "infeasible";
  if (r.status == StratumStatus::TriviallySatisfied) return "trivial";
  return "active";
}

std::string verdict_label(RankVerdict v) {
  switch (v) {
    case RankVerdict::FullRank: return "full rank";
    case RankVerdict::Deficient: return "DEFICIENT";
    case RankVerdict::Empty: return "-";
  }
  return "-";
}

Location locate_point(const DelzantPolytope& p, const Eigen::VectorXd& xi) {
  return locate(p, std::span<const double>(xi.data(), static_cast<std::size_t>(xi.size())));
}

struct Config {
  std::string path;
  std::vector<std::string> slopes;
  std::string anchor;
  std::string side = "both";
  std::string report = "text";
  std::string format = "text";
  std::string out_path;
  std::string svg_path;
  std::vector<std::string> curves;
  std::string point;
  std::string normal;
  std::size_t samples = 8;
  std::size_t resolution = 512;
  std::size_t grid = 12;
  std::uint64_t seed = 1;
  long box = 10;
  int codim = 1;
  std::size_t n = 0;
  std::size_t k = 0;
  bool per_vertex = false;
  bool inverse = false;
  Tolerances tol;
};

AnalyzeOptions analyze_options(const Config& c) {
  AnalyzeOptions o;
  o.samples = c.samples;
  o.seed = c.seed;
  o.tolerances = c.tol;
  return o;
}

int cmd_validate(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  out << "valid Delzant polytope\n";
  out << "dimension: " << p.dim() << "\nfacets: " << p.facets().size() << "\nvertices: " << p.vertices().size() << "\n";
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    out << "  vertex " << v << " " << format_point(p.vertices()[v].position) << " on facets "
        << set_string(p.vertices()[v].facets) << "\n";
  }
  return 0;
}

int cmd_charts(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  if (c.format == "json") {
    ojson charts = ojson::array();
    for (const auto& ch : p.charts()) {
      ojson j;
      j["vertex"] = ch.vertex;
      j["position"] = format_point(ch.position);
      j["facets"] = ch.facets;
      j["normals"] = to_string(ch.normals);
      j["directions"] = to_string(ch.directions);
      j["offsets"] = to_string(ch.offsets);
      charts.push_back(j);
    }
    out << charts.dump(2) << "\n";
    return 0;
  }
  for (const auto& ch : p.charts()) {
    out << "vertex " << ch.vertex << " " << format_point(ch.position) << "\n";
    out << "  facets: " << set_string(ch.facets) << "\n";
    out << "  U (normals as columns): " << to_string(ch.normals) << "\n";
    out << "  Q (edge directions as columns): " << to_string(ch.directions) << "\n";
    out << "  kappa: " << to_string(ch.offsets) << "\n";
  }
  return 0;
}

int cmd_check(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  const auto v = parse_subspace(p.dim(), c.slopes, c.anchor);
  const CheckSides sides = c.side == "f" ? CheckSides::F : c.side == "g" ? CheckSides::G : CheckSides::Both;
  const auto verdict = is_embedded_toric(p, v, sides, analyze_options(c));

  if (c.report == "json") {
    ojson j;
    j["subspace"] = v.describe();
    j["expected_rank"] = verdict.expected_rank;
    j["side"] = verdict.side == Side::F ? "f" : "g";
    j["embedded_toric_manifold"] = verdict.overall;
    ojson vertices = ojson::array();
    for (const auto& vr : verdict.vertices) {
      ojson jv;
      jv["vertex"] = vr.vertex;
      jv["position"] = format_point(p.vertices()[vr.vertex].position);
      ojson strata = ojson::array();
      for (const auto& s : vr.strata) {
        ojson js;
        js["vanishing"] = s.reduction.vanishing;
        js["status"] = status_label(s);
        js["solution_dim"] = s.solution_dim;
        js["min_rank"] = s.min_rank;
        js["max_rank"] = s.max_rank;
        js["verdict"] = to_string(s.verdict);
        strata.push_back(js);
      }
      jv["strata"] = strata;
      vertices.push_back(jv);
    }
    j["vertices"] = vertices;
    if (verdict.witness) {
      ojson w;
      w["vertex"] = verdict.witness->vertex;
      w["vanishing"] = verdict.witness->vanishing;
      w["args"] = to_json(verdict.witness->args);
      w["rank"] = verdict.witness->rank;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    j["compared_points"] = verdict.compared_points;
    j["rank_mismatches"] = verdict.rank_mismatches;
    out << j.dump(2) << "\n";
  } else {
    out << "V = " << v.describe() << "\n";
    out << "expected rank " << verdict.expected_rank << " on side " << (verdict.side == Side::F ? "f" : "g") << "\n";
    for (const auto& vr : verdict.vertices) {
      out << "vertex " << vr.vertex << " " << format_point(p.vertices()[vr.vertex].position) << "\n";
      char line[160];
      std::snprintf(line, sizeof line, "  %-12s %-11s %-4s %-7s %s\n", "stratum", "status", "dim", "rank", "verdict");
      out << line;
      for (const auto& s : vr.strata) {
        const std::string rank = s.verdict == RankVerdict::Empty
                                     ? "-"
                                     : std::to_string(s.min_rank) + ".." + std::to_string(s.max_rank);
        std::snprintf(line, sizeof line, "  %-12s %-11s %-4zu %-7s %s\n", set_string(s.reduction.vanishing).c_str(),
                      status_label(s).c_str(), s.solution_dim, rank.c_str(), verdict_label(s.verdict).c_str());
        out << line;
      }
    }
    if (verdict.witness)
      out << "witness: vertex " << verdict.witness->vertex << ", stratum " << set_string(verdict.witness->vanishing)
          << ", rank " << verdict.witness->rank << " at " << fmt(verdict.witness->args) << "\n";
    if (sides == CheckSides::Both)
      out << "f/g rank comparison: " << verdict.compared_points << " points, " << verdict.rank_mismatches
          << " mismatches\n";
    out << "embedded toric manifold: " << (verdict.overall ? "true" : "false") << "\n";
  }
  return verdict.overall ? 0 : 1;
}

int cmd_classify(const Config& c, std::ostream& out) {
  if (c.codim != 1)
    throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: --codim " + std::to_string(c.codim) + " is not supported; only 1");
  const auto p = load_polytope(c.path);
  const auto set = classify_codim1(p, c.box, analyze_options(c));
  const std::string kind = set.by_normal ? "normal" : "direction";
  if (c.format == "json") {
    ojson j;
    j["dim"] = set.dim;
    j["codim"] = 1;
    j["box"] = set.box;
    j["kind"] = kind;
    j["candidates"] = set.candidates;
    ojson members = ojson::array();
    for (const auto& m : set.members) members.push_back(to_json(m.entries()));
    j["members"] = members;
    if (c.per_vertex) {
      ojson pv = ojson::array();
      for (std::size_t v = 0; v < set.per_vertex.size(); ++v) {
        ojson jv;
        jv["vertex"] = v;
        jv["position"] = format_point(p.vertices()[v].position);
        ojson ms = ojson::array();
        for (const auto& m : set.per_vertex[v]) ms.push_back(to_json(m.entries()));
        jv["members"] = ms;
        pv.push_back(jv);
      }
      j["per_vertex"] = pv;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << set.members.size() << " of " << set.candidates << " primitive " << kind << "s up to sign with max-norm <= "
      << set.box << " pass at every vertex\n";
  for (const auto& m : set.members) out << to_string(m.entries()) << "\n";
  if (c.per_vertex)
    for (std::size_t v = 0; v < set.per_vertex.size(); ++v) {
      out << "vertex " << v << " " << format_point(p.vertices()[v].position) << ": " << set.per_vertex[v].size()
          << " classes\n";
      for (const auto& m : set.per_vertex[v]) out << "  " << to_string(m.entries()) << "\n";
    }
  return 0;
}

int cmd_local_model(const Config& c, std::ostream& out) {
  if (c.n < 2) throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: --n must be at least 2");
  std::optional<AffineSubspace> v;
  if (!c.normal.empty()) {
    if (!c.slopes.empty()) bad("--normal", c.normal, "give either --normal or --slope, not both");
    if (c.k != 0 && c.k + 1 != c.n) bad("--normal", c.normal, "--normal describes a hyperplane, so k must be n-1");
    const IntVec q = parse_ints("--normal", c.normal);
    if (q.size() != c.n)
      throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: --normal '" + c.normal + "' needs " + std::to_string(c.n) + " entries");
    if (is_zero(q)) throw Error(ErrorCode::ZeroVector, "ZeroVector: --normal is zero");
    v = hyperplane(q);
    if (!c.anchor.empty()) v = v->with_anchor(parse_reals("--anchor", c.anchor));
  } else {
    if (c.slopes.size() != c.k)
      bad("--slope", std::to_string(c.slopes.size()) + " given", "expected exactly k = " + std::to_string(c.k) + " slopes");
    if (c.k + 1 < c.n && c.anchor.empty())
      throw Error(ErrorCode::InvalidSubspace,
                  "InvalidSubspace: --anchor is required when k < n-1, since membership may depend on it");
    v = parse_subspace(c.n, c.slopes, c.anchor);
  }
  const auto r = local_model_member(*v, analyze_options(c));
  out << "V = " << v->describe() << "\n";
  out << "standard local model member: " << (r.full_rank ? "true" : "false") << "\n";
  if (r.closed_form) {
    out << "closed form: " << (*r.closed_form ? "true" : "false") << " ("
        << (*r.closed_form == r.full_rank ? "agrees" : "DISAGREES") << ")\n";
    if (c.n == 3) out << "closed form with B+++ non-strict: " << (corrected_member_3d(ortho_basis(*v).normals[0].entries()) ? "true" : "false") << "\n";
  }
  return 0;
}

std::string curve_csv(const DelzantPolytope& p, const CurveSample& curve) {
  std::string csv = "s,xi1,xi2,location\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const Location loc = i == 0 ? curve.start.location
                         : i + 1 == curve.points.size() ? curve.end.location
                                                        : locate_point(p, curve.points[i]);
    csv += fmt(curve.parameters[i]) + "," + fmt(curve.points[i](0)) + "," + fmt(curve.points[i](1)) + "," +
           describe(loc) + "\n";
  }
  return csv;
}

int cmd_curve(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  if (c.slopes.size() != 1) bad("--slope", std::to_string(c.slopes.size()) + " given", "curves need exactly one slope");
  const auto v = parse_subspace(p.dim(), c.slopes, c.anchor);
  const auto curve = trace_curve(p, v, c.resolution, c.tol);
  if (c.out_path.empty()) {
    out << curve_csv(p, curve);
    return 0;
  }
  const std::string ext = extension(c.out_path);
  if (ext == "csv") write_file(c.out_path, curve_csv(p, curve));
  else if (ext == "svg") write_file(c.out_path, render_svg(p, {{v.describe(), curve.points}}));
  else bad("--out", c.out_path, "expected a .csv or .svg path");
  out << "wrote " << curve.points.size() << " points to " << c.out_path << "\n";
  out << "start " << fmt(curve.start.position) << " " << describe(curve.start.location) << "\n";
  out << "end " << fmt(curve.end.position) << " " << describe(curve.end.location) << "\n";
  return 0;
}

int cmd_intersect(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  if (c.curves.size() < 2) bad("--curve", std::to_string(c.curves.size()) + " given", "need at least two curves");
  std::vector<AffineSubspace> vs;
  for (const auto& spec : c.curves) vs.push_back(parse_curve_spec(p.dim(), spec));
  IntersectOptions o;
  o.resolution = c.resolution;
  o.grid = c.grid;
  o.seed = c.seed;
  o.tolerances = c.tol;
  std::vector<IntersectionPoint> all;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      auto pts = intersect_curves(p, vs[a], vs[b], o);
      std::size_t interior = 0;
      for (auto& pt : pts) {
        pt.curve_a = a;
        pt.curve_b = b;
        interior += pt.kind == IntersectionKind::Interior;
      }
      out << "curves " << a << " and " << b << ": " << interior << " interior, " << pts.size() - interior
          << " boundary\n";
      const auto lin = affine_intersection(vs[a], vs[b]);
      out << "  affine lines: " << (lin ? "meet at " + fmt(*lin) : std::string("parallel")) << "\n";
      for (const auto& pt : pts)
        out << "  " << (pt.kind == IntersectionKind::Interior ? "interior " : "boundary ") << fmt(pt.position) << " "
            << describe(pt.location) << "\n";
      all.insert(all.end(), pts.begin(), pts.end());
    }
  if (!c.svg_path.empty()) {
    std::vector<SvgCurve> curves;
    for (const auto& v : vs) curves.push_back({v.describe(), trace_curve(p, v, c.resolution, c.tol).points});
    write_file(c.svg_path, render_svg(p, curves, all));
    out << "wrote " << c.svg_path << "\n";
  }
  return 0;
}

int cmd_legendre(const Config& c, std::ostream& out) {
  const auto p = load_polytope(c.path);
  const Eigen::VectorXd pt = parse_reals("--point", c.point);
  if (static_cast<std::size_t>(pt.size()) != p.dim())
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: --point '" + c.point + "' needs " + std::to_string(p.dim()) + " entries");
  if (c.inverse) {
    const Eigen::VectorXd xi = legendre_inverse(p, pt, c.tol);
    out << "xi = " << fmt(xi) << "\n";
    out << "residual = " << fmt((potential_grad(p, xi) - pt).norm()) << "\n";
  } else {
    out << "x = " << fmt(potential_grad(p, pt)) << "\n";
    out << "G = " << fmt(potential(p, pt)) << "\n";
  }
  return 0;
}

void add_tolerances(CLI::App* sub, Config& c) {
  sub->add_option("--rank-tol", c.tol.rank, "Relative singular-value threshold for numeric rank")->capture_default_str();
  sub->add_option("--newton-tol", c.tol.newton, "Newton stopping tolerance on |grad G - x|")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Smoothness checks and moment-map geometry for subtorus closures in toric manifolds"};
  app.name("delzant");
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check that a polytope is Delzant and list its vertices");
  validate->add_option("polytope", c.path, "Polytope JSON file")->required();
  validate->footer(kPolytopeFormat);

  auto* charts = app.add_subcommand("charts", "Print the vertex charts: incident facets, U, Q = U^-t, offsets");
  charts->add_option("polytope", c.path, "Polytope JSON file")->required();
  charts->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  charts->footer(kPolytopeFormat);

  auto* check = app.add_subcommand("check", "Decide whether the closure of C(V) is an equivariantly embedded toric manifold");
  check->add_option("polytope", c.path, "Polytope JSON file")->required();
  check->add_option("--slope", c.slopes, "Integer slope vector; repeat k times")->required();
  check->add_option("--anchor", c.anchor, "Anchor a in R^n (default 0)");
  check->add_option("--side", c.side, "f, g or both (both decides on g and cross-checks f)")
      ->check(CLI::IsMember({"f", "g", "both"}))
      ->capture_default_str();
  check->add_option("--report", c.report, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  check->add_option("--samples", c.samples, "Rank samples per stratum")->capture_default_str();
  check->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  add_tolerances(check, c);
  check->footer(std::string(kSubspaceFormat) +
                " Exit status: 0 when the verdict is true, 1 when false, 2 on bad input. Stratum {i,j} is the face where "
                "the chart coordinates i and j vanish; ranks are of the Jacobian of the defining system there.");

  auto* classify = app.add_subcommand("classify", "List the codimension-1 slopes that pass at every vertex");
  classify->add_option("polytope", c.path, "Polytope JSON file")->required();
  classify->add_option("--codim", c.codim, "Codimension of V (only 1)")->capture_default_str();
  classify->add_option("--box", c.box, "Enumerate primitive vectors with max-norm <= box")->capture_default_str();
  classify->add_flag("--per-vertex", c.per_vertex, "Also list the passing classes at each vertex");
  classify->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  classify->add_option("--samples", c.samples, "Rank samples per stratum")->capture_default_str();
  classify->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  add_tolerances(classify, c);
  classify->footer(
      "For n = 2 the classes are directions p of V = R p; for n >= 3 they are normals q of the hyperplane V = q-perp. "
      "Each class is printed once with its first nonzero entry positive. Results hold within the box only.");

  auto* local = app.add_subcommand("local-model", "Membership of V in the standard local model on the orthant");
  local->add_option("--n", c.n, "Ambient dimension")->required();
  local->add_option("--k", c.k, "Dimension of V");
  local->add_option("--slope", c.slopes, "Integer slope vector; repeat k times");
  local->add_option("--normal", c.normal, "Normal vector of a hyperplane V (k = n-1)");
  local->add_option("--anchor", c.anchor, "Anchor; required when k < n-1");
  local->add_option("--samples", c.samples, "Rank samples per stratum")->capture_default_str();
  local->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  add_tolerances(local, c);
  local->footer(std::string(kSubspaceFormat) + " For k = n-1 the anchor does not matter and is set to 0.");

  auto* curve = app.add_subcommand("curve", "Sample the closure of D(V) = Phi^-1(V) in a polygon");
  curve->add_option("polytope", c.path, "Polygon JSON file (n = 2)")->required();
  curve->add_option("--slope", c.slopes, "Integer direction of the line V")->required();
  curve->add_option("--anchor", c.anchor, "Anchor a in R^2 (default 0)");
  curve->add_option("--samples", c.resolution, "Resolution: consecutive points are at most diameter/samples apart")
      ->capture_default_str();
  curve->add_option("--out", c.out_path, "Output .csv or .svg path (CSV on stdout when omitted)");
  add_tolerances(curve, c);
  curve->footer(std::string(kSubspaceFormat) +
                " CSV columns: s,xi1,xi2,location where xi = Phi^-1(a + s p) and location is interior, facet:j, "
                "face:i+j, vertex:v or outside; the two endpoints have s = -inf and inf.");

  auto* intersect = app.add_subcommand("intersect", "Intersection points of the closures of D(V_a) and D(V_b)");
  intersect->add_option("polytope", c.path, "Polygon JSON file (n = 2)")->required();
  intersect->add_option("--curve", c.curves, "\"slope=p1,p2;anchor=a1,a2\"; repeat for each line")->required();
  intersect->add_option("--svg", c.svg_path, "Also write a picture to this SVG path");
  intersect->add_option("--samples", c.resolution, "Curve resolution for the picture")->capture_default_str();
  intersect->add_option("--grid", c.grid, "Newton seeds per axis")->capture_default_str();
  intersect->add_option("--seed", c.seed, "Seed jitter")->capture_default_str();
  add_tolerances(intersect, c);
  intersect->footer(std::string(kSubspaceFormat) +
                    " Points are printed in polytope coordinates xi, labelled interior or boundary and located on "
                    "the polytope.");

  auto* legendre = app.add_subcommand("legendre", "Phi(xi) = grad G(xi), or Phi^-1(x) with --inverse");
  legendre->add_option("polytope", c.path, "Polytope JSON file")->required();
  legendre->add_option("--point", c.point, "Comma-separated coordinates (xi, or x with --inverse)")->required();
  legendre->add_flag("--inverse", c.inverse, "Solve grad G(xi) = point for xi");
  add_tolerances(legendre, c);
  legendre->footer("G = sum_j L_j log L_j with L_j(xi) = <xi, u_j> - kappa_j. xi must be interior. " +
                   std::string(kPolytopeFormat));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(c, out);
    if (*charts) return cmd_charts(c, out);
    if (*check) return cmd_check(c, out);
    if (*classify) return cmd_classify(c, out);
    if (*local) return cmd_local_model(c, out);
    if (*curve) return cmd_curve(c, out);
    if (*intersect) return cmd_intersect(c, out);
    if (*legendre) return cmd_legendre(c, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace delzant::cli
