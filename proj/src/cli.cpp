#include "eddeg/cli.hpp"

#include <chrono>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eddeg/formulas.hpp"
#include "eddeg/montecarlo.hpp"
#include "eddeg/reference_tables.hpp"
#include "eddeg/solver.hpp"
#include "eddeg/spectral.hpp"
#include "eddeg/tensors.hpp"
#include "eddeg/toric.hpp"

namespace eddeg {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kSolveSalt = 1001;
constexpr std::uint64_t kHurwitzSalt = 1002;

// Command-line misuse detected after CLI11 parsing (missing per-formula
// parameter, conflicting sources, ...).  Exits 2 like a parse error.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& w) : std::runtime_error(w) {}
};

int fail(std::ostream& err, const char* type, const std::string& message, int code) {
  json e{{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}};
  err << e.dump(2) << '\n';
  return code;
}

json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();  // too large for a JSON integer; keep it exact as text
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  size_t start = 0;
  for (;;) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Accepts integers, fractions p/q, and plain decimals; all exact.
Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("bad rational '" + text + "'");
  Rational r;
  if (size_t slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      throw std::invalid_argument("bad rational '" + text + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r = Rational(Int(num), d);
  } else if (size_t dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits_only(ip) || (!fp.empty() && !digits_only(fp)))
      throw std::invalid_argument("bad rational '" + text + "'");
    Int scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    r = Rational(Int(ip) * scale + (fp.empty() ? Int(0) : Int(fp)), scale);
  } else {
    if (!digits_only(s)) throw std::invalid_argument("bad rational '" + text + "'");
    r = Rational(Int(s));
  }
  return neg ? Rational(-r) : r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

std::vector<std::vector<Rational>> parse_point_list(const std::string& text) {
  std::vector<std::vector<Rational>> out;
  for (const std::string& tok : split(text, ';')) out.push_back(parse_rational_list(tok));
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

std::vector<Rational> draw_data(std::uint64_t seed, std::uint64_t attempt, int dim,
                                std::uint64_t salt) {
  SampleRng rng(seed, attempt, salt);
  std::vector<Rational> u(dim);
  for (Rational& r : u) r = dyadic(rng.gaussian());
  return u;
}

json report_json(const CriticalReport& rep, bool with_points) {
  json r{{"complex_count", rep.complex_count},
         {"real_count", rep.real_count},
         {"excluded_singular", rep.excluded_singular},
         {"excluded_isotropic", rep.excluded_isotropic}};
  if (with_points) {
    json pts = json::array();
    for (const CriticalPoint& p : rep.points) {
      json coords = json::array();
      for (const std::complex<double>& z : p.x) coords.push_back({z.real(), z.imag()});
      pts.push_back({{"x", coords},
                     {"real", p.real},
                     {"distance", p.distance},
                     {"residual", p.residual}});
    }
    r["points"] = pts;
  }
  return r;
}

json estimate_json(const AEDEstimate& e) {
  json hist = json::object();
  for (const auto& [count, freq] : e.histogram) hist[std::to_string(count)] = freq;
  return json{{"model", e.model},   {"samples", e.samples},     {"seed", e.seed},
              {"mean", e.mean},     {"stderr", e.std_error},    {"histogram", hist},
              {"retries", e.retries}};
}

// Everything the CLI can be asked to do, bound to CLI11 options below.
struct Options {
  bool progress = false;

  std::string formula_name;
  std::optional<int> n, d, g, m, w, s, t, r, p, d1, d2, nodes, cusps;
  std::optional<long long> c1sq, c2, degc1;
  std::vector<int> degrees;
  std::vector<long long> values;
  std::string kind;
  bool projective = false;
  bool homogeneous = false;

  std::string polytope_file;
  std::optional<int> seg_n, cube_m, simplex_m;
  std::vector<int> simplex_product;
  int dilate_k = 1;

  std::vector<int> dims, weights;

  std::string curve_text, param_text, weights_text, data_text, singular_text;
  int map_degree = 1;
  bool count_only = false;
  bool closure = false;
  int retries = 5;

  std::string matrix_file;
  std::optional<int> rank;
  bool check_duality = false;

  std::string model;
  long long samples = 100000;
  int workers = 1;
  bool quadrature = false;
  int resolution = 64;

  std::string table_name;

  std::uint64_t seed = 0;
};

std::uint64_t resolve_seed(const CLI::App* sub, std::uint64_t flag_value) {
  if (sub->count("--seed") > 0) return flag_value;
  if (const char* env = std::getenv("EDDEG_SEED")) {
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || env[0] == '-')
      throw UsageError("EDDEG_SEED must be a decimal unsigned integer, got '" +
                       std::string(env) + "'");
    return v;
  }
  return flag_value;
}

struct Report {
  json command;
  json result;
  json diagnostics = json::object();
};

Report run_formula(const Options& o) {
  const std::string& name = o.formula_name;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError("formula " + name + " requires " + flag);
    return *v;
  };
  auto need_ll = [&](const std::optional<long long>& v, const char* flag) {
    if (!v) throw UsageError("formula " + name + " requires " + flag);
    return *v;
  };

  json params = json::object();
  Int value;
  if (name == "generic_ci") {
    if (o.degrees.empty()) throw UsageError("formula generic_ci requires --degrees");
    int n = need(o.n, "--n");
    value = ed_generic_ci(n, o.degrees, o.projective);
    params = {{"n", n}, {"degrees", o.degrees}, {"projective", o.projective}};
  } else if (name == "hypersurface") {
    int n = need(o.n, "--n"), d = need(o.d, "--d");
    value = ed_generic_hypersurface(n, d);
    params = {{"n", n}, {"d", d}};
  } else if (name == "parametric") {
    int m = need(o.m, "--m"), d = need(o.d, "--d");
    value = ed_generic_parametric(m, d);
    params = {{"m", m}, {"d", d}};
  } else if (name == "bezier") {
    int d1 = need(o.d1, "--d1"), d2 = need(o.d2, "--d2");
    value = ed_bezier(d1, d2, o.projective);
    params = {{"d1", d1}, {"d2", d2}, {"projective", o.projective}};
  } else if (name == "hurwitz") {
    int n = need(o.n, "--n");
    value = ed_hurwitz(n, o.homogeneous);
    params = {{"n", n}, {"homogeneous", o.homogeneous}};
  } else if (name == "cayley_menger") {
    int p = need(o.p, "--p");
    value = ed_cayley_menger(p);
    params = {{"p", p}};
  } else if (name == "eckart_young") {
    int s = need(o.s, "--s"), t = need(o.t, "--t"), r = need(o.r, "--r");
    value = ed_eckart_young(s, t, r);
    params = {{"s", s}, {"t", t}, {"r", r}};
  } else if (name == "smooth_curve") {
    int d = need(o.d, "--d"), g = need(o.g, "--g");
    value = ed_smooth_curve(d, g);
    params = {{"d", d}, {"g", g}};
  } else if (name == "veronese") {
    int m = need(o.m, "--m"), d = need(o.d, "--d");
    value = ed_veronese_generic(m, d);
    params = {{"m", m}, {"d", d}};
  } else if (name == "eigen_count") {
    int m = need(o.m, "--m"), w = need(o.w, "--w");
    value = ed_eigen_count(m, w);
    params = {{"m", m}, {"w", w}};
  } else if (name == "chern") {
    if (o.values.empty()) throw UsageError("formula chern requires --values");
    ChernDegrees cd;
    for (long long v : o.values) cd.degs.emplace_back(v);
    value = ed_from_chern(cd);
    params = {{"values", o.values}};
  } else if (name == "polar") {
    if (o.values.empty()) throw UsageError("formula polar requires --values");
    PolarClasses pc;
    for (long long v : o.values) pc.deltas.emplace_back(v);
    value = ed_from_polar(pc);
    params = {{"values", o.values}};
  } else if (name == "discriminant") {
    DiscriminantKind dk;
    if (o.kind == "hypersurface") {
      dk = DiscGenericHypersurface{need(o.n, "--n"), need(o.d, "--d")};
      params = {{"kind", o.kind}, {"n", *o.n}, {"d", *o.d}};
    } else if (o.kind == "plane_curve") {
      dk = DiscPlaneCurve{need(o.d, "--d"), o.nodes.value_or(0), o.cusps.value_or(0)};
      params = {{"kind", o.kind},
                {"d", *o.d},
                {"nodes", o.nodes.value_or(0)},
                {"cusps", o.cusps.value_or(0)}};
    } else if (o.kind == "space_curve") {
      dk = DiscSmoothSpaceCurve{need(o.d, "--d"), need(o.g, "--g")};
      params = {{"kind", o.kind}, {"d", *o.d}, {"g", *o.g}};
    } else if (o.kind == "surface") {
      dk = DiscSmoothSurface{need(o.d, "--d"), Int(need_ll(o.c1sq, "--c1sq")),
                             Int(need_ll(o.c2, "--c2")), Int(need_ll(o.degc1, "--degc1"))};
      params = {{"kind", o.kind},
                {"d", *o.d},
                {"c1sq", *o.c1sq},
                {"c2", *o.c2},
                {"degc1", *o.degc1}};
    } else {
      throw UsageError(
          "formula discriminant requires --kind hypersurface|plane_curve|space_curve|surface");
    }
    value = ed_discriminant_degree(dk);
  } else {
    throw UsageError("unknown formula '" + name + "'");
  }

  Report rep;
  rep.command = {{"subcommand", "formula"}, {"name", name}, {"params", params}};
  rep.result = {{"name", name}, {"params", params}, {"ed_degree", int_json(value)}};
  rep.diagnostics = {{"exact", true}};
  return rep;
}

Report run_toric(const Options& o) {
  int sources = (!o.polytope_file.empty() ? 1 : 0) + (o.seg_n ? 1 : 0) + (o.cube_m ? 1 : 0) +
                (o.simplex_m ? 1 : 0) + (!o.simplex_product.empty() ? 1 : 0);
  if (sources != 1)
    throw UsageError(
        "toric requires exactly one of --file/--segment/--cube/--simplex/--simplex-product");

  LatticePolytope P;
  json source;
  if (!o.polytope_file.empty()) {
    P = read_polytope_file(o.polytope_file);
    source = {{"file", o.polytope_file}};
  } else if (o.seg_n) {
    P = segment(*o.seg_n);
    source = {{"segment", *o.seg_n}};
  } else if (o.cube_m) {
    P = cube(*o.cube_m);
    source = {{"cube", *o.cube_m}};
  } else if (o.simplex_m) {
    P = simplex(*o.simplex_m);
    source = {{"simplex", *o.simplex_m}};
  } else {
    if (o.simplex_product.size() != 2)
      throw UsageError("--simplex-product takes exactly two dimensions, e.g. 1,2");
    P = product_polytope(simplex(o.simplex_product[0]), simplex(o.simplex_product[1]));
    source = {{"simplex_product", o.simplex_product}};
  }
  if (o.dilate_k != 1) P = dilate(P, o.dilate_k);

  FaceTable ft = enumerate_faces(P);
  json volumes = json::array();
  for (const Int& v : ft.V) volumes.push_back(int_json(v));

  Report rep;
  rep.command = {{"subcommand", "toric"}, {"source", source}, {"dilate", o.dilate_k}};
  rep.result = {{"ambient", P.ambient},
                {"dim", P.dim},
                {"vertices", P.vertices.size()},
                {"f_vector", ft.f},
                {"volume_vector", volumes},
                {"ed_degree", int_json(ed_toric(P))}};
  rep.diagnostics = {{"exact", true}};
  return rep;
}

Report run_segre(const Options& o) {
  if (o.dims.empty()) throw UsageError("segre requires --dims");
  bool weighted = false;
  for (int w : o.weights)
    if (w != 1) weighted = true;
  Int value;
  if (o.weights.empty() || !weighted) {
    if (!o.weights.empty() && o.weights.size() != o.dims.size())
      throw UsageError("--weights must match --dims in length");
    value = ed_segre(o.dims);
  } else {
    value = ed_segre_veronese(TensorShape{o.dims, o.weights});
  }

  Report rep;
  rep.command = {{"subcommand", "segre"}, {"dims", o.dims}, {"weights", o.weights}};
  rep.result = {{"dims", o.dims}, {"weights", o.weights}, {"ed_degree", int_json(value)}};
  rep.diagnostics = {{"exact", true}};
  return rep;
}

Report run_solve(const Options& o, std::uint64_t seed) {
  bool have_curve = !o.curve_text.empty();
  bool have_param = !o.param_text.empty();
  if (have_curve == have_param)
    throw UsageError("solve requires exactly one of --curve/--param");
  if (o.closure && (have_param || o.projective))
    throw UsageError("--closure applies to affine --curve runs only");

  PlaneCurve curve;
  std::vector<MultiPoly> psi;
  std::vector<Rational> wts;
  int dim = 0;
  if (have_curve) {
    int arity = o.projective ? 3 : 2;
    MultiPoly f = MultiPoly::parse(o.curve_text, arity);
    std::vector<std::vector<Rational>> sing = parse_point_list(o.singular_text);
    for (const auto& pt : sing)
      if (static_cast<int>(pt.size()) != arity)
        throw UsageError("each --singular point needs " + std::to_string(arity) +
                         " coordinates");
    curve = o.projective ? projective_curve(f, sing) : affine_curve(f, sing);
    dim = arity;
  } else {
    for (const std::string& tok : split(o.param_text, ';'))
      psi.push_back(MultiPoly::parse(tok, 2));
    if (psi.size() < 2)
      throw UsageError("--param needs at least two coordinate polynomials (';'-separated)");
    if (!o.weights_text.empty()) {
      wts = parse_rational_list(o.weights_text);
      if (wts.size() != psi.size())
        throw UsageError("--weights must list one value per --param coordinate");
    }
    dim = static_cast<int>(psi.size());
  }

  auto run_once = [&](const std::vector<Rational>& u) -> json {
    DataPoint dp{u};
    if (o.closure) {
      ClosureComparison c = affine_vs_closure(curve, dp);
      return json{{"affine", report_json(c.affine, !o.count_only)},
                  {"closure", report_json(c.closure, !o.count_only)},
                  {"lemma_checked", c.lemma_checked},
                  {"lemma_residual", c.lemma_residual}};
    }
    CriticalReport rep = have_curve
                             ? count_critical(curve, dp, !o.count_only)
                             : param_critical_count(psi, wts, dp, o.map_degree, !o.count_only);
    return report_json(rep, !o.count_only);
  };

  json result;
  std::vector<Rational> u;
  int attempts = 0;
  bool drawn = o.data_text.empty();
  if (!drawn) {
    u = parse_rational_list(o.data_text);
    if (static_cast<int>(u.size()) != dim)
      throw UsageError("--data needs " + std::to_string(dim) + " comma-separated values");
    attempts = 1;
    result = run_once(u);  // degenerate explicit data: RetrySignal exits 4
  } else {
    std::string last = "no attempt made";
    bool done = false;
    for (int a = 0; a < o.retries && !done; ++a) {
      u = draw_data(seed, static_cast<std::uint64_t>(a), dim, kSolveSalt);
      try {
        result = run_once(u);
        done = true;
        attempts = a + 1;
      } catch (const RetrySignal& e) {
        last = e.what();
      }
    }
    if (!done)
      throw RetryExhausted("no usable data point after " + std::to_string(o.retries) +
                           " draws (last: " + last + ")");
  }
  result["data"] = rationals_json(u);

  Report rep;
  rep.command = {{"subcommand", "solve"},
                 {"curve", o.curve_text},
                 {"param", o.param_text},
                 {"projective", o.projective},
                 {"singular", o.singular_text},
                 {"weights", o.weights_text},
                 {"map_degree", o.map_degree},
                 {"closure", o.closure},
                 {"count_only", o.count_only},
                 {"data", drawn ? json() : json(o.data_text)},
                 {"seed", seed},
                 {"retries", o.retries}};
  rep.result = result;
  rep.diagnostics = {{"attempts", attempts},
                     {"data_source", drawn ? "drawn" : "provided"},
                     {"tolerances",
                      {{"unlisted_singular_gradient", 1e-10},
                       {"point_merge_relative", 1e-12}}}};
  return rep;
}

Report run_hurwitz(const Options& o, std::uint64_t seed) {
  int n = *o.n;  // required by CLI11
  int dim = o.homogeneous ? n + 1 : n;

  std::vector<Rational> u;
  long long count = 0;
  int attempts = 0;
  bool drawn = o.data_text.empty();
  if (!drawn) {
    u = parse_rational_list(o.data_text);
    if (static_cast<int>(u.size()) != dim)
      throw UsageError("--data needs " + std::to_string(dim) + " comma-separated values");
    attempts = 1;
    count = hurwitz_count(n, u, o.homogeneous);
  } else {
    std::string last = "no attempt made";
    bool done = false;
    for (int a = 0; a < o.retries && !done; ++a) {
      u = draw_data(seed, static_cast<std::uint64_t>(a), dim, kHurwitzSalt);
      try {
        count = hurwitz_count(n, u, o.homogeneous);
        done = true;
        attempts = a + 1;
      } catch (const RetrySignal& e) {
        last = e.what();
      }
    }
    if (!done)
      throw RetryExhausted("no usable data point after " + std::to_string(o.retries) +
                           " draws (last: " + last + ")");
  }
  Int formula = ed_hurwitz(n, o.homogeneous);

  Report rep;
  rep.command = {{"subcommand", "hurwitz"},
                 {"n", n},
                 {"homogeneous", o.homogeneous},
                 {"data", drawn ? json() : json(o.data_text)},
                 {"seed", seed},
                 {"retries", o.retries}};
  rep.result = {{"n", n},
                {"homogeneous", o.homogeneous},
                {"count", count},
                {"formula", int_json(formula)},
                {"agree", formula == count},
                {"data", rationals_json(u)}};
  rep.diagnostics = {{"attempts", attempts},
                     {"data_source", drawn ? "drawn" : "provided"}};
  return rep;
}

json matrix_entries_json(const MatrixData& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Report run_matrix(const Options& o) {
  MatrixData data = read_matrix_file(o.matrix_file);
  int r = *o.rank;  // required by CLI11

  std::vector<CriticalMatrix> crit = eckart_young_critical(data, r);
  json list = json::array();
  for (const CriticalMatrix& c : crit)
    list.push_back({{"kept", c.kept},
                    {"distance", c.distance},
                    {"matrix", matrix_entries_json(c.matrix)}});

  json result{{"rows", data.rows},
              {"cols", data.cols},
              {"rank", r},
              {"critical_count", list.size()},
              {"critical", list}};
  if (o.check_duality) {
    DualityReport dr = duality_check(data, r);
    json pairs = json::array();
    for (const DualityPair& p : dr.pairs)
      pairs.push_back({{"kept", p.kept},
                       {"distance_low", p.distance_low},
                       {"distance_high", p.distance_high},
                       {"inner_residual", p.inner_residual},
                       {"pythagoras_residual", p.pythagoras_residual}});
    result["duality"] = {{"pairs", pairs},
                         {"max_inner_residual", dr.max_inner_residual},
                         {"max_pythagoras_residual", dr.max_pythagoras_residual},
                         {"order_reversed", dr.order_reversed}};
  }

  Report rep;
  rep.command = {{"subcommand", "matrix"},
                 {"file", o.matrix_file},
                 {"rank", r},
                 {"check_duality", o.check_duality}};
  rep.result = result;
  rep.diagnostics = {{"tolerances", {{"singular_value_coincidence", 1e-8}}}};
  return rep;
}

Report run_aed(const Options& o, std::uint64_t seed) {
  ModelSpec spec = parse_model(o.model);

  Report rep;
  if (o.quadrature) {
    if (spec.kind != ModelSpec::Kind::Ellipse)
      throw UsageError("--quadrature is implemented for the ellipse model only");
    double value = aed_quadrature_ellipse(o.resolution);
    rep.command = {{"subcommand", "aed"},
                   {"model", o.model},
                   {"method", "quadrature"},
                   {"resolution", o.resolution}};
    rep.result = {{"model", model_name(spec)},
                  {"method", "quadrature"},
                  {"resolution", o.resolution},
                  {"value", value}};
    rep.diagnostics = {{"warnings", json::array()}};
    return rep;
  }

  AEDEstimate est = aed_estimate(spec, o.samples, seed, o.workers);
  json warnings = json::array();
  if (est.retries > 0 && 100.0 * static_cast<double>(est.retries) >
                             static_cast<double>(est.samples)) {
    double rate = 100.0 * static_cast<double>(est.retries) / static_cast<double>(est.samples);
    char buf[96];
    std::snprintf(buf, sizeof buf, "retry rate %.2f%% exceeds 1%%; treat the estimate with care",
                  rate);
    warnings.push_back(buf);
  }
  // The worker count is deliberately not echoed: the document is bit-identical
  // for equal (model, samples, seed) no matter how the sweep is scheduled.
  rep.command = {{"subcommand", "aed"},
                 {"model", o.model},
                 {"samples", o.samples},
                 {"seed", seed}};
  rep.result = estimate_json(est);
  rep.diagnostics = {{"warnings", warnings}, {"dyadic_bits", 40}};
  return rep;
}

Report run_table(const Options& o) {
  Report rep;
  if (o.table_name.empty()) {
    json names = json::array();
    for (const ReferenceTable& t : reference_tables()) names.push_back(t.name);
    rep.command = {{"subcommand", "table"}};
    rep.result = {{"available", names}, {"source", "reference"}};
    return rep;
  }
  const ReferenceTable& t = reference_table(o.table_name);
  rep.command = {{"subcommand", "table"}, {"name", o.table_name}};
  rep.result = {{"name", t.name},
                {"description", t.description},
                {"columns", t.columns},
                {"rows", t.rows},
                {"source", "reference"}};
  return rep;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{
      "Euclidean distance degrees of algebraic varieties: closed-form counts, exact "
      "critical-point solving, low-rank matrix checks, and average-degree estimates."};
  app.name("eddeg");
  app.require_subcommand(1);
  app.add_flag("--progress", o.progress, "human-readable progress on standard error");

  CLI::App* f = app.add_subcommand("formula", "closed-form ED degree formulas");
  f->fallthrough();
  f->add_option("name", o.formula_name,
                "one of: generic_ci, hypersurface, parametric, bezier, hurwitz, "
                "cayley_menger, eckart_young, smooth_curve, veronese, eigen_count, "
                "chern, polar, discriminant")
      ->required();
  f->add_option("--n", o.n, "ambient dimension / polynomial degree parameter");
  f->add_option("--d", o.d, "degree");
  f->add_option("--g", o.g, "genus");
  f->add_option("--m", o.m, "projective dimension / parameter count");
  f->add_option("--w", o.w, "tensor order");
  f->add_option("--s", o.s, "matrix rows");
  f->add_option("--t", o.t, "matrix columns");
  f->add_option("--r", o.r, "rank bound");
  f->add_option("--p", o.p, "point count");
  f->add_option("--d1", o.d1, "first patch degree");
  f->add_option("--d2", o.d2, "second patch degree");
  f->add_option("--degrees", o.degrees, "complete intersection degrees")->delimiter(',');
  f->add_option("--values", o.values, "class degrees for chern/polar")->delimiter(',');
  f->add_option("--kind", o.kind,
                "discriminant kind: hypersurface, plane_curve, space_curve, surface");
  f->add_option("--nodes", o.nodes, "node count of the plane curve");
  f->add_option("--cusps", o.cusps, "cusp count of the plane curve");
  f->add_option("--c1sq", o.c1sq, "self-intersection of the first Chern class");
  f->add_option("--c2", o.c2, "degree of the second Chern class");
  f->add_option("--degc1", o.degc1, "degree of the first Chern class");
  f->add_flag("--projective", o.projective, "projective instead of affine");
  f->add_flag("--homogeneous", o.homogeneous, "homogeneous coefficient space");

  CLI::App* tor = app.add_subcommand("toric", "ED degree of a projectively normal toric variety");
  tor->fallthrough();
  tor->add_option("--file", o.polytope_file, "lattice polytope file, one vertex per line");
  tor->add_option("--segment", o.seg_n, "segment [0, n]");
  tor->add_option("--cube", o.cube_m, "unit m-cube");
  tor->add_option("--simplex", o.simplex_m, "unit m-simplex");
  tor->add_option("--simplex-product", o.simplex_product,
                  "product of two unit simplices, e.g. 1,2")
      ->delimiter(',');
  tor->add_option("--dilate", o.dilate_k, "dilation factor applied to the polytope");

  CLI::App* seg = app.add_subcommand("segre", "ED degree of rank-one tensor varieties");
  seg->fallthrough();
  seg->add_option("--dims", o.dims, "tensor format, e.g. 2,2,2")->delimiter(',')->required();
  seg->add_option("--weights", o.weights, "symmetrization weights, e.g. 3,2")->delimiter(',');

  CLI::App* sol = app.add_subcommand(
      "solve", "exact critical points of the squared distance to a plane curve or a "
               "parametrized surface");
  sol->fallthrough();
  sol->add_option("--curve", o.curve_text,
                  "curve polynomial in x,y (affine) or x,y,z = x1,x2,x3 (projective)");
  sol->add_flag("--projective", o.projective, "treat --curve as homogeneous in x,y,z");
  sol->add_option("--singular", o.singular_text,
                  "known singular points, ';'-separated rational tuples");
  sol->add_option("--param", o.param_text,
                  "coordinate polynomials of a parametrization in x,y (';'-separated)");
  sol->add_option("--weights", o.weights_text, "rational weights for the --param distance");
  sol->add_option("--map-degree", o.map_degree, "fiber cardinality of the parametrization")
      ->check(CLI::PositiveNumber);
  sol->add_option("--data", o.data_text,
                  "explicit data point (comma-separated rationals); degenerate data exits 4");
  sol->add_option("--seed", o.seed, "seed for drawn data (EDDEG_SEED when flag absent)");
  sol->add_option("--retries", o.retries, "maximum data draws before giving up")
      ->check(CLI::Range(1, 100));
  sol->add_flag("--count-only", o.count_only, "omit the solution list from the report");
  sol->add_flag("--closure", o.closure,
                "compare the affine count with its projective closure");

  CLI::App* hur = app.add_subcommand(
      "hurwitz", "constructive critical-point count on the two-roots-summing-to-zero "
                 "coefficient hypersurface");
  hur->fallthrough();
  hur->add_option("--n", o.n, "polynomial degree, 3..9")->required();
  hur->add_flag("--homogeneous", o.homogeneous, "projective coefficient space");
  hur->add_option("--data", o.data_text, "explicit coefficient data (comma-separated rationals)");
  hur->add_option("--seed", o.seed, "seed for drawn data (EDDEG_SEED when flag absent)");
  hur->add_option("--retries", o.retries, "maximum data draws before giving up")
      ->check(CLI::Range(1, 100));

  CLI::App* mat = app.add_subcommand("matrix", "critical low-rank matrices of a data matrix");
  mat->fallthrough();
  mat->add_option("--file", o.matrix_file, "matrix file, one row of decimals per line")
      ->required();
  mat->add_option("--rank", o.rank, "rank bound")->required();
  mat->add_flag("--check-duality", o.check_duality,
                "verify the complementary-rank pairing identities");

  CLI::App* aed = app.add_subcommand("aed", "average ED degree under Gaussian data");
  aed->fallthrough();
  aed->add_option("--model", o.model,
                  "ellipse | cardioid | gamma3 | rnc:<n> | matrix:<s>,<t>,<r> | "
                  "tensor:<d1>,<d2>,...")
      ->required();
  aed->add_option("--samples", o.samples, "sample count (>= 100)")->check(CLI::PositiveNumber);
  aed->add_option("--seed", o.seed, "stream seed (EDDEG_SEED when flag absent)");
  aed->add_option("--workers", o.workers, "worker threads; 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  aed->add_flag("--quadrature", o.quadrature,
                "integrate the ellipse density instead of sampling");
  aed->add_option("--resolution", o.resolution, "base panel count for --quadrature (>= 64)");

  CLI::App* tab = app.add_subcommand("table", "published reference tables (not recomputed)");
  tab->fallthrough();
  tab->add_option("name", o.table_name, "table name; omit to list the available tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", e.what(), 2);
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  auto t0 = std::chrono::steady_clock::now();
  if (o.progress) err << "eddeg: " << name << " started\n";

  try {
    Report rep;
    if (name == "formula") {
      rep = run_formula(o);
    } else if (name == "toric") {
      rep = run_toric(o);
    } else if (name == "segre") {
      rep = run_segre(o);
    } else if (name == "solve") {
      rep = run_solve(o, resolve_seed(sub, o.seed));
    } else if (name == "hurwitz") {
      rep = run_hurwitz(o, resolve_seed(sub, o.seed));
    } else if (name == "matrix") {
      rep = run_matrix(o);
    } else if (name == "aed") {
      rep = run_aed(o, resolve_seed(sub, o.seed));
    } else {
      rep = run_table(o);
    }

    json doc;
    doc["command"] = rep.command;
    doc["result"] = rep.result;
    doc["diagnostics"] = rep.diagnostics;
    doc["version"] = kVersion;
    out << doc.dump(2) << '\n';

    if (o.progress) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      err << "eddeg: " << name << " finished in " << secs << " s\n";
    }
    return 0;
  } catch (const UsageError& e) {
    return fail(err, "usage", e.what(), 2);
  } catch (const RetryExhausted& e) {
    return fail(err, "retry", e.what(), 4);
  } catch (const RetrySignal& e) {
    return fail(err, "retry", std::string("degenerate data: ") + e.what(), 4);
  } catch (const std::exception& e) {
    return fail(err, "domain", e.what(), 3);
  }
}

}  // namespace eddeg
