#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tridecomp/tridecomp.hpp"

namespace tridecomp::cli {
namespace {

using Json = nlohmann::ordered_json;

// Exact decomposition keeps one lcm(1..n) denominator per triangle; past this order
// the integers stop being worth it next to float mode.
constexpr std::size_t kExactMaxOrder = 40;
constexpr std::size_t kOracleMaxOrder = 11;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

std::string fraction(const Rational& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

// Exact values are "p/q" strings, floats are numbers.
template <Scalar S>
Json json_value(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) return fraction(v);
  else if constexpr (std::is_same_v<S, Surd21>) return v.is_rational() ? fraction(v.rational_part()) : v.to_string();
  else return static_cast<double>(v);
}

template <Scalar S>
std::string text_value(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) return fraction(v);
  else if constexpr (std::is_same_v<S, Surd21>) return v.is_rational() ? fraction(v.rational_part()) : v.to_string();
  else return decimal(static_cast<double>(v));
}

std::string triangle_text(const Triangle& t) { return format_clique({t.a, t.b, t.c}); }

Json triangle_json(const Triangle& t) { return Json::array({t.a, t.b, t.c}); }

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(kExitError, "cannot open " + path);
  return load_edge_list(in);
}

// Writes to the named file, or to out when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : to_file_(!path.empty()) {
    if (to_file_) {
      file_.open(path, std::ios::binary);
      if (!file_) fail(kExitError, "cannot write " + path);
    }
    stream_ = to_file_ ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const noexcept { return to_file_; }
  void close() {
    if (!to_file_) return;
    file_.close();
    if (!file_) fail(kExitError, "write failed");
  }

 private:
  bool to_file_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::size_t resolve_threads(std::size_t requested) { return requested == 0 ? default_thread_count() : requested; }

template <Scalar S>
bool is_negative(const S& w, double tol) {
  if constexpr (is_exact_v<S>) return w < S(0);
  else return to_double(w) < -tol;
}

template <Scalar S>
std::size_t count_negative(const TriangleWeightReport<S>& report, double tol) {
  std::size_t k = 0;
  for (const S& w : report.weights) k += is_negative(w, tol) ? 1 : 0;
  return k;
}

int worst_exit(std::initializer_list<int> codes) {
  int out = kExitOk;
  const auto rank = [](int c) {
    switch (c) {
      case kExitUndefined: return 4;
      case kExitInvariant: return 3;
      case kExitNegative: return 2;
      case kExitError: return 5;
      default: return 0;
    }
  };
  for (int c : codes)
    if (rank(c) > rank(out)) out = c;
  return out;
}

int report_exit(const EdgeSumCheck& sums, bool negative) {
  return worst_exit({sums.status == EdgeSumStatus::uncoverable_edge ? kExitUndefined : kExitOk,
                     sums.status == EdgeSumStatus::fail ? kExitInvariant : kExitOk, negative ? kExitNegative : kExitOk});
}

void require_exact_order(const Graph& g) {
  if (g.order() > kExactMaxOrder)
    fail(kExitError, "--exact supports n <= " + std::to_string(kExactMaxOrder) + ", got n = " + std::to_string(g.order()));
}

// ---- decompose ----

struct DecomposeOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  bool exact = false;
  double tol = 1e-9;
  std::size_t threads = 0;
};

template <Scalar S>
Json summary_json(const Graph& g, const TriangleWeightReport<S>& report, const EdgeSumCheck& sums, double tol) {
  Json s;
  s["n"] = report.n;
  s["edges"] = g.edge_count();
  s["min_degree"] = report.min_degree;
  s["mode"] = std::string(to_string(report.mode));
  s["triangles"] = report.triangles.size();
  s["min_weight"] = report.min_weight ? json_value(*report.min_weight) : Json(nullptr);
  s["min_witness"] = report.min_witness ? triangle_json(*report.min_witness) : Json(nullptr);
  s["negative_triangles"] = count_negative(report, tol);
  s["edge_sum_status"] = std::string(to_string(sums.status));
  s["max_edge_error"] = sums.worst_error;
  Json uncovered = Json::array();
  for (const Edge& e : sums.uncovered) uncovered.push_back(Json::array({e.u, e.v}));
  s["uncovered_edges"] = std::move(uncovered);
  s["b_stats"] = {{"samples", report.b_samples}, {"mean", report.b_mean}, {"min", report.b_min}};
  return s;
}

template <Scalar S>
void write_json_report(std::ostream& os, const Graph& g, const TriangleWeightReport<S>& report,
                       const EdgeSumCheck& sums, double tol) {
  Json doc;
  doc["schema_version"] = 1;
  doc["summary"] = summary_json(g, report, sums, tol);
  Json tris = Json::array();
  for (std::size_t i = 0; i < report.triangles.size(); ++i) {
    const Triangle& t = report.triangles[i];
    tris.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}, {"weight", json_value(report.weights[i])}});
  }
  doc["triangles"] = std::move(tris);
  Json sums_json = Json::array();
  for (std::size_t e = 0; e < report.edges.size(); ++e)
    sums_json.push_back({{"u", report.edges[e].u}, {"v", report.edges[e].v}, {"sum", json_value(report.edge_sums[e])}});
  doc["edge_sums"] = std::move(sums_json);
  os << doc.dump(2) << '\n';
}

template <Scalar S>
void write_csv_report(std::ostream& os, const Graph& g, const TriangleWeightReport<S>& report,
                      const EdgeSumCheck& sums, double tol) {
  os << "# schema_version=1\n";
  const Json summary = summary_json(g, report, sums, tol);
  for (const auto& [key, value] : summary.items())
    os << "# " << key << '=' << (value.is_string() ? value.template get<std::string>() : value.dump()) << '\n';
  os << "a,b,c,weight\n";
  for (std::size_t i = 0; i < report.triangles.size(); ++i) {
    const Triangle& t = report.triangles[i];
    os << t.a << ',' << t.b << ',' << t.c << ',' << text_value(report.weights[i]) << '\n';
  }
  os << "\nu,v,sum\n";
  for (std::size_t e = 0; e < report.edges.size(); ++e)
    os << report.edges[e].u << ',' << report.edges[e].v << ',' << text_value(report.edge_sums[e]) << '\n';
}

template <Scalar S>
void print_weight_summary(std::ostream& os, const Graph& g, const TriangleWeightReport<S>& report,
                          const EdgeSumCheck& sums, double tol) {
  os << "n=" << report.n << " edges=" << g.edge_count() << " min_degree=" << report.min_degree
     << " mode=" << to_string(report.mode) << " triangles=" << report.triangles.size() << '\n';
  os << "edge sums: " << to_string(sums.status) << " (" << sums.checked << " covered edges, max error "
     << decimal(sums.worst_error) << ")\n";
  for (const Edge& e : sums.uncovered) os << "uncovered edge: " << e.u << ' ' << e.v << '\n';
  if (report.min_weight)
    os << "min weight: " << text_value(*report.min_weight) << " at " << triangle_text(*report.min_witness) << '\n';
  os << "negative triangles: " << count_negative(report, tol) << '\n';
}

template <Scalar S>
int run_decompose(const Graph& g, const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  const TriangleWeightReport<S> report = decompose<S>(g, resolve_threads(opt.threads));
  const EdgeSumCheck sums = verify_edge_sums(report, opt.tol);
  Sink sink(opt.output, out);
  if (opt.format == "csv") write_csv_report(sink.stream(), g, report, sums, opt.tol);
  else write_json_report(sink.stream(), g, report, sums, opt.tol);
  sink.close();
  print_weight_summary(sink.to_file() ? out : err, g, report, sums, opt.tol);
  return report_exit(sums, count_negative(report, opt.tol) > 0);
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  if (!(opt.tol > 0)) fail(kExitError, "--tol must be positive");
  const Graph g = read_graph(opt.input);
  if (opt.exact) {
    require_exact_order(g);
    return run_decompose<Rational>(g, opt, out, err);
  }
  return run_decompose<double>(g, opt, out, err);
}

// ---- verify ----

struct VerifyOptions {
  std::string input;
  bool exact = false;
  double tol = 1e-9;
  std::size_t threads = 0;
};

template <Scalar S>
int run_verify(const Graph& g, const VerifyOptions& opt, std::ostream& out) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto gap = n - static_cast<std::int64_t>(g.min_degree());
  const bool audit = 4 * gap < n;
  BridgeAudit hook(g.order(), gap, n);
  const TriangleWeightReport<S> report =
      audit ? decompose<S>(g, resolve_threads(opt.threads), hook) : decompose<S>(g, resolve_threads(opt.threads));
  const EdgeSumCheck sums = verify_edge_sums(report, opt.tol);
  print_weight_summary(out, g, report, sums, opt.tol);
  const bool negative = count_negative(report, opt.tol) > 0;
  bool mismatch = false;

  if (g.order() <= kOracleMaxOrder) {
    const auto oracle = oracle_weights<S>(g);
    std::optional<std::string> diff;
    if (oracle.size() != report.triangles.size()) diff = "triangle counts differ";
    for (std::size_t i = 0; !diff && i < oracle.size(); ++i) {
      const auto& [t, w] = oracle[i];
      const bool same = t == report.triangles[i] &&
                        (is_exact_v<S> ? w == report.weights[i]
                                       : std::abs(to_double(w) - to_double(report.weights[i])) <= opt.tol);
      if (!same)
        diff = "at " + triangle_text(t) + ": oracle " + text_value(w) + ", fast " + text_value(report.weights[i]);
    }
    if (diff) {
      out << "oracle != fast " << *diff << '\n';
      mismatch = true;
    } else {
      out << "oracle == fast (" << oracle.size() << " triangles)\n";
    }
  } else {
    out << "oracle cross-check skipped (n > " << kOracleMaxOrder << ")\n";
  }

  if (audit) {
    out << "bridge audit at d=" << ratio<Rational>(static_cast<std::int64_t>(gap), static_cast<std::int64_t>(n)).get_str() << ": " << hook.points() << " points, " << hook.violations()
        << " violations\n";
    if (const auto& v = hook.first_violation()) {
      const KernelSample& s = v->sample;
      out << "first violation: " << v->constraint << " at O=" << format_clique({s.o.x1, s.o.x2, s.o.x3})
          << " y=" << s.y << " z=" << s.z << '\n';
      mismatch = true;
    }
    if (Surd21(Rational(gap, n)) <= program::solve_threshold<Surd21>()) {
      const W1Summary w1 = summarize_w1(g, report);
      out << "w1 max: " << decimal(w1.max_value) << " over " << w1.orderings << " orderings, " << w1.above_one
          << " above 1\n";
      if (w1.above_one > 0) mismatch = true;
    }
  }

  const int code = worst_exit({report_exit(sums, negative), mismatch ? kExitInvariant : kExitOk});
  out << "verify: " << (code == kExitOk ? "ok" : "failed") << '\n';
  return code;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  if (!(opt.tol > 0)) fail(kExitError, "--tol must be positive");
  const Graph g = read_graph(opt.input);
  if (opt.exact) {
    require_exact_order(g);
    return run_verify<Rational>(g, opt, out);
  }
  return run_verify<double>(g, opt, out);
}

// ---- gen ----

struct GenOptions {
  std::string output;
  std::size_t n = 0;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::string base;
  std::size_t part = 1;
  std::string mode = "clique";
  double p = 0.5;
  std::size_t delta_min = 0;
};

Graph blowup_base(const std::string& name) {
  static const std::regex named("([ck])([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, named)) {
    const std::size_t size = std::stoul(m[2].str());
    if (m[1] == "c") {
      if (size < 3) fail(kExitError, "cycle base needs at least 3 vertices");
      return gen_cycle(size);
    }
    if (size < 1) fail(kExitError, "complete base needs at least 1 vertex");
    return gen_complete(size);
  }
  return read_graph(name);
}

int cmd_gen(const std::string& kind, const GenOptions& opt, std::ostream& out) {
  Graph g;
  if (kind == "complete") {
    if (opt.n < 1) fail(kExitError, "--n must be at least 1");
    g = gen_complete(opt.n);
  } else if (kind == "join") {
    g = gen_join_regular(opt.k, opt.seed);
  } else if (kind == "blowup") {
    g = gen_blowup(blowup_base(opt.base), opt.part, opt.mode == "clique" ? BlowupMode::clique : BlowupMode::independent);
  } else {
    g = gen_gnp_min_degree(opt.n, opt.p, opt.delta_min, opt.seed);
  }
  Sink sink(opt.output, out);
  write_edge_list(sink.stream(), g);
  sink.close();
  return kExitOk;
}

// ---- program ----

struct ProgramOptions {
  bool exact = false;
  bool json = false;
  int level = 10;
  std::string d = "0.17";
  std::string point;
  std::string fn;
  std::string args;
  std::size_t grid = 2000;
  std::size_t threads = 0;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
};

template <Scalar S>
S parse_scalar(const std::string& text) {
  if (text == "dstar") return program::solve_threshold<S>();
  if constexpr (is_exact_v<S>) {
    return S(parse_rational(text));
  } else {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw std::invalid_argument("bad number: " + text);
    return static_cast<S>(v);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

template <Scalar S>
Json point_json(const program::ProgramPoint<S>& pt) {
  Json vars;
  for (program::Var v : program::level_variables(pt.level()))
    vars[std::string(program::var_name(v))] = json_value(pt[v]);
  return vars;
}

template <Scalar S>
std::string point_text(const program::ProgramPoint<S>& pt) {
  std::string s;
  for (program::Var v : program::level_variables(pt.level())) {
    if (!s.empty()) s += ", ";
    s += std::string(program::var_name(v)) + "=" + text_value(pt[v]);
  }
  return s;
}

template <Scalar S>
void emit_value(std::ostream& out, const ProgramOptions& opt, Json doc, const S& value) {
  doc["value"] = to_double(value);
  if (is_exact_v<S>) doc["exact_value"] = json_value(value);
  if (opt.json) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << "value " << decimal(to_double(value)) << '\n';
  if (is_exact_v<S>) out << "exact " << text_value(value) << '\n';
}

template <Scalar S>
int program_eval(const ProgramOptions& opt, std::ostream& out) {
  const S d = parse_scalar<S>(opt.d);
  if (!opt.fn.empty()) {
    std::vector<S> args;
    for (const std::string& a : split(opt.args, ',')) args.push_back(parse_scalar<S>(a));
    const S value = program::lemma_fn<S>(opt.fn, std::span<const S>(args), d);
    emit_value(out, opt, Json{{"function", opt.fn}, {"d", to_double(d)}}, value);
    return kExitOk;
  }
  if (opt.level <= 2) fail(kExitError, "levels 1 and 2 carry vectors and cannot be evaluated from --point");
  program::ProgramPoint<S> pt(opt.level, d);
  for (const std::string& item : split(opt.point, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(kExitError, "--point entries look like name=value, got " + item);
    pt.set(program::parse_var(item.substr(0, eq)), parse_scalar<S>(item.substr(eq + 1)));
  }
  if (!pt.well_formed()) {
    std::string want;
    for (program::Var v : program::level_variables(opt.level)) want += " " + std::string(program::var_name(v));
    fail(kExitError, "level " + std::to_string(opt.level) + " needs exactly:" + want);
  }
  const S value = program::eval_objective(pt);
  emit_value(out, opt, Json{{"level", opt.level}, {"d", to_double(d)}, {"point", point_json(pt)}}, value);
  return kExitOk;
}

template <Scalar S>
int program_search(const ProgramOptions& opt, std::ostream& out) {
  const S d = parse_scalar<S>(opt.d);
  const auto r = program::grid_search<S>(opt.level, d, opt.grid, resolve_threads(opt.threads));
  Json doc{{"level", opt.level}, {"d", to_double(d)}, {"grid", opt.grid}, {"evaluations", r.evaluations},
           {"best_point", point_json(r.best_point)}, {"best_value", to_double(r.best_value)}};
  if (opt.json) {
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "level " << opt.level << " grid " << opt.grid << " evaluations " << r.evaluations << '\n';
  out << "best_point " << point_text(r.best_point) << '\n';
  out << "best_value " << decimal(to_double(r.best_value)) << '\n';
  return kExitOk;
}

template <Scalar S>
int program_clamp_test(const ProgramOptions& opt, std::ostream& out) {
  const S d = parse_scalar<S>(opt.d);
  const auto r = program::random_clamp_test<S>(opt.level, d, opt.trials, opt.seed);
  const double worst = r.worst_margin ? to_double(*r.worst_margin) : 0.0;
  if (opt.json) {
    Json doc{{"level", r.level}, {"d", to_double(d)},         {"trials", r.trials},
             {"seed", opt.seed}, {"passed", r.passed},        {"failures", r.failures},
             {"ramp_failures", r.ramp_failures}, {"worst_margin", worst}};
    if (r.worst_point && r.worst_point->level() > 2) doc["worst_point"] = point_json(*r.worst_point);
    out << doc.dump(2) << '\n';
  } else {
    out << (r.passed ? "pass" : "fail") << " level " << r.level << " trials " << r.trials << " failures "
        << r.failures << " ramp_failures " << r.ramp_failures << " worst_margin " << decimal(worst) << '\n';
  }
  return r.passed ? kExitOk : kExitInvariant;
}

template <Scalar S>
int program_certify(const ProgramOptions& opt, std::ostream& out) {
  const S d = parse_scalar<S>(opt.d);
  const auto c = program::certify(d);
  const int code = c.verdict == program::Verdict::certified_le_1 ? kExitOk
                   : c.verdict == program::Verdict::exceeds_1   ? kExitNegative
                                                                 : kExitInvariant;
  if (opt.json) {
    Json doc{{"d", to_double(d)},
             {"verdict", std::string(to_string(c.verdict))},
             {"value", to_double(c.value)},
             {"lemma_range", c.lemma_range},
             {"e_quotient_max", to_double(c.e_quotient_max)},
             {"e_quotient_ok", c.e_quotient_ok},
             {"h1_corner", to_double(c.h1_corner)},
             {"quadratic", to_double(c.quadratic)},
             {"h1_ok", c.h1_ok}};
    if (is_exact_v<S>) doc["exact_value"] = json_value(c.value);
    out << doc.dump(2) << '\n';
    return code;
  }
  out << to_string(c.verdict) << '\n';
  out << "d " << decimal(to_double(d)) << '\n';
  out << "value " << decimal(to_double(c.value)) << '\n';
  if (is_exact_v<S>) out << "exact " << text_value(c.value) << '\n';
  out << "d <= 1/5: " << (c.lemma_range ? "yes" : "no") << '\n';
  out << "E_quotient max on [0,d]: " << decimal(to_double(c.e_quotient_max)) << (c.e_quotient_ok ? " (ok)" : " (positive)")
      << '\n';
  out << "H1(d,d): " << decimal(to_double(c.h1_corner)) << ", 26d^2-15d+2: " << decimal(to_double(c.quadratic))
      << (c.h1_ok ? " (ok)" : " (fails)") << '\n';
  return code;
}

int program_threshold(const ProgramOptions& opt, std::ostream& out) {
  const double d = program::solve_threshold<double>();
  const Surd21 exact = program::solve_threshold<Surd21>();
  if (opt.json) {
    out << Json{{"d_star", d}, {"one_minus_d_star", 1.0 - d}, {"exact", exact.to_string()}}.dump(2) << '\n';
    return kExitOk;
  }
  out << fixed15(d) << '\n';
  out << "1 - d* = " << fixed15(1.0 - d) << '\n';
  out << "exact " << exact.to_string() << '\n';
  return kExitOk;
}

int cmd_program(const std::string& action, const ProgramOptions& opt, std::ostream& out) {
  if (action == "threshold") return program_threshold(opt, out);
  const auto dispatch = [&](auto tag) {
    using S = decltype(tag);
    if (action == "eval") return program_eval<S>(opt, out);
    if (action == "search") return program_search<S>(opt, out);
    if (action == "clamp-test") return program_clamp_test<S>(opt, out);
    return program_certify<S>(opt, out);
  };
  return opt.exact ? dispatch(Surd21{}) : dispatch(double{});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional triangle decomposition weights and the degree-threshold program chain", "tridecomp"};
  app.require_subcommand(1);

  DecomposeOptions dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "compute triangle weights and edge sums");
  decompose_cmd->add_option("--input,-i", dec.input, "edge-list file")->required();
  decompose_cmd->add_option("--output,-o", dec.output, "report path (default stdout)");
  decompose_cmd->add_flag("--exact", dec.exact, "rational arithmetic");
  decompose_cmd->add_option("--tol", dec.tol, "float tolerance")->capture_default_str();
  decompose_cmd->add_option("--format", dec.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  decompose_cmd->add_option("--threads", dec.threads, "worker threads (0 = all cores)");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "check edge sums, signs and the brute-force oracle");
  verify_cmd->add_option("--input,-i", ver.input, "edge-list file")->required();
  verify_cmd->add_flag("--exact", ver.exact, "rational arithmetic");
  verify_cmd->add_option("--tol", ver.tol, "float tolerance")->capture_default_str();
  verify_cmd->add_option("--threads", ver.threads, "worker threads (0 = all cores)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("--output,-o", gen.output, "output path (default stdout)");
  auto* gen_complete_cmd = gen_cmd->add_subcommand("complete", "K_n");
  gen_complete_cmd->add_option("--n", gen.n)->required();
  auto* gen_join_cmd = gen_cmd->add_subcommand("join", "join of two regular circulants, n = 24k+12");
  gen_join_cmd->add_option("--k", gen.k)->capture_default_str();
  gen_join_cmd->add_option("--seed", gen.seed, "relabeling seed (0 keeps labels)");
  auto* gen_blowup_cmd = gen_cmd->add_subcommand("blowup", "clique or independent blow-up");
  gen_blowup_cmd->add_option("--base", gen.base, "cN, kN or an edge-list file")->required();
  gen_blowup_cmd->add_option("--part", gen.part, "part size")->required();
  gen_blowup_cmd->add_option("--mode", gen.mode)->check(CLI::IsMember({"clique", "independent"}))->capture_default_str();
  auto* gen_gnp_cmd = gen_cmd->add_subcommand("gnp", "G(n,p) conditioned on a minimum degree");
  gen_gnp_cmd->add_option("--n", gen.n)->required();
  gen_gnp_cmd->add_option("--p", gen.p)->required();
  gen_gnp_cmd->add_option("--delta-min", gen.delta_min)->capture_default_str();
  gen_gnp_cmd->add_option("--seed", gen.seed)->capture_default_str();
  for (auto* sub : {gen_complete_cmd, gen_join_cmd, gen_blowup_cmd, gen_gnp_cmd})
    sub->add_option("--output,-o", gen.output, "output path (default stdout)");

  ProgramOptions prog;
  auto* program_cmd = app.add_subcommand("program", "evaluate and search the optimization program chain");
  program_cmd->require_subcommand(1);
  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--exact", prog.exact, "exact arithmetic in Q(sqrt 21)");
    sub->add_flag("--json", prog.json, "JSON output");
    sub->add_option("--d", prog.d, "d as a decimal, p/q or dstar")->capture_default_str();
  };
  auto* eval_cmd = program_cmd->add_subcommand("eval", "objective at a point, or a helper function");
  common(eval_cmd);
  eval_cmd->add_option("--level", prog.level)->check(CLI::Range(1, 10));
  eval_cmd->add_option("--point", prog.point, "name=value list, e.g. a=0,b=0.1");
  eval_cmd->add_option("--fn", prog.fn, "helper: E, E_quotient, F, G, H, H1");
  eval_cmd->add_option("--args", prog.args, "comma-separated helper arguments");
  auto* search_cmd = program_cmd->add_subcommand("search", "grid maximum at level 9 or 10");
  common(search_cmd);
  search_cmd->add_option("--level", prog.level)->check(CLI::IsMember({9, 10}))->capture_default_str();
  search_cmd->add_option("--grid", prog.grid, "points per axis")->capture_default_str();
  search_cmd->add_option("--threads", prog.threads, "worker threads (0 = all cores)");
  auto* clamp_cmd = program_cmd->add_subcommand("clamp-test", "sampled check that clamping never lowers the objective");
  common(clamp_cmd);
  clamp_cmd->add_option("--level", prog.level)->required()->check(CLI::Range(1, 10));
  clamp_cmd->add_option("--trials", prog.trials)->capture_default_str();
  clamp_cmd->add_option("--seed", prog.seed)->capture_default_str();
  auto* certify_cmd = program_cmd->add_subcommand("certify", "closed-form optimum and its side conditions at d");
  common(certify_cmd);
  certify_cmd->get_option("--d")->required();
  auto* threshold_cmd = program_cmd->add_subcommand("threshold", "the root of 7d^2 - 7d + 1 below 1/4");
  threshold_cmd->add_flag("--json", prog.json, "JSON output");

  std::vector<std::string> argv_store{"tridecomp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*decompose_cmd) return cmd_decompose(dec, out, err);
    if (*verify_cmd) return cmd_verify(ver, out);
    if (*gen_cmd) {
      for (auto* sub : gen_cmd->get_subcommands()) return cmd_gen(sub->get_name(), gen, out);
    }
    if (*program_cmd) {
      for (auto* sub : program_cmd->get_subcommands()) return cmd_program(sub->get_name(), prog, out);
    }
    return kExitError;
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const DelegationUndefined& e) {
    err << "weighting undefined: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace tridecomp::cli
