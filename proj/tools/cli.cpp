#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ios>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <banach2d/constants.hpp>
#include <banach2d/norm_spec.hpp>
#include <banach2d/records.hpp>
#include <banach2d/verify.hpp>

namespace banach2d::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string space{"hexagon"};
  std::string constant;
  std::string claim{"all"};
  std::string t;
  std::string tau;
  std::string eps;
  std::optional<double> lambda;
  std::optional<double> mu;
  std::string method{"auto"};
  std::string format;
  std::string out;
  std::string example{"all"};
  SearchConfig cfg;
};

// ---------------------------------------------------------------- parsing

double parse_number(const std::string& s, const std::string& name) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": '" + s + "' is not a finite number");
  }
}

// Snaps a generated range point to 12 significant digits so 0.1 * 3 prints as 0.3.
double snap(double v) { return std::stod(format_g12(v)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

bool is_ranged(const std::string& s) { return s.find(':') != std::string::npos || s.find(',') != std::string::npos; }

std::vector<double> expand_range(const std::string& arg, const std::string& name) {
  const auto parts = split(arg, ':');
  if (parts.size() != 3) throw UsageError("--" + name + ": range must be start:stop:step");
  const double start = parse_number(parts[0], name);
  const double stop = parse_number(parts[1], name);
  const double step = parse_number(parts[2], name);
  if (!(step > 0.0)) throw UsageError("--" + name + ": range step must be > 0");
  if (stop < start) throw UsageError("--" + name + ": empty range " + arg);
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("--" + name + ": range has too many points");
  std::vector<double> out;
  for (long k = 0; k < count; ++k) out.push_back(snap(start + static_cast<double>(k) * step));
  return out;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

MethodChoice parse_method(const std::string& s) {
  if (s == "auto") return MethodChoice::automatic;
  if (s == "exact") return MethodChoice::exact;
  if (s == "grid") return MethodChoice::grid;
  throw UsageError("--method must be auto, exact or grid");
}

// ---------------------------------------------------------------- constants

struct ConstantDef {
  const char* id;
  bool uses_t;
  bool uses_tau;
  bool uses_eps;
  bool uses_lambda_mu;
  bool uses_method;
};

constexpr ConstantDef kConstants[] = {
    {"skew-james", true, true, false, false, true},
    {"james-type", true, true, false, false, true},
    {"james", false, false, false, false, false},
    {"fu-skew-james", false, true, false, false, false},
    {"a2", false, false, false, false, false},
    {"alonso-llorens-fuster", false, false, false, false, false},
    {"gao", false, false, false, false, false},
    {"gao-skew", false, true, false, false, false},
    {"modulus", false, false, true, false, false},
    {"convexity-coefficient", false, false, false, false, false},
    {"g", true, false, false, false, false},
    {"c-t", true, false, false, false, false},
    {"von-neumann-jordan", false, false, false, false, false},
    {"zbaganu", false, false, false, false, false},
    {"lyj", false, false, false, true, false},
};

const ConstantDef& find_constant(const std::string& id) {
  for (const auto& c : kConstants)
    if (id == c.id) return c;
  std::string known;
  for (const auto& c : kConstants) known += std::string(known.empty() ? "" : ", ") + c.id;
  throw UsageError("unknown constant '" + id + "' (known: " + known + ")");
}

struct Point {
  std::optional<ExtReal> t;
  std::optional<double> tau;
  std::optional<double> eps;
};

ResultRecord evaluate(const ConstantDef& def, const NormSpace& space, const Point& pt, const Options& opt) {
  const MethodChoice method = parse_method(opt.method);
  const SearchConfig& cfg = opt.cfg;
  ResultRecord r;
  r.constant = def.id;
  r.space = space.label();
  r.t = pt.t;
  r.tau = pt.tau;
  r.eps = pt.eps;
  const std::string id = def.id;

  auto take = [&r](const ConstantValue& v) {
    r.value = v.value;
    r.method = v.method_used;
    r.witnesses = v.witnesses;
    r.tau_star = v.tau_star;
  };
  if (id == "skew-james") {
    take(skew_james(space, *pt.t, *pt.tau, method, cfg));
  } else if (id == "james-type") {
    take(james_type(space, *pt.t, *pt.tau, method, cfg));
  } else if (id == "james") {
    take(james_constant(space, cfg));
  } else if (id == "fu-skew-james") {
    take(fu_skew_james(space, *pt.tau, cfg));
  } else if (id == "a2") {
    take(a2_constant(space, cfg));
  } else if (id == "alonso-llorens-fuster") {
    take(alonso_llorens_fuster_constant(space, cfg));
  } else if (id == "gao") {
    r.value = gao_constant(space, cfg);
  } else if (id == "gao-skew") {
    r.value = gao_skew(space, *pt.tau, cfg);
  } else if (id == "modulus") {
    const SearchResult s = constrained_infimum(space, *pt.eps, cfg);
    r.value = s.value;
    r.method = s.method;
    r.witnesses = std::make_pair(s.x1, s.x2);
  } else if (id == "convexity-coefficient") {
    r.value = convexity_coefficient(space, cfg);
  } else if (id == "g") {
    take(g_constant(space, *pt.t, cfg));
  } else if (id == "c-t") {
    take(c_t_constant(space, *pt.t, cfg));
  } else if (id == "von-neumann-jordan") {
    take(von_neumann_jordan_constant(space, cfg));
  } else if (id == "zbaganu") {
    take(zbaganu_constant(space, cfg));
  } else if (id == "lyj") {
    r.lambda = opt.lambda;
    r.mu = opt.mu;
    r.value = lyj_constant(space, *opt.lambda, *opt.mu, cfg);
  }
  return r;
}

void check_parameter_use(const ConstantDef& def, const Options& opt) {
  auto need = [&](bool uses, const std::string& value, const char* flag) {
    if (uses && value.empty()) throw UsageError(std::string("constant ") + def.id + " needs " + flag);
    if (!uses && !value.empty()) throw UsageError(std::string("constant ") + def.id + " does not take " + flag);
  };
  need(def.uses_t, opt.t, "--t");
  need(def.uses_tau, opt.tau, "--tau");
  need(def.uses_eps, opt.eps, "--eps");
  if (def.uses_lambda_mu && (!opt.lambda || !opt.mu)) {
    throw UsageError(std::string("constant ") + def.id + " needs --lambda and --mu");
  }
  if (!def.uses_lambda_mu && (opt.lambda || opt.mu)) {
    throw UsageError(std::string("constant ") + def.id + " does not take --lambda/--mu");
  }
  if (!def.uses_method && opt.method != "auto") {
    throw UsageError(std::string("constant ") + def.id + " does not take --method");
  }
  parse_method(opt.method);
}

// ---------------------------------------------------------------- output

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output file '" + path + "'");
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

void require_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "table") throw UsageError("--format must be json, csv or table");
}

void write_records(std::ostream& os, const std::vector<ResultRecord>& rows, const std::string& format) {
  const bool with_eps = std::any_of(rows.begin(), rows.end(), [](const ResultRecord& r) { return r.eps.has_value(); });
  if (format == "json") {
    for (const auto& r : rows) os << to_json(r).dump() << '\n';
  } else if (format == "csv") {
    os << csv_header(with_eps) << '\n';
    for (const auto& r : rows) os << csv_row(r, with_eps) << '\n';
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %-22s %-10s %-10s %-10s %-18s %s\n", "constant", "space", "t", "tau",
                  "eps", "value", "method");
    os << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%-22s %-22s %-10s %-10s %-10s %-18s %s\n", r.constant.c_str(),
                    r.space.c_str(), r.t ? format_g12(*r.t).c_str() : "-", r.tau ? format_g12(*r.tau).c_str() : "-",
                    r.eps ? format_g12(*r.eps).c_str() : "-", format_g12(r.value).c_str(),
                    r.method ? std::string(to_string(*r.method)).c_str() : "-");
      os << line;
    }
  }
}

void write_header(std::ostream& err, const std::string& command, const std::string& space, const SearchConfig& cfg) {
  err << "# banach2d " << command << " space=" << space << " grid=" << cfg.coarse_grid
      << " rounds=" << cfg.refine_rounds << " shrink=" << format_g12(cfg.refine_shrink) << " seeds=" << cfg.top_cells
      << " tol=" << format_g12(cfg.tol) << '\n';
}

// ---------------------------------------------------------------- commands

int run_compute(const Options& opt, std::ostream& out, std::ostream& err) {
  const ConstantDef& def = find_constant(opt.constant);
  check_parameter_use(def, opt);
  for (const std::string* s : {&opt.t, &opt.tau, &opt.eps}) {
    if (is_ranged(*s)) throw UsageError("compute takes scalar parameters; use sweep for ranges");
  }
  const std::string format = opt.format.empty() ? "json" : opt.format;
  require_format(format);
  const NormSpace space = parse_space(opt.space);
  Point pt;
  if (def.uses_t) pt.t = parse_t_values(opt.t).front();
  if (def.uses_tau) pt.tau = parse_values(opt.tau, "tau").front();
  if (def.uses_eps) pt.eps = parse_values(opt.eps, "eps").front();
  write_header(err, "compute", space.label(), opt.cfg);
  Output sink(opt.out, out);
  const ResultRecord rec = evaluate(def, space, pt, opt);
  write_records(sink.stream(), {rec}, format);
  sink.finish();
  return kOk;
}

int run_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  const ConstantDef& def = find_constant(opt.constant);
  check_parameter_use(def, opt);
  if (!is_ranged(opt.t) && !is_ranged(opt.tau) && !is_ranged(opt.eps)) {
    throw UsageError("sweep needs at least one ranged parameter (start:stop:step or a comma list)");
  }
  const std::string format = opt.format.empty() ? "csv" : opt.format;
  require_format(format);
  const NormSpace space = parse_space(opt.space);

  std::vector<std::optional<ExtReal>> ts{std::nullopt};
  std::vector<std::optional<double>> taus{std::nullopt};
  std::vector<std::optional<double>> epss{std::nullopt};
  if (def.uses_t) {
    auto v = parse_t_values(opt.t);
    ts.assign(v.begin(), v.end());
  }
  if (def.uses_tau) {
    auto v = parse_values(opt.tau, "tau");
    taus.assign(v.begin(), v.end());
  }
  if (def.uses_eps) {
    auto v = parse_values(opt.eps, "eps");
    epss.assign(v.begin(), v.end());
  }
  write_header(err, "sweep", space.label(), opt.cfg);
  Output sink(opt.out, out);
  std::vector<ResultRecord> rows;
  for (const auto& t : ts)
    for (const auto& tau : taus)
      for (const auto& eps : epss) rows.push_back(evaluate(def, space, Point{t, tau, eps}, opt));
  write_records(sink.stream(), rows, format);
  sink.finish();
  return kOk;
}

std::vector<ClaimId> parse_claims(const std::string& arg) {
  if (arg == "all") return {std::begin(kAllClaims), std::end(kAllClaims)};
  std::vector<ClaimId> out;
  for (const auto& part : split(arg, ',')) {
    const auto c = parse_claim_id(part);
    if (!c) throw UsageError("unknown claim '" + part + "'");
    out.push_back(*c);
  }
  if (out.empty()) throw UsageError("--claim is empty");
  return out;
}

int run_check(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.constant.empty() || !opt.eps.empty() || opt.lambda || opt.mu || opt.method != "auto") {
    throw UsageError("check takes --claim, --space, --t, --tau and search flags only");
  }
  const auto claims = parse_claims(opt.claim);
  const std::string format = opt.format.empty() ? "json" : opt.format;
  require_format(format);
  const NormSpace space = parse_space(opt.space);
  SuiteGrid grid;
  if (!opt.t.empty()) {
    grid.t_values.clear();
    for (const ExtReal& t : parse_t_values(opt.t)) {
      if (!t.is_finite()) throw UsageError("check: --t values must be finite");
      grid.t_values.push_back(t.value());
    }
    grid.t_pairs.clear();
    for (double t : grid.t_values)
      if (t >= 1.0) grid.t_pairs.push_back(t);
  }
  if (!opt.tau.empty()) {
    grid.taus = parse_values(opt.tau, "tau");
    grid.convexity_taus = grid.taus;
  }
  write_header(err, "check", space.label(), opt.cfg);
  Output sink(opt.out, out);
  Verifier verifier(space, opt.cfg);
  const auto certs = run_suite(verifier, claims, grid);
  auto& os = sink.stream();
  if (format == "json") {
    for (const auto& c : certs) os << to_json(c).dump() << '\n';
  } else if (format == "csv") {
    os << certificate_csv_header() << '\n';
    for (const auto& c : certs) os << certificate_csv_row(c) << '\n';
  } else {
    write_certificate_table(os, certs);
  }
  sink.finish();
  std::size_t fails = 0;
  std::size_t inconclusive = 0;
  std::size_t skipped = 0;
  for (const auto& c : certs) {
    fails += c.verdict == Verdict::fail;
    inconclusive += c.verdict == Verdict::inconclusive;
    skipped += c.verdict == Verdict::skipped;
  }
  err << "# " << certs.size() << " certificates: " << fails << " failed, " << inconclusive << " inconclusive, "
      << skipped << " skipped\n";
  return fails == 0 ? kOk : kCheckFailed;
}

struct ReproLine {
  std::string example;
  std::string item;
  std::string relation;  // "approx": |diff| <= tol, "le": computed <= expected + tol, "lt": computed < expected - tol
  double expected;
  double computed;
  double tol;
  bool pass;
};

ReproLine repro_line(std::string example, std::string item, std::string relation, double expected, double computed,
                     double tol) {
  ReproLine l{std::move(example), std::move(item), std::move(relation), expected, computed, tol, false};
  if (l.relation == "approx") l.pass = std::abs(computed - expected) <= tol;
  if (l.relation == "le") l.pass = computed <= expected + tol;
  if (l.relation == "lt") l.pass = computed < expected - tol;
  return l;
}

/// Closed form shared by the hexagon and the l1/linf hybrid.
double piecewise_formula(double t, double tau) {
  const double second = tau >= 1.0 ? std::pow(tau, t) : 1.0;
  return std::pow((std::pow(tau + 1.0, t) + second) / 2.0, 1.0 / t);
}

void reproduce_piecewise(const std::string& name, const NormSpace& space, const SearchConfig& cfg,
                         std::vector<ReproLine>& lines) {
  for (double t : {1.0, 2.0, 4.0}) {
    for (double tau : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0}) {
      const double expected = piecewise_formula(t, tau);
      const std::string where = "t=" + format_g12(t) + " tau=" + format_g12(tau);
      lines.push_back(repro_line(name, "J_t[tau] exact " + where, "approx", expected,
                                 skew_james(space, t, tau, MethodChoice::exact, cfg).value, 1e-9));
      lines.push_back(repro_line(name, "J_t[tau] grid " + where, "approx", expected,
                                 skew_james(space, t, tau, MethodChoice::grid, cfg).value, 2e-3));
    }
  }
}

void reproduce_day_james(const SearchConfig& cfg, std::vector<ReproLine>& lines) {
  const std::string name = "example-3.4";
  const NormSpace space = NormSpace::day_james();
  const double j_true = std::sqrt(8.0 / 3.0);
  lines.push_back(repro_line(name, "bound(sqrt(8/3))", "approx", 1.4007, thm33_bound(j_true), 5e-4));
  const double j = james_constant(space, cfg).value;
  lines.push_back(repro_line(name, "J(X)", "approx", j_true, j, 2e-3));
  const double g = g_constant(space, ExtReal::neg_inf(), cfg).value;
  lines.push_back(repro_line(name, "G_-inf <= bound(J(X))", "le", thm33_bound(std::clamp(j, 1.0, 2.0)), g, 5e-3));
  lines.push_back(repro_line(name, "G_-inf < sqrt(2)", "lt", std::sqrt(2.0), g, 1e-3));
  lines.push_back(repro_line(name, "C_0 (Zbaganu)", "approx", std::sqrt(2.0), zbaganu_constant(space, cfg).value, 5e-3));
}

int run_reproduce(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string& ex = opt.example;
  if (ex != "example-3.1" && ex != "example-3.2" && ex != "example-3.4" && ex != "all") {
    throw UsageError("reproduce: unknown example '" + ex + "' (example-3.1, example-3.2, example-3.4, all)");
  }
  const std::string format = opt.format.empty() ? "table" : opt.format;
  require_format(format);
  write_header(err, "reproduce " + ex, "-", opt.cfg);
  Output sink(opt.out, out);
  std::vector<ReproLine> lines;
  if (ex == "example-3.1" || ex == "all") reproduce_piecewise("example-3.1", NormSpace::hexagon(), opt.cfg, lines);
  if (ex == "example-3.2" || ex == "all") {
    reproduce_piecewise("example-3.2", NormSpace::l1_linf_hybrid(), opt.cfg, lines);
  }
  if (ex == "example-3.4" || ex == "all") reproduce_day_james(opt.cfg, lines);

  auto& os = sink.stream();
  if (format == "json") {
    for (const auto& l : lines) {
      nlohmann::json j{{"example", l.example}, {"item", l.item},         {"relation", l.relation},
                       {"expected", l.expected}, {"computed", l.computed}, {"diff", std::abs(l.computed - l.expected)},
                       {"tol", l.tol},          {"pass", l.pass}};
      os << j.dump() << '\n';
    }
  } else if (format == "csv") {
    os << "example,item,relation,expected,computed,diff,tol,pass\n";
    for (const auto& l : lines) {
      os << l.example << ',' << csv_field(l.item) << ',' << l.relation << ',' << format_g12(l.expected) << ','
         << format_g12(l.computed) << ',' << format_g12(std::abs(l.computed - l.expected)) << ','
         << format_g12(l.tol) << ',' << (l.pass ? "true" : "false") << '\n';
    }
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-12s %-32s %-7s %-16s %-16s %-12s %-8s %s\n", "example", "item", "rel",
                  "expected", "computed", "|diff|", "tol", "pass");
    os << buf;
    for (const auto& l : lines) {
      std::snprintf(buf, sizeof buf, "%-12s %-32s %-7s %-16s %-16s %-12s %-8s %s\n", l.example.c_str(),
                    l.item.c_str(), l.relation.c_str(), format_g12(l.expected).c_str(),
                    format_g12(l.computed).c_str(), format_g12(std::abs(l.computed - l.expected)).c_str(),
                    format_g12(l.tol).c_str(), l.pass ? "yes" : "NO");
      os << buf;
    }
  }
  sink.finish();
  const bool ok = std::all_of(lines.begin(), lines.end(), [](const ReproLine& l) { return l.pass; });
  return ok ? kOk : kCheckFailed;
}

}  // namespace

// ---------------------------------------------------------------- public helpers

NormSpace parse_space(const std::string& arg) {
  auto builtin = [&](const std::string& id) {
    const auto b = parse_builtin_id(id);
    if (!b) throw UsageError("unknown builtin space '" + id + "' (hexagon, l1_linf_hybrid, day_james_l2_l1)");
    return NormSpace::builtin(*b);
  };
  if (arg.rfind("builtin:", 0) == 0) return builtin(arg.substr(8));
  if (arg.rfind("pnorm:", 0) == 0) {
    const std::string p = arg.substr(6);
    if (p == "inf") return NormSpace::max_norm();
    const double v = parse_number(p, "space");
    try {
      return NormSpace::pnorm(v);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (arg.rfind("file:", 0) == 0) {
    try {
      return load_norm_spec(arg.substr(5));
    } catch (const std::ios_base::failure& e) {
      throw IoError(e.what());
    } catch (const NormSpecError& e) {
      throw UsageError(e.what());
    }
  }
  return builtin(arg);
}

std::vector<double> parse_values(const std::string& arg, const std::string& name) {
  if (arg.empty()) throw UsageError("--" + name + " is empty");
  std::vector<double> out;
  if (arg.find(':') != std::string::npos) {
    out = expand_range(arg, name);
  } else {
    for (const auto& part : split(arg, ',')) out.push_back(parse_number(part, name));
  }
  sort_unique(out);
  return out;
}

std::vector<ExtReal> parse_t_values(const std::string& arg) {
  if (arg.empty()) throw UsageError("--t is empty");
  std::vector<ExtReal> out;
  if (arg.find(':') != std::string::npos) {
    for (double v : expand_range(arg, "t")) out.emplace_back(v);
  } else {
    for (const auto& part : split(arg, ',')) {
      try {
        out.push_back(ExtReal::parse(part));
      } catch (const std::exception&) {
        throw UsageError("--t: '" + part + "' is not a number, -inf or +inf");
      }
    }
  }
  sort_unique(out);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric constants of two-dimensional normed spaces", "banach2d"};
  app.require_subcommand(1);
  Options opt;

  auto add_search_flags = [&opt](CLI::App* sub) {
    sub->add_option("--grid", opt.cfg.coarse_grid, "coarse grid points per angle");
    sub->add_option("--rounds", opt.cfg.refine_rounds, "refinement rounds");
    sub->add_option("--shrink", opt.cfg.refine_shrink, "grid spacing factor per round");
    sub->add_option("--seeds", opt.cfg.top_cells, "refinement seeds");
    sub->add_option("--tol", opt.cfg.tol, "search tolerance");
    sub->add_option("--workers", opt.cfg.workers, "threads for the coarse pass");
    sub->add_option("--format", opt.format, "json | csv | table");
    sub->add_option("--out", opt.out, "output file (default stdout)");
    sub->add_option("--space", opt.space, "builtin:<id> | <id> | pnorm:<p|inf> | file:<path>");
  };
  auto add_param_flags = [&opt](CLI::App* sub) {
    sub->add_option("--constant", opt.constant, "constant id")->required();
    sub->add_option("--t", opt.t, "mean parameter (number, -inf, +inf; ranges in sweep)");
    sub->add_option("--tau", opt.tau, "skew parameter");
    sub->add_option("--eps", opt.eps, "modulus argument");
    sub->add_option("--lambda", opt.lambda, "lyj weight lambda");
    sub->add_option("--mu", opt.mu, "lyj weight mu");
    sub->add_option("--method", opt.method, "auto | exact | grid");
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate one constant");
  add_search_flags(compute);
  add_param_flags(compute);
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a constant over parameter ranges");
  add_search_flags(sweep);
  add_param_flags(sweep);
  CLI::App* check = app.add_subcommand("check", "certify inequalities on one space");
  add_search_flags(check);
  check->add_option("--claim", opt.claim, "claim id, comma list, or all");
  check->add_option("--t", opt.t, "override the t grid");
  check->add_option("--tau", opt.tau, "override the tau grid");
  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute the worked example values");
  add_search_flags(reproduce);
  reproduce->add_option("example", opt.example, "example-3.1 | example-3.2 | example-3.4 | all");

  std::vector<std::string> argv_store{"banach2d"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    opt.cfg.validate();
    if (compute->parsed()) return run_compute(opt, out, err);
    if (sweep->parsed()) return run_sweep(opt, out, err);
    if (check->parsed()) return run_check(opt, out, err);
    return run_reproduce(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace banach2d::cli
