#include "bipcon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipcon/asymptotics.hpp"
#include "bipcon/brute.hpp"
#include "bipcon/errors.hpp"
#include "bipcon/exploration_dp.hpp"
#include "bipcon/simulate.hpp"
#include "bipcon/walk_dp.hpp"

namespace bipcon::cli {

namespace {

using nlohmann::ordered_json;

struct ParamFlags {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<double> p;
  std::optional<double> c;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "left part size")->required();
    app->add_option("--m", m, "right part size")->required();
    auto* p_opt = app->add_option("--p", p, "edge probability");
    auto* c_opt = app->add_option("--c", c, "regime parameter c = p (n + m)");
    p_opt->excludes(c_opt);
  }

  GraphParams params() const {
    if (p.has_value() == c.has_value()) {
      throw CLI::ValidationError("exactly one of --p and --c is required");
    }
    return p ? GraphParams(n, m, *p) : GraphParams::from_c(n, m, *c);
  }
};

ordered_json params_json(const GraphParams& gp) {
  return {{"n", gp.n()}, {"m", gp.m()}, {"p", gp.p()}, {"c", gp.c()}};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

bool is_exact_method(const std::string& method) {
  return method == "brute" || method == "exploration-dp" || method == "walk-dp";
}

bool is_known_method(const std::string& method) {
  return is_exact_method(method) || method == "mc" || parse_regime(method).has_value();
}

// Value of one method at one grid point; Monte Carlo fills `stderr_out`.
double evaluate(const std::string& method, const GraphParams& gp, std::int64_t samples,
                std::uint64_t seed, int workers, std::optional<double>& stderr_out) {
  if (method == "brute") return brute_connectivity(gp);
  if (method == "exploration-dp") return exact_connectivity_dp<double>(gp);
  if (method == "walk-dp") {
    if (gp.p() == 0.0 || gp.p() == 1.0) {
      check_lattice_capacity(gp.n(), gp.m());
      return gp.p();
    }
    return connectivity_via_walk<double>(gp).total;
  }
  if (method == "mc") {
    const ConnectivityEstimate est = mc_connectivity(gp, samples, seed, workers);
    stderr_out = est.standard_error;
    return est.estimate;
  }
  if (auto regime = parse_regime(method)) return asym_estimate(gp, *regime).value;
  throw CLI::ValidationError("unknown method '" + method + "'");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw CLI::ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
};

void emit_json(const ordered_json& doc, const std::string& path, std::ostream& out) {
  Output sink(path, out);
  sink.stream() << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_exact(const ParamFlags& flags, const std::string& method, bool timestamp,
              const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  std::vector<std::string> methods;
  if (method == "all") {
    if (gp.n() * gp.m() <= kMaxBruteEdges) methods.push_back("brute");
    methods.push_back("exploration-dp");
    methods.push_back("walk-dp");
  } else if (is_exact_method(method)) {
    methods.push_back(method);
  } else {
    throw CLI::ValidationError("exact: --method must be brute, exploration-dp, walk-dp or all");
  }

  ordered_json results = ordered_json::array();
  std::vector<double> values;
  for (const auto& name : methods) {
    std::optional<double> se;
    const double value = evaluate(name, gp, 0, 0, 1, se);
    values.push_back(value);
    results.push_back({{"method", name}, {"value", value}, {"stderr", nullptr}});
  }
  double agreement = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      agreement = std::max(agreement, std::fabs(values[i] - values[j]));
    }
  }
  ordered_json doc{{"params", params_json(gp)}, {"results", results}, {"agreement", agreement}};
  if (timestamp) doc["timestamp"] = utc_timestamp();
  emit_json(doc, path, out);
  return kExitOk;
}

int cmd_mc(const ParamFlags& flags, std::int64_t samples, std::uint64_t seed, int workers,
           bool timestamp, const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  const ConnectivityEstimate est = mc_connectivity(gp, samples, seed, workers);
  ordered_json doc{
      {"params", params_json(gp)},
      {"results",
       ordered_json::array({{{"method", "mc"},
                             {"value", est.estimate},
                             {"stderr", est.standard_error},
                             {"samples", est.samples},
                             {"seed", est.seed}}})},
      {"agreement", nullptr},
      {"seed", seed}};
  if (timestamp) doc["timestamp"] = utc_timestamp();
  emit_json(doc, path, out);
  return kExitOk;
}

int cmd_walk(const ParamFlags& flags, const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  const WalkDpResult<double> r = connectivity_via_walk<double>(gp);
  ordered_json doc{{"params", params_json(gp)},
                   {"conditional", r.conditional},
                   {"prefactor", r.prefactor},
                   {"endpoint_a", r.endpoint_a},
                   {"endpoint_b", r.endpoint_b},
                   {"total", r.total}};
  emit_json(doc, path, out);
  return kExitOk;
}

int cmd_asym(const ParamFlags& flags, const std::string& method,
             std::optional<double> limit_c, const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  const auto regime = parse_regime(method);
  if (!regime) throw CLI::ValidationError("asym: --method must be asym-r1..asym-r4");
  const RegimeResult r = asym_estimate(gp, *regime, limit_c);
  ordered_json doc{{"params", params_json(gp)},
                   {"regime", to_string(r.regime)},
                   {"value", r.value},
                   {"prefactor_core", r.prefactor_core},
                   {"correction", r.correction}};
  if (r.regime == Regime::kConstantC) {
    doc["alpha_n"] = r.alpha_n;
    doc["beta_m"] = r.beta_m;
  }
  if (r.regime == Regime::kTinyC) doc["intermediate"] = r.intermediate;
  emit_json(doc, path, out);
  return kExitOk;
}

int cmd_classify(const ParamFlags& flags, std::optional<double> aspect,
                 const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  const double a = aspect.value_or(static_cast<double>(gp.m()) / static_cast<double>(gp.n()));
  ordered_json doc{{"params", params_json(gp)},
                   {"aspect", a},
                   {"regime", to_string(classify_regime(gp, a))}};
  emit_json(doc, path, out);
  return kExitOk;
}

struct SweepFlags {
  std::string grid_n;
  std::string grid_m;
  std::string grid_p;
  std::string grid_c;
  std::string methods;
  std::int64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::string out;
};

template <typename T>
std::vector<T> parse_grid(const std::string& text, const char* flag) {
  std::vector<T> values;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      T v;
      if constexpr (std::is_integral_v<T>) {
        v = static_cast<T>(std::stoll(item, &used));
      } else {
        v = std::stod(item, &used);
      }
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  return values;
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out) {
  if (!flags.grid_p.empty() && !flags.grid_c.empty()) {
    throw CLI::ValidationError("sweep: give at most one of --grid-p and --grid-c");
  }
  const auto ns = parse_grid<std::int64_t>(flags.grid_n, "--grid-n");
  const auto ms = parse_grid<std::int64_t>(flags.grid_m, "--grid-m");
  const bool by_c = !flags.grid_c.empty();
  const auto xs = parse_grid<double>(by_c ? flags.grid_c : flags.grid_p,
                                     by_c ? "--grid-c" : "--grid-p");
  const auto methods = split_list(flags.methods);
  for (const auto& name : methods) {
    if (!is_known_method(name)) throw CLI::ValidationError("sweep: unknown method '" + name + "'");
    if (name == "mc" && !flags.seed) throw CLI::ValidationError("sweep: method mc requires --seed");
  }

  Output sink(flags.out, out);
  std::ostream& os = sink.stream();
  os << "n,m,p,c,method,value,stderr,seconds,error\n";
  for (std::int64_t n : ns) {
    const std::vector<std::int64_t> m_values = ms.empty() ? std::vector<std::int64_t>{n} : ms;
    for (std::int64_t m : m_values) {
      for (double x : xs) {
        for (const auto& name : methods) {
          const double p = by_c ? x / static_cast<double>(n + m) : x;
          std::string value, se, error;
          const auto t0 = std::chrono::steady_clock::now();
          try {
            std::optional<double> stderr_value;
            value = format_double(evaluate(name, GraphParams(n, m, p), flags.samples,
                                           flags.seed.value_or(0), flags.workers,
                                           stderr_value));
            if (stderr_value) se = format_double(*stderr_value);
          } catch (const CapacityError&) {
            error = "capacity";
          } catch (const DomainError&) {
            error = "domain";
          }
          const double seconds =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          char secs[32];
          std::snprintf(secs, sizeof(secs), "%.6f", seconds);
          os << n << ',' << m << ',' << format_double(p) << ','
             << format_double(p * static_cast<double>(n + m)) << ',' << name << ','
             << value << ',' << se << ',' << secs << ',' << error << '\n';
        }
      }
    }
  }
  return kExitOk;
}

int cmd_curves(const ParamFlags& flags, std::int64_t realizations, std::uint64_t seed,
               int workers, const std::string& path, std::ostream& out) {
  const GraphParams gp = flags.params();
  const CurveTables tables = curve_csv(gp, realizations, seed, workers);
  Output sink(path, out);
  sink.stream() << tables.deficit_csv << '\n' << tables.recovery_csv;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity probability of the random bipartite graph G(n, m, p)", "bipcon"};
  app.require_subcommand(1);

  ParamFlags params;
  std::string method = "all";
  std::string path;
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  int realizations = 0;
  bool timestamp = false;
  std::optional<double> limit_c;
  std::optional<double> aspect;
  SweepFlags sweep;

  auto add_common = [&](CLI::App* sub) {
    params.attach(sub);
    sub->add_option("--out", path, "write output to this file instead of stdout");
  };

  auto* exact = app.add_subcommand("exact", "exact connectivity probability");
  add_common(exact);
  exact->add_option("--method", method, "brute | exploration-dp | walk-dp | all");
  exact->add_flag("--timestamp", timestamp, "include a UTC timestamp in the record");

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate over sampled graphs");
  add_common(mc);
  mc->add_option("--samples", samples, "number of sampled graphs")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "generator seed")->required();
  mc->add_option("--threads", workers, "worker threads")->check(CLI::PositiveNumber);
  mc->add_option("--method", method, "mc");
  mc->add_flag("--timestamp", timestamp, "include a UTC timestamp in the record");

  auto* walk = app.add_subcommand("walk", "conditioned Poisson-walk representation");
  add_common(walk);

  auto* asym = app.add_subcommand("asym", "asymptotic regime formula");
  add_common(asym);
  asym->add_option("--method", method, "asym-r1 | asym-r2 | asym-r3 | asym-r4")->required();
  asym->add_option("--limit-c", limit_c, "constant c used by asym-r2 (default p (n + m))");

  auto* classify = app.add_subcommand("classify", "classify (n, m, p) into a regime");
  add_common(classify);
  classify->add_option("--a", aspect, "aspect ratio a in m ~ a n (default m / n)");

  auto* sw = app.add_subcommand("sweep", "evaluate methods over a parameter grid");
  sw->add_option("--grid-n", sweep.grid_n, "comma list of n")->required();
  sw->add_option("--grid-m", sweep.grid_m, "comma list of m (default: m = n)");
  auto* gp_opt = sw->add_option("--grid-p", sweep.grid_p, "comma list of p");
  auto* gc_opt = sw->add_option("--grid-c", sweep.grid_c, "comma list of c");
  gp_opt->excludes(gc_opt);
  sw->add_option("--method", sweep.methods, "comma list of methods")->required();
  sw->add_option("--samples", sweep.samples, "samples for mc")->check(CLI::PositiveNumber);
  sw->add_option("--seed", sweep.seed, "generator seed for mc");
  sw->add_option("--threads", sweep.workers, "worker threads")->check(CLI::PositiveNumber);
  sw->add_option("--out", sweep.out, "write CSV to this file instead of stdout");

  auto* curves = app.add_subcommand("curves", "sample paths of S_k, B_k and V_k as CSV");
  add_common(curves);
  curves->add_option("--realizations", realizations, "number of sampled walks")
      ->check(CLI::NonNegativeNumber);
  curves->add_option("--seed", seed, "generator seed")->required();
  curves->add_option("--threads", workers, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (exact->parsed()) return cmd_exact(params, method, timestamp, path, out);
    if (mc->parsed()) {
      if (method != "all" && method != "mc") {
        throw CLI::ValidationError("mc: --method must be mc");
      }
      return cmd_mc(params, samples, seed, workers, timestamp, path, out);
    }
    if (walk->parsed()) return cmd_walk(params, path, out);
    if (asym->parsed()) return cmd_asym(params, method, limit_c, path, out);
    if (classify->parsed()) return cmd_classify(params, aspect, path, out);
    if (sw->parsed()) return cmd_sweep(sweep, out);
    if (curves->parsed()) return cmd_curves(params, realizations, seed, workers, path, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bipcon::cli
