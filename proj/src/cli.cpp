#include "wfgcri/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfgcri/chaos.hpp"
#include "wfgcri/errors.hpp"
#include "wfgcri/estimators.hpp"
#include "wfgcri/finance.hpp"
#include "wfgcri/measures.hpp"
#include "wfgcri/model_parse.hpp"
#include "wfgcri/montecarlo.hpp"
#include "wfgcri/rng.hpp"
#include "wfgcri/special.hpp"
#include "wfgcri/theory.hpp"
#include "wfgcri/version.hpp"

namespace wfgcri {

namespace {

std::string now_iso8601() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw Error(ErrorCode::parse, what + ": '" + text + "' is not a number");
  return v;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_double(trimmed(text.substr(pos, end - pos)), what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::parse, what + ": empty list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const std::string& what) {
  std::vector<std::size_t> out;
  for (double v : parse_double_list(text, what)) {
    if (!(v >= 1.0) || v != std::floor(v))
      throw Error(ErrorCode::parse, what + ": needs positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// "lo:hi"
std::pair<double, double> parse_pair(const std::string& text,
                                     const std::string& what) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::parse, what + ": expected lo:hi, got '" + text +
                                      "'");
  double lo = parse_double(text.substr(0, colon), what);
  double hi = parse_double(text.substr(colon + 1), what);
  if (hi < lo) throw Error(ErrorCode::parse, what + ": needs hi >= lo");
  return {lo, hi};
}

// "lo:hi:step" inclusive of hi up to step*1e-9 slack
std::vector<double> parse_range(const std::string& text,
                                const std::string& what) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t colon = text.find(':', pos);
    std::size_t end = colon == std::string::npos ? text.size() : colon;
    parts.push_back(text.substr(pos, end - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3)
    throw Error(ErrorCode::parse, what + ": expected lo:hi:step, got '" +
                                      text + "'");
  double lo = parse_double(parts[0], what);
  double hi = parse_double(parts[1], what);
  double step = parse_double(parts[2], what);
  if (!(step > 0.0) || hi < lo)
    throw Error(ErrorCode::parse, what + ": needs hi >= lo and step > 0");
  std::vector<double> out;
  auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  for (std::size_t k = 0; k <= count; ++k) out.push_back(lo + k * step);
  return out;
}

std::vector<double> read_column_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open sample CSV: " + path);
  std::vector<double> vals;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string t = trimmed(line);
    if (t.empty()) continue;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) {
      if (row == 1) continue;  // header line
      throw Error(ErrorCode::parse,
                  path + ": not a number at line " + std::to_string(row));
    }
    vals.push_back(v);
  }
  if (vals.empty())
    throw Error(ErrorCode::degenerate, "no observations in " + path);
  return vals;
}

// Collects output digests and writes the run manifest next to the primary
// output (or ./wfgcri-manifest.json when results go to stdout).
class RunRecorder {
 public:
  RunRecorder(std::string subcommand, const std::vector<std::string>& argv,
              std::string out_path, std::ostream& stream)
      : out_path_(std::move(out_path)), stream_(stream) {
    manifest_["subcommand"] = std::move(subcommand);
    manifest_["argv"] = argv;
    manifest_["version"] = WFGCRI_VERSION;
    manifest_["started_at"] = now_iso8601();
    manifest_["outputs"] = nlohmann::ordered_json::array();
  }

  void set_seed(std::uint64_t seed) {
    manifest_["seed"] = seed;
    manifest_["rng"] = kRngName;
  }

  void note(const std::string& key, const nlohmann::ordered_json& value) {
    manifest_[key] = value;
  }

  // Primary result payload: --out file when given, else the output stream.
  void emit(const std::string& payload) {
    if (out_path_.empty()) {
      stream_ << payload;
      record("-", payload);
    } else {
      std::ofstream f(out_path_, std::ios::binary);
      if (!f) throw Error(ErrorCode::io, "cannot write " + out_path_);
      f << payload;
      if (!f.good()) throw Error(ErrorCode::io, "short write: " + out_path_);
      record(out_path_, payload);
    }
  }

  void finish(const std::string& status) {
    manifest_["finished_at"] = now_iso8601();
    manifest_["status"] = status;
    std::string path = out_path_.empty() ? "wfgcri-manifest.json"
                                         : out_path_ + ".manifest.json";
    std::ofstream f(path, std::ios::binary);
    if (f) f << manifest_.dump(2) << "\n";  // best effort, never masks result
  }

 private:
  void record(const std::string& path, const std::string& payload) {
    manifest_["outputs"].push_back(
        {{"path", path},
         {"fnv1a64", hex64(fnv1a64(payload.data(), payload.size()))},
         {"bytes", payload.size()}});
  }

  std::string out_path_;
  std::ostream& stream_;
  nlohmann::ordered_json manifest_;
};

struct CommonArgs {
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

std::uint64_t resolve_seed(const CommonArgs& args, std::uint64_t fallback) {
  if (args.seed_given) return args.seed;
  if (const char* env = std::getenv("WFGCRI_SEED")) {
    std::string text(env);
    char* end = nullptr;
    unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size())
      throw Error(ErrorCode::parse,
                  "WFGCRI_SEED is not an unsigned integer: '" + text + "'");
    return static_cast<std::uint64_t>(v);
  }
  return fallback;
}

std::string json_kv(const char* key, const std::string& raw_value) {
  return std::string("\"") + key + "\": " + raw_value;
}

std::string measure_json(const MeasureResult& r) {
  return "{" + json_kv("value", format_g9(r.value)) + ", " +
         json_kv("upper_truncation", format_g9(r.upper_truncation)) + ", " +
         json_kv("err_estimate", format_g9(r.err_estimate)) + ", " +
         json_kv("subdivisions", std::to_string(r.subdivisions)) + "}\n";
}

// ---- measure ----

struct MeasureArgs {
  std::string measure = "wfgcri";
  std::string true_spec;
  std::string ref_spec;
  double beta = 1.0;
  double weight_exp = 1.0;
  double t = 0.0;
  double alpha = 1.0;
  IntegrationConfig integration;
  CommonArgs common;
};

int run_measure(const MeasureArgs& a, const std::vector<std::string>& argv,
                std::ostream& out) {
  RunRecorder rec("measure", argv, a.common.out, out);
  try {
    SurvivalModel x = parse_survival_model(a.true_spec);
    auto ref = [&]() {
      if (a.ref_spec.empty())
        throw Error(ErrorCode::domain,
                    "--ref is required for measure '" + a.measure + "'");
      return parse_survival_model(a.ref_spec);
    };
    MeasureResult r;
    if (a.measure == "wfgcri") {
      r = wfgcri({x, ref(), a.beta, {a.weight_exp}, 0.0, a.integration});
    } else if (a.measure == "dwfgcri") {
      r = dwfgcri({x, ref(), a.beta, {a.weight_exp}, a.t, a.integration});
    } else if (a.measure == "dwfgcri-phr") {
      r = dwfgcri_phr({x, ref(), a.beta, {a.weight_exp}, a.t, a.integration},
                      a.alpha);
    } else if (a.measure == "dwfgcri-po") {
      r = dwfgcri_po({x, ref(), a.beta, {a.weight_exp}, a.t, a.integration},
                     a.alpha);
    } else if (a.measure == "cre") {
      r = cre(x, a.integration);
    } else if (a.measure == "wcri") {
      r = wcri(x, ref(), {a.weight_exp}, a.integration);
    } else if (a.measure == "fgcre") {
      r = fgcre(x, a.beta, a.integration);
    } else if (a.measure == "wfgcre") {
      r = wfgcre(x, a.beta, {a.weight_exp}, a.integration);
    } else if (a.measure == "shannon") {
      r = shannon_entropy(x, a.integration);
    } else {
      throw Error(ErrorCode::domain, "unknown measure '" + a.measure + "'");
    }
    rec.emit(measure_json(r));
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

// ---- estimate ----

struct EstimateArgs {
  std::vector<std::string> files;
  double beta = 1.0;
  double alpha = 1.0;
  double weight_exp = 1.0;
  CommonArgs common;
};

int run_estimate(const EstimateArgs& a, const std::vector<std::string>& argv,
                 std::ostream& out) {
  RunRecorder rec("estimate", argv, a.common.out, out);
  try {
    double estimate = 0.0;
    std::size_t n = 0, m = 0;
    if (a.files.size() == 1) {
      EmpiricalSample sample(read_column_csv(a.files[0]));
      n = sample.size();
      estimate = estimate_wfgcri_phr(sample, a.beta, a.alpha, a.weight_exp);
    } else {
      EmpiricalSample sx(read_column_csv(a.files[0]));
      EmpiricalSample sy(read_column_csv(a.files[1]));
      n = sx.size();
      m = sy.size();
      estimate = estimate_wfgcri_two_sample(sx, sy, a.beta, a.weight_exp);
    }
    rec.emit("{" + json_kv("estimate", format_g9(estimate)) + ", " +
             json_kv("n", std::to_string(n)) + ", " +
             json_kv("m", std::to_string(m)) + "}\n");
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

// ---- simulate ----

struct SimulateArgs {
  std::string scenario = "phr";
  std::string betas;
  std::string ns = "100,300,1000";
  std::size_t reps = 1000;
  double rate = 0.8;
  double alpha = 0.5;
  double rate_x = 2.5;
  double rate_y = 3.5;
  double weight_exp = 1.0;
  std::string format = "csv";
  CommonArgs common;
};

int run_simulate(const SimulateArgs& a, const std::vector<std::string>& argv,
                 std::ostream& out) {
  RunRecorder rec("simulate", argv, a.common.out, out);
  try {
    StudyConfig config;
    if (a.scenario == "phr") {
      config.scenario = PhrScenario{a.rate, a.alpha};
      config.betas = parse_double_list(
          a.betas.empty() ? "0.2,0.5,0.7,0.9,1.3,1.5" : a.betas, "--betas");
    } else if (a.scenario == "two-sample") {
      config.scenario = TwoSampleScenario{a.rate_x, a.rate_y};
      config.betas = parse_double_list(
          a.betas.empty() ? "0.3,0.5,0.7,0.9,1.2,1.5" : a.betas, "--betas");
    } else {
      throw Error(ErrorCode::domain,
                  "--scenario must be phr or two-sample, got '" + a.scenario +
                      "'");
    }
    config.ns = parse_size_list(a.ns, "--ns");
    config.replications = a.reps;
    config.seed = resolve_seed(a.common, 1);
    config.weight_exp = a.weight_exp;
    rec.set_seed(config.seed);
    if (a.format != "csv" && a.format != "markdown")
      throw Error(ErrorCode::domain, "--format must be csv or markdown");
    StudyReport report = run_study(config, a.common.jobs);
    rec.emit(emit_table(report, a.format == "markdown"));
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

// ---- verify ----

struct VerifyArgs {
  std::string theorem = "all";
  std::size_t configs = 200;
  IntegrationConfig integration;
  CommonArgs common;
};

int run_verify(const VerifyArgs& a, const std::vector<std::string>& argv,
               std::ostream& out) {
  RunRecorder rec("verify", argv, a.common.out, out);
  try {
    std::uint64_t seed = resolve_seed(a.common, 42);
    rec.set_seed(seed);
    std::vector<TheoremId> ids;
    if (a.theorem == "all") {
      ids = all_theorems();
    } else if (auto id = theorem_from_name(a.theorem)) {
      ids.push_back(*id);
    } else {
      throw Error(ErrorCode::domain, "unknown theorem '" + a.theorem + "'");
    }
    std::vector<BoundCheck> checks;
    for (TheoremId id : ids) {
      auto rows = run_suite({id, seed, a.configs, a.integration},
                            a.common.jobs);
      checks.insert(checks.end(), rows.begin(), rows.end());
    }
    std::size_t violated = 0, inconclusive = 0, premise = 0;
    for (const auto& c : checks) {
      violated += c.status == CheckStatus::violated;
      inconclusive += c.status == CheckStatus::inconclusive;
      premise += c.status == CheckStatus::premise_violated;
    }
    rec.note("checks", checks.size());
    rec.note("violated", violated);
    rec.note("inconclusive", inconclusive);
    rec.note("premise_violated", premise);
    rec.emit(suite_csv(checks));
    rec.finish("ok");
    return 0;  // a violated bound is a reported finding, not a tool failure
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

// ---- chaos ----

struct ChaosArgs {
  std::string map;
  std::string r_list;
  std::string beta_range;
  double alpha = 0.5;
  double x0 = 0.01;
  std::size_t n = 10000;
  std::size_t burn_in = 0;
  double weight_exp = 1.0;
  bool bifurcation = false;
  std::string r_range;
  std::size_t r_steps = 400;
  std::size_t transient = 500;
  std::size_t keep = 200;
  CommonArgs common;
};

int run_chaos(const ChaosArgs& a, const std::vector<std::string>& argv,
              std::ostream& out) {
  RunRecorder rec("chaos", argv, a.common.out, out);
  try {
    MapKind kind;
    if (a.map == "ricker") kind = MapKind::ricker;
    else if (a.map == "tent") kind = MapKind::tent;
    else
      throw Error(ErrorCode::domain,
                  "--map must be ricker or tent, got '" + a.map + "'");
    std::string payload;
    if (a.bifurcation) {
      if (a.r_range.empty())
        throw Error(ErrorCode::domain, "--bifurcation needs --r-range lo:hi");
      auto [lo, hi] = parse_pair(a.r_range, "--r-range");
      auto points =
          bifurcation_data(kind, lo, hi, a.r_steps, a.x0, a.transient, a.keep);
      payload = "r,x\n";
      for (const auto& p : points)
        payload += format_g9(p.r) + "," + format_g9(p.x) + "\n";
    } else {
      std::string def = kind == MapKind::ricker ? "0.01:5:0.01" : "0.01:2:0.01";
      auto betas = parse_range(a.beta_range.empty() ? def : a.beta_range,
                               "--beta-range");
      std::string def_r = kind == MapKind::ricker ? "1,3.1,3.5,4.0,4.5,4.9"
                                                  : "1.0,1.2,1.5,1.6,1.8,1.9";
      auto rs = parse_double_list(a.r_list.empty() ? def_r : a.r_list,
                                  "--r-list");
      auto cells = wfgcri_curve(kind, rs, betas, a.alpha, a.x0, a.n,
                                a.weight_exp, a.common.jobs);
      std::size_t degenerate = 0;
      payload = "r,beta,value,degenerate\n";
      for (const auto& c : cells) {
        degenerate += c.degenerate;
        payload += format_g9(c.r) + "," + format_g9(c.beta) + "," +
                   format_g9(c.value) + "," + (c.degenerate ? "1" : "0") +
                   "\n";
      }
      rec.note("degenerate_cells", degenerate);
    }
    rec.emit(payload);
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

// ---- finance ----

struct FinanceRollArgs {
  std::string input;
  std::size_t window = 250;
  std::size_t step = 100;
  std::string alphas = "5,10";
  std::string beta_range = "0.01:2:0.01";
  double weight_exp = 1.0;
  bool per_window_shift = false;
  CommonArgs common;
};

int run_finance_roll(const FinanceRollArgs& a,
                     const std::vector<std::string>& argv, std::ostream& out) {
  RunRecorder rec("finance roll", argv, a.common.out, out);
  try {
    PriceSeries prices = load_price_csv(a.input);
    ReturnSeries returns = log_returns(prices);
    auto betas = parse_range(a.beta_range, "--beta-range");
    auto alphas = parse_double_list(a.alphas, "--alphas");
    auto cells = rolling_wfgcri(returns, a.window, a.step, betas, alphas,
                                a.weight_exp, a.per_window_shift,
                                a.common.jobs);
    std::size_t degenerate = 0;
    std::string payload = "window_start,beta,alpha,value\n";
    for (const auto& c : cells) {
      degenerate += c.degenerate;
      payload += c.window_start + "," + format_g9(c.beta) + "," +
                 format_g9(c.alpha) + "," + format_g9(c.value) + "\n";
    }
    rec.note("dropped_rows", prices.dropped_rows);
    rec.note("degenerate_cells", degenerate);
    rec.note("shift", format_g9(returns.shift));
    rec.emit(payload);
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

struct FinanceCompareArgs {
  std::string true_path;
  std::string ref_path;
  std::string beta_range = "0.01:5:0.01";
  double weight_exp = 1.0;
  CommonArgs common;
};

int run_finance_compare(const FinanceCompareArgs& a,
                        const std::vector<std::string>& argv,
                        std::ostream& out) {
  RunRecorder rec("finance compare", argv, a.common.out, out);
  try {
    ReturnSeries truth = log_returns(load_price_csv(a.true_path));
    ReturnSeries ref = log_returns(load_price_csv(a.ref_path));
    auto betas = parse_range(a.beta_range, "--beta-range");
    auto cells = compare_series(truth, ref, betas, a.weight_exp);
    std::string payload = "beta,value\n";
    for (const auto& c : cells)
      payload += format_g9(c.beta) + "," + format_g9(c.value) + "\n";
    rec.emit(payload);
    rec.finish("ok");
    return 0;
  } catch (const Error& e) {
    rec.finish(std::string("error: ") + e.code_name());
    throw;
  }
}

void add_common(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--out", common.out, "write the result to this file");
  sub->add_option("--jobs", common.jobs, "worker threads (default 1)")
      ->check(CLI::Range(1, 512));
}

void add_seed(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--seed", common.seed,
                  "RNG seed (default: WFGCRI_SEED env, else per-command)");
}

void add_integration(CLI::App* sub, IntegrationConfig& cfg) {
  sub->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
  sub->add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");
  sub->add_option("--sf-cut", cfg.sf_cut, "initial truncation survival level");
  sub->add_option("--max-subdivisions", cfg.max_subdivisions,
                  "quadrature panel budget");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"weighted fractional cumulative residual inaccuracy toolkit"};
  app.set_version_flag("--version", WFGCRI_VERSION);
  app.require_subcommand(1);

  MeasureArgs measure_args;
  auto* measure_cmd = app.add_subcommand(
      "measure", "evaluate a measure between parametric models");
  measure_cmd->add_option("--measure", measure_args.measure,
                          "wfgcri|dwfgcri|dwfgcri-phr|dwfgcri-po|cre|wcri|"
                          "fgcre|wfgcre|shannon");
  measure_cmd->add_option("--true", measure_args.true_spec,
                          "true model spec, e.g. exp:rate=2.5")
      ->required();
  measure_cmd->add_option("--ref", measure_args.ref_spec,
                          "reference model spec");
  measure_cmd->add_option("--beta", measure_args.beta, "fractional order");
  measure_cmd->add_option("--weight-exp", measure_args.weight_exp,
                          "weight exponent c in psi(w)=w^c");
  measure_cmd->add_option("--t", measure_args.t, "conditioning time");
  measure_cmd->add_option("--alpha", measure_args.alpha,
                          "tilt parameter for dwfgcri-phr / dwfgcri-po");
  add_integration(measure_cmd, measure_args.integration);
  add_common(measure_cmd, measure_args.common);

  EstimateArgs estimate_args;
  auto* estimate_cmd = app.add_subcommand(
      "estimate", "plug-in estimate from one or two observation CSVs");
  estimate_cmd
      ->add_option("files", estimate_args.files,
                   "single-column CSV(s): one file = tilt estimator, two "
                   "files = two-sample estimator")
      ->expected(1, 2)
      ->required();
  estimate_cmd->add_option("--beta", estimate_args.beta, "fractional order");
  estimate_cmd->add_option("--alpha", estimate_args.alpha,
                           "tilt parameter (single-sample estimator)");
  estimate_cmd->add_option("--weight-exp", estimate_args.weight_exp,
                           "weight exponent");
  add_common(estimate_cmd, estimate_args.common);

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo bias/RMSE study of the estimators");
  simulate_cmd->add_option("--scenario", simulate_args.scenario,
                           "phr|two-sample");
  simulate_cmd->add_option("--betas", simulate_args.betas,
                           "comma list of beta values");
  simulate_cmd->add_option("--ns", simulate_args.ns,
                           "comma list of sample sizes");
  simulate_cmd->add_option("--reps", simulate_args.reps,
                           "replications per cell");
  simulate_cmd->add_option("--rate", simulate_args.rate,
                           "phr scenario parent rate");
  simulate_cmd->add_option("--alpha", simulate_args.alpha,
                           "phr scenario tilt");
  simulate_cmd->add_option("--rate-x", simulate_args.rate_x,
                           "two-sample scenario true rate");
  simulate_cmd->add_option("--rate-y", simulate_args.rate_y,
                           "two-sample scenario reference rate");
  simulate_cmd->add_option("--weight-exp", simulate_args.weight_exp,
                           "weight exponent");
  simulate_cmd->add_option("--format", simulate_args.format, "csv|markdown");
  add_seed(simulate_cmd, simulate_args.common);
  add_common(simulate_cmd, simulate_args.common);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "randomized numerical checks of the bound inequalities");
  verify_cmd->add_option("--theorem", verify_args.theorem,
                         "T2_1i|T2_1ii|T2_2|T2_3|T2_4|T2_7i|T2_7ii|T2_8|"
                         "T2_9|T3_2|all");
  verify_cmd->add_option("--configs", verify_args.configs,
                         "random configurations per theorem");
  add_integration(verify_cmd, verify_args.integration);
  add_seed(verify_cmd, verify_args.common);
  add_common(verify_cmd, verify_args.common);

  ChaosArgs chaos_args;
  auto* chaos_cmd = app.add_subcommand(
      "chaos", "measure curves over chaotic-map trajectories");
  chaos_cmd->add_option("--map", chaos_args.map, "ricker|tent")->required();
  chaos_cmd->add_option("--r-list", chaos_args.r_list,
                        "comma list of map parameters");
  chaos_cmd->add_option("--beta-range", chaos_args.beta_range,
                        "lo:hi:step beta grid");
  chaos_cmd->add_option("--alpha", chaos_args.alpha, "tilt parameter");
  chaos_cmd->add_option("--x0", chaos_args.x0, "initial state");
  chaos_cmd->add_option("--n", chaos_args.n, "trajectory length");
  chaos_cmd->add_option("--burn-in", chaos_args.burn_in,
                        "states to discard before sampling");
  chaos_cmd->add_option("--weight-exp", chaos_args.weight_exp,
                        "weight exponent");
  chaos_cmd->add_flag("--bifurcation", chaos_args.bifurcation,
                      "emit bifurcation data instead of measure curves");
  chaos_cmd->add_option("--r-range", chaos_args.r_range,
                        "lo:hi parameter range (bifurcation)");
  chaos_cmd->add_option("--r-steps", chaos_args.r_steps,
                        "parameter grid size (bifurcation)");
  chaos_cmd->add_option("--transient", chaos_args.transient,
                        "transient states to discard (bifurcation)");
  chaos_cmd->add_option("--keep", chaos_args.keep,
                        "states to keep per parameter (bifurcation)");
  add_common(chaos_cmd, chaos_args.common);

  auto* finance_cmd =
      app.add_subcommand("finance", "price-series measure pipelines");
  finance_cmd->require_subcommand(1);
  FinanceRollArgs roll_args;
  auto* roll_cmd = finance_cmd->add_subcommand(
      "roll", "rolling-window tilt estimates over shifted log returns");
  roll_cmd->add_option("--input", roll_args.input, "date,close CSV")
      ->required();
  roll_cmd->add_option("--window", roll_args.window, "window length");
  roll_cmd->add_option("--step", roll_args.step, "window advance");
  roll_cmd->add_option("--alphas", roll_args.alphas, "comma list of tilts");
  roll_cmd->add_option("--beta-range", roll_args.beta_range,
                       "lo:hi:step beta grid");
  roll_cmd->add_option("--weight-exp", roll_args.weight_exp,
                       "weight exponent");
  roll_cmd->add_flag("--per-window-shift", roll_args.per_window_shift,
                     "shift each window by its own minimum return");
  add_common(roll_cmd, roll_args.common);

  FinanceCompareArgs compare_args;
  auto* compare_cmd = finance_cmd->add_subcommand(
      "compare", "two-series measure-vs-beta curve");
  compare_cmd->add_option("--true", compare_args.true_path,
                          "true-series date,close CSV")
      ->required();
  compare_cmd->add_option("--ref", compare_args.ref_path,
                          "reference-series date,close CSV")
      ->required();
  compare_cmd->add_option("--beta-range", compare_args.beta_range,
                          "lo:hi:step beta grid");
  compare_cmd->add_option("--weight-exp", compare_args.weight_exp,
                          "weight exponent");
  add_common(compare_cmd, compare_args.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << WFGCRI_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    nlohmann::ordered_json j{{"code", "usage"}, {"message", e.what()}};
    err << j.dump() << "\n";
    return 2;
  }

  simulate_args.common.seed_given = simulate_cmd->count("--seed") > 0;
  verify_args.common.seed_given = verify_cmd->count("--seed") > 0;

  try {
    if (measure_cmd->parsed()) return run_measure(measure_args, args, out);
    if (estimate_cmd->parsed()) return run_estimate(estimate_args, args, out);
    if (simulate_cmd->parsed()) return run_simulate(simulate_args, args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, args, out);
    if (chaos_cmd->parsed()) return run_chaos(chaos_args, args, out);
    if (finance_cmd->parsed()) {
      if (roll_cmd->parsed()) return run_finance_roll(roll_args, args, out);
      if (compare_cmd->parsed())
        return run_finance_compare(compare_args, args, out);
    }
    nlohmann::ordered_json j{{"code", "usage"},
                             {"message", "no subcommand selected"}};
    err << j.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    nlohmann::ordered_json j{{"code", e.code_name()}, {"message", e.what()}};
    err << j.dump() << "\n";
    return e.numerical() ? 3 : 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json j{{"code", "internal"}, {"message", e.what()}};
    err << j.dump() << "\n";
    return 3;
  }
}

}  // namespace wfgcri
