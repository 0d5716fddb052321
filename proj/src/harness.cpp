#include "maeq/harness.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "maeq/channel.hpp"

namespace maeq {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kJoint: return "joint";
    case Strategy::kDistanceOnly: return "distance_only";
    case Strategy::kPositionsOnlyAvgDistance: return "positions_only_avg_distance";
  }
  throw std::invalid_argument("unknown strategy");
}

Strategy strategy_from_string(const std::string& name) {
  if (name == "joint") return Strategy::kJoint;
  if (name == "distance_only") return Strategy::kDistanceOnly;
  if (name == "positions_only_avg_distance") return Strategy::kPositionsOnlyAvgDistance;
  throw ConfigError("unknown strategy: " + name);
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kNumEves: return "num_eves";
    case SweepVariable::kPathLossExponent: return "path_loss_exponent";
    case SweepVariable::kNoisePower: return "noise_power";
    case SweepVariable::kMoveRange: return "move_range";
    case SweepVariable::kNumVirtualMas: return "num_virtual_mas";
    case SweepVariable::kEveDistanceOffset: return "eve_distance_offset";
  }
  throw std::invalid_argument("unknown sweep variable");
}

SweepVariable sweep_variable_from_string(const std::string& name) {
  if (name == "num_eves") return SweepVariable::kNumEves;
  if (name == "path_loss_exponent") return SweepVariable::kPathLossExponent;
  if (name == "noise_power") return SweepVariable::kNoisePower;
  if (name == "move_range") return SweepVariable::kMoveRange;
  if (name == "num_virtual_mas") return SweepVariable::kNumVirtualMas;
  if (name == "eve_distance_offset") return SweepVariable::kEveDistanceOffset;
  throw ConfigError("unknown sweep variable: " + name);
}

void HarnessConfig::set(const std::string& key, const std::string& value) {
  auto as_double = [&] { return std::stod(value); };
  auto as_int = [&] { return std::stoi(value); };
  if (key == "wavelength_m") params.wavelength_m = as_double();
  else if (key == "n_bs_antennas") n_bs_antennas = as_int();
  else if (key == "n_eves") n_eves = as_int();
  else if (key == "n_virtual_mas") n_virtual_mas = as_int();
  else if (key == "d_bob_bs_m") d_bob_bs_m = as_double();
  else if (key == "tx_power_mw") params.tx_power_mw = as_double();
  else if (key == "noise_power_mw") params.noise_power_mw = as_double();
  else if (key == "n_paths") params.num_paths = as_int();
  else if (key == "g0_db") params.g0_db = as_double();
  else if (key == "alpha") params.alpha = as_double();
  else if (key == "move_range_wavelengths") params.move_range_wavelengths = as_double();
  else if (key == "d_min_wavelengths") params.d_min_wavelengths = as_double();
  else if (key == "max_iters") params.max_iters = as_int();
  else if (key == "eve_dist_mean_m") eve_dist_mean_m = as_double();
  else if (key == "eve_dist_std_m") eve_dist_std_m = as_double();
  else if (key == "trials") trials = as_int();
  else if (key == "seed") params.rng_seed = std::stoull(value);
  else throw ConfigError("unknown config key: " + key);
}

TrialConfig HarnessConfig::trial_config() const {
  TrialConfig tc;
  tc.num_trials = trials;
  tc.seed = params.rng_seed;
  tc.eve_distance_mean_m = eve_dist_mean_m;
  tc.eve_distance_std_m = eve_dist_std_m;
  return tc;
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  HarnessConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;  // blank line
    if (!(ls >> eq)) throw ConfigError("malformed config line " + std::to_string(lineno));
    if (eq == "=") {
      if (!(ls >> value))
        throw ConfigError("missing value on config line " + std::to_string(lineno));
    } else {
      value = eq;  // "key value" form
    }
    config.set(key, value);
  }
  config.params.validate();
  return config;
}

double percentage_error(double e_col, double e_veve) {
  if (e_col == 0) throw std::domain_error("reference expectation is zero");
  return (e_col - e_veve) / e_col;
}

namespace {

constexpr std::uint64_t kEntityReplicate = (1u << 20) + 2;
constexpr double kDistanceBackoff = 1e-9;

struct ScenarioDraw {
  PathSet paths;
  RealVector eve_distances;
  TransmitArray array;
  ModelContext ctx;
};

ScenarioDraw draw_scenario(const HarnessConfig& config, std::uint64_t seed) {
  ScenarioDraw sd;
  Rng angle_rng(substream_seed(seed, 0, kEntityAngles));
  sd.paths = draw_paths(config.params.num_paths, angle_rng);
  Rng dist_rng(substream_seed(seed, 0, kEntityDeployment));
  TrialConfig tc = config.trial_config();
  sd.eve_distances = draw_eve_distances(config.n_eves, tc, dist_rng);
  sd.array = make_planar_array(config.n_bs_antennas, config.params);
  sd.ctx = make_model_context(sd.array, sd.paths, sd.eve_distances, config.params);
  return sd;
}

struct StrategyOutcome {
  double d = 0;
  RealVector positions;
  double objective = 0;
};

StrategyOutcome run_strategy(Strategy strategy, const HarnessConfig& config,
                             const ScenarioDraw& sd) {
  StrategyOutcome out;
  const int m = config.n_virtual_mas;
  switch (strategy) {
    case Strategy::kJoint: {
      AoConfig ao;
      ao.num_mas = m;
      const AoState state = jo_edap_ao(ao, sd.ctx);
      out.d = state.d;
      out.positions = state.positions;
      out.objective = state.objective;
      break;
    }
    case Strategy::kDistanceOnly: {
      out.positions = uniform_spread_positions(m, config.params);
      out.d = optimize_distance(out.positions, sd.ctx) * (1.0 - kDistanceBackoff);
      out.objective = expected_delta(sd.ctx.at(out.d, out.positions));
      break;
    }
    case Strategy::kPositionsOnlyAvgDistance: {
      out.d = sd.eve_distances.mean();
      const RealVector r0 = uniform_spread_positions(m, config.params);
      out.positions = optimize_positions(out.d, r0, sd.ctx, 1e-12);
      out.objective = expected_delta(sd.ctx.at(out.d, out.positions));
      break;
    }
  }
  return out;
}

HarnessConfig apply_sweep_value(const HarnessConfig& base, SweepVariable var,
                                double value) {
  HarnessConfig c = base;
  switch (var) {
    case SweepVariable::kNumEves: c.n_eves = static_cast<int>(value); break;
    case SweepVariable::kPathLossExponent: c.params.alpha = value; break;
    case SweepVariable::kNoisePower: c.params.noise_power_mw = value; break;
    case SweepVariable::kMoveRange: c.params.move_range_wavelengths = value; break;
    case SweepVariable::kNumVirtualMas: c.n_virtual_mas = static_cast<int>(value); break;
    case SweepVariable::kEveDistanceOffset: c.eve_dist_mean_m += value; break;
  }
  return c;
}

double mc_percentage_error(const HarnessConfig& config, const ScenarioDraw& sd,
                           const StrategyOutcome& outcome, std::uint64_t seed) {
  Scenario sc;
  sc.params = config.params;
  sc.array = sd.array;
  sc.paths = sd.paths;
  sc.eve_distances = sd.eve_distances;
  sc.d_bob_m = config.d_bob_bs_m;
  sc.veve.distance_m = outcome.d;
  sc.veve.positions_m = outcome.positions;
  TrialConfig tc = config.trial_config();
  tc.seed = seed;
  const EmpiricalReport rep = empirical_expectations(tc, sc);
  return percentage_error(rep.e_snr_col, rep.e_snr_veve);
}

}  // namespace

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const HarnessConfig& base) {
  spec.validate();
  struct Job {
    double value;
    Strategy strategy;
    int replicate;
  };
  std::vector<Job> jobs;
  for (double value : spec.values)
    for (Strategy strategy : spec.strategies)
      for (int k = 0; k < spec.replicates; ++k) jobs.push_back({value, strategy, k});

  std::vector<ResultRow> rows(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const Job& job = jobs[i];
      ResultRow row;
      row.sweep_var = to_string(spec.variable);
      row.sweep_value = job.value;
      row.strategy = to_string(job.strategy);
      const std::uint64_t seed =
          substream_seed(base.params.rng_seed, job.replicate, kEntityReplicate);
      row.seed = seed;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const HarnessConfig config = apply_sweep_value(base, spec.variable, job.value);
        row.num_mas = config.n_virtual_mas;
        const ScenarioDraw sd = draw_scenario(config, seed);
        const StrategyOutcome outcome = run_strategy(job.strategy, config, sd);
        row.d_m = outcome.d;
        row.expected_delta = outcome.objective;
        row.pct_error = mc_percentage_error(config, sd, outcome, seed);
      } catch (const std::exception&) {
        // Infeasible or degenerate point: record it and keep sweeping.
        row.num_mas = base.n_virtual_mas;
        row.d_m = std::nan("");
        row.expected_delta = std::nan("");
        row.pct_error = std::nan("");
      }
      if (base.record_timing)
        row.runtime_s = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
      rows[i] = std::move(row);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = std::min<size_t>(hw, jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << "sweep_var,sweep_value,strategy,num_mas,d_m,expected_delta,"
         "pct_error,runtime_s,seed\n";
  for (const ResultRow& r : rows) {
    out << r.sweep_var << ',' << format_double(r.sweep_value) << ',' << r.strategy
        << ',' << r.num_mas << ',' << format_double(r.d_m) << ','
        << format_double(r.expected_delta) << ',' << format_double(r.pct_error)
        << ',' << format_double(r.runtime_s) << ',' << r.seed << '\n';
  }
}

std::vector<ResultRow> load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open CSV file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV file: " + path);
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw ConfigError("malformed CSV row: " + line);
    ResultRow r;
    r.sweep_var = fields[0];
    r.sweep_value = std::stod(fields[1]);
    r.strategy = fields[2];
    r.num_mas = std::stoi(fields[3]);
    r.d_m = std::stod(fields[4]);
    r.expected_delta = std::stod(fields[5]);
    r.pct_error = std::stod(fields[6]);
    r.runtime_s = std::stod(fields[7]);
    r.seed = std::stoull(fields[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit_plot_data(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << "# sweep_var sweep_value strategy mean_d_m mean_expected_delta "
         "mean_pct_error replicates\n";
  std::vector<std::pair<double, std::string>> order;
  std::map<std::pair<double, std::string>, std::array<double, 4>> agg;
  for (const ResultRow& r : rows) {
    if (std::isnan(r.d_m)) continue;
    const auto key = std::make_pair(r.sweep_value, r.strategy);
    if (!agg.count(key)) order.push_back(key);
    auto& a = agg[key];
    a[0] += r.d_m;
    a[1] += r.expected_delta;
    a[2] += r.pct_error;
    a[3] += 1;
  }
  for (const auto& key : order) {
    const auto& a = agg[key];
    const double n = a[3];
    out << (rows.empty() ? "" : rows.front().sweep_var) << ' '
        << format_double(key.first) << ' ' << key.second << ' '
        << format_double(a[0] / n) << ' ' << format_double(a[1] / n) << ' '
        << format_double(a[2] / n) << ' ' << static_cast<int>(n) << '\n';
  }
}

std::vector<Table2Row> run_table2(const HarnessConfig& base) {
  const double rows_m[3][3] = {{50, 50.5, 53}, {58, 58.5, 61}, {68, 68.5, 71}};
  std::vector<Table2Row> result;
  for (const auto& row_m : rows_m) {
    HarnessConfig config = base;
    config.n_eves = 3;
    config.n_virtual_mas = 3;
    config.d_bob_bs_m = 30.0;

    Rng angle_rng(substream_seed(config.params.rng_seed, 0, kEntityAngles));
    const PathSet paths = draw_paths(config.params.num_paths, angle_rng);
    RealVector eves(3);
    eves << row_m[0], row_m[1], row_m[2];
    const TransmitArray array = make_planar_array(config.n_bs_antennas, config.params);
    const ModelContext ctx = make_model_context(array, paths, eves, config.params);

    AoConfig ao;
    ao.num_mas = 3;
    const AoState state = jo_edap_ao(ao, ctx);

    Scenario sc;
    sc.params = config.params;
    sc.array = array;
    sc.paths = paths;
    sc.eve_distances = eves;
    sc.d_bob_m = config.d_bob_bs_m;
    sc.veve.distance_m = state.d;
    sc.veve.positions_m = state.positions;
    TrialConfig tc = config.trial_config();
    tc.fixed_eve_distances = eves;
    const EmpiricalReport rep = empirical_expectations(tc, sc);

    Table2Row out;
    out.eve_distances = eves;
    // Ergodic rates: average the capacities over the trials first, then take
    // the clamped difference. Clamping per trial would fold the fluctuation
    // asymmetry of the two eavesdropper statistics into the comparison.
    out.rsec_col = secrecy_rate(rep.mean_c_bob, rep.mean_c_col);
    out.rsec_veve = secrecy_rate(rep.mean_c_bob, rep.mean_c_veve);
    out.error = percentage_error(out.rsec_col, out.rsec_veve);
    result.push_back(std::move(out));
  }
  return result;
}

std::vector<MaCountPoint> run_ma_count_study(const HarnessConfig& base,
                                             const std::vector<int>& ma_counts,
                                             int replicates) {
  if (replicates < 1) throw ConfigError("need at least one replicate");
  std::vector<MaCountPoint> points;
  for (int m : ma_counts) {
    HarnessConfig config = base;
    config.n_virtual_mas = m;
    config.params.validate_for_antennas(m);
    KahanSum abs_gap, abs_gap_rel;
    for (int k = 0; k < replicates; ++k) {
      const std::uint64_t seed =
          substream_seed(config.params.rng_seed, k, kEntityReplicate);
      const ScenarioDraw sd = draw_scenario(config, seed);
      const StrategyOutcome outcome = run_strategy(Strategy::kJoint, config, sd);
      Scenario sc;
      sc.params = config.params;
      sc.array = sd.array;
      sc.paths = sd.paths;
      sc.eve_distances = sd.eve_distances;
      sc.d_bob_m = config.d_bob_bs_m;
      sc.veve.distance_m = outcome.d;
      sc.veve.positions_m = outcome.positions;
      TrialConfig tc = config.trial_config();
      tc.seed = seed;
      const EmpiricalReport rep = empirical_expectations(tc, sc);
      abs_gap.add(std::abs(rep.mean_delta_r_sec));
      if (rep.mean_rsec_col > 0)
        abs_gap_rel.add(std::abs(rep.mean_delta_r_sec) / rep.mean_rsec_col);
    }
    MaCountPoint pt;
    pt.num_mas = m;
    pt.mean_abs_gap = abs_gap.value() / replicates;
    pt.mean_abs_gap_rel = abs_gap_rel.value() / replicates;
    points.push_back(pt);
  }
  return points;
}

double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("need two equal-length series");
  auto ranks = [](const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    size_t i = 0;
    while (i < n) {
      size_t j = i;
      while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
      const double avg = 0.5 * (i + j) + 1.0;
      for (size_t t = i; t <= j; ++t) r[idx[t]] = avg;
      i = j + 1;
    }
    return r;
  };
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace maeq
