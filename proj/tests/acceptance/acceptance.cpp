// Acceptance gate: one check per release criterion, each printing a single
// PASS/FAIL line. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "maeq/channel.hpp"
#include "maeq/expectation.hpp"
#include "maeq/harness.hpp"
#include "maeq/metrics.hpp"
#include "maeq/montecarlo.hpp"
#include "maeq/optimizer.hpp"

using namespace maeq;

namespace {

constexpr std::uint64_t kSeed = 1;  // default experiment seed, fixed once

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s — %s (%s)\n", id, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  if (!pass) ++g_failures;
}

struct DrawnScenario {
  HarnessConfig config;
  TransmitArray array;
  PathSet paths;
  RealVector eve_distances;
  ModelContext ctx;
};

DrawnScenario draw(std::uint64_t seed, HarnessConfig config = HarnessConfig{}) {
  DrawnScenario d;
  d.config = config;
  d.array = make_planar_array(config.n_bs_antennas, config.params);
  Rng angle_rng(substream_seed(seed, 0, kEntityAngles));
  d.paths = draw_paths(config.params.num_paths, angle_rng);
  Rng dist_rng(substream_seed(seed, 0, kEntityDeployment));
  TrialConfig tc = config.trial_config();
  d.eve_distances = draw_eve_distances(config.n_eves, tc, dist_rng);
  d.ctx = make_model_context(d.array, d.paths, d.eve_distances, config.params);
  return d;
}

Scenario to_scenario(const DrawnScenario& d, double veve_d, const RealVector& r) {
  Scenario sc;
  sc.params = d.config.params;
  sc.array = d.array;
  sc.paths = d.paths;
  sc.eve_distances = d.eve_distances;
  sc.d_bob_m = d.config.d_bob_bs_m;
  sc.veve.distance_m = veve_d;
  sc.veve.positions_m = r;
  return sc;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// 1. Closed form vs Monte Carlo at 1e5 draws, three seeds, both expectations
// within 2%.
void criterion_1() {
  bool pass = true;
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    const DrawnScenario d = draw(seed);
    AoConfig ao;
    ao.num_mas = d.config.n_virtual_mas;
    const AoState state = jo_edap_ao(ao, d.ctx);
    const ExpectationInputs in = d.ctx.at(state.d, state.positions);
    TrialConfig tc = d.config.trial_config();
    tc.num_trials = 100000;
    tc.seed = seed;
    const EmpiricalReport rep =
        empirical_expectations(tc, to_scenario(d, state.d, state.positions));
    const double err_col =
        std::abs(expected_snr_col(in) - rep.e_snr_col) / expected_snr_col(in);
    const double err_veve =
        std::abs(expected_snr_veve(in) - rep.e_snr_veve) / expected_snr_veve(in);
    detail += fmt("seed %llu: col %.3f%% veve %.3f%%; ",
                  static_cast<unsigned long long>(seed), 100 * err_col,
                  100 * err_veve);
    if (err_col > 0.02 || err_veve > 0.02) pass = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  detail += fmt("%.1f s total", secs);
  if (secs > 90.0) pass = false;  // 30 s per seed budget
  report(1, "closed form vs Monte Carlo within 2% at 1e5 draws", pass, detail);
}

// 2. expected gap at the matched distance is a root to 1e-9 relative, on 100
// random instances.
void criterion_2() {
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const DrawnScenario d = draw(seed);
    const RealVector r = uniform_spread_positions(4, d.config.params);
    const ExpectationInputs in = d.ctx.at(1.0, r);
    const double root = d_max(in);
    const double rel =
        std::abs(expected_delta(d.ctx.at(root, r))) / expected_snr_col(in);
    worst = std::max(worst, rel);
  }
  report(2, "matched distance is an exact root (100 instances)", worst <= 1e-9,
         fmt("worst relative residual %.2e", worst));
}

// 3. Single-path, single-eavesdropper symmetry: d_max equals d_1 to 1e-12.
void criterion_3() {
  HarnessConfig config;
  config.params.num_paths = 1;
  config.n_eves = 1;
  double worst = 0;
  for (std::uint64_t seed = 501; seed <= 520; ++seed) {
    const DrawnScenario d = draw(seed, config);
    const RealVector r = uniform_spread_positions(1, config.params);
    const double root = d_max(d.ctx.at(1.0, r));
    worst = std::max(worst, std::abs(root - d.eve_distances[0]) / d.eve_distances[0]);
  }
  report(3, "single-path symmetry d_max = d_1", worst <= 1e-12,
         fmt("worst relative deviation %.2e", worst));
}

// 4. Cross-term probe off-diagonals inside 3-sigma bands at 1e5 draws.
void criterion_4() {
  SystemParams params;
  const int n = 100000;
  const double dist = 40.0;
  const ComplexMatrix probe = cross_term_probe(dist, params, n, kSeed);
  const double var = params.g0_linear() * std::pow(dist, -params.alpha) /
                     params.num_paths;
  const double band = 3.0 * var / std::sqrt(static_cast<double>(n));
  double worst = 0;
  bool pass = true;
  for (int u = 0; u < params.num_paths; ++u)
    for (int v = 0; v < params.num_paths; ++v)
      if (u != v) {
        worst = std::max(worst, std::abs(probe(u, v)));
        if (std::abs(probe(u, v)) > band) pass = false;
      }
  report(4, "path cross-terms vanish within 3-sigma", pass,
         fmt("max off-diagonal %.2e vs band %.2e", worst, band));
}

// 5. Two-antenna joint optimum certified by the exhaustive lambda/100 grid on
// 10 instances: pattern gain within 5% and joint objective within 5%.
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  double worst_gain = 0;
  for (std::uint64_t seed = 701; seed <= 710; ++seed) {
    HarnessConfig config;
    config.n_virtual_mas = 2;
    const DrawnScenario d = draw(seed, config);
    AoConfig ao;
    ao.num_mas = 2;
    const AoState state = jo_edap_ao(ao, d.ctx);
    const auto [grid_r, grid_gain] =
        grid_certifier(state.d, d.ctx, 2, config.params.wavelength_m / 100);
    PositionGain gain(d.ctx.gamma, d.ctx.cos_arrivals, config.params.wavelength_m);
    const double rel_gain = gain.total(state.positions) / grid_gain - 1.0;
    worst_gain = std::max(worst_gain, rel_gain);
    if (rel_gain > 0.05) pass = false;
    // Joint objective at the certified positions with the closed-form
    // distance rule applied per grid point.
    const double grid_d = d_max(d.ctx.at(1.0, grid_r)) * (1.0 - 1e-9);
    const double grid_obj = expected_delta(d.ctx.at(grid_d, grid_r));
    const double scale = std::max(std::abs(grid_obj), 1e-30);
    if (std::abs(state.objective - grid_obj) > 0.05 * scale) pass = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(5, "grid-certified joint optimum within 5% (10 instances)",
         pass && secs <= 120.0,
         fmt("worst pattern-gain excess %.2f%%, %.1f s", 100 * worst_gain, secs));
}

// 6. Convergence on defaults: < 1e-6 relative change within 25 iterations and
// the negative-then-nonnegative history pattern.
void criterion_6() {
  const DrawnScenario d = draw(kSeed);
  AoConfig ao;
  ao.num_mas = d.config.n_virtual_mas;
  const AoState state = jo_edap_ao(ao, d.ctx);
  const bool converged = state.converged && state.iter <= d.config.params.max_iters;
  const bool pattern =
      !state.history.empty() && state.history.front().objective < 0 &&
      state.objective >= 0;
  report(6, "convergence with negative-then-nonnegative history", converged && pattern,
         fmt("iters %d, first objective %.3e, final %.3e", state.iter,
             state.history.front().objective, state.objective));
}

struct TrendData {
  std::vector<double> values;
  std::vector<double> mean_d;
  std::vector<double> mean_obj;
};

TrendData sweep_means(SweepVariable var, const std::vector<double>& values,
                      int replicates, int trials) {
  HarnessConfig config;
  config.params.rng_seed = kSeed;
  config.trials = trials;
  SweepSpec spec;
  spec.variable = var;
  spec.values = values;
  spec.strategies = {Strategy::kJoint};
  spec.replicates = replicates;
  const auto rows = run_sweep(spec, config);
  TrendData td;
  for (double v : values) {
    double sd = 0, so = 0;
    int n = 0;
    for (const auto& r : rows)
      if (r.sweep_value == v && !std::isnan(r.d_m)) {
        sd += r.d_m;
        so += r.expected_delta;
        ++n;
      }
    td.values.push_back(v);
    td.mean_d.push_back(sd / n);
    td.mean_obj.push_back(so / n);
  }
  return td;
}

// 7. Trend reproduction across the five experiment axes.
void criterion_7() {
  bool pass = true;
  std::string detail;

  {  // d decreasing in the number of eavesdroppers
    const TrendData td =
        sweep_means(SweepVariable::kNumEves, {2, 3, 4, 5, 6, 7, 8}, 10, 5000);
    const double rho = spearman_rho(td.values, td.mean_d);
    detail += fmt("eves rho %.2f; ", rho);
    if (!(rho <= -0.8)) pass = false;
  }
  {  // d decreasing in the path-loss exponent
    const TrendData td = sweep_means(SweepVariable::kPathLossExponent,
                                     {2, 2.5, 3, 3.5, 4}, 10, 5000);
    const double rho = spearman_rho(td.values, td.mean_d);
    detail += fmt("alpha rho %.2f; ", rho);
    if (!(rho <= -0.8)) pass = false;
  }
  {  // d insensitive to the noise power
    const TrendData td =
        sweep_means(SweepVariable::kNoisePower, {0.1, 0.2, 0.5, 1, 2}, 10, 5000);
    const double lo = *std::min_element(td.mean_d.begin(), td.mean_d.end());
    const double hi = *std::max_element(td.mean_d.begin(), td.mean_d.end());
    const double spread = (hi - lo) / (0.5 * (hi + lo));
    detail += fmt("noise spread %.2f%%; ", 100 * spread);
    if (spread > 0.05) pass = false;
  }
  {  // moving range: d and objective essentially unchanged
    const TrendData td =
        sweep_means(SweepVariable::kMoveRange, {2, 3, 4, 6, 8}, 10, 5000);
    const double lo = *std::min_element(td.mean_d.begin(), td.mean_d.end());
    const double hi = *std::max_element(td.mean_d.begin(), td.mean_d.end());
    const double d_spread = (hi - lo) / (0.5 * (hi + lo));
    const double olo = *std::min_element(td.mean_obj.begin(), td.mean_obj.end());
    const double ohi = *std::max_element(td.mean_obj.begin(), td.mean_obj.end());
    const double o_spread = (ohi - olo) / std::max(0.5 * std::abs(ohi + olo), 1e-30);
    detail += fmt("range d %.2f%% obj %.2f%%; ", 100 * d_spread, 100 * o_spread);
    if (d_spread > 0.05 || o_spread > 0.05) pass = false;
  }
  {  // equivalence difference decreasing in the MA count, flattening past 7
    HarnessConfig config;
    config.params.rng_seed = kSeed;
    config.trials = 5000;
    const std::vector<int> counts = {2, 3, 4, 5, 6, 7, 8, 9};
    const auto pts = run_ma_count_study(config, counts, 40);
    std::vector<double> x, y;
    for (const auto& p : pts) {
      x.push_back(p.num_mas);
      y.push_back(p.mean_abs_gap);
    }
    const double rho = spearman_rho(x, y);
    // Flattening: the drop past 7 MAs is small next to the early drop.
    const double early = y[0] - y[2];                    // 2 -> 4 antennas
    const double late = std::abs(y[5] - y[7]);           // 7 -> 9 antennas
    const bool flat = late <= 0.35 * std::max(early, 1e-30);
    detail += fmt("ma rho %.2f early %.2e late %.2e; ", rho, early, late);
    if (!(rho <= -0.8) || !flat) pass = false;
  }
  report(7, "trend reproduction across the five sweeps", pass, detail);
}

// 8. Fixed-placement comparison: signed secrecy-rate error within 1% per row
// at 5000 trials.
void criterion_8() {
  HarnessConfig config;
  config.params.rng_seed = kSeed;
  config.trials = 5000;
  const auto rows = run_table2(config);
  bool pass = rows.size() == 3;
  std::string detail;
  for (const auto& r : rows) {
    detail += fmt("[%g..%g]: %+.3f%%; ", r.eve_distances[0], r.eve_distances[2],
                  100 * r.error);
    if (std::abs(r.error) > 0.01) pass = false;
  }
  report(8, "fixed-placement secrecy error within 1% per row", pass, detail);
}

// 9. The averaged-distance error statistic lands in the 3-15% band across the
// path-loss sweep.
void criterion_9() {
  HarnessConfig config;
  config.params.rng_seed = kSeed;
  config.trials = 5000;
  SweepSpec spec;
  spec.variable = SweepVariable::kPathLossExponent;
  spec.values = {2, 2.5, 3, 3.5, 4};
  spec.strategies = {Strategy::kPositionsOnlyAvgDistance};
  spec.replicates = 10;
  const auto rows = run_sweep(spec, config);
  double acc = 0;
  int n = 0;
  for (const auto& r : rows)
    if (!std::isnan(r.pct_error)) {
      acc += r.pct_error;
      ++n;
    }
  const double mean = acc / n;
  report(9, "averaged-distance error statistic within [3%, 15%]",
         mean >= 0.03 && mean <= 0.15, fmt("mean %.2f%% over %d rows", 100 * mean, n));
}

// 10. Byte-identical CSV outputs for identical config and seed.
void criterion_10() {
  SweepSpec spec;
  spec.variable = SweepVariable::kNumEves;
  spec.values = {2, 3, 4};
  spec.strategies = {Strategy::kJoint, Strategy::kDistanceOnly,
                     Strategy::kPositionsOnlyAvgDistance};
  spec.replicates = 2;
  HarnessConfig config;
  config.params.rng_seed = kSeed;
  config.trials = 1000;
  const std::string p1 = "acceptance_run1.csv", p2 = "acceptance_run2.csv";
  emit_csv(run_sweep(spec, config), p1);
  emit_csv(run_sweep(spec, config), p2);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(p1), b = slurp(p2);
  const bool pass = !a.empty() && a == b;
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  report(10, "byte-identical CSV outputs across runs", pass,
         fmt("%zu bytes each", a.size()));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
