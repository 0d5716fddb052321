#pragma once

#include <string>
#include <vector>

#include "maeq/montecarlo.hpp"
#include "maeq/optimizer.hpp"
#include "maeq/types.hpp"

namespace maeq {

enum class Strategy { kJoint, kDistanceOnly, kPositionsOnlyAvgDistance };
enum class SweepVariable {
  kNumEves,
  kPathLossExponent,
  kNoisePower,
  kMoveRange,
  kNumVirtualMas,
  kEveDistanceOffset,
};

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);
std::string to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(const std::string& name);

// Full experiment configuration: the physics constants plus the experiment
// topology. Mirrors the flat key=value config-file keys one to one.
struct HarnessConfig {
  SystemParams params;
  int n_bs_antennas = 8;
  int n_eves = 4;
  int n_virtual_mas = 4;
  double d_bob_bs_m = 20.0;
  double eve_dist_mean_m = 40.0;
  double eve_dist_std_m = 5.0;
  int trials = 5000;
  // Wall-clock timing is off by default so outputs stay byte-reproducible.
  bool record_timing = false;

  void set(const std::string& key, const std::string& value);
  TrialConfig trial_config() const;
};

HarnessConfig load_config(const std::string& path);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kNumEves;
  std::vector<double> values;
  std::vector<Strategy> strategies = {Strategy::kJoint};
  std::vector<int> ma_counts = {4};  // for the MA-count study
  int replicates = 1;

  void validate() const {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    if (strategies.empty()) throw ConfigError("sweep needs at least one strategy");
  }
};

struct ResultRow {
  std::string sweep_var;
  double sweep_value = 0;
  std::string strategy;
  int num_mas = 0;
  double d_m = 0;
  double expected_delta = 0;
  double pct_error = 0;
  double runtime_s = 0;
  std::uint64_t seed = 0;
};

// (e_col - e_veve) / e_col.
double percentage_error(double e_col, double e_veve);

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const HarnessConfig& config);

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> load_csv(const std::string& path);

// Per-figure plot data: one line per sweep value and strategy with the
// replicate-averaged distance, objective, and percentage error.
void emit_plot_data(const std::vector<ResultRow>& rows, const std::string& path);

struct Table2Row {
  RealVector eve_distances;
  // Ergodic secrecy rates: clamped difference of trial-averaged capacities.
  double rsec_col = 0;
  double rsec_veve = 0;
  double error = 0;  // signed, relative to the collusion secrecy rate
};

// Three-Eve fixed-placement comparison with Bob at 30 m; the virtual Eve
// carries one MA per real eavesdropper.
std::vector<Table2Row> run_table2(const HarnessConfig& config);

struct MaCountPoint {
  int num_mas = 0;
  // Replicate-averaged |mean secrecy-rate difference| at the configured trial
  // count: how tightly the virtual array's statistic concentrates on the
  // collusion statistic.
  double mean_abs_gap = 0;
  double mean_abs_gap_rel = 0;  // normalized by the collusion secrecy rate
};

std::vector<MaCountPoint> run_ma_count_study(const HarnessConfig& config,
                                             const std::vector<int>& ma_counts,
                                             int replicates);

// Spearman rank correlation with average ranks for ties.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace maeq
