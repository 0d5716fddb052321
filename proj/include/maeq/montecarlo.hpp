#pragma once

#include <optional>

#include "maeq/metrics.hpp"
#include "maeq/rng.hpp"
#include "maeq/types.hpp"

namespace maeq {

// Averaging protocol: how many independent path-response draws, which seed,
// and how the real eavesdroppers are placed.
struct TrialConfig {
  int num_trials = 5000;
  std::uint64_t seed = 1;
  double eve_distance_mean_m = 40.0;
  double eve_distance_std_m = 5.0;
  std::optional<RealVector> fixed_eve_distances;  // overrides the random draw
  bool redraw_angles_per_trial = false;  // default: condition on one angle draw
  bool store_per_trial = false;          // keep per-trial secrecy rates

  void validate() const {
    if (num_trials < 1) throw ConfigError("need at least one trial");
    if (eve_distance_std_m < 0) throw ConfigError("distance std must be nonnegative");
  }
};

// A fully specified experiment instance: geometry, angles, eavesdropper
// distances, Bob's distance, and the virtual Eve's current (d, R).
struct Scenario {
  SystemParams params;
  TransmitArray array;
  PathSet paths;
  RealVector eve_distances;
  double d_bob_m = 20.0;
  VirtualEve veve;
};

// One diagonal path-response draw: L i.i.d. complex Gaussians with
// E[|sigma_l|^2] = g0 d^-alpha / L, split equally between real and imaginary.
ComplexVector sample_path_response(double d, const SystemParams& params, Rng& rng);

PathSet draw_paths(int num_paths, Rng& rng);

// Gaussian distances (mean/std from the config), clamped below at 1 m.
RealVector draw_eve_distances(int num_eves, const TrialConfig& config, Rng& rng);

struct EmpiricalReport {
  double e_snr_col = 0;
  double e_snr_veve = 0;
  double e_delta = 0;
  double mean_c_bob = 0;
  double mean_c_col = 0;
  double mean_c_veve = 0;
  double mean_rsec_col = 0;
  double mean_rsec_veve = 0;
  double mean_delta_r_sec = 0;
  int num_trials = 0;
  std::vector<double> per_trial_rsec_col;   // filled when store_per_trial
  std::vector<double> per_trial_rsec_veve;
};

// Sample means over num_trials independent path-response draws; every trial
// uses per-entity substreams (Bob, each Eve, virtual Eve) derived from
// (seed, trial, entity).
EmpiricalReport empirical_expectations(const TrialConfig& config,
                                       const Scenario& scenario);

// Empirical E[sigma_u sigma_v^*]: diagonal should be g0 d^-alpha / L,
// off-diagonal zero within statistical bands.
ComplexMatrix cross_term_probe(double d, const SystemParams& params,
                               int num_trials, std::uint64_t seed);

}  // namespace maeq
