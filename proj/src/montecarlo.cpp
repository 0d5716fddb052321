#include "maeq/montecarlo.hpp"

#include <cmath>

#include "maeq/channel.hpp"

namespace maeq {

ComplexVector sample_path_response(double d, const SystemParams& params, Rng& rng) {
  if (d <= 0) throw std::domain_error("distance must be positive");
  const double var = params.g0_linear() * std::pow(d, -params.alpha) / params.num_paths;
  const double s = std::sqrt(var / 2.0);
  ComplexVector sigma(params.num_paths);
  for (int l = 0; l < params.num_paths; ++l)
    sigma[l] = Complex(s * rng.normal(), s * rng.normal());
  return sigma;
}

PathSet draw_paths(int num_paths, Rng& rng) {
  PathSet paths;
  paths.departure_theta.resize(num_paths);
  paths.departure_phi.resize(num_paths);
  paths.arrival_theta.resize(num_paths);
  for (int l = 0; l < num_paths; ++l)
    paths.departure_theta[l] = rng.uniform(-kPi / 2, kPi / 2);
  for (int l = 0; l < num_paths; ++l)
    paths.departure_phi[l] = rng.uniform(-kPi / 2, kPi / 2);
  for (int l = 0; l < num_paths; ++l)
    paths.arrival_theta[l] = rng.uniform(0, kPi);
  return paths;
}

RealVector draw_eve_distances(int num_eves, const TrialConfig& config, Rng& rng) {
  if (config.fixed_eve_distances) {
    if (config.fixed_eve_distances->size() != num_eves)
      throw ConfigError("fixed eavesdropper distances have the wrong length");
    return *config.fixed_eve_distances;
  }
  RealVector d(num_eves);
  for (int m = 0; m < num_eves; ++m)
    d[m] = std::max(1.0, config.eve_distance_mean_m +
                             config.eve_distance_std_m * rng.normal());
  return d;
}

namespace {

// Per-trial work reduces to O(L) per receiver once the beamformed per-path
// coefficients are folded in:
//   |h^H w|^2        = |sum_u sigma_u c_u|^2          with c = G w,
//   ||H^H w||^2      = sum_m |sum_u sigma_u b_{u,m}|^2 with b_{u,m} =
//                      c_u conj(F_{u,m}).
struct TrialKernels {
  ComplexVector c;   // length L
  ComplexMatrix b;   // L x M

  TrialKernels(const Scenario& sc, const PathSet& paths) {
    const ComplexMatrix g = transmit_frm(sc.array, paths, sc.params.wavelength_m);
    c = g * sc.array.beamformer.cast<Complex>();
    const int l = paths.num_paths();
    const int m = sc.veve.num_mas();
    b.resize(l, m);
    for (int col = 0; col < m; ++col) {
      const ComplexVector f =
          receive_frv_virtual(sc.veve.positions_m[col], paths, sc.params.wavelength_m);
      b.col(col) = c.cwiseProduct(f.conjugate());
    }
  }
};

}  // namespace

EmpiricalReport empirical_expectations(const TrialConfig& config,
                                       const Scenario& scenario) {
  config.validate();
  scenario.veve.validate(scenario.params);
  const SystemParams& p = scenario.params;
  const int n_eves = static_cast<int>(scenario.eve_distances.size());
  const int n_mas = scenario.veve.num_mas();
  const double noise = p.noise_power_mw;

  TrialKernels kernels(scenario, scenario.paths);

  KahanSum acc_col, acc_veve, acc_delta;
  KahanSum acc_cb, acc_cc, acc_cv, acc_rc, acc_rv, acc_dr;
  EmpiricalReport rep;
  rep.num_trials = config.num_trials;
  if (config.store_per_trial) {
    rep.per_trial_rsec_col.reserve(config.num_trials);
    rep.per_trial_rsec_veve.reserve(config.num_trials);
  }

  for (int t = 0; t < config.num_trials; ++t) {
    const TrialKernels* k = &kernels;
    std::optional<TrialKernels> redrawn;
    if (config.redraw_angles_per_trial) {
      Rng angle_rng(substream_seed(config.seed, t, kEntityAngles));
      redrawn.emplace(scenario, draw_paths(p.num_paths, angle_rng));
      k = &*redrawn;
    }

    Rng bob_rng(substream_seed(config.seed, t, kEntityBob));
    const ComplexVector sigma_bob = sample_path_response(scenario.d_bob_m, p, bob_rng);
    const double snr_bob = std::norm(Complex(k->c.transpose() * sigma_bob)) / noise;
    const double c_bob = std::log2(1.0 + snr_bob);

    double snr_col = 0;
    for (int m = 0; m < n_eves; ++m) {
      Rng eve_rng(substream_seed(config.seed, t, entity_eve(m)));
      const ComplexVector sigma = sample_path_response(scenario.eve_distances[m], p, eve_rng);
      snr_col += std::norm(Complex(k->c.transpose() * sigma)) / noise;
    }
    const double c_col = std::log2(1.0 + snr_col);

    Rng veve_rng(substream_seed(config.seed, t, kEntityVirtualEve));
    const ComplexVector sigma_veve =
        sample_path_response(scenario.veve.distance_m, p, veve_rng);
    double snr_veve = 0;
    for (int m = 0; m < n_mas; ++m)
      snr_veve += std::norm(Complex(k->b.col(m).transpose() * sigma_veve)) / noise;
    const double c_veve = std::log2(1.0 + snr_veve);

    const SecrecyReport sec = secrecy_report(c_bob, c_col, c_veve);

    acc_col.add(snr_col);
    acc_veve.add(snr_veve);
    acc_delta.add(snr_veve - snr_col);
    acc_cb.add(c_bob);
    acc_cc.add(c_col);
    acc_cv.add(c_veve);
    acc_rc.add(sec.rsec_col);
    acc_rv.add(sec.rsec_veve);
    acc_dr.add(sec.delta_r_sec);
    if (config.store_per_trial) {
      rep.per_trial_rsec_col.push_back(sec.rsec_col);
      rep.per_trial_rsec_veve.push_back(sec.rsec_veve);
    }
  }

  const double n = static_cast<double>(config.num_trials);
  rep.e_snr_col = acc_col.value() / n;
  rep.e_snr_veve = acc_veve.value() / n;
  rep.e_delta = acc_delta.value() / n;
  rep.mean_c_bob = acc_cb.value() / n;
  rep.mean_c_col = acc_cc.value() / n;
  rep.mean_c_veve = acc_cv.value() / n;
  rep.mean_rsec_col = acc_rc.value() / n;
  rep.mean_rsec_veve = acc_rv.value() / n;
  rep.mean_delta_r_sec = acc_dr.value() / n;
  return rep;
}

ComplexMatrix cross_term_probe(double d, const SystemParams& params,
                               int num_trials, std::uint64_t seed) {
  if (num_trials < 1) throw ConfigError("need at least one trial");
  const int l = params.num_paths;
  ComplexMatrix acc = ComplexMatrix::Zero(l, l);
  for (int t = 0; t < num_trials; ++t) {
    Rng rng(substream_seed(seed, t, kEntityVirtualEve));
    const ComplexVector sigma = sample_path_response(d, params, rng);
    acc += sigma * sigma.adjoint();
  }
  return acc / static_cast<double>(num_trials);
}

}  // namespace maeq
