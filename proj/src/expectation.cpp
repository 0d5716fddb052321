#include "maeq/expectation.hpp"

#include <cmath>

#include "maeq/channel.hpp"

namespace maeq {

ComplexVector gamma_coefficients(const TransmitArray& array, const PathSet& paths,
                                 double wavelength) {
  const ComplexMatrix g = transmit_frm(array, paths, wavelength);
  return g.conjugate() * array.beamformer.cast<Complex>();
}

ComplexMatrix alpha_matrix(const PathSet& paths, const RealVector& positions,
                           double wavelength) {
  const int l = paths.num_paths();
  const int m = static_cast<int>(positions.size());
  ComplexMatrix a(l, m);
  for (int c = 0; c < m; ++c)
    a.col(c) = receive_frv_virtual(positions[c], paths, wavelength);
  return a;
}

namespace {

double gamma_power(const ExpectationInputs& inputs) {
  return inputs.gamma.squaredNorm();
}

double path_scale(const SystemParams& p) {
  return p.g0_linear() / (p.num_paths * p.noise_power_mw);
}

}  // namespace

double expected_snr_veve(const ExpectationInputs& inputs) {
  if (inputs.veve_distance <= 0)
    throw std::domain_error("virtual-eve distance must be positive");
  const double m = static_cast<double>(inputs.alphas.cols());
  return path_scale(inputs.params) *
         std::pow(inputs.veve_distance, -inputs.params.alpha) * m *
         gamma_power(inputs);
}

double expected_snr_col(const ExpectationInputs& inputs) {
  double dsum = 0;
  for (int m = 0; m < inputs.eve_distances.size(); ++m) {
    if (inputs.eve_distances[m] <= 0)
      throw std::domain_error("eavesdropper distance must be positive");
    dsum += std::pow(inputs.eve_distances[m], -inputs.params.alpha);
  }
  return path_scale(inputs.params) * dsum * gamma_power(inputs);
}

double expected_delta(const ExpectationInputs& inputs) {
  return expected_snr_veve(inputs) - expected_snr_col(inputs);
}

double d_max(const ExpectationInputs& inputs) {
  const double gp = gamma_power(inputs);
  const double m = static_cast<double>(inputs.alphas.cols());
  if (!(m * gp > 0) || !std::isfinite(gp))
    throw DegenerateInstanceError("beamformed path gains vanished; no matched distance");
  const double ecol = expected_snr_col(inputs);
  if (!(ecol > 0))
    throw DegenerateInstanceError("expected collusion SNR is zero");
  const SystemParams& p = inputs.params;
  const double numerator = p.g0_linear() * m * gp;
  return std::pow(numerator / (ecol * p.num_paths * p.noise_power_mw),
                  1.0 / p.alpha);
}

double position_gain_sum(const ExpectationInputs& inputs) {
  double s = 0;
  for (int m = 0; m < inputs.alphas.cols(); ++m)
    s += std::norm(Complex(inputs.alphas.col(m).transpose() * inputs.gamma));
  return s;
}

double coherent_bound_distance(const ExpectationInputs& inputs) {
  const double s = position_gain_sum(inputs);
  if (!(s > 0))
    throw DegenerateInstanceError("coherent pattern gain vanished");
  const double ecol = expected_snr_col(inputs);
  if (!(ecol > 0))
    throw DegenerateInstanceError("expected collusion SNR is zero");
  const SystemParams& p = inputs.params;
  return std::pow(p.g0_linear() * s / (ecol * p.num_paths * p.noise_power_mw),
                  1.0 / p.alpha);
}

ExpectationInputs ModelContext::at(double d, const RealVector& positions) const {
  ExpectationInputs inputs;
  inputs.gamma = gamma;
  inputs.params = params;
  inputs.eve_distances = eve_distances;
  inputs.veve_distance = d;
  const int l = static_cast<int>(gamma.size());
  const int m = static_cast<int>(positions.size());
  inputs.alphas.resize(l, m);
  const double k = 2.0 * kPi / params.wavelength_m;
  for (int c = 0; c < m; ++c)
    for (int u = 0; u < l; ++u) {
      const double phase = k * positions[c] * cos_arrivals[u];
      inputs.alphas(u, c) = Complex(std::cos(phase), std::sin(phase));
    }
  return inputs;
}

double ModelContext::expected_col() const {
  // Distance is irrelevant to the collusion side; any positive value works.
  ExpectationInputs inputs = at(1.0, RealVector::Zero(1));
  return expected_snr_col(inputs);
}

ModelContext make_model_context(const TransmitArray& array, const PathSet& paths,
                                const RealVector& eve_distances,
                                const SystemParams& params) {
  paths.validate();
  ModelContext ctx;
  ctx.params = params;
  ctx.gamma = gamma_coefficients(array, paths, params.wavelength_m);
  ctx.eve_distances = eve_distances;
  ctx.cos_arrivals.resize(paths.num_paths());
  for (int u = 0; u < paths.num_paths(); ++u)
    ctx.cos_arrivals[u] = std::cos(paths.arrival_theta[u]);
  return ctx;
}

}  // namespace maeq
