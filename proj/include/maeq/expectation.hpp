#pragma once

#include "maeq/types.hpp"

namespace maeq {

// Everything the closed forms need: the beamformed per-path transmit
// coefficients gamma_u, the per-(path, antenna) receive phases alpha_u(r_m),
// the scalar constants, and the distances.
struct ExpectationInputs {
  ComplexVector gamma;      // length L: gamma_u = sum_n w_n exp(-i k t_n . p_u)
  ComplexMatrix alphas;     // L x M: alpha_u(r_m) = exp(i k r_m cos(theta_u))
  SystemParams params;
  RealVector eve_distances; // real eavesdropper distances, length M_e
  double veve_distance = 0; // d
};

ComplexVector gamma_coefficients(const TransmitArray& array, const PathSet& paths,
                                 double wavelength);
ComplexMatrix alpha_matrix(const PathSet& paths, const RealVector& positions,
                           double wavelength);

// Expected virtual-Eve SNR. The path gains are independent and zero-mean
// across paths, so the expected received power per array element is the
// incoherent sum g0 d^-alpha / L * sum_u |gamma_u|^2 regardless of where the
// element sits; M elements add.
double expected_snr_veve(const ExpectationInputs& inputs);

// Expected collusion SNR: sum over real eavesdroppers of
// g0 d_m^-alpha / (L sigma^2) * sum_u |gamma_u|^2.
double expected_snr_col(const ExpectationInputs& inputs);

// expected_snr_veve - expected_snr_col; strictly decreasing in d.
double expected_delta(const ExpectationInputs& inputs);

// The distance at which the expected SNRs match:
// [ g0 * M * sum_u |gamma_u|^2 / (E[SNR_col] * L * sigma^2) ]^(1/alpha).
// Throws DegenerateInstanceError when the beamformed gains vanish entirely.
double d_max(const ExpectationInputs& inputs);

// Coherent pattern gain of the movable array, sum_m |sum_u alpha_u(r_m)
// gamma_u|^2: the response to a fully correlated path draw. This is what the
// position step shapes; it does not move the expected SNR.
double position_gain_sum(const ExpectationInputs& inputs);

// Distance matched under the worst case of fully correlated path gains,
// [ g0 * position_gain_sum / (E[SNR_col] * L * sigma^2) ]^(1/alpha). An upper
// bound style initializer for the alternating optimizer: typically
// overestimates the matched distance, so the first iterate starts on the
// negative-gap side and the first distance step corrects it.
double coherent_bound_distance(const ExpectationInputs& inputs);

// Fixed per-scenario data (everything except d and R), from which
// ExpectationInputs for any candidate (d, R) are assembled.
struct ModelContext {
  SystemParams params;
  ComplexVector gamma;
  RealVector cos_arrivals;  // cos(theta_u) per path
  RealVector eve_distances;

  ExpectationInputs at(double d, const RealVector& positions) const;
  double expected_col() const;
};

ModelContext make_model_context(const TransmitArray& array, const PathSet& paths,
                                const RealVector& eve_distances,
                                const SystemParams& params);

}  // namespace maeq
