#include "maeq/metrics.hpp"

#include <cmath>

namespace maeq {

double snr_eve(const ComplexVector& h, const RealVector& w, double noise_mw) {
  if (noise_mw <= 0) throw std::domain_error("noise power must be positive");
  if (h.size() != w.size()) throw std::invalid_argument("channel/beamformer size mismatch");
  const Complex y = h.adjoint() * w.cast<Complex>();
  return std::norm(y) / noise_mw;
}

double collusion_capacity(const RealVector& per_eve_snr) {
  double s = 0;
  for (int m = 0; m < per_eve_snr.size(); ++m) {
    if (per_eve_snr[m] < 0) throw std::domain_error("SNR must be nonnegative");
    s += per_eve_snr[m];
  }
  return std::log2(1.0 + s);
}

double virtual_eve_snr(const ComplexMatrix& h, const RealVector& w, double noise_mw) {
  if (noise_mw <= 0) throw std::domain_error("noise power must be positive");
  if (h.rows() != w.size()) throw std::invalid_argument("channel/beamformer size mismatch");
  const ComplexVector y = h.adjoint() * w.cast<Complex>();
  return y.squaredNorm() / noise_mw;
}

double secrecy_rate(double c_bob, double c_eve) {
  return std::max(c_bob - c_eve, 0.0);
}

double delta_snr(double snr_veve, double snr_col) { return snr_veve - snr_col; }

SecrecyReport secrecy_report(double c_bob, double c_col, double c_veve) {
  SecrecyReport rep;
  rep.c_bob = c_bob;
  rep.c_col = c_col;
  rep.c_veve = c_veve;
  rep.rsec_col = secrecy_rate(c_bob, c_col);
  rep.rsec_veve = secrecy_rate(c_bob, c_veve);
  rep.delta_r_sec = rep.rsec_veve - rep.rsec_col;
  rep.clamp_active = (c_bob < c_col) || (c_bob < c_veve);
  return rep;
}

}  // namespace maeq
