#include "maeq/channel.hpp"

#include <cmath>

namespace maeq {

Vec3 direction_vector(double theta, double phi) {
  const double lim = kPi / 2 + 1e-12;
  if (!(theta >= -lim && theta <= lim))
    throw std::domain_error("theta out of [-pi/2, pi/2]");
  if (!(phi >= -lim && phi <= lim))
    throw std::domain_error("phi out of [-pi/2, pi/2]");
  return Vec3(std::cos(theta) * std::cos(phi),
              std::cos(theta) * std::sin(phi),
              std::sin(theta));
}

ComplexVector transmit_frv(const Vec3& position, const PathSet& paths,
                           double wavelength) {
  const int l = paths.num_paths();
  const double k = 2.0 * kPi / wavelength;
  ComplexVector out(l);
  for (int j = 0; j < l; ++j) {
    const Vec3 p = direction_vector(paths.departure_theta[j], paths.departure_phi[j]);
    const double phase = k * position.dot(p);
    out[j] = Complex(std::cos(phase), std::sin(phase));
  }
  return out;
}

ComplexMatrix transmit_frm(const TransmitArray& array, const PathSet& paths,
                           double wavelength) {
  array.validate();
  const int n = array.num_antennas();
  ComplexMatrix g(paths.num_paths(), n);
  for (int c = 0; c < n; ++c)
    g.col(c) = transmit_frv(array.positions.row(c).transpose(), paths, wavelength);
  return g;
}

ComplexVector receive_frv_virtual(double r, const PathSet& paths,
                                  double wavelength) {
  const int l = paths.num_paths();
  const double k = 2.0 * kPi / wavelength;
  ComplexVector out(l);
  for (int i = 0; i < l; ++i) {
    const double phase = k * r * std::cos(paths.arrival_theta[i]);
    out[i] = Complex(std::cos(phase), std::sin(phase));
  }
  return out;
}

ComplexVector eve_channel(const TransmitArray& array, const PathSet& paths,
                          const ComplexVector& sigma_diag, double wavelength) {
  if (sigma_diag.size() != paths.num_paths())
    throw std::invalid_argument("path-gain vector length must equal path count");
  const ComplexMatrix g = transmit_frm(array, paths, wavelength);
  // f^T Sigma G with f all ones collapses to sigma^T G.
  return (sigma_diag.transpose() * g).transpose();
}

ComplexMatrix virtual_eve_channel_at(const TransmitArray& array,
                                     const RealVector& positions,
                                     const PathSet& paths,
                                     const ComplexVector& sigma_diag,
                                     double wavelength) {
  if (sigma_diag.size() != paths.num_paths())
    throw std::invalid_argument("path-gain vector length must equal path count");
  const ComplexMatrix g = transmit_frm(array, paths, wavelength);
  const int m = static_cast<int>(positions.size());
  ComplexMatrix f(paths.num_paths(), m);
  for (int c = 0; c < m; ++c)
    f.col(c) = receive_frv_virtual(positions[c], paths, wavelength);
  // (F^H Sigma G)^T, N x M.
  return (f.adjoint() * sigma_diag.asDiagonal() * g).transpose();
}

ComplexMatrix virtual_eve_channel(const TransmitArray& array,
                                  const VirtualEve& veve, const PathSet& paths,
                                  const ComplexVector& sigma_diag,
                                  double wavelength, const SystemParams& params) {
  veve.validate(params);
  return virtual_eve_channel_at(array, veve.positions_m, paths, sigma_diag, wavelength);
}

ComplexVector bob_channel(const TransmitArray& array, const PathSet& paths,
                          const ComplexVector& sigma_diag, double wavelength) {
  return eve_channel(array, paths, sigma_diag, wavelength);
}

TransmitArray make_planar_array(int num_antennas, const SystemParams& params) {
  if (num_antennas < 1) throw ConfigError("need at least one BS antenna");
  TransmitArray array;
  array.positions.resize(num_antennas, 3);
  const double pitch = params.wavelength_m / 2.0;
  const int cols = (num_antennas + 1) / 2;
  for (int n = 0; n < num_antennas; ++n) {
    const int row = n / cols;
    const int col = n % cols;
    array.positions.row(n) << col * pitch, row * pitch, 0.0;
  }
  array.beamformer = RealVector::Constant(num_antennas,
                                          std::sqrt(params.tx_power_mw / num_antennas));
  return array;
}

RealVector uniform_spread_positions(int num_mas, const SystemParams& params) {
  params.validate_for_antennas(num_mas);
  const double a = params.move_range_m();
  RealVector r(num_mas);
  if (num_mas == 1) {
    r[0] = a / 2.0;
    return r;
  }
  for (int m = 0; m < num_mas; ++m)
    r[m] = a * static_cast<double>(m) / (num_mas - 1);
  return r;
}

}  // namespace maeq
