#pragma once

#include "maeq/types.hpp"

namespace maeq {

// Unit direction vector [cos(theta)cos(phi), cos(theta)sin(phi), sin(theta)]
// for a departure path. Throws std::domain_error for angles outside
// [-pi/2, pi/2].
Vec3 direction_vector(double theta, double phi);

// Transmit field-response vector of one antenna: entry j is
// exp(i * 2pi/lambda * t . p_j) over the L departure paths.
ComplexVector transmit_frv(const Vec3& position, const PathSet& paths,
                           double wavelength);

// L x N field-response matrix; column n is transmit_frv of antenna n.
ComplexMatrix transmit_frm(const TransmitArray& array, const PathSet& paths,
                           double wavelength);

// Receive field-response vector of a linear-array element at coordinate r:
// entry i is exp(i * 2pi/lambda * r * cos(arrival_theta_i)).
ComplexVector receive_frv_virtual(double r, const PathSet& paths,
                                  double wavelength);

// Channel to a single fixed-position receiver: (f^T Sigma G)^T with f all
// ones. sigma_diag holds the diagonal of the path-response matrix.
ComplexVector eve_channel(const TransmitArray& array, const PathSet& paths,
                          const ComplexVector& sigma_diag, double wavelength);

// N x M channel to the virtual Eve's movable array: (F(R)^H Sigma G)^T.
// Validates the position constraints; use virtual_eve_channel_at to skip them
// (e.g. for deliberately degenerate test geometries).
ComplexMatrix virtual_eve_channel(const TransmitArray& array,
                                  const VirtualEve& veve, const PathSet& paths,
                                  const ComplexVector& sigma_diag,
                                  double wavelength, const SystemParams& params);
ComplexMatrix virtual_eve_channel_at(const TransmitArray& array,
                                     const RealVector& positions,
                                     const PathSet& paths,
                                     const ComplexVector& sigma_diag,
                                     double wavelength);

// Bob is a single fixed-position antenna too; same contract as eve_channel
// with Bob's path-response draw.
ComplexVector bob_channel(const TransmitArray& array, const PathSet& paths,
                          const ComplexVector& sigma_diag, double wavelength);

// 2 x (N/2) planar grid (z = 0) at half-wavelength pitch with uniform
// weights sqrt(P_t / N); the default base-station layout.
TransmitArray make_planar_array(int num_antennas, const SystemParams& params);

// Evenly spread M positions over [0, A]; the optimizer's starting point.
RealVector uniform_spread_positions(int num_mas, const SystemParams& params);

}  // namespace maeq
