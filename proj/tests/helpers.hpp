#pragma once

#include "maeq/channel.hpp"
#include "maeq/expectation.hpp"
#include "maeq/montecarlo.hpp"
#include "maeq/rng.hpp"

namespace maeq::testing {

inline SystemParams table1_params() {
  SystemParams p;  // defaults are the Table-style values
  return p;
}

struct Instance {
  SystemParams params;
  TransmitArray array;
  PathSet paths;
  RealVector eve_distances;
  ModelContext ctx;
};

// A seeded random experiment instance: planar BS array, random angles,
// Gaussian eavesdropper distances.
inline Instance random_instance(std::uint64_t seed, int num_eves = 4,
                                SystemParams params = table1_params()) {
  Instance inst;
  inst.params = params;
  inst.array = make_planar_array(8, params);
  Rng angle_rng(substream_seed(seed, 0, kEntityAngles));
  inst.paths = draw_paths(params.num_paths, angle_rng);
  Rng dist_rng(substream_seed(seed, 0, kEntityDeployment));
  TrialConfig tc;
  inst.eve_distances = draw_eve_distances(num_eves, tc, dist_rng);
  inst.ctx = make_model_context(inst.array, inst.paths, inst.eve_distances, params);
  return inst;
}

// Slow reference implementation: build G entry by entry and multiply fully.
inline ComplexVector naive_eve_channel(const TransmitArray& array,
                                       const PathSet& paths,
                                       const ComplexVector& sigma,
                                       double wavelength) {
  const int n = array.num_antennas();
  const int l = paths.num_paths();
  ComplexVector h = ComplexVector::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < l; ++j) {
      const Vec3 p = direction_vector(paths.departure_theta[j], paths.departure_phi[j]);
      const double phase =
          2.0 * kPi / wavelength * array.positions.row(a).dot(p.transpose());
      h[a] += sigma[j] * Complex(std::cos(phase), std::sin(phase));
    }
  return h;
}

inline ComplexMatrix naive_virtual_eve_channel(const TransmitArray& array,
                                               const RealVector& positions,
                                               const PathSet& paths,
                                               const ComplexVector& sigma,
                                               double wavelength) {
  const int n = array.num_antennas();
  const int m = static_cast<int>(positions.size());
  const int l = paths.num_paths();
  const double k = 2.0 * kPi / wavelength;
  ComplexMatrix h = ComplexMatrix::Zero(n, m);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < m; ++c)
      for (int u = 0; u < l; ++u) {
        const Vec3 p =
            direction_vector(paths.departure_theta[u], paths.departure_phi[u]);
        const double phase = k * (-positions[c] * std::cos(paths.arrival_theta[u]) +
                                  array.positions.row(a).dot(p.transpose()));
        h(a, c) += sigma[u] * Complex(std::cos(phase), std::sin(phase));
      }
  return h;
}

}  // namespace maeq::testing
