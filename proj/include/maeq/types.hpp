#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace maeq {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

constexpr double kPi = 3.14159265358979323846;

// Thrown when a configuration (file, CLI, or programmatic) is inconsistent,
// e.g. a movement range too small to hold the requested antennas.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when antenna positions violate the box or minimum-spacing rules.
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a formula degenerates (e.g. total destructive combining makes
// the matched-distance numerator vanish).
struct DegenerateInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar physics/simulation constants. Angles, array geometry and random draws
// live elsewhere; everything here is a plain number.
struct SystemParams {
  double wavelength_m = 0.0107;      // carrier wavelength
  double g0_db = 30.0;               // average channel gain at 1 m, dB
  double alpha = 4.0;                // path-loss exponent
  double noise_power_mw = 0.5;       // noise power (sigma^2)
  double tx_power_mw = 10.0;         // transmit power budget (||w||^2)
  int num_paths = 4;                 // L, same for departure and arrival side
  double d_min_wavelengths = 0.5;    // minimum antenna spacing / lambda
  double move_range_wavelengths = 4; // movement range A / lambda
  int max_iters = 25;                // alternating-optimization iteration cap
  unsigned long long rng_seed = 1;

  double g0_linear() const { return std::pow(10.0, g0_db / 10.0); }
  double d_min_m() const { return d_min_wavelengths * wavelength_m; }
  double move_range_m() const { return move_range_wavelengths * wavelength_m; }

  void validate() const {
    if (wavelength_m <= 0) throw ConfigError("wavelength must be positive");
    if (alpha < 2) throw ConfigError("path-loss exponent must be >= 2");
    if (noise_power_mw <= 0) throw ConfigError("noise power must be positive");
    if (tx_power_mw <= 0) throw ConfigError("transmit power must be positive");
    if (num_paths < 1) throw ConfigError("need at least one path");
    if (d_min_wavelengths <= 0) throw ConfigError("minimum spacing must be positive");
    if (max_iters < 1) throw ConfigError("iteration cap must be >= 1");
  }

  // The movement range must admit M antennas at minimum spacing.
  void validate_for_antennas(int num_mas) const {
    validate();
    if (num_mas < 1) throw ConfigError("need at least one movable antenna");
    if (move_range_wavelengths < (num_mas - 1) * d_min_wavelengths - 1e-12)
      throw ConfigError("movement range too small for requested antenna count");
  }
};

// Departure (theta, phi) and arrival (theta) angles, one of each per path.
struct PathSet {
  std::vector<double> departure_theta; // [-pi/2, pi/2]
  std::vector<double> departure_phi;   // [-pi/2, pi/2]
  std::vector<double> arrival_theta;   // [0, pi]

  int num_paths() const { return static_cast<int>(arrival_theta.size()); }

  void validate() const {
    const size_t l = arrival_theta.size();
    if (departure_theta.size() != l || departure_phi.size() != l)
      throw std::invalid_argument("path angle lists must have equal length");
    if (l == 0) throw std::invalid_argument("path set must not be empty");
    for (double t : departure_theta)
      if (t < -kPi / 2 - 1e-12 || t > kPi / 2 + 1e-12)
        throw std::domain_error("departure theta out of [-pi/2, pi/2]");
    for (double p : departure_phi)
      if (p < -kPi / 2 - 1e-12 || p > kPi / 2 + 1e-12)
        throw std::domain_error("departure phi out of [-pi/2, pi/2]");
    for (double t : arrival_theta)
      if (t < -1e-12 || t > kPi + 1e-12)
        throw std::domain_error("arrival theta out of [0, pi]");
  }
};

// Base-station array: fixed antenna positions (z = 0 plane) plus the real
// beamforming weights, normalized so ||w||^2 equals the power budget.
struct TransmitArray {
  Eigen::Matrix<double, Eigen::Dynamic, 3> positions; // N x 3, meters
  RealVector beamformer;                              // length N

  int num_antennas() const { return static_cast<int>(positions.rows()); }

  void validate() const {
    if (positions.rows() < 1) throw std::invalid_argument("array needs at least one antenna");
    if (beamformer.size() != positions.rows())
      throw std::invalid_argument("beamformer length must match antenna count");
  }
};

// The equivalent single eavesdropper: distance from the BS and the x-axis
// positions of its M movable antennas.
struct VirtualEve {
  double distance_m = 0;
  RealVector positions_m;

  int num_mas() const { return static_cast<int>(positions_m.size()); }

  void validate(const SystemParams& params) const {
    if (distance_m <= 0) throw std::domain_error("virtual-eve distance must be positive");
    if (positions_m.size() < 1) throw ConstraintError("need at least one antenna position");
    const double a = params.move_range_m();
    const double dmin = params.d_min_m();
    const double tol = 1e-9 * params.wavelength_m;
    for (int m = 0; m < positions_m.size(); ++m) {
      if (positions_m[m] < -tol || positions_m[m] > a + tol)
        throw ConstraintError("antenna position outside movement range");
      if (m > 0 && positions_m[m] - positions_m[m - 1] < dmin - tol)
        throw ConstraintError("antenna spacing below minimum");
    }
  }
};

// One realization of the M real eavesdroppers: distances plus the per-Eve
// diagonal path-response draws.
struct EveDeployment {
  RealVector distances_m;
  std::vector<ComplexVector> path_gains; // diagonal of each Sigma_m, length L

  int num_eves() const { return static_cast<int>(distances_m.size()); }

  void validate() const {
    if (static_cast<size_t>(distances_m.size()) != path_gains.size())
      throw std::invalid_argument("one path-gain draw required per eavesdropper");
    for (int m = 0; m < distances_m.size(); ++m)
      if (distances_m[m] <= 0) throw std::domain_error("eavesdropper distance must be positive");
  }
};

}  // namespace maeq
