#pragma once

#include "maeq/expectation.hpp"
#include "maeq/types.hpp"

namespace maeq {

// The separable landscape the position step works on: per antenna coordinate
// r, s(r) = sum_u gamma_u exp(i k r cos(theta_u)) and its squared modulus
// g(r) = |s(r)|^2. p = Re s and q = Im s are the linearized quantities in the
// convexified subproblem.
class PositionGain {
 public:
  PositionGain(const ComplexVector& gamma, const RealVector& cos_arrivals,
               double wavelength);

  Complex s(double r) const;
  Complex s_derivative(double r) const;
  double value(double r) const;       // g(r)
  double derivative(double r) const;  // g'(r) = 2 Re(conj(s) s')
  double total(const RealVector& positions) const;

 private:
  ComplexVector gamma_;
  RealVector cos_arrivals_;
  double k_;
};

struct AoConfig {
  int num_mas = 4;
  double tol = 1e-6;            // relative objective-change stopping rule
  int max_inner = 60;           // SCA inner-iteration cap
  double sca_tol = 1e-12;       // SCA absolute objective tolerance
  double distance_backoff = 1e-9;  // keeps the accepted gap at 0+
  double dp_resolution_wavelengths = 0.02;  // lattice pitch for seeding
};

struct AoHistoryEntry {
  int iter = 0;
  double d = 0;
  double objective = 0;
  RealVector positions;
};

struct AoState {
  int iter = 0;
  double d = 0;
  RealVector positions;
  double objective = 0;
  bool converged = false;
  bool stagnated = false;
  std::vector<AoHistoryEntry> history;
};

struct ScaResult {
  RealVector positions;
  double objective = 0;  // coherent pattern gain at the returned positions
  int inner_iters = 0;
  bool stagnated = false;
};

// Weighted isotonic regression (pool-adjacent-violators): minimizes
// sum w_i (x_i - y_i)^2 subject to x_1 <= ... <= x_n.
RealVector weighted_isotonic(const RealVector& y, const RealVector& w);

// Exact Euclidean-style projection step used by the SCA: minimize
// sum a_m (r_m - z_m)^2 over the chain constraints 0 <= r_1,
// r_m - r_{m-1} >= d_min, r_M <= range. Reduces to bounded isotonic
// regression via u_m = r_m - (m-1) d_min.
RealVector project_chain(const RealVector& z, const RealVector& weights,
                         double d_min, double range);

// Closed-form distance step: returns the matched distance for the given
// positions; the expected gap at the returned value is zero.
double optimize_distance(const RealVector& positions, const ModelContext& ctx);

// Successive convexification of the pattern-gain sum with descent damping.
ScaResult solve_subproblem_sca(double d, const RealVector& positions0,
                               const ModelContext& ctx, int max_inner, double tol);

// Position step: dynamic-programming lattice seed + SCA polish; never returns
// positions with a larger pattern gain than the input.
RealVector optimize_positions(double d, const RealVector& positions,
                              const ModelContext& ctx, double tol);

// Exhaustive lattice search over sorted, spaced position tuples (M <= 3,
// resolution >= lambda/200). Ties resolve to the lexicographically smallest
// tuple. Returns the optimal positions and their pattern-gain sum.
std::pair<RealVector, double> grid_certifier(double d, const ModelContext& ctx,
                                             int num_mas, double resolution);

// Alternating optimization: exact distance step, then position step, until
// the objective stabilizes or the iteration cap is hit. The initial distance
// comes from the coherent (fully correlated) bound, which typically starts
// the run on the negative-gap side.
AoState jo_edap_ao(const AoConfig& config, const ModelContext& ctx);

}  // namespace maeq
