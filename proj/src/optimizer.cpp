#include "maeq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maeq {

PositionGain::PositionGain(const ComplexVector& gamma,
                           const RealVector& cos_arrivals, double wavelength)
    : gamma_(gamma), cos_arrivals_(cos_arrivals), k_(2.0 * kPi / wavelength) {
  if (gamma_.size() != cos_arrivals_.size())
    throw std::invalid_argument("gamma / arrival-cosine length mismatch");
}

Complex PositionGain::s(double r) const {
  Complex acc(0, 0);
  for (int u = 0; u < gamma_.size(); ++u) {
    const double phase = k_ * r * cos_arrivals_[u];
    acc += gamma_[u] * Complex(std::cos(phase), std::sin(phase));
  }
  return acc;
}

Complex PositionGain::s_derivative(double r) const {
  Complex acc(0, 0);
  for (int u = 0; u < gamma_.size(); ++u) {
    const double phase = k_ * r * cos_arrivals_[u];
    acc += gamma_[u] * Complex(0, k_ * cos_arrivals_[u]) *
           Complex(std::cos(phase), std::sin(phase));
  }
  return acc;
}

double PositionGain::value(double r) const { return std::norm(s(r)); }

double PositionGain::derivative(double r) const {
  const Complex sv = s(r);
  const Complex dv = s_derivative(r);
  return 2.0 * (sv.real() * dv.real() + sv.imag() * dv.imag());
}

double PositionGain::total(const RealVector& positions) const {
  double acc = 0;
  for (int m = 0; m < positions.size(); ++m) acc += value(positions[m]);
  return acc;
}

RealVector weighted_isotonic(const RealVector& y, const RealVector& w) {
  const int n = static_cast<int>(y.size());
  if (w.size() != n) throw std::invalid_argument("weight length mismatch");
  std::vector<double> level(n), weight(n);
  std::vector<int> count(n);
  int blocks = 0;
  for (int i = 0; i < n; ++i) {
    level[blocks] = y[i];
    weight[blocks] = std::max(w[i], 0.0);
    count[blocks] = 1;
    ++blocks;
    while (blocks > 1 && level[blocks - 2] > level[blocks - 1]) {
      const double tw = weight[blocks - 2] + weight[blocks - 1];
      if (tw > 0)
        level[blocks - 2] = (weight[blocks - 2] * level[blocks - 2] +
                             weight[blocks - 1] * level[blocks - 1]) / tw;
      // Zero total weight: any merged level is optimal; keep the mean shape.
      else
        level[blocks - 2] = 0.5 * (level[blocks - 2] + level[blocks - 1]);
      weight[blocks - 2] = tw;
      count[blocks - 2] += count[blocks - 1];
      --blocks;
    }
  }
  RealVector out(n);
  int idx = 0;
  for (int b = 0; b < blocks; ++b)
    for (int c = 0; c < count[b]; ++c) out[idx++] = level[b];
  return out;
}

RealVector project_chain(const RealVector& z, const RealVector& weights,
                         double d_min, double range) {
  const int n = static_cast<int>(z.size());
  const double upper = range - (n - 1) * d_min;
  if (upper < -1e-12)
    throw ConfigError("movement range too small for requested antenna count");
  RealVector y(n);
  for (int m = 0; m < n; ++m) y[m] = z[m] - m * d_min;
  RealVector iso = weighted_isotonic(y, weights);
  RealVector out(n);
  for (int m = 0; m < n; ++m) {
    const double clamped = std::min(std::max(iso[m], 0.0), std::max(upper, 0.0));
    out[m] = clamped + m * d_min;
  }
  return out;
}

double optimize_distance(const RealVector& positions, const ModelContext& ctx) {
  return d_max(ctx.at(1.0, positions));
}

ScaResult solve_subproblem_sca(double d, const RealVector& positions0,
                               const ModelContext& ctx, int max_inner, double tol) {
  (void)d;  // the pattern-gain argmin does not depend on the distance scaling
  const SystemParams& p = ctx.params;
  p.validate_for_antennas(static_cast<int>(positions0.size()));
  PositionGain gain(ctx.gamma, ctx.cos_arrivals, p.wavelength_m);
  const int n = static_cast<int>(positions0.size());
  const double trust = p.wavelength_m / 8.0;

  ScaResult res;
  res.positions = positions0;
  res.objective = gain.total(positions0);

  RealVector r = positions0;
  double obj = res.objective;
  for (int it = 0; it < max_inner; ++it) {
    ++res.inner_iters;
    RealVector z(n), w(n);
    for (int m = 0; m < n; ++m) {
      const Complex sv = gain.s(r[m]);
      const Complex dv = gain.s_derivative(r[m]);
      const double a = std::norm(dv);
      w[m] = a;
      double step = 0;
      if (a > 1e-30) {
        step = -(dv.real() * sv.real() + dv.imag() * sv.imag()) / a;
        step = std::min(std::max(step, -trust), trust);
      }
      z[m] = r[m] + step;
    }
    const RealVector target = project_chain(z, w, p.d_min_m(), p.move_range_m());
    if ((target - r).cwiseAbs().maxCoeff() < 1e-14 * p.wavelength_m) break;

    double eta = 1.0;
    bool accepted = false;
    for (int h = 0; h < 30; ++h) {
      const RealVector cand = r + eta * (target - r);
      const double cand_obj = gain.total(cand);
      if (cand_obj < obj - 1e-15 * std::max(1.0, obj)) {
        r = cand;
        const double prev = obj;
        obj = cand_obj;
        accepted = true;
        if (prev - obj < tol * std::max(1.0, obj)) it = max_inner;  // converged
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      res.stagnated = true;
      break;
    }
  }
  if (obj < res.objective) {
    res.positions = r;
    res.objective = obj;
  }
  return res;
}

namespace {

// Lexicographically-smallest global minimizer of sum g(r_m) over the lattice
// {0, h, 2h, ...} with index gap >= ceil(d_min/h), via prefix-min DP.
bool lattice_dp(const PositionGain& gain, int num_mas, double pitch,
                double d_min, double range, RealVector* out) {
  const int k = static_cast<int>(std::floor(range / pitch + 1e-9)) + 1;
  const int gap = std::max(1, static_cast<int>(std::ceil(d_min / pitch - 1e-9)));
  if ((num_mas - 1) * gap >= k) return false;

  std::vector<double> g(k);
  for (int i = 0; i < k; ++i) g[i] = gain.value(i * pitch);

  std::vector<double> f = g;
  std::vector<std::vector<int>> parent(num_mas, std::vector<int>(k, -1));
  for (int m = 1; m < num_mas; ++m) {
    std::vector<double> nf(k, std::numeric_limits<double>::infinity());
    double best = std::numeric_limits<double>::infinity();
    int best_idx = -1;
    for (int i = m * gap; i < k; ++i) {
      const int j = i - gap;
      if (f[j] < best) {
        best = f[j];
        best_idx = j;
      }
      nf[i] = g[i] + best;
      parent[m][i] = best_idx;
    }
    f = std::move(nf);
  }
  int idx = -1;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i)
    if (f[i] < best) {
      best = f[i];
      idx = i;
    }
  if (idx < 0) return false;
  out->resize(num_mas);
  for (int m = num_mas - 1; m >= 0; --m) {
    (*out)[m] = idx * pitch;
    if (m > 0) idx = parent[m][idx];
  }
  return true;
}

}  // namespace

RealVector optimize_positions(double d, const RealVector& positions,
                              const ModelContext& ctx, double tol) {
  const SystemParams& p = ctx.params;
  const int n = static_cast<int>(positions.size());
  p.validate_for_antennas(n);
  PositionGain gain(ctx.gamma, ctx.cos_arrivals, p.wavelength_m);

  const double input_obj = gain.total(positions);
  RealVector best = positions;
  double best_obj = input_obj;
  auto consider = [&](const RealVector& cand) {
    const double obj = gain.total(cand);
    if (obj < best_obj) {
      best_obj = obj;
      best = cand;
    }
  };

  const ScaResult local = solve_subproblem_sca(d, positions, ctx, 60, tol);
  consider(local.positions);

  RealVector seed;
  if (lattice_dp(gain, n, 0.02 * p.wavelength_m, p.d_min_m(), p.move_range_m(),
                 &seed)) {
    consider(seed);
    const ScaResult polished = solve_subproblem_sca(d, seed, ctx, 60, tol);
    consider(polished.positions);
  }

  // Flat or tied landscape: keep the caller's positions.
  if (best_obj >= input_obj - 1e-12 * std::max(1.0, input_obj)) return positions;
  return best;
}

std::pair<RealVector, double> grid_certifier(double d, const ModelContext& ctx,
                                             int num_mas, double resolution) {
  (void)d;
  const SystemParams& p = ctx.params;
  if (num_mas < 1 || num_mas > 3)
    throw ConfigError("grid certifier supports 1 to 3 antennas");
  if (resolution < p.wavelength_m / 200.0 - 1e-15)
    throw ConfigError("grid certifier resolution finer than lambda/200");
  p.validate_for_antennas(num_mas);
  PositionGain gain(ctx.gamma, ctx.cos_arrivals, p.wavelength_m);

  const int k = static_cast<int>(std::floor(p.move_range_m() / resolution + 1e-9)) + 1;
  const int gap = std::max(1, static_cast<int>(std::ceil(p.d_min_m() / resolution - 1e-9)));
  if ((num_mas - 1) * gap >= k)
    throw ConfigError("lattice cannot hold the requested antennas at minimum spacing");
  std::vector<double> g(k);
  for (int i = 0; i < k; ++i) g[i] = gain.value(i * resolution);

  RealVector best(num_mas);
  double best_obj = std::numeric_limits<double>::infinity();
  // Iteration order is lexicographic and improvement is strict, so ties keep
  // the lexicographically smallest tuple.
  if (num_mas == 1) {
    for (int i = 0; i < k; ++i)
      if (g[i] < best_obj) {
        best_obj = g[i];
        best[0] = i * resolution;
      }
  } else if (num_mas == 2) {
    for (int i = 0; i + gap < k; ++i)
      for (int j = i + gap; j < k; ++j)
        if (g[i] + g[j] < best_obj) {
          best_obj = g[i] + g[j];
          best << i * resolution, j * resolution;
        }
  } else {
    for (int i = 0; i + 2 * gap < k; ++i)
      for (int j = i + gap; j + gap < k; ++j) {
        const double gij = g[i] + g[j];
        if (gij >= best_obj) continue;
        for (int l = j + gap; l < k; ++l)
          if (gij + g[l] < best_obj) {
            best_obj = gij + g[l];
            best << i * resolution, j * resolution, l * resolution;
          }
      }
  }
  return {best, best_obj};
}

AoState jo_edap_ao(const AoConfig& config, const ModelContext& ctx) {
  const SystemParams& p = ctx.params;
  p.validate_for_antennas(config.num_mas);

  AoState state;
  RealVector r(config.num_mas);
  {
    const double a = p.move_range_m();
    if (config.num_mas == 1)
      r[0] = a / 2.0;
    else
      for (int m = 0; m < config.num_mas; ++m)
        r[m] = a * static_cast<double>(m) / (config.num_mas - 1);
  }

  double d0;
  try {
    d0 = coherent_bound_distance(ctx.at(1.0, r));
  } catch (const DegenerateInstanceError&) {
    d0 = d_max(ctx.at(1.0, r));
  }
  double obj = expected_delta(ctx.at(d0, r));
  state.history.push_back({0, d0, obj, r});
  state.d = d0;
  state.positions = r;
  state.objective = obj;

  for (int it = 1; it <= p.max_iters; ++it) {
    const double d = d_max(ctx.at(1.0, r)) * (1.0 - config.distance_backoff);
    r = optimize_positions(d, r, ctx, config.sca_tol);
    const double prev = obj;
    obj = expected_delta(ctx.at(d, r));
    state.history.push_back({it, d, obj, r});
    state.iter = it;
    state.d = d;
    state.positions = r;
    state.objective = obj;
    if (std::abs(obj - prev) < config.tol * std::max(std::abs(prev), 1e-300)) {
      state.converged = true;
      break;
    }
  }
  state.stagnated = !state.converged;
  return state;
}

}  // namespace maeq
