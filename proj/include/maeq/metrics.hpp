#pragma once

#include "maeq/types.hpp"

namespace maeq {

// Per-draw SNRs: the collusion value is the sum over the real eavesdroppers.
struct SnrReport {
  double snr_col = 0;
  double snr_veve = 0;
  RealVector per_eve_snr;
};

// Per-draw capacities (bits/s/Hz) and the equivalence difference. The
// unclamped difference c_veve - c_col equals the clamped one whenever both
// secrecy brackets are positive; clamp_active records when they were not.
struct SecrecyReport {
  double c_bob = 0;
  double c_col = 0;
  double c_veve = 0;
  double rsec_col = 0;   // [c_bob - c_col]^+
  double rsec_veve = 0;  // [c_bob - c_veve]^+
  double delta_r_sec = 0;  // rsec_veve - rsec_col
  bool clamp_active = false;
};

// |h^H w|^2 / noise for a single-antenna receiver.
double snr_eve(const ComplexVector& h, const RealVector& w, double noise_mw);

// log2(1 + sum of per-eavesdropper SNRs).
double collusion_capacity(const RealVector& per_eve_snr);

// ||H^H w||^2 / noise over the M movable-array outputs.
double virtual_eve_snr(const ComplexMatrix& h, const RealVector& w, double noise_mw);

// [c_bob - c_eve]^+.
double secrecy_rate(double c_bob, double c_eve);

double delta_snr(double snr_veve, double snr_col);

SecrecyReport secrecy_report(double c_bob, double c_col, double c_veve);

}  // namespace maeq
