#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bmw {

// Raised when an iterative numeric routine fails to reach its tolerance.
// The CLI maps this to exit code 4.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fast-Rayleigh-fading wiretap channel with a half-duplex adversary.
// Channel power gains are exponential: h_M ~ Exp(lambda_m) toward the
// legitimate receiver, h_W ~ Exp(lambda_w) toward the eavesdropper.
struct ChannelParams {
  double lambda_m = 1.0;  // legitimate-link fading rate, > 0
  double lambda_w = 1.0;  // eavesdropper-link fading rate, > 0
  double power_p = 1.0;   // transmit power budget, >= 0
  double jam_j = 0.0;     // adversary jamming power, >= 0
  double noise_var = 1.0; // receiver noise variance, > 0

  void validate() const;
};

// Layered code design: n superposed levels, level i protected against an
// adversary that listens with probability up to threshold q_i. Power splits
// are nested: level i keeps a (1 - alpha_i) share of what levels >= i carry.
struct CodeDesign {
  int n = 1;
  std::vector<double> thresholds; // q_1 < ... < q_{n-1}, each in (0,1)
  std::vector<double> alphas;     // alpha_1 .. alpha_{n-1}, each in [0,1]

  void validate() const;

  // q_i with the conventions q_0 = 0 and q_n = 1. i in [0, n].
  double threshold(int i) const;

  // Per-level transmit powers P_1..P_n. Telescoping of the nested split
  // makes them sum to total_power exactly (up to roundoff).
  std::vector<double> level_powers(double total_power) const;

  // Power carried by levels strictly above i: alpha_i * ... * alpha_1 * P.
  // residual_power(0, P) = P, residual_power(n, P) = 0.
  double residual_power(int i, double total_power) const;
};

// Per-level ergodic rates R_1..R_n of a design, in bits per symbol.
using LevelRates = std::vector<double>;

namespace detail {
void check_finite(double v, const char* name);
}

} // namespace bmw
