#pragma once

#include "bmw/fading.hpp"
#include "bmw/types.hpp"

namespace bmw {

// Worst-case single-level secrecy rate against an always-listening,
// always-jamming-capable adversary:
//   [ E log2(1 + P h_M / (sigma^2 + jam_eff)) - E log2(1 + P h_W / sigma^2) ]^+
// jam_eff is the effective jamming power hitting the legitimate link; it
// defaults to the full jam budget J. Callers modeling a partially listening
// adversary pass J scaled up by the jamming duty cycle, e.g. J/(1-q).
// Positive exactly when lambda_w > lambda_m * (1 + jam_eff / sigma^2).
double wcs_secrecy_rate(const ChannelParams& params, double jam_eff);
double wcs_secrecy_rate(const ChannelParams& params);

// Rate of level i when the adversary listens with probability q instead of
// the design threshold q_{i-1}. Levels above i act as interference; jamming
// concentrates into the non-listening fraction of time. Nondecreasing in q.
// i is 1-based; q in [0,1].
double level_rate_at(const ChannelParams& params, const CodeDesign& design,
                     int i, double q);

// Per-level rates R_1..R_n at the design thresholds (level i evaluated at
// q_{i-1}, with q_0 = 0: level 1 sees the full jam power all the time).
LevelRates level_rates(const ChannelParams& params, const CodeDesign& design);

// Total rate Bob forwards out of interval i: sum of R_1..R_i.
// i is 1-based and must satisfy 1 <= i <= levels.size().
double forwarding_rate(const LevelRates& levels, int i);

} // namespace bmw
