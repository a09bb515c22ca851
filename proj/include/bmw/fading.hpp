#pragma once

#include "bmw/types.hpp"

namespace bmw {

// Ergodic rate shape shared by every expectation in this toolkit:
//   E_h[ log2(1 + a*h / (b + c*h)) ],  h ~ Exp(lambda).
// Computed by substituting u = e^{-lambda h} (so the expectation becomes an
// integral over (0,1]) and integrating with adaptive double-exponential
// quadrature. Results are memoized; repeated calls with identical arguments
// are cheap and the function stays safe to call concurrently.
//
// Preconditions: lambda > 0, b > 0, a >= 0, c >= 0 (throws std::domain_error).
// a == 0 returns exactly 0. Throws convergence_error if the quadrature cannot
// reach its error target.
double fading_log_rate(double lambda, double a, double b, double c);

// Deterministic two-mode mixture rate
//   f(q) = q*log2(1 + x) + (1-q)*log2(1 + x / (1 + y/(1-q))),
// the rate seen when a fraction q of time is interference-free and the rest
// suffers jamming concentrated into the remaining 1-q of the time. f is
// strictly increasing and convex in q; f(1) is the continuous limit log2(1+x).
//
// Preconditions: q in [0,1], x > 0, y > 0 (throws std::domain_error).
double mode_mix_rate(double q, double x, double y);

// log2(1+x) computed via log1p, accurate for tiny x.
double log2_1p(double x);

// Drops all memoized fading_log_rate results (benchmarks and tests only).
void fading_cache_clear();

// Number of memoized entries currently held.
std::size_t fading_cache_size();

} // namespace bmw
