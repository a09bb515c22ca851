#pragma once

#include "bmw/types.hpp"

#include <vector>

namespace bmw {

// One polymatroid capacity term of the eavesdropper's multiple-access view:
//   q * E_{h_W}[ log2(1 + signal_power * h / (sigma^2 + interference_power * h)) ].
// The same fading gain multiplies signal and interference (one physical
// channel); q scales for the fraction of time spent listening.
double eve_capacity_term(const ChannelParams& params, double q,
                         double signal_power, double interference_power);

// Largest set of levels the eavesdropper can jointly decode when listening
// with probability q, treating all other levels as noise.
struct EveDecodableSet {
  std::vector<int> levels; // 1-based, ascending
  bool ambiguous = false;  // another set of the same maximal size also decodes
};

// Enumerates candidate sets V and keeps those whose every nonempty subset S
// satisfies  sum_{j in S} R_j <= q * E log2(1 + P_S h / (sigma^2 + P_{V^c} h)).
// Returns the winner by (a) maximal cardinality, (b) largest total rate,
// (c) lexicographically smallest index list. Guarded to n <= 20.
EveDecodableSet eve_decodable_set(const ChannelParams& params, double q,
                                  const CodeDesign& design,
                                  const LevelRates& levels);

// Three-way split of levels for one game branch: what Eve decodes, what Bob
// forwards as key material, and what neither side uses. `ordering` is the
// decoding order Eve-first-then-rest used by the key-rate bound.
struct DecodabilitySplit {
  std::vector<int> eve_decodable; // I_e
  std::vector<int> key_capable;   // I_k: Bob's prefix minus I_e
  std::vector<int> neither;       // I_n: the rest
  std::vector<int> ordering;      // I_e, then I_k, then I_n, each ascending
  bool ambiguous = false;
};

// Pure set composition given an already-computed I_e (testable in isolation).
DecodabilitySplit compose_split(const std::vector<int>& eve_decodable, int n,
                                int bob_prefix);

// Full split at listening probability q with Bob decoding levels 1..bob_prefix.
DecodabilitySplit split_levels(const ChannelParams& params, double q,
                               const CodeDesign& design,
                               const LevelRates& levels, int bob_prefix);

// Position of the two-level rate pair relative to Eve's capacity pentagon.
// InsideCapacity: both levels jointly decodable. Omega2: level 1 alone
// decodable (interference-limited). Omega1: level 2 alone decodable.
// Omega3/Omega4/Omega5/OmegaN: neither decodable, sub-labeled by which
// corner caps the rate point exceeds (OmegaN: neither single-user cap).
enum class TwoLevelRegion {
  InsideCapacity,
  Omega1,
  Omega2,
  Omega3,
  Omega4,
  Omega5,
  OmegaN,
};

const char* to_string(TwoLevelRegion r);

// Region tests for n = 2 written out directly (independent of the generic
// enumeration, so the two paths can cross-check each other).
TwoLevelRegion classify_two_level(const ChannelParams& params, double q,
                                  const CodeDesign& design,
                                  const LevelRates& levels);

} // namespace bmw
