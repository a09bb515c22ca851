#include "bmw/mac_region.hpp"

#include "bmw/fading.hpp"
#include "bmw/rate_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bmw {

double eve_capacity_term(const ChannelParams& params, double q,
                         double signal_power, double interference_power) {
  params.validate();
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  if (signal_power < 0.0) throw std::domain_error("signal power must be >= 0");
  if (interference_power < 0.0) {
    throw std::domain_error("interference power must be >= 0");
  }
  if (q == 0.0 || signal_power == 0.0) return 0.0;
  return q * fading_log_rate(params.lambda_w, signal_power, params.noise_var,
                             interference_power);
}

namespace {

// Sorted 1-based index list of a level mask.
std::vector<int> mask_to_levels(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i + 1);
  }
  return out;
}

// True if the sorted index list of `a` precedes that of `b` lexicographically.
bool mask_lex_less(unsigned a, unsigned b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

} // namespace

EveDecodableSet eve_decodable_set(const ChannelParams& params, double q,
                                  const CodeDesign& design,
                                  const LevelRates& levels) {
  params.validate();
  design.validate();
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  const int n = design.n;
  if (n > 20) throw std::invalid_argument("decodable-set enumeration limited to n <= 20");
  if (static_cast<int>(levels.size()) != n) {
    throw std::invalid_argument("level rate vector size mismatch");
  }

  const std::vector<double> powers = design.level_powers(params.power_p);
  const unsigned full = (n == 32) ? ~0u : ((1u << n) - 1u);

  // Subset sums of rate and power, indexed by mask.
  std::vector<double> rate_sum(full + 1, 0.0), power_sum(full + 1, 0.0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const unsigned rest = mask & (mask - 1);
    rate_sum[mask] = rate_sum[rest] + levels[low];
    power_sum[mask] = power_sum[rest] + powers[low];
  }

  auto valid = [&](unsigned v) {
    const double interference = power_sum[full & ~v];
    // Every nonempty subset of v must clear its multiple-access bound; the
    // levels outside v stay as noise in each bound.
    for (unsigned s = v; s != 0; s = (s - 1) & v) {
      const double cap = eve_capacity_term(params, q, power_sum[s], interference);
      if (rate_sum[s] > cap) return false;
    }
    return true;
  };

  unsigned best = 0;
  int best_card = 0;
  int max_card_hits = 0; // valid sets attaining the current max cardinality
  for (unsigned v = 1; v <= full; ++v) {
    if (!valid(v)) continue;
    const int card = std::popcount(v);
    if (card > best_card) {
      best = v;
      best_card = card;
      max_card_hits = 1;
    } else if (card == best_card) {
      ++max_card_hits;
      if (rate_sum[v] > rate_sum[best] ||
          (rate_sum[v] == rate_sum[best] && mask_lex_less(v, best))) {
        best = v;
      }
    }
  }

  EveDecodableSet result;
  result.levels = mask_to_levels(best);
  result.ambiguous = best_card > 0 && max_card_hits > 1;
  return result;
}

DecodabilitySplit compose_split(const std::vector<int>& eve_decodable, int n,
                                int bob_prefix) {
  if (n < 1) throw std::invalid_argument("level count must be >= 1");
  if (bob_prefix < 0 || bob_prefix > n) {
    throw std::invalid_argument("bob_prefix out of range");
  }
  std::vector<char> in_eve(n + 1, 0);
  for (int l : eve_decodable) {
    if (l < 1 || l > n) throw std::invalid_argument("level index out of range");
    in_eve[l] = 1;
  }
  DecodabilitySplit split;
  split.eve_decodable = eve_decodable;
  std::sort(split.eve_decodable.begin(), split.eve_decodable.end());
  for (int l = 1; l <= n; ++l) {
    if (in_eve[l]) continue;
    (l <= bob_prefix ? split.key_capable : split.neither).push_back(l);
  }
  split.ordering = split.eve_decodable;
  split.ordering.insert(split.ordering.end(), split.key_capable.begin(),
                        split.key_capable.end());
  split.ordering.insert(split.ordering.end(), split.neither.begin(),
                        split.neither.end());
  return split;
}

DecodabilitySplit split_levels(const ChannelParams& params, double q,
                               const CodeDesign& design,
                               const LevelRates& levels, int bob_prefix) {
  const EveDecodableSet eve = eve_decodable_set(params, q, design, levels);
  DecodabilitySplit split = compose_split(eve.levels, design.n, bob_prefix);
  split.ambiguous = eve.ambiguous;
  return split;
}

const char* to_string(TwoLevelRegion r) {
  switch (r) {
    case TwoLevelRegion::InsideCapacity: return "inside";
    case TwoLevelRegion::Omega1: return "omega1";
    case TwoLevelRegion::Omega2: return "omega2";
    case TwoLevelRegion::Omega3: return "omega3";
    case TwoLevelRegion::Omega4: return "omega4";
    case TwoLevelRegion::Omega5: return "omega5";
    case TwoLevelRegion::OmegaN: return "omegaN";
  }
  return "?";
}

TwoLevelRegion classify_two_level(const ChannelParams& params, double q,
                                  const CodeDesign& design,
                                  const LevelRates& levels) {
  params.validate();
  design.validate();
  if (design.n != 2) throw std::invalid_argument("classifier requires n == 2");
  if (static_cast<int>(levels.size()) != 2) {
    throw std::invalid_argument("level rate vector size mismatch");
  }
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");

  const double r1 = levels[0], r2 = levels[1];
  const std::vector<double> p = design.level_powers(params.power_p);
  const double c1_free = eve_capacity_term(params, q, p[0], 0.0);
  const double c2_free = eve_capacity_term(params, q, p[1], 0.0);
  const double c_sum = eve_capacity_term(params, q, p[0] + p[1], 0.0);
  const double c1_intf = eve_capacity_term(params, q, p[0], p[1]);
  const double c2_intf = eve_capacity_term(params, q, p[1], p[0]);

  if (r1 <= c1_free && r2 <= c2_free && r1 + r2 <= c_sum) {
    return TwoLevelRegion::InsideCapacity;
  }
  if (r1 <= c1_intf) return TwoLevelRegion::Omega2; // level 1 survives interference
  if (r2 <= c2_intf) return TwoLevelRegion::Omega1; // level 2 survives interference

  // Neither level decodable. Sub-label by which single-user caps the point
  // exceeds. A collapsed pentagon (zero sum capacity) has no meaningful
  // corners; everything outside it counts as the sum-bound region.
  if (c_sum == 0.0) return TwoLevelRegion::OmegaN;
  const bool beyond_r1_cap = r1 > c1_free;
  const bool beyond_r2_cap = r2 > c2_free;
  if (beyond_r1_cap && beyond_r2_cap) return TwoLevelRegion::Omega5;
  if (beyond_r2_cap) return TwoLevelRegion::Omega4;
  if (beyond_r1_cap) return TwoLevelRegion::Omega3;
  return TwoLevelRegion::OmegaN;
}

} // namespace bmw
