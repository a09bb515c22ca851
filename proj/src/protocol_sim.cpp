#include "bmw/protocol_sim.hpp"

#include "bmw/key_rate_solver.hpp"
#include "bmw/rate_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bmw {

namespace {

// Pinned PRNG stream (splitmix64). The binning recipes feed two parties that
// must derive identical partitions from a shared seed, so nothing here may
// depend on the standard library's implementation-defined generators.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t draw_below(std::uint64_t& state, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = splitmix64(state);
  } while (v >= limit);
  return v % bound;
}

std::vector<long> fisher_yates(long n, std::uint64_t seed) {
  std::vector<long> perm(n);
  for (long i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t state = seed;
  for (long i = n - 1; i > 0; --i) {
    const long j = static_cast<long>(draw_below(state, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

std::uint64_t recipe_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t state = seed ^ (tag * 0xd6e8feb86659fd93ULL);
  return splitmix64(state);
}

double uniform_unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

} // namespace

ProtocolResult run_protocol(const ChannelParams& params,
                            const CodeDesign& design,
                            const std::vector<double>& eve_q_sequence,
                            int frames, std::uint64_t seed,
                            const SimOptions& options) {
  params.validate();
  design.validate();
  if (frames < 1) throw std::invalid_argument("need at least one frame");
  if (eve_q_sequence.empty()) {
    throw std::invalid_argument("adversary strategy sequence is empty");
  }
  for (double q : eve_q_sequence) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  }
  if (!(options.symbols_per_frame > 0.0)) {
    throw std::domain_error("symbols_per_frame must be > 0");
  }
  if (options.q_estimate_noise < 0.0) {
    throw std::domain_error("q_estimate_noise must be >= 0");
  }

  const double n_eff = options.symbols_per_frame;
  const LevelRates levels = level_rates(params, design);
  const double delivery_cap = n_eff * 0.5 * levels[0];

  std::map<int, double> key_rate_by_interval;
  auto key_rate = [&](int interval) {
    auto it = key_rate_by_interval.find(interval);
    if (it != key_rate_by_interval.end()) return it->second;
    const double r =
        solve_key_rate(params, design, interval, options.epsilon).key_rate;
    key_rate_by_interval.emplace(interval, r);
    return r;
  };

  std::uint64_t noise_state = recipe_seed(seed, 0x70726f746f636f6cULL);

  ProtocolResult result;
  result.frames.reserve(frames);
  double ledger = 0.0;
  for (int t = 1; t <= frames; ++t) {
    const std::size_t qi = std::min<std::size_t>(t - 1, eve_q_sequence.size() - 1);
    const double q = eve_q_sequence[qi];

    double q_seen = q;
    if (options.q_estimate_noise > 0.0) {
      q_seen += (2.0 * uniform_unit(noise_state) - 1.0) * options.q_estimate_noise;
      q_seen = std::clamp(q_seen, 0.0, 1.0);
    }

    FrameTrace trace;
    trace.frame = t;
    trace.eve_q = q;
    trace.interval = interval_index(design, q_seen);
    trace.key_bits = n_eff * key_rate(trace.interval);

    // Message bits ride on key banked in earlier frames only.
    if (t == 1) {
      trace.msg_bits = 0.0;
    } else {
      trace.msg_bits = std::min(ledger, delivery_cap);
      if (trace.msg_bits < delivery_cap) ++result.starved_frames;
    }
    ledger -= trace.msg_bits;
    ledger += trace.key_bits;
    trace.ledger_bits = ledger;

    result.total_key_bits += trace.key_bits;
    result.total_msg_bits += trace.msg_bits;
    result.frames.push_back(trace);
  }
  return result;
}

struct ToyBinning::Tables {
  long m = 0, b = 0, k = 0;
  std::uint64_t seed = 0;
  BinningRecipe recipe = BinningRecipe::Structured;
  // SeededRandom only: slot assignment of codewords and of bins. A codeword
  // in slot s falls into bin s / (M/B); a bin in slot s falls into group
  // s / (B/k) for whichever k the caller asks. Structured recipes use the
  // identity and keep the vectors empty.
  std::vector<long> codeword_slot, slot_codeword;
  std::vector<long> bin_slot;
};

ToyBinning ToyBinning::make(long codebook_size, long num_bins,
                            long num_super_bins, std::uint64_t seed,
                            BinningRecipe recipe) {
  if (codebook_size < 1 || codebook_size > (1L << 24)) {
    throw std::invalid_argument("codebook size out of range");
  }
  if (num_bins < 1 || num_bins > codebook_size ||
      codebook_size % num_bins != 0) {
    throw std::invalid_argument("bin count must divide the codebook size");
  }
  if (num_super_bins < 1 || num_super_bins > num_bins ||
      num_bins % num_super_bins != 0) {
    throw std::invalid_argument("super-bin count must divide the bin count");
  }

  auto t = std::make_shared<Tables>();
  t->m = codebook_size;
  t->b = num_bins;
  t->k = num_super_bins;
  t->seed = seed;
  t->recipe = recipe;
  if (recipe == BinningRecipe::SeededRandom) {
    t->slot_codeword = fisher_yates(codebook_size, recipe_seed(seed, 1));
    t->codeword_slot.resize(codebook_size);
    for (long s = 0; s < codebook_size; ++s) {
      t->codeword_slot[t->slot_codeword[s]] = s;
    }
    t->bin_slot.resize(num_bins);
    const std::vector<long> bp = fisher_yates(num_bins, recipe_seed(seed, 2));
    for (long s = 0; s < num_bins; ++s) t->bin_slot[bp[s]] = s;
  }
  ToyBinning out;
  out.t_ = std::move(t);
  return out;
}

long ToyBinning::codebook_size() const { return t_->m; }
long ToyBinning::num_bins() const { return t_->b; }
long ToyBinning::num_super_bins() const { return t_->k; }
std::uint64_t ToyBinning::seed() const { return t_->seed; }
BinningRecipe ToyBinning::recipe() const { return t_->recipe; }

long ToyBinning::bin_of(long codeword) const {
  if (codeword < 0 || codeword >= t_->m) {
    throw std::invalid_argument("codeword out of range");
  }
  const long slot = t_->codeword_slot.empty() ? codeword
                                              : t_->codeword_slot[codeword];
  return slot / (t_->m / t_->b);
}

long ToyBinning::index_in_bin(long codeword) const {
  if (codeword < 0 || codeword >= t_->m) {
    throw std::invalid_argument("codeword out of range");
  }
  const long slot = t_->codeword_slot.empty() ? codeword
                                              : t_->codeword_slot[codeword];
  return slot % (t_->m / t_->b);
}

long ToyBinning::codeword_at(long bin, long index) const {
  if (bin < 0 || bin >= t_->b) throw std::invalid_argument("bin out of range");
  const long per_bin = t_->m / t_->b;
  if (index < 0 || index >= per_bin) {
    throw std::invalid_argument("index-in-bin out of range");
  }
  const long slot = bin * per_bin + index;
  return t_->slot_codeword.empty() ? slot : t_->slot_codeword[slot];
}

long ToyBinning::super_bin_of(long bin, long k) const {
  if (bin < 0 || bin >= t_->b) throw std::invalid_argument("bin out of range");
  if (k < 1 || k > t_->b || t_->b % k != 0) {
    throw std::invalid_argument("super-bin count must divide the bin count");
  }
  const long slot = t_->bin_slot.empty() ? bin : t_->bin_slot[bin];
  return slot / (t_->b / k);
}

long ToyBinning::super_bin_of(long bin) const {
  return super_bin_of(bin, t_->k);
}

long distill_key(const ToyBinning& binning, long codeword, long k) {
  return binning.super_bin_of(binning.bin_of(codeword), k);
}

long distill_key(const ToyBinning& binning, long codeword) {
  return distill_key(binning, codeword, binning.num_super_bins());
}

long distill_key_bits(const ToyBinning& binning, long codeword,
                      int key_rate_bits) {
  if (key_rate_bits < 0 || key_rate_bits >= 63) {
    throw std::invalid_argument("key_rate_bits out of range");
  }
  return distill_key(binning, codeword, 1L << key_rate_bits);
}

long scheme1_encode(const ToyBinning& binning, long key_id, long msg_index,
                    std::uint64_t pick_seed) {
  const long k = binning.num_super_bins();
  if (key_id < 0 || key_id >= k) throw std::invalid_argument("key id out of range");
  const long bins_per_super = binning.num_bins() / k;
  std::uint64_t state = recipe_seed(pick_seed, 3);
  const long pick = static_cast<long>(
      draw_below(state, static_cast<std::uint64_t>(bins_per_super)));
  // Choose the bin occupying the picked slot within super-bin key_id.
  const long want_slot = key_id * bins_per_super + pick;
  long bin = want_slot;
  if (binning.recipe() == BinningRecipe::SeededRandom) {
    bin = -1;
    for (long b = 0; b < binning.num_bins(); ++b) {
      if (binning.super_bin_of(b, k) == key_id &&
          binning.super_bin_of(b, binning.num_bins()) == want_slot) {
        bin = b;
        break;
      }
    }
  }
  return binning.codeword_at(bin, msg_index);
}

double measure_equivocation(const ToyBinning& binning,
                            const EveObservationModel& model, long trials,
                            std::uint64_t seed) {
  const long m = binning.codebook_size();
  const long k = binning.num_super_bins();
  if (k < 2) throw std::invalid_argument("equivocation needs at least 2 super-bins");
  if (model.cap_bits < 0 || model.cap_bits >= 62 || (1L << model.cap_bits) > m ||
      m % (1L << model.cap_bits) != 0) {
    throw std::invalid_argument("cap_bits must split the codebook evenly");
  }
  const long ambiguity = m / (1L << model.cap_bits);
  if (!model.exhaustive && trials < 1) {
    throw std::invalid_argument("need at least one trial");
  }

  const double h_key = std::log2(static_cast<double>(k));
  const long runs = model.exhaustive ? m : trials;
  std::uint64_t state = recipe_seed(seed, 4);
  std::vector<long> counts(k);
  std::vector<long> members(ambiguity);

  double ratio_sum = 0.0;
  for (long run = 0; run < runs; ++run) {
    const long c = model.exhaustive
                       ? run
                       : static_cast<long>(draw_below(state, static_cast<std::uint64_t>(m)));
    if (model.structured_ambiguity) {
      // Residue class of c modulo M/A: what survives of Eve's observation
      // when her channel resolves only the high-order part of the codeword.
      const long stride = m / ambiguity;
      for (long j = 0; j < ambiguity; ++j) members[j] = c % stride + j * stride;
    } else {
      members[0] = c;
      for (long j = 1; j < ambiguity; ++j) {
        long other;
        bool dup;
        do {
          other = static_cast<long>(draw_below(state, static_cast<std::uint64_t>(m)));
          dup = other == c;
          for (long i = 1; i < j && !dup; ++i) dup = members[i] == other;
        } while (dup);
        members[j] = other;
      }
    }
    std::fill(counts.begin(), counts.end(), 0L);
    for (long j = 0; j < ambiguity; ++j) {
      ++counts[distill_key(binning, members[j])];
    }
    double h = 0.0;
    for (long cnt : counts) {
      if (cnt > 0) {
        const double p = static_cast<double>(cnt) / ambiguity;
        h -= p * std::log2(p);
      }
    }
    ratio_sum += h / h_key;
  }
  return ratio_sum / runs;
}

double chi_square_key_vs_message(const ToyBinning& binning) {
  const long m = binning.codebook_size();
  const long k = binning.num_super_bins();
  const long per_bin = m / binning.num_bins();
  std::vector<long> joint(k * per_bin, 0);
  for (long c = 0; c < m; ++c) {
    const long key = distill_key(binning, c);
    const long msg = binning.index_in_bin(c);
    ++joint[key * per_bin + msg];
  }
  const double expected = static_cast<double>(m) / (k * per_bin);
  double chi2 = 0.0;
  for (long cell : joint) {
    const double d = cell - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

} // namespace bmw
