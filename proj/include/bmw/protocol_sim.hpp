#pragma once

#include "bmw/types.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace bmw {

// Frame-level simulation of the block-Markov protocol: each frame banks key
// material at the solver's rate for the adversary's observed strategy, and
// delivers message bits one-time-padded from previously banked key.

struct SimOptions {
  double symbols_per_frame = 1e4;
  double epsilon = 1e-9;
  // Optional what-if hook: Bob picks his interval from a noisy estimate of
  // the adversary's listening probability (uniform +/- noise). Off by default.
  double q_estimate_noise = 0.0;
};

struct FrameTrace {
  int frame = 0;           // 1-based
  double eve_q = 0.0;      // adversary's listening probability this frame
  int interval = 1;        // design interval Bob keys against
  double key_bits = 0.0;   // key material distilled this frame
  double msg_bits = 0.0;   // message bits delivered this frame
  double ledger_bits = 0.0; // banked key after this frame
};

struct ProtocolResult {
  std::vector<FrameTrace> frames;
  double total_key_bits = 0.0;
  double total_msg_bits = 0.0;
  int starved_frames = 0; // frames after the first that the ledger throttled
};

// The adversary plays eve_q_sequence[t-1] in frame t (the last entry repeats
// once the sequence runs out). Frame 1 delivers no message bits: nothing is
// banked yet. Message delivery per frame is capped at half the level-1 rate.
ProtocolResult run_protocol(const ChannelParams& params,
                            const CodeDesign& design,
                            const std::vector<double>& eve_q_sequence,
                            int frames, std::uint64_t seed,
                            const SimOptions& options = {});

// Miniature a-posteriori binning codebook: M codewords partitioned into B
// bins, bins grouped into K super-bins. Both partitions follow a recipe that
// any party can reproduce from the shared seed.
enum class BinningRecipe {
  Structured,  // contiguous blocks: bin = c / (M/B), super-bin = bin / (B/K)
  SeededRandom // pinned Fisher-Yates permutations keyed by the seed
};

class ToyBinning {
 public:
  static ToyBinning make(long codebook_size, long num_bins, long num_super_bins,
                         std::uint64_t seed, BinningRecipe recipe);

  long codebook_size() const;
  long num_bins() const;
  long num_super_bins() const;
  std::uint64_t seed() const;
  BinningRecipe recipe() const;

  long bin_of(long codeword) const;
  // Index of the codeword within its bin (0 .. M/B - 1).
  long index_in_bin(long codeword) const;
  // Grouping of bins into k groups of B/k; k must divide B.
  long super_bin_of(long bin, long k) const;
  long super_bin_of(long bin) const; // k = num_super_bins
  // Codeword at a given (bin, index) slot; inverse of bin_of/index_in_bin.
  long codeword_at(long bin, long index) const;

 private:
  struct Tables;
  std::shared_ptr<const Tables> t_;
};

// Key id (0..k-1) both ends derive from the transmitted codeword.
long distill_key(const ToyBinning& binning, long codeword, long k);
long distill_key(const ToyBinning& binning, long codeword); // k = num_super_bins
// Power-of-two convenience wrapper: k = 2^key_rate_bits.
long distill_key_bits(const ToyBinning& binning, long codeword, int key_rate_bits);

// Forward map of the degenerate scheme where the key picks the super-bin, a
// seeded coin picks the bin inside it, and the message indexes the codeword
// within the bin. distill_key inverts it exactly.
long scheme1_encode(const ToyBinning& binning, long key_id, long msg_index,
                    std::uint64_t pick_seed);

// Eavesdropper observation model for equivocation measurements: after her
// channel, Eve narrows the codeword to an ambiguity set of M / 2^cap_bits
// candidates (a residue class when structured, a random superset otherwise).
struct EveObservationModel {
  int cap_bits = 0;
  bool structured_ambiguity = true;
  bool exhaustive = false; // enumerate every codeword instead of sampling
};

// Mean of H(key | ambiguity set) / log2(K) over transmitted codewords;
// 1.0 means the key stays uniform given Eve's knowledge, 0.0 means leaked.
double measure_equivocation(const ToyBinning& binning,
                            const EveObservationModel& model, long trials,
                            std::uint64_t seed);

// Chi-square statistic of the exhaustive joint (key id, index-in-bin) table
// against independence; exactly 0 for these balanced partitions.
double chi_square_key_vs_message(const ToyBinning& binning);

} // namespace bmw
