#ifndef GRPOFORMER_TOKEN_CODEC_HPP_
#define GRPOFORMER_TOKEN_CODEC_HPP_

#include <span>
#include <vector>

#include "grpoformer/search_space.hpp"
#include "grpoformer/trajectory.hpp"

namespace grpoformer::codec {

// Token id layout, a pure function of (space, reward_bins, task_token_count):
//   0                BOS
//   1                SEP
//   [2, 2+task)      task-context tokens
//   per parameter p  [param_base[p], param_base[p] + bins_p)
//   last R ids       reward bins over [reward_lo, reward_hi]
struct Vocabulary {
  int size = 0;
  int bos = 0;
  int sep = 1;
  int task_base = 2;
  int task_token_count = 0;
  std::vector<int> param_base;
  std::vector<int> param_bins;
  int reward_base = 0;
  int reward_bins = 0;
  double reward_lo = 0.0;
  double reward_hi = 1.0;

  int num_params() const { return static_cast<int>(param_base.size()); }
  // param bins + reward bin + SEP
  int tokens_per_trial() const { return num_params() + 2; }
};

Vocabulary build_vocabulary(const SearchSpace& space, int reward_bins = 16,
                            int task_token_count = 8, double reward_lo = 0.0,
                            double reward_hi = 1.0);

struct TokenSequence {
  std::vector<int> ids;
};

// Context snapshot fed to the policy. Token stream always ends at a
// configuration boundary; the next emission is parameter 0 of a new trial.
struct EncodedState {
  TokenSequence tokens;
  int trajectory_len_at_encoding = 0;
  int trials_in_context = 0;
};

// [BOS, task tokens, then per trial: param bins, reward bin, SEP]. When the
// full history does not fit, whole oldest trials are dropped (never partial
// ones). The encoder reserves num_params-1 positions of headroom so a
// teacher-forced or sampled configuration can be appended to the state
// without exceeding context_length. Throws when even one trial cannot fit.
EncodedState encode_context(const Vocabulary& vocab, const TaskDescriptor& task,
                            const SearchSpace& space,
                            const Trajectory& trajectory, int context_length);

// One bin token per parameter, in parameter order.
std::vector<int> encode_config(const Vocabulary& vocab, const SearchSpace& space,
                               const Configuration& config);

// Inverse of encode_config up to bin centering:
// decode_config(encode_config(h)) == snap_to_bins(h).
Configuration decode_config(const Vocabulary& vocab, const SearchSpace& space,
                            std::span<const int> ids);

// Bin tuple from parameter-range tokens (validates order and range).
std::vector<int> decode_bins(const Vocabulary& vocab, std::span<const int> ids);

int reward_token(const Vocabulary& vocab, double reward);

// Largest number of whole trials an encoding can carry for this task.
int max_trials_in_context(const Vocabulary& vocab, const TaskDescriptor& task,
                          int context_length);

}  // namespace grpoformer::codec

#endif  // GRPOFORMER_TOKEN_CODEC_HPP_
