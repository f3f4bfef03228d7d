#ifndef GRPOFORMER_TRAJECTORY_HPP_
#define GRPOFORMER_TRAJECTORY_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grpoformer/search_space.hpp"

namespace grpoformer {

struct TrialRecord {
  Configuration config;
  double reward = 0.0;  // evaluation result, higher is better
  int trial_index = 0;
};

// Append-only history of evaluated (configuration, reward) pairs. All
// operations return new values; existing records are never reordered or
// mutated.
struct Trajectory {
  std::vector<TrialRecord> records;
  std::string task_id;
};

struct TaskDescriptor {
  std::string task_id;
  std::string objective_name;
  int budget = 1;  // total trial count; direction is always maximize
  std::vector<int> description_tokens;  // task-context prefix
};

// New trajectory with the pairs appended in order at consecutive trial
// indices. Throws std::invalid_argument on non-finite rewards.
Trajectory append_trials(
    const Trajectory& trajectory,
    std::span<const std::pair<Configuration, double>> new_trials);

// First `count` records as a standalone trajectory (same task_id).
Trajectory trajectory_prefix(const Trajectory& trajectory, int count);

}  // namespace grpoformer

#endif  // GRPOFORMER_TRAJECTORY_HPP_
