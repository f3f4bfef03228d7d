#include "grpoformer/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace grpoformer {

Trajectory append_trials(
    const Trajectory& trajectory,
    std::span<const std::pair<Configuration, double>> new_trials) {
  for (const auto& [config, reward] : new_trials) {
    if (!std::isfinite(reward))
      throw std::invalid_argument("non-finite reward");
  }
  Trajectory out = trajectory;
  out.records.reserve(out.records.size() + new_trials.size());
  for (const auto& [config, reward] : new_trials) {
    out.records.push_back(
        {config, reward, static_cast<int>(out.records.size())});
  }
  return out;
}

Trajectory trajectory_prefix(const Trajectory& trajectory, int count) {
  Trajectory out;
  out.task_id = trajectory.task_id;
  count = std::min<int>(count, static_cast<int>(trajectory.records.size()));
  out.records.assign(trajectory.records.begin(),
                     trajectory.records.begin() + count);
  return out;
}

}  // namespace grpoformer
