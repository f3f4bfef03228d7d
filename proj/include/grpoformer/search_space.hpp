#ifndef GRPOFORMER_SEARCH_SPACE_HPP_
#define GRPOFORMER_SEARCH_SPACE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace grpoformer {

enum class ParamKind { kContinuous, kInteger, kCategorical };

// One hyperparameter: a continuous/integer range with a discretization
// resolution, or an ordered category list. The policy acts on bin indices;
// the evaluated value is always the bin center.
struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::kContinuous;
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;
  int bins = 0;
  std::vector<std::string> categories;
};

// Ordered, validated parameter list. Construction normalizes integer bin
// counts (one bin per value when the integer range is narrower than the
// requested resolution) and computes a content fingerprint.
class SearchSpace {
 public:
  SearchSpace() = default;
  explicit SearchSpace(std::vector<ParamSpec> params);

  const std::vector<ParamSpec>& params() const { return params_; }
  const ParamSpec& param(size_t i) const { return params_[i]; }
  size_t size() const { return params_.size(); }
  const std::string& fingerprint() const { return fingerprint_; }

  // Total number of bin-index tuples (product of bin counts).
  int64_t grid_size() const;

 private:
  std::vector<ParamSpec> params_;
  std::string fingerprint_;
};

using ParamValue = std::variant<double, int64_t, std::string>;

struct Configuration {
  std::vector<ParamValue> values;
};

struct ValidationResult {
  bool ok = true;
  std::string param;   // first violated parameter, empty on arity mismatch
  std::string reason;  // empty when ok
};

ValidationResult validate_config(const SearchSpace& space,
                                 const Configuration& config);

// Bin containing `value`; bins are half-open [edge_i, edge_{i+1}) with the
// top edge mapped into the last bin. Uniform edges for linear domains,
// geometric for log_scale. Throws std::invalid_argument on out-of-domain
// values or type mismatches.
int bin_index(const ParamSpec& spec, const ParamValue& value);

// Center of bin `index` (arithmetic for linear, geometric for log_scale,
// middle integer for integer bins, label for categorical). Satisfies
// bin_index(spec, bin_value(spec, i)) == i for all i in [0, bins).
ParamValue bin_value(const ParamSpec& spec, int index);

Configuration config_from_bins(const SearchSpace& space,
                               std::span<const int> bins);

// Validates, then maps every value to its bin index.
std::vector<int> bins_from_config(const SearchSpace& space,
                                  const Configuration& config);

// Snaps every value to its bin center. Idempotent.
Configuration snap_to_bins(const SearchSpace& space,
                           const Configuration& config);

std::string format_value(const ParamValue& v);

// Space specification file: a JSON array of
//   {"name","kind","lo","hi","log_scale","bins"}  (continuous / integer)
//   {"name","kind","categories"}                  (categorical)
// Exactly these fields; unknown fields are rejected.
SearchSpace parse_space_json(const std::string& text);
SearchSpace load_space_file(const std::string& path);
std::string space_to_json(const SearchSpace& space);

}  // namespace grpoformer

#endif  // GRPOFORMER_SEARCH_SPACE_HPP_
