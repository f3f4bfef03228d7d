#include "grpoformer/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace grpoformer {

namespace {

void check_spec(const ParamSpec& p) {
  if (p.name.empty()) throw std::invalid_argument("parameter name empty");
  switch (p.kind) {
    case ParamKind::kContinuous:
      if (!(p.lo < p.hi))
        throw std::invalid_argument(p.name + ": lo must be < hi");
      if (p.log_scale && !(p.lo > 0.0))
        throw std::invalid_argument(p.name + ": lo must be > 0 for log_scale");
      if (p.bins < 2)
        throw std::invalid_argument(p.name + ": continuous bins must be >= 2");
      break;
    case ParamKind::kInteger: {
      if (!(p.lo < p.hi))
        throw std::invalid_argument(p.name + ": lo must be < hi");
      if (p.log_scale)
        throw std::invalid_argument(
            p.name + ": log_scale not supported for integer parameters");
      if (p.lo != std::floor(p.lo) || p.hi != std::floor(p.hi))
        throw std::invalid_argument(p.name + ": integer bounds must be whole");
      if (p.bins < 1) throw std::invalid_argument(p.name + ": bins must be >= 1");
      break;
    }
    case ParamKind::kCategorical:
      if (p.categories.empty())
        throw std::invalid_argument(p.name + ": categories empty");
      if (p.bins != static_cast<int>(p.categories.size()))
        throw std::invalid_argument(p.name + ": bins must equal category count");
      break;
  }
}

uint64_t fnv1a(uint64_t h, const void* data, size_t n) {
  const auto* b = static_cast<const uint8_t*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t fnv1a_str(uint64_t h, const std::string& s) {
  return fnv1a(h, s.data(), s.size());
}

int64_t int_width(const ParamSpec& p) {
  return static_cast<int64_t>(p.hi) - static_cast<int64_t>(p.lo) + 1;
}

}  // namespace

SearchSpace::SearchSpace(std::vector<ParamSpec> params)
    : params_(std::move(params)) {
  if (params_.empty()) throw std::invalid_argument("search space empty");
  std::set<std::string> names;
  for (auto& p : params_) {
    if (p.kind == ParamKind::kCategorical)
      p.bins = static_cast<int>(p.categories.size());
    if (p.kind == ParamKind::kInteger) {
      // One bin per value when the range has fewer values than requested.
      p.bins = static_cast<int>(
          std::min<int64_t>(p.bins, int_width(p)));
    }
    check_spec(p);
    if (!names.insert(p.name).second)
      throw std::invalid_argument("duplicate parameter name: " + p.name);
  }
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& p : params_) {
    h = fnv1a_str(h, p.name);
    int kind = static_cast<int>(p.kind);
    h = fnv1a(h, &kind, sizeof kind);
    h = fnv1a(h, &p.lo, sizeof p.lo);
    h = fnv1a(h, &p.hi, sizeof p.hi);
    int ls = p.log_scale ? 1 : 0;
    h = fnv1a(h, &ls, sizeof ls);
    h = fnv1a(h, &p.bins, sizeof p.bins);
    for (const auto& c : p.categories) h = fnv1a_str(h, c);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  fingerprint_ = buf;
}

int64_t SearchSpace::grid_size() const {
  int64_t n = 1;
  for (const auto& p : params_) n *= p.bins;
  return n;
}

namespace {

const char* kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::kContinuous: return "continuous";
    case ParamKind::kInteger: return "integer";
    case ParamKind::kCategorical: return "categorical";
  }
  return "?";
}

std::string check_value(const ParamSpec& p, const ParamValue& v) {
  switch (p.kind) {
    case ParamKind::kContinuous: {
      const double* x = std::get_if<double>(&v);
      if (!x) return "expected real value";
      if (!std::isfinite(*x)) return "value not finite";
      if (*x < p.lo || *x > p.hi) return "out of domain";
      return {};
    }
    case ParamKind::kInteger: {
      const int64_t* x = std::get_if<int64_t>(&v);
      if (!x) return "expected integer value";
      if (*x < static_cast<int64_t>(p.lo) || *x > static_cast<int64_t>(p.hi))
        return "out of domain";
      return {};
    }
    case ParamKind::kCategorical: {
      const std::string* x = std::get_if<std::string>(&v);
      if (!x) return "expected category label";
      if (std::find(p.categories.begin(), p.categories.end(), *x) ==
          p.categories.end())
        return "unknown category";
      return {};
    }
  }
  return "bad kind";
}

}  // namespace

ValidationResult validate_config(const SearchSpace& space,
                                 const Configuration& config) {
  if (config.values.size() != space.size())
    return {false, "", "arity mismatch"};
  for (size_t i = 0; i < space.size(); ++i) {
    std::string reason = check_value(space.param(i), config.values[i]);
    if (!reason.empty()) return {false, space.param(i).name, reason};
  }
  return {};
}

int bin_index(const ParamSpec& spec, const ParamValue& value) {
  std::string reason = check_value(spec, value);
  if (!reason.empty())
    throw std::invalid_argument(spec.name + ": " + reason);
  switch (spec.kind) {
    case ParamKind::kContinuous: {
      double x = std::get<double>(value);
      double f;
      if (spec.log_scale) {
        f = std::log(x / spec.lo) / std::log(spec.hi / spec.lo);
      } else {
        f = (x - spec.lo) / (spec.hi - spec.lo);
      }
      int idx = static_cast<int>(std::floor(f * spec.bins));
      return std::clamp(idx, 0, spec.bins - 1);
    }
    case ParamKind::kInteger: {
      // Exact integer arithmetic: bin i holds v with (v-lo)*B/width == i.
      int64_t off = std::get<int64_t>(value) - static_cast<int64_t>(spec.lo);
      return static_cast<int>(off * spec.bins / int_width(spec));
    }
    case ParamKind::kCategorical: {
      const auto& label = std::get<std::string>(value);
      auto it = std::find(spec.categories.begin(), spec.categories.end(), label);
      return static_cast<int>(it - spec.categories.begin());
    }
  }
  throw std::logic_error("bad kind");
}

ParamValue bin_value(const ParamSpec& spec, int index) {
  if (index < 0 || index >= spec.bins)
    throw std::out_of_range(spec.name + ": bin index out of range");
  switch (spec.kind) {
    case ParamKind::kContinuous: {
      if (spec.log_scale) {
        double t = (index + 0.5) / spec.bins;
        return std::exp(std::log(spec.lo) +
                        t * (std::log(spec.hi) - std::log(spec.lo)));
      }
      return spec.lo + (index + 0.5) * (spec.hi - spec.lo) / spec.bins;
    }
    case ParamKind::kInteger: {
      int64_t w = int_width(spec);
      int64_t b = spec.bins;
      int64_t lo_off = (static_cast<int64_t>(index) * w + b - 1) / b;
      int64_t hi_off = ((static_cast<int64_t>(index) + 1) * w - 1) / b;
      return static_cast<int64_t>(spec.lo) + (lo_off + hi_off) / 2;
    }
    case ParamKind::kCategorical:
      return spec.categories[index];
  }
  throw std::logic_error("bad kind");
}

Configuration config_from_bins(const SearchSpace& space,
                               std::span<const int> bins) {
  if (bins.size() != space.size())
    throw std::invalid_argument("bin tuple arity mismatch");
  Configuration c;
  c.values.reserve(bins.size());
  for (size_t i = 0; i < bins.size(); ++i)
    c.values.push_back(bin_value(space.param(i), bins[i]));
  return c;
}

std::vector<int> bins_from_config(const SearchSpace& space,
                                  const Configuration& config) {
  ValidationResult r = validate_config(space, config);
  if (!r.ok)
    throw std::invalid_argument("invalid configuration: " +
                                (r.param.empty() ? r.reason
                                                 : r.param + " " + r.reason));
  std::vector<int> bins(space.size());
  for (size_t i = 0; i < space.size(); ++i)
    bins[i] = bin_index(space.param(i), config.values[i]);
  return bins;
}

Configuration snap_to_bins(const SearchSpace& space,
                           const Configuration& config) {
  return config_from_bins(space, bins_from_config(space, config));
}

std::string format_value(const ParamValue& v) {
  char buf[32];
  if (const double* d = std::get_if<double>(&v)) {
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  if (const int64_t* i = std::get_if<int64_t>(&v)) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(*i));
    return buf;
  }
  return std::get<std::string>(v);
}

namespace {

ParamSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("parameter entry not an object");
  ParamSpec p;
  p.name = j.at("name").get<std::string>();
  std::string kind = j.at("kind").get<std::string>();
  std::set<std::string> allowed;
  if (kind == "categorical") {
    p.kind = ParamKind::kCategorical;
    p.categories = j.at("categories").get<std::vector<std::string>>();
    p.bins = static_cast<int>(p.categories.size());
    allowed = {"name", "kind", "categories"};
  } else if (kind == "continuous" || kind == "integer") {
    p.kind = kind == "continuous" ? ParamKind::kContinuous : ParamKind::kInteger;
    p.lo = j.at("lo").get<double>();
    p.hi = j.at("hi").get<double>();
    p.log_scale = j.at("log_scale").get<bool>();
    p.bins = j.at("bins").get<int>();
    allowed = {"name", "kind", "lo", "hi", "log_scale", "bins"};
  } else {
    throw std::invalid_argument("unknown kind: " + kind);
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key()))
      throw std::invalid_argument(p.name + ": unknown field '" + it.key() + "'");
  }
  return p;
}

}  // namespace

SearchSpace parse_space_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("space file must be a JSON array");
  std::vector<ParamSpec> params;
  for (const auto& e : j) params.push_back(spec_from_json(e));
  return SearchSpace(std::move(params));
}

SearchSpace load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("file not found: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_space_json(ss.str());
}

std::string space_to_json(const SearchSpace& space) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : space.params()) {
    nlohmann::json j;
    j["name"] = p.name;
    j["kind"] = kind_name(p.kind);
    if (p.kind == ParamKind::kCategorical) {
      j["categories"] = p.categories;
    } else {
      j["lo"] = p.lo;
      j["hi"] = p.hi;
      j["log_scale"] = p.log_scale;
      j["bins"] = p.bins;
    }
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace grpoformer
