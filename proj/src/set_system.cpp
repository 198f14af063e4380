#include "setlines/set_system.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace setlines {

namespace {

// Levels arrive through text formats; compare with a small slack so that a
// value that round-tripped through decimal still matches its level.
constexpr double kLevelTolerance = 1e-9;

}  // namespace

UncertaintyLevels::UncertaintyLevels(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw InputError("level set needs at least 2 levels");
  }
  for (size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw InputError("levels must be strictly increasing");
    }
  }
  if (values_.front() != 0.0 || values_.back() != 1.0) {
    throw InputError("levels must start at 0 and end at 1");
  }
}

int UncertaintyLevels::find(double x) const {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (std::fabs(values_[i] - x) <= kLevelTolerance) {
      return static_cast<int>(i) + 1;
    }
  }
  return 0;
}

UncertainSetSystem::UncertainSetSystem(std::vector<std::string> elements,
                                       std::vector<std::string> sets,
                                       UncertaintyLevels lv, RealMatrix b)
    : element_names(std::move(elements)),
      set_names(std::move(sets)),
      levels(std::move(lv)),
      beta(std::move(b)) {
  if (beta.rows < 1 || beta.cols < 1) {
    throw InputError("set system needs at least one set and one element");
  }
  if (static_cast<int>(set_names.size()) != beta.rows ||
      static_cast<int>(element_names.size()) != beta.cols) {
    throw InputError("name lists do not match the certainty matrix shape");
  }
  for (int i = 0; i < beta.rows; ++i) {
    for (int j = 0; j < beta.cols; ++j) {
      if (levels.find(beta.at(i, j)) == 0) {
        throw InputError("certainty for set '" + set_names[i] +
                         "', element '" + element_names[j] +
                         "' is not one of the declared levels");
      }
    }
  }
}

std::vector<int> BinMatrix::row(int r) const {
  return std::vector<int>(bins.begin() + static_cast<size_t>(r) * cols,
                          bins.begin() + static_cast<size_t>(r + 1) * cols);
}

BinMatrix bin_from_beta(const UncertainSetSystem& system) {
  BinMatrix out(system.n_sets(), system.n_elements(), system.levels.count());
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < out.cols; ++j) {
      out.at(i, j) = system.levels.find(system.beta.at(i, j));
    }
  }
  return out;
}

BinMatrix bin_from_raw(const RealMatrix& raw,
                       const std::vector<double>& boundaries) {
  if (boundaries.size() < 3) {
    throw InputError("need at least 3 bin boundaries (2 bins)");
  }
  for (size_t i = 1; i < boundaries.size(); ++i) {
    if (!(boundaries[i - 1] < boundaries[i])) {
      throw InputError("bin boundaries must be strictly increasing");
    }
  }
  if (boundaries.front() != 0.0 || boundaries.back() != 1.0) {
    throw InputError("bin boundaries must start at 0 and end at 1");
  }
  const int k = static_cast<int>(boundaries.size()) - 1;
  BinMatrix out(raw.rows, raw.cols, k);
  for (int i = 0; i < raw.rows; ++i) {
    for (int j = 0; j < raw.cols; ++j) {
      const double v = raw.at(i, j);
      if (v < 0.0 || v > 1.0) {
        throw InputError("certainty value " + std::to_string(v) +
                         " outside [0,1]");
      }
      int bin = k;  // v = 1 falls in the top bin
      for (int p = 1; p <= k; ++p) {
        if (v < boundaries[p]) {
          bin = p;
          break;
        }
      }
      out.at(i, j) = bin;
    }
  }
  return out;
}

bool is_uncertain_subset(const BinMatrix& b, int s, int t) {
  for (int j = 0; j < b.cols; ++j) {
    if (b.at(s, j) > b.at(t, j)) return false;
  }
  return true;
}

KernelGroups kernelize(const BinMatrix& b) {
  KernelGroups out;
  std::unordered_map<uint64_t, std::vector<int>> buckets;
  std::vector<int> group_of(b.rows, -1);
  for (int r = 0; r < b.rows; ++r) {
    uint64_t h = 1469598103934665603ull;
    for (int c = 0; c < b.cols; ++c) {
      h ^= static_cast<uint64_t>(b.at(r, c));
      h *= 1099511628211ull;
    }
    auto& bucket = buckets[h];
    for (int other : bucket) {
      if (group_of[other] >= 0 && b.row(other) == b.row(r)) {
        group_of[r] = group_of[other];
        break;
      }
    }
    if (group_of[r] < 0) {
      // r is the smallest index with this bin vector: a new representative.
      group_of[r] = static_cast<int>(out.representatives.size());
      out.representatives.push_back(r);
      out.members.emplace_back();
    } else {
      out.members[group_of[r]].push_back(r);
    }
    bucket.push_back(r);
  }
  return out;
}

BinMatrix append_dummy(const BinMatrix& b) {
  BinMatrix out(b.rows, b.cols + 1, b.k);
  for (int r = 0; r < b.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) out.at(r, c) = b.at(r, c);
    out.at(r, b.cols) = 1;
  }
  return out;
}

}  // namespace setlines
