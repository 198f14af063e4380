#pragma once

#include <string>
#include <vector>

#include "setlines/errors.hpp"

namespace setlines {

// Discrete certainty levels l_1 < ... < l_k with l_1 = 0 and l_k = 1.
// Level 0 means "certainly not a member", level 1 "certainly a member".
class UncertaintyLevels {
 public:
  explicit UncertaintyLevels(std::vector<double> values);

  int count() const { return static_cast<int>(values_.size()); }
  double value(int bin) const { return values_[bin - 1]; }  // bin is 1-based
  const std::vector<double>& values() const { return values_; }

  // 1-based bin of the level equal to x, or 0 if x is not a level.
  int find(double x) const;

 private:
  std::vector<double> values_;
};

// Dense m x n matrix of doubles; rows are sets, columns are elements.
struct RealMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  RealMatrix() = default;
  RealMatrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), v(static_cast<size_t>(r) * c, fill) {}

  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
};

// A set system with per-cell membership certainty drawn from a discrete
// level set. beta.at(i, j) is the certainty that element j belongs to set i.
struct UncertainSetSystem {
  std::vector<std::string> element_names;
  std::vector<std::string> set_names;
  UncertaintyLevels levels;
  RealMatrix beta;

  UncertainSetSystem(std::vector<std::string> elements,
                     std::vector<std::string> sets, UncertaintyLevels lv,
                     RealMatrix b);

  int n_elements() const { return beta.cols; }
  int n_sets() const { return beta.rows; }
};

// m x n matrix of 1-based bin indices; bin 1 = certainly not a member,
// bin k = certainly a member. The algorithmic substrate for everything else.
struct BinMatrix {
  int rows = 0;  // sets (curves)
  int cols = 0;  // elements
  int k = 0;     // number of levels; entries lie in [1, k]
  std::vector<int> bins;

  BinMatrix() = default;
  BinMatrix(int m, int n, int levels)
      : rows(m), cols(n), k(levels), bins(static_cast<size_t>(m) * n, 1) {}

  int& at(int r, int c) { return bins[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return bins[static_cast<size_t>(r) * cols + c]; }

  std::vector<int> row(int r) const;

  bool operator==(const BinMatrix&) const = default;
};

// Curves with identical bin vectors collapsed to one representative each.
// members[g] lists the duplicates of representatives[g], ascending, without
// the representative itself; together they partition the curve indices.
struct KernelGroups {
  std::vector<int> representatives;
  std::vector<std::vector<int>> members;
};

// Bins a system whose beta values all lie exactly on its level set.
BinMatrix bin_from_beta(const UncertainSetSystem& system);

// Bins raw values in [0,1] by k+1 thresholds (strictly increasing, first 0,
// last 1). Intervals are half-open, closed at 1.0: boundaries[p-1] <= v <
// boundaries[p] yields bin p, and v = 1 yields bin k.
BinMatrix bin_from_raw(const RealMatrix& raw,
                       const std::vector<double>& boundaries);

// True iff curve s sits in a bin <= curve t's bin at every element.
bool is_uncertain_subset(const BinMatrix& b, int s, int t);

// Groups curves with identical bin vectors; the smallest curve index of a
// group is its representative. Representatives are listed ascending.
KernelGroups kernelize(const BinMatrix& b);

// Appends an all-bin-1 dummy column on the right (path-mode TSP only).
BinMatrix append_dummy(const BinMatrix& b);

}  // namespace setlines
