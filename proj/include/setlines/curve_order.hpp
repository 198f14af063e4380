#pragma once

#include <vector>

#include "setlines/element_order.hpp"
#include "setlines/set_system.hpp"

namespace setlines {

// Vertical curve positions, one bijection per element of the order.
// positions[p][s] is the 1-based slot of curve s at the p-th element of
// element_order; smaller slots hold curves in smaller (less certain) bins.
struct CurveLayout {
  std::vector<std::vector<int>> positions;
  ElementOrder element_order;

  int columns() const { return static_cast<int>(positions.size()); }
  int curves() const {
    return positions.empty() ? 0 : static_cast<int>(positions[0].size());
  }
};

enum class Precedence { Below, Above };

// Orders two distinct curves by their bins at the first column where the
// rows of b_pi diverge (b_pi: kernelized, columns already permuted).
// Identical rows are a contract violation: kernelize first.
Precedence precedes(const BinMatrix& b_pi, int s, int t);

// Slot of every curve at the first element, looking ahead to the first
// divergence of every pair. Returns 1-based slots indexed by curve.
std::vector<int> initial_order(const BinMatrix& b_pi);

// Computes the vertical curve order with the minimum number of crossings
// for the fixed element order pi. Kernelizes internally and reinserts each
// duplicate directly below its representative, ascending by curve index.
CurveLayout order_curves(const BinMatrix& b, const ElementOrder& pi);

}  // namespace setlines
