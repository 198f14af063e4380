#include "setlines/curve_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace setlines {

namespace {

BinMatrix permute_columns(const BinMatrix& b, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != b.cols) {
    throw std::invalid_argument("element order length does not match matrix");
  }
  std::vector<bool> seen(b.cols, false);
  for (int c : pi) {
    if (c < 0 || c >= b.cols || seen[c]) {
      throw std::invalid_argument("element order is not a permutation");
    }
    seen[c] = true;
  }
  BinMatrix out(b.rows, b.cols, b.k);
  for (int r = 0; r < b.rows; ++r) {
    for (int p = 0; p < b.cols; ++p) out.at(r, p) = b.at(r, pi[p]);
  }
  return out;
}

// Lookahead comparison: the first divergent column decides. Rows are
// pairwise distinct after kernelization, so this is a strict total order.
bool lookahead_less(const BinMatrix& b, int s, int t) {
  for (int c = 0; c < b.cols; ++c) {
    const int d = b.at(s, c) - b.at(t, c);
    if (d != 0) return d < 0;
  }
  return false;
}

}  // namespace

Precedence precedes(const BinMatrix& b_pi, int s, int t) {
  for (int c = 0; c < b_pi.cols; ++c) {
    const int d = b_pi.at(s, c) - b_pi.at(t, c);
    if (d != 0) return d < 0 ? Precedence::Below : Precedence::Above;
  }
  throw std::invalid_argument(
      "precedes() needs distinct bin vectors; kernelize first");
}

std::vector<int> initial_order(const BinMatrix& b_pi) {
  std::vector<int> by_rank(b_pi.rows);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int s, int t) { return lookahead_less(b_pi, s, t); });
  std::vector<int> slot(b_pi.rows);
  for (int rank = 0; rank < b_pi.rows; ++rank) slot[by_rank[rank]] = rank + 1;
  return slot;
}

CurveLayout order_curves(const BinMatrix& b, const ElementOrder& pi) {
  CurveLayout out;
  out.element_order = pi;
  const BinMatrix bp = permute_columns(b, pi.pi);
  const int n = bp.cols;
  const int m = bp.rows;
  out.positions.assign(n, std::vector<int>(m, 0));
  if (m == 0 || n == 0) return out;

  const KernelGroups groups = kernelize(bp);
  const int mk = static_cast<int>(groups.representatives.size());

  // Slots of the representatives, per element.
  std::vector<int> slot = [&] {
    BinMatrix kb(mk, n, bp.k);
    for (int g = 0; g < mk; ++g) {
      for (int c = 0; c < n; ++c) kb.at(g, c) = bp.at(groups.representatives[g], c);
    }
    return initial_order(kb);
  }();

  std::vector<int> by_rank(mk);
  for (int p = 0; p < n; ++p) {
    if (p > 0) {
      // Curves in distinct bins follow the bins; ties keep the previous
      // relative order, which is what makes every crossing necessary.
      std::iota(by_rank.begin(), by_rank.end(), 0);
      const std::vector<int> prev = slot;
      std::sort(by_rank.begin(), by_rank.end(), [&](int g, int h) {
        const int bg = bp.at(groups.representatives[g], p);
        const int bh = bp.at(groups.representatives[h], p);
        if (bg != bh) return bg < bh;
        return prev[g] < prev[h];
      });
      for (int rank = 0; rank < mk; ++rank) slot[by_rank[rank]] = rank + 1;
    }

    // Expand representative slots to all curves. A group occupies a
    // contiguous block, representative on top, duplicates directly below
    // it in ascending index order.
    std::vector<int> group_by_slot(mk);
    for (int g = 0; g < mk; ++g) group_by_slot[slot[g] - 1] = g;
    int next = 1;
    for (int rank = 0; rank < mk; ++rank) {
      const int g = group_by_slot[rank];
      const auto& dup = groups.members[g];
      for (size_t d = dup.size(); d-- > 0;) out.positions[p][dup[d]] = next++;
      out.positions[p][groups.representatives[g]] = next++;
    }
  }
  return out;
}

}  // namespace setlines
