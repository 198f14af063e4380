#include "setlines/metrics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace setlines {

namespace {

// Inversions between two slot assignments, merge-sort style: walk the
// curves in a-order and count inversions of their b-slots.
long long inversions_between(const std::vector<int>& a,
                             const std::vector<int>& b) {
  const int m = static_cast<int>(a.size());
  std::vector<int> seq(m);
  for (int s = 0; s < m; ++s) seq[a[s] - 1] = b[s];
  std::vector<int> buf(m);
  long long count = 0;
  for (int width = 1; width < m; width *= 2) {
    for (int lo = 0; lo + width < m; lo += 2 * width) {
      const int mid = lo + width;
      const int hi = std::min(lo + 2 * width, m);
      int i = lo, j = mid, o = lo;
      while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
          buf[o++] = seq[i++];
        } else {
          count += mid - i;
          buf[o++] = seq[j++];
        }
      }
      while (i < mid) buf[o++] = seq[i++];
      while (j < hi) buf[o++] = seq[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, seq.begin() + lo);
    }
  }
  return count;
}

template <typename PairFn>
long long sum_consecutive(const CurveLayout& layout, PairFn fn) {
  const int n = layout.columns();
  if (n < 2) return 0;
  long long total = 0;
  for (int p = 0; p + 1 < n; ++p) {
    total += fn(layout.positions[p], layout.positions[p + 1]);
  }
  if (layout.element_order.mode == Mode::Cycle && n >= 2) {
    total += fn(layout.positions[n - 1], layout.positions[0]);
  }
  return total;
}

}  // namespace

long long crossings(const CurveLayout& layout) {
  return sum_consecutive(layout, inversions_between);
}

long long turns(const CurveLayout& layout) {
  return sum_consecutive(
      layout, [](const std::vector<int>& a, const std::vector<int>& b) {
        long long t = 0;
        for (size_t s = 0; s < a.size(); ++s) t += a[s] != b[s];
        return t;
      });
}

long long wiggle(const CurveLayout& layout) {
  return sum_consecutive(
      layout, [](const std::vector<int>& a, const std::vector<int>& b) {
        long long d = 0;
        for (size_t s = 0; s < a.size(); ++s) d += std::abs(a[s] - b[s]);
        return d;
      });
}

LayoutMetrics compute_metrics(const CurveLayout& layout, double runtime_ms) {
  return {crossings(layout), turns(layout), wiggle(layout), runtime_ms};
}

namespace {

struct PermTable {
  // All permutations of [0, m): perms[id][rank] = curve at that rank.
  std::vector<std::vector<int>> perms;
  // Pairwise inversion counts between slot assignments.
  std::vector<int> inv;

  int inv_at(int a, int b) const {
    return inv[static_cast<size_t>(a) * perms.size() + b];
  }
};

const PermTable& perm_table(int m) {
  static std::array<PermTable, kOracleMaxCurves + 1> tables;
  PermTable& t = tables[m];
  if (!t.perms.empty()) return t;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    t.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int cnt = static_cast<int>(t.perms.size());
  // slot[s] for a permutation: rank of curve s.
  std::vector<std::vector<int>> slot(cnt, std::vector<int>(m));
  for (int id = 0; id < cnt; ++id) {
    for (int rank = 0; rank < m; ++rank) slot[id][t.perms[id][rank]] = rank;
  }
  t.inv.resize(static_cast<size_t>(cnt) * cnt);
  for (int a = 0; a < cnt; ++a) {
    for (int b = 0; b < cnt; ++b) {
      int v = 0;
      for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
          const bool ax = slot[a][x] < slot[a][y];
          const bool bx = slot[b][x] < slot[b][y];
          v += ax != bx;
        }
      }
      t.inv[static_cast<size_t>(a) * cnt + b] = v;
    }
  }
  return t;
}

}  // namespace

long long min_crossings_oracle(const BinMatrix& b, const ElementOrder& pi) {
  if (b.rows > kOracleMaxCurves || b.cols > kOracleMaxElements) {
    throw CapacityError("crossing oracle capped at " +
                        std::to_string(kOracleMaxCurves) + " curves and " +
                        std::to_string(kOracleMaxElements) + " elements");
  }
  const int m = b.rows;
  const int n = b.cols;
  if (m < 2 || n == 0) return 0;

  const PermTable& table = perm_table(m);

  // Bin-consistent permutation ids for each column in pi order.
  std::vector<std::vector<int>> feasible(n);
  for (int p = 0; p < n; ++p) {
    const int col = pi.pi.at(p);
    for (size_t id = 0; id < table.perms.size(); ++id) {
      const auto& perm = table.perms[id];
      bool ok = true;
      for (int rank = 0; ok && rank + 1 < m; ++rank) {
        ok = b.at(perm[rank], col) <= b.at(perm[rank + 1], col);
      }
      if (ok) feasible[p].push_back(static_cast<int>(id));
    }
  }

  std::vector<long long> cost(feasible[0].size(), 0);
  for (int p = 1; p < n; ++p) {
    std::vector<long long> next(feasible[p].size(),
                                std::numeric_limits<long long>::max());
    for (size_t i = 0; i < feasible[p - 1].size(); ++i) {
      for (size_t j = 0; j < feasible[p].size(); ++j) {
        const long long cand =
            cost[i] + table.inv_at(feasible[p - 1][i], feasible[p][j]);
        if (cand < next[j]) next[j] = cand;
      }
    }
    cost = std::move(next);
  }
  return *std::min_element(cost.begin(), cost.end());
}

}  // namespace setlines
