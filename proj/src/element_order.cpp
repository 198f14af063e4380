#include "setlines/element_order.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

namespace setlines {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int real_columns(const WeightMatrix& w) {
  return w.mode == Mode::Path ? w.size - 1 : w.size;
}

// mt19937_64 output is standard-defined, so modulo reduction keeps the
// heuristic reproducible across platforms (distributions are not).
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<uint64_t>(n)); }
  double unit() { return (gen() >> 11) * (1.0 / 9007199254740992.0); }
};

double cycle_cost(const WeightMatrix& w, const std::vector<int>& tour) {
  double c = 0;
  for (size_t i = 0; i + 1 < tour.size(); ++i) c += w.at(tour[i], tour[i + 1]);
  if (tour.size() > 1) c += w.at(tour.back(), tour.front());
  return c;
}

std::vector<int> nearest_neighbor(const WeightMatrix& w) {
  const int v = w.size;
  std::vector<int> tour;
  tour.reserve(v);
  std::vector<bool> used(v, false);
  int cur = 0;
  tour.push_back(0);
  used[0] = true;
  for (int step = 1; step < v; ++step) {
    int best = -1;
    double best_w = kInf;
    for (int j = 0; j < v; ++j) {
      if (!used[j] && w.at(cur, j) < best_w) {
        best_w = w.at(cur, j);
        best = j;
      }
    }
    used[best] = true;
    tour.push_back(best);
    cur = best;
  }
  return tour;
}

// First-improvement 2-opt descent on the cyclic tour; position 0 stays put.
void two_opt(const WeightMatrix& w, std::vector<int>& tour) {
  const int v = static_cast<int>(tour.size());
  if (v < 4) return;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 1; i < v - 1; ++i) {
      for (int j = i + 1; j < v; ++j) {
        const int a = tour[i - 1], b = tour[i];
        const int c = tour[j], d = tour[(j + 1) % v];
        if (a == c || b == d) continue;
        const double delta =
            w.at(a, c) + w.at(b, d) - w.at(a, b) - w.at(c, d);
        if (delta < -1e-12) {
          std::reverse(tour.begin() + i, tour.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
}

// Cuts the cycle into an element order: path mode drops the dummy (last
// vertex index) and starts right after it; cycle mode keeps the cycle as-is.
ElementOrder finish_order(const WeightMatrix& w, const std::vector<int>& cycle) {
  ElementOrder out;
  out.mode = w.mode;
  if (w.mode == Mode::Cycle) {
    out.pi = cycle;
    return out;
  }
  const int dummy = w.size - 1;
  const int v = static_cast<int>(cycle.size());
  int at = 0;
  while (cycle[at] != dummy) ++at;
  out.pi.reserve(v - 1);
  for (int s = 1; s < v; ++s) out.pi.push_back(cycle[(at + s) % v]);
  return out;
}

}  // namespace

WeightMatrix hamming_weights(const BinMatrix& b, Mode mode) {
  WeightMatrix w(b.cols, mode);
  const int n = real_columns(w);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int cnt = 0;
      for (int r = 0; r < b.rows; ++r) {
        if (b.at(r, i) != b.at(r, j)) ++cnt;
      }
      w.at(i, j) = w.at(j, i) = cnt;
    }
  }
  return w;
}

WeightMatrix upper_bound_weights(const BinMatrix& b, Mode mode) {
  WeightMatrix w(b.cols, mode);
  const int n = real_columns(w);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long long cnt = 0;
      for (int x = 0; x < b.rows; ++x) {
        for (int y = x + 1; y < b.rows; ++y) {
          const int di = b.at(x, i) - b.at(y, i);
          const int dj = b.at(x, j) - b.at(y, j);
          if ((di < 0 && dj > 0) || (di > 0 && dj < 0)) {
            cnt += 2;  // strict inversion, forced in both directions
          } else if ((di == 0) != (dj == 0)) {
            cnt += 1;  // tied on one side: may invert in one direction
          }
        }
      }
      w.at(i, j) = w.at(j, i) = static_cast<double>(cnt);
    }
  }
  return w;
}

double tour_cost(const WeightMatrix& w, const std::vector<int>& order) {
  double c = 0;
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    c += w.at(order[i], order[i + 1]);
  }
  if (w.mode == Mode::Cycle && order.size() > 1) {
    c += w.at(order.back(), order.front());
  }
  return c;
}

double order_cost(const WeightMatrix& w, const ElementOrder& order) {
  return tour_cost(w, order.pi);
}

ElementOrder solve_tsp_exact(const WeightMatrix& w, int max_vertices) {
  const int v = w.size;
  if (v > max_vertices) {
    throw CapacityError(
        "exact TSP solver capped at " + std::to_string(max_vertices) +
        " vertices, got " + std::to_string(v) + "; use the heuristic solver");
  }
  if (v == 0) return {{}, w.mode};
  std::vector<int> cycle;
  if (v == 1) {
    cycle = {0};
  } else {
    // Held-Karp over subsets of vertices 1..v-1, anchored at vertex 0.
    const int rest = v - 1;
    const size_t full = size_t{1} << rest;
    std::vector<double> dp(full * rest, kInf);
    std::vector<int8_t> parent(full * rest, -1);
    for (int j = 0; j < rest; ++j) {
      dp[(size_t{1} << j) * rest + j] = w.at(0, j + 1);
    }
    for (size_t mask = 1; mask < full; ++mask) {
      for (int j = 0; j < rest; ++j) {
        if (!(mask >> j & 1)) continue;
        const double cur = dp[mask * rest + j];
        if (cur == kInf) continue;
        for (int nxt = 0; nxt < rest; ++nxt) {
          if (mask >> nxt & 1) continue;
          const size_t nmask = mask | (size_t{1} << nxt);
          const double cand = cur + w.at(j + 1, nxt + 1);
          if (cand < dp[nmask * rest + nxt]) {
            dp[nmask * rest + nxt] = cand;
            parent[nmask * rest + nxt] = static_cast<int8_t>(j);
          }
        }
      }
    }
    double best = kInf;
    int best_j = 0;
    for (int j = 0; j < rest; ++j) {
      const double cand = dp[(full - 1) * rest + j] + w.at(j + 1, 0);
      if (cand < best) {
        best = cand;
        best_j = j;
      }
    }
    std::vector<int> tail;
    size_t mask = full - 1;
    int j = best_j;
    while (j >= 0) {
      tail.push_back(j + 1);
      const int p = parent[mask * rest + j];
      mask ^= size_t{1} << j;
      j = p;
    }
    cycle.push_back(0);
    cycle.insert(cycle.end(), tail.rbegin(), tail.rend());
  }
  return finish_order(w, cycle);
}

ElementOrder solve_tsp_heuristic(const WeightMatrix& w, uint64_t seed) {
  const int v = w.size;
  if (v == 0) return {{}, w.mode};
  std::vector<int> tour = nearest_neighbor(w);
  if (v >= 4) {
    two_opt(w, tour);
    std::vector<int> best = tour;
    double cost = cycle_cost(w, tour);
    double best_cost = cost;

    Rng rng(seed ^ 0x9E3779B97F4A7C15ull);
    double temp = std::max(1.0, 0.2 * best_cost);
    const int sweeps = 120;
    const int moves_per_sweep = std::max(60, v * v);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      for (int move = 0; move < moves_per_sweep; ++move) {
        int i = 1 + rng.below(v - 1);
        int j = 1 + rng.below(v - 1);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        const int a = tour[i - 1], b = tour[i];
        const int c = tour[j], d = tour[(j + 1) % v];
        if (a == c || b == d) continue;
        const double delta =
            w.at(a, c) + w.at(b, d) - w.at(a, b) - w.at(c, d);
        if (delta < 0 || rng.unit() < std::exp(-delta / temp)) {
          std::reverse(tour.begin() + i, tour.begin() + j + 1);
          cost += delta;
          if (cost < best_cost - 1e-12) {
            best_cost = cost;
            best = tour;
          }
        }
      }
      temp *= 0.92;
    }
    tour = best;
    two_opt(w, tour);
    if (cycle_cost(w, tour) > best_cost) tour = best;
  }
  return finish_order(w, tour);
}

}  // namespace setlines
