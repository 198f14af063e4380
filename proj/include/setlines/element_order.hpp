#pragma once

#include <cstdint>
#include <vector>

#include "setlines/set_system.hpp"

namespace setlines {

// Path mode orders elements on a line (storyline layout) and works on a
// matrix extended by a dummy vertex; cycle mode orders them on a circle
// (star layout) with no dummy.
enum class Mode { Path, Cycle };

// Symmetric nonnegative edge weights over the element graph. In path mode
// the last vertex is the dummy and all its incident weights are zero.
struct WeightMatrix {
  int size = 0;
  Mode mode = Mode::Path;
  std::vector<double> w;

  WeightMatrix() = default;
  WeightMatrix(int n, Mode m)
      : size(n), mode(m), w(static_cast<size_t>(n) * n, 0.0) {}

  double& at(int i, int j) { return w[static_cast<size_t>(i) * size + j]; }
  double at(int i, int j) const {
    return w[static_cast<size_t>(i) * size + j];
  }
};

// A permutation of the original element (column) indices. pi[p] is the
// element shown at position p. The dummy vertex never appears here.
struct ElementOrder {
  std::vector<int> pi;
  Mode mode = Mode::Path;
};

enum class Strategy {
  Hamming,
  UpperBound,
  IterativeHamming,
  IterativeUpperBound,
  Random,
};

enum class SolverKind { Exact, Heuristic };

inline constexpr int kDefaultExactCap = 20;

// w[i][j] = number of curves whose bin differs between columns i and j.
// b must carry the dummy column iff mode is Path.
WeightMatrix hamming_weights(const BinMatrix& b, Mode mode);

// Overestimates the crossings forced between columns i and j if they end up
// adjacent: a curve pair counts once per traversal direction in which its
// bin order weakly inverts (twice for a strict inversion, once when tied on
// one side), so the matrix is symmetric as the undirected TSP requires.
WeightMatrix upper_bound_weights(const BinMatrix& b, Mode mode);

// Cost of visiting the matrix vertices in the given sequence; cycle mode
// adds the closing edge. `order` must enumerate every vertex exactly once.
double tour_cost(const WeightMatrix& w, const std::vector<int>& order);

// Cost of an element order under w (re-adds the dummy in path mode).
double order_cost(const WeightMatrix& w, const ElementOrder& order);

// Held-Karp dynamic program; optimal but exponential, so it refuses
// instances with more than max_vertices vertices (dummy included).
ElementOrder solve_tsp_exact(const WeightMatrix& w,
                             int max_vertices = kDefaultExactCap);

// Nearest-neighbor construction, 2-opt descent, then seeded simulated
// annealing with a final 2-opt polish; returns the best tour seen.
ElementOrder solve_tsp_heuristic(const WeightMatrix& w, uint64_t seed);

}  // namespace setlines
