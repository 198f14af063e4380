#pragma once

#include <cstdint>
#include <vector>

#include "setlines/curve_order.hpp"
#include "setlines/element_order.hpp"

namespace setlines {

// Weights for the next TSP round, derived from the curve orders actually
// assigned: w[i][j] = inversions between the slot assignments of elements
// i and j, indexed by original element identity.
WeightMatrix feedback_weights(const CurveLayout& layout, Mode mode);

struct OrderingOptions {
  Strategy strategy = Strategy::UpperBound;
  SolverKind solver = SolverKind::Exact;
  Mode mode = Mode::Path;
  int max_iterations = 5;
  uint64_t seed = 0;
  int exact_cap = kDefaultExactCap;
};

struct OrderingResult {
  ElementOrder order;
  CurveLayout layout;
  int iterations_used = 0;
  long long crossings = 0;
  // Crossing count after each TSP round, for the iterative strategies.
  std::vector<long long> crossings_trace;
};

// Runs Step I / Step II. Non-iterative strategies do one weights -> TSP ->
// curve-order pass. Iterative strategies start from their base weights and
// then loop {curve order -> feedback weights -> TSP} until max_iterations
// or until crossings stop decreasing; the best pair seen wins. The random
// strategy shuffles elements with the seed and only optimizes curves.
OrderingResult order_elements(const BinMatrix& b, const OrderingOptions& opts);

}  // namespace setlines
