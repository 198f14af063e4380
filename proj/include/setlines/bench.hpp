#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "setlines/pipeline.hpp"

namespace setlines {

// The synthetic experiment grid: every (n, m) cell draws samples_per_cell
// seeded instances and runs every strategy x solver combination on each.
struct BenchGrid {
  std::vector<int> n_values;
  std::vector<int> m_values;
  int samples_per_cell = 5;
  int k = 5;
  std::vector<Strategy> strategies;
  std::vector<SolverKind> solvers;
  uint64_t seed = 1;
  int jobs = 1;
  int max_iterations = 5;
  int exact_cap = kDefaultExactCap;
};

// n = 5..100 step 5, m = 2..30 step 2, 5 samples, all strategies, both
// solvers.
BenchGrid default_bench_grid();

// m x n bins drawn uniformly from [1, k].
BinMatrix random_bin_matrix(int m, int n, int k, uint64_t seed);

const char* strategy_name(Strategy s);
const char* solver_name(SolverKind s);

// Streams the CSV: a versioned header comment, the column header, then one
// row per (instance, strategy, solver) in deterministic grid order. Exact
// rows whose instance exceeds the solver cap keep their key columns and
// leave the metric columns empty. Cells run on `jobs` worker threads.
void run_bench(const BenchGrid& grid, std::ostream& out);

}  // namespace setlines
