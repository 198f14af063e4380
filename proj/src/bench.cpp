#include "setlines/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "setlines/metrics.hpp"

namespace setlines {

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Instance {
  int n = 0;
  int m = 0;
  int sample = 0;
  uint64_t seed = 0;
  std::string id;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string format_row(const Instance& ins, int k, Strategy strategy,
                       SolverKind solver, const OrderingResult* result,
                       double runtime_ms, long long baseline_cr) {
  std::string row = ins.id + "," + std::to_string(ins.n) + "," +
                    std::to_string(ins.m) + "," + std::to_string(k) + "," +
                    strategy_name(strategy) + "," + solver_name(solver) + ",";
  if (result == nullptr) {
    return row + ",,,,,\n";  // skipped: instance above the exact cap
  }
  const LayoutMetrics metrics = compute_metrics(result->layout, runtime_ms);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%lld,%.3f,",
                result->iterations_used, metrics.crossings, metrics.turns,
                metrics.wiggle, metrics.runtime_ms);
  row += buf;
  if (baseline_cr > 0) {
    std::snprintf(buf, sizeof buf, "%.6f",
                  static_cast<double>(metrics.crossings) / baseline_cr);
    row += buf;
  } else {
    row += metrics.crossings == 0 ? "1.000000" : "nan";
  }
  return row + "\n";
}

std::string run_instance(const BenchGrid& grid, const Instance& ins) {
  const BinMatrix bins = random_bin_matrix(ins.m, ins.n, grid.k, ins.seed);

  // The baseline everything is scored against: a random element order with
  // optimal curve ordering, one per instance.
  OrderingOptions base_opts;
  base_opts.strategy = Strategy::Random;
  base_opts.seed = ins.seed;
  base_opts.max_iterations = grid.max_iterations;
  base_opts.exact_cap = grid.exact_cap;
  auto t0 = std::chrono::steady_clock::now();
  const OrderingResult baseline = order_elements(bins, base_opts);
  const double baseline_ms = elapsed_ms(t0);

  std::string block;
  for (Strategy strategy : grid.strategies) {
    for (SolverKind solver : grid.solvers) {
      if (strategy == Strategy::Random) {
        block += format_row(ins, grid.k, strategy, solver, &baseline,
                            baseline_ms, baseline.crossings);
        continue;
      }
      if (solver == SolverKind::Exact && ins.n + 1 > grid.exact_cap) {
        block += format_row(ins, grid.k, strategy, solver, nullptr, 0.0,
                            baseline.crossings);
        continue;
      }
      OrderingOptions opts = base_opts;
      opts.strategy = strategy;
      opts.solver = solver;
      t0 = std::chrono::steady_clock::now();
      const OrderingResult result = order_elements(bins, opts);
      block += format_row(ins, grid.k, strategy, solver, &result,
                          elapsed_ms(t0), baseline.crossings);
    }
  }
  return block;
}

}  // namespace

BenchGrid default_bench_grid() {
  BenchGrid grid;
  for (int n = 5; n <= 100; n += 5) grid.n_values.push_back(n);
  for (int m = 2; m <= 30; m += 2) grid.m_values.push_back(m);
  grid.strategies = {Strategy::Hamming, Strategy::UpperBound,
                     Strategy::IterativeHamming, Strategy::IterativeUpperBound,
                     Strategy::Random};
  grid.solvers = {SolverKind::Exact, SolverKind::Heuristic};
  return grid;
}

BinMatrix random_bin_matrix(int m, int n, int k, uint64_t seed) {
  BinMatrix b(m, n, k);
  uint64_t state = seed;
  for (int& bin : b.bins) {
    state = mix(state);
    bin = 1 + static_cast<int>(state % static_cast<uint64_t>(k));
  }
  return b;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Hamming: return "hamming";
    case Strategy::UpperBound: return "upper-bound";
    case Strategy::IterativeHamming: return "iterative-hamming";
    case Strategy::IterativeUpperBound: return "iterative-upper-bound";
    case Strategy::Random: return "random";
  }
  return "?";
}

const char* solver_name(SolverKind s) {
  return s == SolverKind::Exact ? "exact" : "heuristic";
}

void run_bench(const BenchGrid& grid, std::ostream& out) {
  std::vector<Instance> instances;
  for (int n : grid.n_values) {
    for (int m : grid.m_values) {
      for (int sample = 0; sample < grid.samples_per_cell; ++sample) {
        Instance ins;
        ins.n = n;
        ins.m = m;
        ins.sample = sample;
        ins.seed = mix(grid.seed ^ mix(static_cast<uint64_t>(n) << 24 ^
                                       static_cast<uint64_t>(m) << 8 ^
                                       static_cast<uint64_t>(sample)));
        ins.id = "n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" +
                 std::to_string(sample);
        instances.push_back(std::move(ins));
      }
    }
  }

  std::vector<std::string> blocks(instances.size());
  const int jobs =
      std::max(1, std::min<int>(grid.jobs, static_cast<int>(instances.size())));
  if (jobs == 1) {
    for (size_t i = 0; i < instances.size(); ++i) {
      blocks[i] = run_instance(grid, instances[i]);
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < instances.size();
             i = next.fetch_add(1)) {
          blocks[i] = run_instance(grid, instances[i]);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  out << "# setlines-bench v1\n";
  out << "instance_id,n,m,k,strategy,solver,iterations_used,CR,T_sigma,"
         "wiggle,runtime_ms,CR_rel_baseline\n";
  for (const std::string& block : blocks) out << block;
}

}  // namespace setlines
