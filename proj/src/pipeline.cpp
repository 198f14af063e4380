#include "setlines/pipeline.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "setlines/metrics.hpp"

namespace setlines {

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

long long pair_inversions(const std::vector<int>& a,
                          const std::vector<int>& b) {
  long long cnt = 0;
  for (size_t x = 0; x < a.size(); ++x) {
    for (size_t y = x + 1; y < a.size(); ++y) {
      if ((a[x] < a[y]) != (b[x] < b[y])) ++cnt;
    }
  }
  return cnt;
}

ElementOrder solve(const WeightMatrix& w, const OrderingOptions& opts,
                   int round) {
  if (opts.solver == SolverKind::Exact) {
    return solve_tsp_exact(w, opts.exact_cap);
  }
  return solve_tsp_heuristic(w, mix(opts.seed ^ (uint64_t{0xA5} + round)));
}

}  // namespace

WeightMatrix feedback_weights(const CurveLayout& layout, Mode mode) {
  const auto& pi = layout.element_order.pi;
  const int n = static_cast<int>(pi.size());
  WeightMatrix w(mode == Mode::Path ? n + 1 : n, mode);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double inv = static_cast<double>(
          pair_inversions(layout.positions[p], layout.positions[q]));
      w.at(pi[p], pi[q]) = w.at(pi[q], pi[p]) = inv;
    }
  }
  return w;
}

OrderingResult order_elements(const BinMatrix& b,
                              const OrderingOptions& opts) {
  if (opts.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }

  OrderingResult out;
  if (opts.strategy == Strategy::Random) {
    ElementOrder order;
    order.mode = opts.mode;
    order.pi.resize(b.cols);
    std::iota(order.pi.begin(), order.pi.end(), 0);
    std::mt19937_64 gen(opts.seed);
    for (int i = b.cols - 1; i > 0; --i) {
      const int j = static_cast<int>(gen() % static_cast<uint64_t>(i + 1));
      std::swap(order.pi[i], order.pi[j]);
    }
    out.order = std::move(order);
    out.layout = order_curves(b, out.order);
    out.crossings = crossings(out.layout);
    out.crossings_trace = {out.crossings};
    out.iterations_used = 1;
    return out;
  }

  const bool from_hamming = opts.strategy == Strategy::Hamming ||
                            opts.strategy == Strategy::IterativeHamming;
  const bool iterative = opts.strategy == Strategy::IterativeHamming ||
                         opts.strategy == Strategy::IterativeUpperBound;

  const BinMatrix base =
      opts.mode == Mode::Path ? append_dummy(b) : b;
  WeightMatrix w = from_hamming ? hamming_weights(base, opts.mode)
                                : upper_bound_weights(base, opts.mode);

  ElementOrder order = solve(w, opts, 0);
  CurveLayout layout = order_curves(b, order);
  long long cr = crossings(layout);

  out.order = order;
  out.layout = layout;
  out.crossings = cr;
  out.crossings_trace.push_back(cr);
  out.iterations_used = 1;

  if (!iterative) return out;

  long long prev_cr = cr;
  while (out.iterations_used < opts.max_iterations) {
    // Feedback always uses the latest layout; the heuristic may regress
    // between rounds, so the best result is tracked separately.
    w = feedback_weights(layout, opts.mode);
    order = solve(w, opts, out.iterations_used);
    layout = order_curves(b, order);
    cr = crossings(layout);
    ++out.iterations_used;
    out.crossings_trace.push_back(cr);
    if (cr < out.crossings) {
      out.order = order;
      out.layout = layout;
      out.crossings = cr;
    }
    if (cr >= prev_cr) break;
    prev_cr = cr;
  }
  return out;
}

}  // namespace setlines
