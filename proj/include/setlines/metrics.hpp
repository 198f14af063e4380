#pragma once

#include "setlines/curve_order.hpp"

namespace setlines {

struct LayoutMetrics {
  long long crossings = 0;
  long long turns = 0;
  long long wiggle = 0;
  double runtime_ms = 0.0;
};

// Number of curve-pair inversions between consecutive elements (plus the
// wrap-around pair in cycle mode).
long long crossings(const CurveLayout& layout);

// Number of (curve, consecutive-element) pairs where the slot changes.
long long turns(const CurveLayout& layout);

// Total slot displacement of all curves between consecutive elements.
long long wiggle(const CurveLayout& layout);

LayoutMetrics compute_metrics(const CurveLayout& layout,
                              double runtime_ms = 0.0);

inline constexpr int kOracleMaxCurves = 6;
inline constexpr int kOracleMaxElements = 7;

// Exhaustive minimum: dynamic program over per-element bin-consistent slot
// assignments, transition cost = inversions between consecutive columns.
// Counts crossings linearly (no wrap seam). Refuses instances beyond
// kOracleMaxCurves x kOracleMaxElements.
long long min_crossings_oracle(const BinMatrix& b, const ElementOrder& pi);

}  // namespace setlines
