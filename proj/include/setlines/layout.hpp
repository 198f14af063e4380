#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setlines/curve_order.hpp"
#include "setlines/set_system.hpp"

namespace setlines {

enum class LayoutKind { Storyline, Star };
enum class GlyphStyle { StackedWidth, ColoredUniform };
enum class BinHeights { Uniform, LocalCount, GivenDistribution };
enum class CurveStyle { Polyline, Rounded };

// All lengths are abstract units; the renderer applies one scale factor.
struct LayoutConfig {
  LayoutKind layout = LayoutKind::Storyline;
  GlyphStyle glyph_style = GlyphStyle::StackedWidth;
  BinHeights bin_heights = BinHeights::Uniform;
  CurveStyle curve_style = CurveStyle::Polyline;
  bool compact = false;
  double inner_radius = 0.3;  // star only, fraction of the outer radius
  double element_gap = 6.0;
  double box_min_width = 1.0;
  double box_max_width = 3.0;
  double curve_gap = 1.0;
  // weights[element][bin-1] for BinHeights::GivenDistribution, indexed by
  // the original element order of the input.
  std::vector<std::vector<double>> distribution;
};

struct Point {
  double x = 0;
  double y = 0;
};

struct GlyphBox {
  Point center;
  double width = 0;
  double height = 0;
  double rotation_deg = 0;  // 0 in storyline; spoke alignment in star
  int bin = 0;
  std::string fill;
  std::vector<Point> slots;  // anchor points, ascending curve slot
};

struct Glyph {
  std::vector<GlyphBox> boxes;  // ascending bin
  Point label_pos;
  std::string label;
};

struct PathCmd {
  enum class Kind { Move, Line, Quad };
  Kind kind = Kind::Move;
  Point to;
  Point ctrl;  // Quad only
};

struct SceneCurve {
  int set = 0;
  std::string color;
  std::vector<Point> anchors;
  std::vector<int> anchor_elems;  // element position of each anchor
  std::vector<PathCmd> commands;
  bool closed = false;
  int draw_rank = 0;  // slot at the first anchor element; render order key
};

struct Scene {
  LayoutKind kind = LayoutKind::Storyline;
  std::vector<Glyph> glyphs;
  std::vector<SceneCurve> curves;
  std::vector<std::string> set_names;
  std::vector<std::string> palette;           // stroke per set
  std::vector<std::string> certainty_colors;  // fill per bin
  double width = 0;
  double height = 0;
};

struct ColorAssignment {
  std::vector<std::string> curve_strokes;  // size m
  std::vector<std::string> bin_fills;      // size k
};

// Tableau10 strokes in seeded order (cycling past ten sets) and bin fills
// sampled uniformly from an embedded perceptually uniform sequential ramp.
ColorAssignment assign_colors(int m, int k, uint64_t seed);

// Glyph boxes and anchor slots for the column-permuted matrix, hanging
// from a top baseline: bin 1 (non-membership) at the baseline, bin k
// farthest from it. Storyline coordinates; star comes later.
std::vector<Glyph> glyph_geometry(const BinMatrix& b_pi,
                                  const LayoutConfig& config,
                                  const std::vector<std::string>& fills);

// Curve anchors and drawable path commands for the given layout. Polyline
// bends at the anchors; rounded replaces each bend with a quadratic fillet
// that stays inside the segment envelope, so no crossings are added.
std::vector<SceneCurve> curve_paths(const CurveLayout& layout,
                                    const std::vector<Glyph>& glyphs,
                                    const LayoutConfig& config,
                                    const BinMatrix& b_pi);

// Restricts every curve to half an element pitch around its member span
// (bins above 1). Storyline only.
Scene trim_curves(Scene scene, const BinMatrix& b_pi,
                  const CurveLayout& layout, const LayoutConfig& config);

// Maps a storyline scene onto spokes of a circle: element p of n sits at
// angle 2*pi*p/n, depth below the baseline becomes distance from the
// center, and curves close cyclically.
Scene star_transform(Scene scene, const LayoutConfig& config);

// Full geometry pipeline for one combinatorial result.
Scene build_scene(const BinMatrix& b, const CurveLayout& layout,
                  const LayoutConfig& config,
                  const std::vector<std::string>& element_names,
                  const std::vector<std::string>& set_names,
                  uint64_t color_seed);

// Debug serialization (glyphs[], curves[], colors[]).
std::string scene_to_json(const Scene& scene);

}  // namespace setlines
