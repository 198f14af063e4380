#include "setlines/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

namespace setlines {

namespace {

constexpr double kPad = 2.0;
constexpr double kLabelMargin = 2.0;
constexpr double kFontUnits = 1.8;  // matches the renderer's label size
constexpr double kPi = 3.14159265358979323846;

const char* const kTableau10[10] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Quartile anchors of a perceptually uniform sequential ramp (dark, low
// certainty, to light); bins interpolate linearly between them.
struct RampStop {
  double t;
  int r, g, b;
};
constexpr RampStop kCertaintyRamp[5] = {
    {0.00, 0x44, 0x01, 0x54},
    {0.25, 0x3b, 0x52, 0x8b},
    {0.50, 0x21, 0x91, 0x8c},
    {0.75, 0x5e, 0xc9, 0x62},
    {1.00, 0xfd, 0xe7, 0x25},
};

std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  int lo = 0;
  while (lo + 1 < 4 && kCertaintyRamp[lo + 1].t <= t) ++lo;
  const RampStop& a = kCertaintyRamp[lo];
  const RampStop& b = kCertaintyRamp[lo + 1];
  const double u = (t - a.t) / (b.t - a.t);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(a.r + u * (b.r - a.r))),
                static_cast<int>(std::lround(a.g + u * (b.g - a.g))),
                static_cast<int>(std::lround(a.b + u * (b.b - a.b))));
  return buf;
}

void validate(const LayoutConfig& c) {
  if (c.inner_radius < 0.0 || c.inner_radius >= 1.0) {
    throw InputError("inner radius must lie in [0,1)");
  }
  if (c.box_min_width > c.box_max_width || c.box_min_width < 0.0 ||
      c.box_max_width <= 0.0) {
    throw InputError("box widths must satisfy 0 <= min <= max, max > 0");
  }
  if (c.element_gap <= 0.0 || c.curve_gap <= 0.0) {
    throw InputError("gaps must be positive");
  }
}

double pitch(const LayoutConfig& c) { return c.box_max_width + c.element_gap; }

double axis_x(const LayoutConfig& c, int p) {
  // Compact storylines get half a pitch of margin for the curve stubs.
  const double stub = c.compact && c.layout == LayoutKind::Storyline
                          ? pitch(c) / 2.0
                          : 0.0;
  return kPad + stub + c.box_max_width / 2.0 + p * pitch(c);
}

std::vector<std::vector<int>> bin_counts(const BinMatrix& b) {
  std::vector<std::vector<int>> counts(b.cols, std::vector<int>(b.k, 0));
  for (int r = 0; r < b.rows; ++r) {
    for (int c = 0; c < b.cols; ++c) ++counts[c][b.at(r, c) - 1];
  }
  return counts;
}

double box_width(const LayoutConfig& c, int bin, int k) {
  if (c.glyph_style == GlyphStyle::ColoredUniform) return c.box_max_width;
  if (bin == 1) return 0.0;  // non-membership renders empty in stacked mode
  const double t = k > 1 ? static_cast<double>(bin - 1) / (k - 1) : 1.0;
  return c.box_min_width + t * (c.box_max_width - c.box_min_width);
}

Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point add(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point mul(Point a, double f) { return {a.x * f, a.y * f}; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Drops interior points that do not bend the path (or repeat).
std::vector<Point> simplified(const std::vector<Point>& pts, bool closed) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    if (!closed && (i == 0 || i == n - 1)) {
      out.push_back(pts[i]);
      continue;
    }
    const Point& prev = pts[(i + n - 1) % n];
    const Point& next = pts[(i + 1) % n];
    const Point vin = sub(pts[i], prev);
    const Point vout = sub(next, pts[i]);
    if (std::fabs(cross(vin, vout)) < 1e-9 &&
        vin.x * vout.x + vin.y * vout.y >= 0) {
      continue;  // straight through (or a repeated point)
    }
    out.push_back(pts[i]);
  }
  if (static_cast<int>(out.size()) < (closed ? 3 : 2)) {
    // Fully collinear: keep the extreme points.
    out.clear();
    out.push_back(pts.front());
    if (!(pts.back().x == pts.front().x && pts.back().y == pts.front().y)) {
      out.push_back(pts.back());
    }
  }
  return out;
}

struct Fillet {
  Point entry, exit;
};

Fillet fillet_at(const Point& prev, const Point& here, const Point& next,
                 double gap) {
  const Point vin = sub(here, prev);
  const Point vout = sub(next, here);
  const double lin = norm(vin);
  const double lout = norm(vout);
  const double vstep = std::max(std::fabs(vin.y), std::fabs(vout.y));
  double f = std::min(gap / 4.0, vstep / 2.0);
  f = std::min({f, lin / 2.0, lout / 2.0});
  return {add(here, mul(vin, -f / lin)), add(here, mul(vout, f / lout))};
}

std::vector<PathCmd> make_commands(const std::vector<Point>& raw,
                                   CurveStyle style, bool closed,
                                   const LayoutConfig& config) {
  std::vector<PathCmd> cmds;
  const std::vector<Point> pts = simplified(raw, closed);
  const int n = static_cast<int>(pts.size());
  if (n == 0) return cmds;
  if (n == 1 || style == CurveStyle::Polyline) {
    cmds.push_back({PathCmd::Kind::Move, pts[0], {}});
    for (int i = 1; i < n; ++i) cmds.push_back({PathCmd::Kind::Line, pts[i], {}});
    return cmds;
  }
  const double gap = config.element_gap;
  if (!closed) {
    cmds.push_back({PathCmd::Kind::Move, pts[0], {}});
    for (int i = 1; i + 1 < n; ++i) {
      const Fillet f = fillet_at(pts[i - 1], pts[i], pts[i + 1], gap);
      cmds.push_back({PathCmd::Kind::Line, f.entry, {}});
      cmds.push_back({PathCmd::Kind::Quad, f.exit, pts[i]});
    }
    cmds.push_back({PathCmd::Kind::Line, pts[n - 1], {}});
    return cmds;
  }
  std::vector<Fillet> fillets(n);
  for (int i = 0; i < n; ++i) {
    fillets[i] =
        fillet_at(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n], gap);
  }
  cmds.push_back({PathCmd::Kind::Move, fillets[0].exit, {}});
  for (int i = 1; i < n; ++i) {
    cmds.push_back({PathCmd::Kind::Line, fillets[i].entry, {}});
    cmds.push_back({PathCmd::Kind::Quad, fillets[i].exit, pts[i]});
  }
  cmds.push_back({PathCmd::Kind::Line, fillets[0].entry, {}});
  cmds.push_back({PathCmd::Kind::Quad, fillets[0].exit, pts[0]});
  return cmds;
}

double glyph_bottom(const Glyph& g) {
  double bottom = kPad;
  for (const auto& box : g.boxes) {
    bottom = std::max(bottom, box.center.y + box.height / 2.0);
  }
  return bottom;
}

}  // namespace

ColorAssignment assign_colors(int m, int k, uint64_t seed) {
  ColorAssignment out;
  std::vector<std::string> pal(kTableau10, kTableau10 + 10);
  std::mt19937_64 gen(seed);
  for (int i = 9; i > 0; --i) {
    const int j = static_cast<int>(gen() % static_cast<uint64_t>(i + 1));
    std::swap(pal[i], pal[j]);
  }
  out.curve_strokes.reserve(m);
  for (int s = 0; s < m; ++s) out.curve_strokes.push_back(pal[s % 10]);
  out.bin_fills.reserve(k);
  for (int b = 1; b <= k; ++b) {
    out.bin_fills.push_back(
        ramp_color(k > 1 ? static_cast<double>(b - 1) / (k - 1) : 1.0));
  }
  return out;
}

std::vector<Glyph> glyph_geometry(const BinMatrix& b_pi,
                                  const LayoutConfig& config,
                                  const std::vector<std::string>& fills) {
  validate(config);
  const int n = b_pi.cols;
  const int k = b_pi.k;
  const double gap = config.curve_gap;
  const auto counts = bin_counts(b_pi);
  int cmax = 1;
  for (const auto& col : counts) {
    for (int c : col) cmax = std::max(cmax, c);
  }

  std::vector<Glyph> glyphs(n);
  for (int p = 0; p < n; ++p) {
    std::vector<double> heights(k, 0.0);
    switch (config.bin_heights) {
      case BinHeights::Uniform:
        for (int b = 0; b < k; ++b) heights[b] = cmax * gap;
        break;
      case BinHeights::LocalCount:
        for (int b = 0; b < k; ++b) {
          heights[b] = std::max(1, counts[p][b]) * gap;
        }
        break;
      case BinHeights::GivenDistribution: {
        if (static_cast<int>(config.distribution.size()) != n ||
            static_cast<int>(config.distribution[p].size()) != k) {
          throw InputError("bin-height distribution must be n x k");
        }
        double sum = 0.0;
        for (double w : config.distribution[p]) {
          if (w < 0.0) throw InputError("distribution weights must be >= 0");
          sum += w;
        }
        if (sum <= 0.0) {
          throw InputError("distribution for an element is all zero");
        }
        const double total = k * cmax * gap;
        double scale = 1.0;
        for (int b = 0; b < k; ++b) {
          heights[b] = config.distribution[p][b] / sum * total;
          if (counts[p][b] > 0) {
            if (heights[b] <= 0.0) {
              throw InputError(
                  "distribution gives zero height to an occupied bin");
            }
            scale = std::max(scale, counts[p][b] * gap / heights[b]);
          }
        }
        // Scale the whole glyph so every occupied box still fits its
        // curves at curve_gap spacing; proportions stay intact.
        for (int b = 0; b < k; ++b) heights[b] *= scale;
        break;
      }
    }

    Glyph& g = glyphs[p];
    const double x = axis_x(config, p);
    double y = kPad;
    for (int b = 0; b < k; ++b) {
      GlyphBox box;
      box.bin = b + 1;
      box.height = heights[b];
      box.width = box_width(config, b + 1, k);
      box.center = {x, y + heights[b] / 2.0};
      box.fill = fills[b];
      const int c = counts[p][b];
      box.slots.reserve(c);
      for (int r = 0; r < c; ++r) {
        box.slots.push_back(
            {x, box.center.y + (r - (c - 1) / 2.0) * gap});
      }
      g.boxes.push_back(std::move(box));
      y += heights[b];
    }
  }

  double bottom = kPad;
  for (const Glyph& g : glyphs) bottom = std::max(bottom, glyph_bottom(g));
  for (int p = 0; p < n; ++p) {
    glyphs[p].label_pos = {axis_x(config, p),
                           bottom + kLabelMargin + kFontUnits};
  }
  return glyphs;
}

std::vector<SceneCurve> curve_paths(const CurveLayout& layout,
                                    const std::vector<Glyph>& glyphs,
                                    const LayoutConfig& config,
                                    const BinMatrix& b_pi) {
  const int n = b_pi.cols;
  const int m = b_pi.rows;
  std::vector<SceneCurve> curves(m);
  for (int s = 0; s < m; ++s) {
    SceneCurve& cur = curves[s];
    cur.set = s;
    cur.anchors.reserve(n);
    cur.anchor_elems.reserve(n);
    for (int p = 0; p < n; ++p) {
      const int bin = b_pi.at(s, p);
      int rank = 0;
      for (int t = 0; t < m; ++t) {
        rank += b_pi.at(t, p) == bin &&
                layout.positions[p][t] < layout.positions[p][s];
      }
      cur.anchors.push_back(glyphs[p].boxes[bin - 1].slots[rank]);
      cur.anchor_elems.push_back(p);
    }
    cur.draw_rank = n > 0 ? layout.positions[0][s] : 0;
    cur.commands =
        make_commands(cur.anchors, config.curve_style, false, config);
  }
  return curves;
}

Scene trim_curves(Scene scene, const BinMatrix& b_pi,
                  const CurveLayout& layout, const LayoutConfig& config) {
  const double half = pitch(config) / 2.0;
  for (SceneCurve& cur : scene.curves) {
    int first = -1, last = -1;
    for (size_t a = 0; a < cur.anchor_elems.size(); ++a) {
      if (b_pi.at(cur.set, cur.anchor_elems[a]) > 1) {
        if (first < 0) first = static_cast<int>(a);
        last = static_cast<int>(a);
      }
    }
    if (first < 0) {
      // Never a member anywhere; nothing to draw in compact mode.
      cur.anchors.clear();
      cur.anchor_elems.clear();
      cur.commands.clear();
      continue;
    }
    cur.anchors.assign(cur.anchors.begin() + first,
                       cur.anchors.begin() + last + 1);
    cur.anchor_elems.assign(cur.anchor_elems.begin() + first,
                            cur.anchor_elems.begin() + last + 1);
    cur.draw_rank = layout.positions[cur.anchor_elems.front()][cur.set];
    std::vector<Point> pts;
    pts.reserve(cur.anchors.size() + 2);
    pts.push_back({cur.anchors.front().x - half, cur.anchors.front().y});
    pts.insert(pts.end(), cur.anchors.begin(), cur.anchors.end());
    pts.push_back({cur.anchors.back().x + half, cur.anchors.back().y});
    cur.commands = make_commands(pts, config.curve_style, false, config);
  }
  return scene;
}

Scene star_transform(Scene scene, const LayoutConfig& config) {
  const int n = static_cast<int>(scene.glyphs.size());
  if (n < 2) {
    throw InputError("star layout needs at least 2 elements");
  }
  double depth_max = 0.0;
  double label_depth = 0.0;
  for (const Glyph& g : scene.glyphs) {
    depth_max = std::max(depth_max, glyph_bottom(g) - kPad);
    label_depth = std::max(label_depth, g.label_pos.y - kPad);
  }
  const double r_in =
      config.inner_radius / (1.0 - config.inner_radius) * depth_max;
  const double r_total = r_in + label_depth + kFontUnits;
  const Point center{kPad + r_total, kPad + r_total};

  auto place = [&](int p, Point pt) {
    const double angle = 2.0 * kPi * p / n;
    const double r = r_in + (pt.y - kPad);
    return Point{center.x + r * std::cos(angle),
                 center.y + r * std::sin(angle)};
  };

  for (int p = 0; p < n; ++p) {
    const double angle_deg = 360.0 * p / n;
    Glyph& g = scene.glyphs[p];
    for (GlyphBox& box : g.boxes) {
      box.center = place(p, box.center);
      box.rotation_deg = angle_deg - 90.0;
      for (Point& slot : box.slots) slot = place(p, slot);
    }
    g.label_pos = place(p, g.label_pos);
  }
  for (SceneCurve& cur : scene.curves) {
    for (size_t a = 0; a < cur.anchors.size(); ++a) {
      cur.anchors[a] = place(cur.anchor_elems[a], cur.anchors[a]);
    }
    cur.closed = true;
    cur.commands =
        make_commands(cur.anchors, config.curve_style, true, config);
  }
  scene.kind = LayoutKind::Star;
  scene.width = scene.height = 2.0 * (r_total + kPad);
  return scene;
}

Scene build_scene(const BinMatrix& b, const CurveLayout& layout,
                  const LayoutConfig& config,
                  const std::vector<std::string>& element_names,
                  const std::vector<std::string>& set_names,
                  uint64_t color_seed) {
  validate(config);
  if (static_cast<int>(element_names.size()) != b.cols ||
      static_cast<int>(set_names.size()) != b.rows) {
    throw InputError("name lists do not match the matrix shape");
  }
  const auto& pi = layout.element_order.pi;

  BinMatrix b_pi(b.rows, b.cols, b.k);
  for (int r = 0; r < b.rows; ++r) {
    for (int p = 0; p < b.cols; ++p) b_pi.at(r, p) = b.at(r, pi[p]);
  }

  LayoutConfig local = config;
  if (config.bin_heights == BinHeights::GivenDistribution) {
    if (static_cast<int>(config.distribution.size()) != b.cols) {
      throw InputError("bin-height distribution must have one row per element");
    }
    local.distribution.clear();
    for (int p = 0; p < b.cols; ++p) {
      local.distribution.push_back(config.distribution[pi[p]]);
    }
  }

  const ColorAssignment colors = assign_colors(b.rows, b.k, color_seed);

  Scene scene;
  scene.kind = config.layout;
  scene.set_names = set_names;
  scene.palette = colors.curve_strokes;
  scene.certainty_colors = colors.bin_fills;
  scene.glyphs = glyph_geometry(b_pi, local, colors.bin_fills);
  for (int p = 0; p < b.cols; ++p) {
    scene.glyphs[p].label = element_names[pi[p]];
  }
  scene.curves = curve_paths(layout, scene.glyphs, local, b_pi);
  for (SceneCurve& cur : scene.curves) cur.color = colors.curve_strokes[cur.set];

  if (config.layout == LayoutKind::Storyline) {
    if (config.compact) scene = trim_curves(std::move(scene), b_pi, layout, local);
    double right = 0.0, bottom = 0.0;
    for (const Glyph& g : scene.glyphs) {
      right = std::max(right, g.label_pos.x +
                                  0.35 * kFontUnits * g.label.size());
      for (const GlyphBox& box : g.boxes) {
        right = std::max(right, box.center.x + box.width / 2.0);
      }
      bottom = std::max(bottom, g.label_pos.y);
    }
    for (const SceneCurve& cur : scene.curves) {
      for (const PathCmd& cmd : cur.commands) {
        right = std::max(right, cmd.to.x);
      }
    }
    scene.width = right + kPad;
    scene.height = bottom + kPad;
  } else {
    scene = star_transform(std::move(scene), local);
  }
  return scene;
}

std::string scene_to_json(const Scene& scene) {
  nlohmann::json j;
  j["kind"] = scene.kind == LayoutKind::Star ? "star" : "storyline";
  j["width"] = scene.width;
  j["height"] = scene.height;
  j["colors"] = {{"palette", scene.palette},
                 {"certainty", scene.certainty_colors}};
  auto point = [](const Point& p) {
    return nlohmann::json::array({p.x, p.y});
  };
  j["glyphs"] = nlohmann::json::array();
  for (const Glyph& g : scene.glyphs) {
    nlohmann::json jg;
    jg["label"] = g.label;
    jg["label_pos"] = point(g.label_pos);
    jg["boxes"] = nlohmann::json::array();
    for (const GlyphBox& box : g.boxes) {
      nlohmann::json jb;
      jb["bin"] = box.bin;
      jb["center"] = point(box.center);
      jb["width"] = box.width;
      jb["height"] = box.height;
      jb["rotation"] = box.rotation_deg;
      jb["fill"] = box.fill;
      jb["slots"] = nlohmann::json::array();
      for (const Point& s : box.slots) jb["slots"].push_back(point(s));
      jg["boxes"].push_back(std::move(jb));
    }
    j["glyphs"].push_back(std::move(jg));
  }
  j["curves"] = nlohmann::json::array();
  for (const SceneCurve& c : scene.curves) {
    nlohmann::json jc;
    jc["set"] = c.set;
    jc["color"] = c.color;
    jc["closed"] = c.closed;
    jc["anchors"] = nlohmann::json::array();
    for (const Point& a : c.anchors) jc["anchors"].push_back(point(a));
    j["curves"].push_back(std::move(jc));
  }
  return j.dump();
}

}  // namespace setlines
