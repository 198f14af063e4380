#include "setlines/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

namespace setlines {

namespace {

constexpr double kStrokeWidth = 2.5;
constexpr double kFontUnits = 1.8;  // matches the layout's label allowance
constexpr double kLegendFontPx = 12.0;
constexpr double kLegendRowPx = 18.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return buf + 1;
  return buf;
}

std::string xy(const Point& p, double scale) {
  return fmt(p.x * scale) + "," + fmt(p.y * scale);
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void serialize(const XmlNode& node, std::string& out) {
  out += '<';
  out += node.name;
  for (const auto& [key, value] : node.attrs) {
    out += ' ';
    out += key;
    out += "=\"";
    out += escape(value);
    out += '"';
  }
  if (node.children.empty() && node.text.empty()) {
    out += "/>\n";
    return;
  }
  out += '>';
  if (!node.text.empty()) {
    out += escape(node.text);
  } else {
    out += '\n';
    for (const XmlNode& child : node.children) serialize(child, out);
  }
  out += "</";
  out += node.name;
  out += ">\n";
}

std::string path_data(const SceneCurve& curve, double scale) {
  std::string d;
  for (const PathCmd& cmd : curve.commands) {
    switch (cmd.kind) {
      case PathCmd::Kind::Move:
        d += "M " + xy(cmd.to, scale);
        break;
      case PathCmd::Kind::Line:
        d += " L " + xy(cmd.to, scale);
        break;
      case PathCmd::Kind::Quad:
        d += " Q " + xy(cmd.ctrl, scale) + " " + xy(cmd.to, scale);
        break;
    }
  }
  if (curve.closed) d += " Z";
  return d;
}

}  // namespace

std::string SvgDocument::to_string() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  serialize(root, out);
  return out;
}

void SvgDocument::save(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write file: " + path);
  file << to_string();
}

SvgDocument render_svg(const Scene& scene, double scale, bool show_legend) {
  if (scale <= 0.0) throw InputError("scale must be positive");

  double legend_w = 0.0;
  if (show_legend) {
    size_t chars = 0;
    for (const std::string& name : scene.set_names) {
      chars = std::max(chars, name.size());
    }
    legend_w = 16.0 + 0.62 * kLegendFontPx * static_cast<double>(chars);
  }

  SvgDocument doc;
  doc.width = static_cast<int>(std::ceil(scene.width * scale + legend_w));
  doc.height = static_cast<int>(std::ceil(std::max(
      scene.height * scale,
      show_legend ? kLegendRowPx * (scene.set_names.size() + 1) : 0.0)));

  XmlNode& svg = doc.root;
  svg.name = "svg";
  svg.attrs = {{"xmlns", "http://www.w3.org/2000/svg"},
               {"width", std::to_string(doc.width)},
               {"height", std::to_string(doc.height)},
               {"viewBox", "0 0 " + std::to_string(doc.width) + " " +
                               std::to_string(doc.height)}};

  if (show_legend) {
    XmlNode legend;
    legend.name = "g";
    legend.attrs = {{"font-family", "sans-serif"},
                    {"font-size", fmt(kLegendFontPx)}};
    for (size_t i = 0; i < scene.set_names.size(); ++i) {
      XmlNode entry;
      entry.name = "text";
      entry.attrs = {{"x", fmt(8.0)},
                     {"y", fmt(kLegendRowPx * (i + 1))},
                     {"fill", scene.palette[i % scene.palette.size()]},
                     {"font-weight", "bold"}};
      entry.text = scene.set_names[i];
      legend.children.push_back(std::move(entry));
    }
    svg.children.push_back(std::move(legend));
  }

  XmlNode content;
  content.name = "g";
  content.attrs = {{"transform", "translate(" + fmt(legend_w) + ",0)"}};

  for (const Glyph& glyph : scene.glyphs) {
    XmlNode group;
    group.name = "g";
    for (const GlyphBox& box : glyph.boxes) {
      XmlNode rect;
      rect.name = "rect";
      const double w = box.width * scale;
      const double h = box.height * scale;
      const double cx = box.center.x * scale;
      const double cy = box.center.y * scale;
      rect.attrs = {{"x", fmt(cx - w / 2.0)}, {"y", fmt(cy - h / 2.0)},
                    {"width", fmt(w)},        {"height", fmt(h)},
                    {"fill", box.fill}};
      if (box.rotation_deg != 0.0) {
        rect.attrs.push_back({"transform", "rotate(" + fmt(box.rotation_deg) +
                                               " " + fmt(cx) + " " + fmt(cy) +
                                               ")"});
      }
      group.children.push_back(std::move(rect));
    }
    XmlNode label;
    label.name = "text";
    label.attrs = {{"x", fmt(glyph.label_pos.x * scale)},
                   {"y", fmt(glyph.label_pos.y * scale)},
                   {"text-anchor", "middle"},
                   {"font-family", "sans-serif"},
                   {"font-size", fmt(kFontUnits * scale)}};
    label.text = glyph.label;
    group.children.push_back(std::move(label));
    content.children.push_back(std::move(group));
  }

  // Curves go on top of the glyphs; overdraw order follows the vertical
  // slot at each curve's first element.
  std::vector<int> order(scene.curves.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scene.curves[a].draw_rank < scene.curves[b].draw_rank;
  });
  for (int idx : order) {
    const SceneCurve& curve = scene.curves[idx];
    if (curve.commands.empty()) continue;
    XmlNode path;
    path.name = "path";
    path.attrs = {{"d", path_data(curve, scale)},
                  {"fill", "none"},
                  {"stroke", curve.color},
                  {"stroke-width", fmt(kStrokeWidth)},
                  {"stroke-linejoin", "round"},
                  {"stroke-linecap", "round"}};
    content.children.push_back(std::move(path));
  }

  svg.children.push_back(std::move(content));
  return doc;
}

}  // namespace setlines
