#pragma once

#include <string>
#include <utility>
#include <vector>

#include "setlines/layout.hpp"

namespace setlines {

struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlNode> children;
  std::string text;
};

// Self-contained SVG 1.1 document; identical scenes and options serialize
// to byte-identical files.
struct SvgDocument {
  int width = 0;
  int height = 0;
  XmlNode root;

  std::string to_string() const;
  void save(const std::string& path) const;
};

SvgDocument render_svg(const Scene& scene, double scale, bool show_legend);

}  // namespace setlines
