#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mdpc/geometry.hpp"
#include "mdpc/picking.hpp"

namespace mdpc {

struct RectGeom {
  double x = 0, y = 0, w = 0, h = 0;
  friend bool operator==(const RectGeom&, const RectGeom&) = default;
};
struct CircleGeom {
  double cx = 0, cy = 0, r = 0;
  friend bool operator==(const CircleGeom&, const CircleGeom&) = default;
};
struct LineGeom {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0, width = 1;
  friend bool operator==(const LineGeom&, const LineGeom&) = default;
};
struct TextGeom {
  double x = 0, y = 0;
  std::string text;
  double size = 12;
  friend bool operator==(const TextGeom&, const TextGeom&) = default;
};

using DrawGeom = std::variant<RectGeom, CircleGeom, LineGeom, TextGeom>;

enum class Layer { Display, PickingDebug };

struct DrawCmd {
  DrawGeom geom;
  std::string fill = "#000000";
  int z = 0;
  std::string tag;
  Layer layer = Layer::Display;
  // Applied by the frontend to the geometry (canvas setTransform order).
  Affine2 transform;

  friend bool operator==(const DrawCmd&, const DrawCmd&) = default;
};

std::string hex_color(Rgb c);

// One flat-colored command per picking object, colored by its encoded id.
std::vector<DrawCmd> picking_debug_view(std::span<const PickObject> objects);

// Stable field order: shape, geometry, fill, z, tag, layer, transform.
nlohmann::ordered_json to_json(const DrawCmd& cmd);
nlohmann::ordered_json to_json(std::span<const DrawCmd> cmds);
std::string display_json(std::span<const DrawCmd> cmds);

}  // namespace mdpc
