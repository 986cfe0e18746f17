#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdpc/geometry.hpp"

namespace mdpc {

using PickId = std::uint32_t;

inline constexpr PickId kBackgroundId = 0;
inline constexpr PickId kMaxPickId = 0xFFFFFF;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Throws IdOverflow for id > 2^24 - 1.
Rgb encode_id(PickId id);
PickId decode_id(Rgb rgb);

// An invisible (by default) graphical object reifying a spatial mode.
// `transform` maps the shape's own coordinates to buffer pixels.
struct PickObject {
  PickId id = kBackgroundId;
  Shape shape;
  int z = 0;
  std::string tag;
  bool visible = false;
  Affine2 transform;
};

class PickBuffer {
 public:
  PickBuffer() = default;
  PickBuffer(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const PickId> pixels() const { return pixels_; }

  PickId at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
  void set(int x, int y, PickId id) { pixels_[static_cast<std::size_t>(y) * width_ + x] = id; }
  bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  // Binary PPM (P6, maxval 255), one encode_id color per pixel.
  std::string to_ppm() const;
  void write_ppm(const std::filesystem::path& path) const;

  friend bool operator==(const PickBuffer&, const PickBuffer&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<PickId> pixels_;
};

// Each pixel receives the id of the highest-z object containing the pixel
// center (x + 0.5, y + 0.5); equal z resolves to the later object.
// Throws DuplicateId, or IdOverflow for ids outside [1, 2^24 - 1].
PickBuffer rasterize(std::span<const PickObject> objects, int width, int height);

// Id at pixel (floor(p.x), floor(p.y)); 0 outside the buffer.
PickId pick(const PickBuffer& buf, Point p);

enum class CrossingKind { Enter, Leave };

struct Crossing {
  CrossingKind kind;
  PickId id;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Leave(prev) before Enter(next); background never produces a crossing.
std::vector<Crossing> synthesize_crossings(PickId prev, PickId next);

// Ids derived from tags: an object keeps its color across frames with no
// retained registry. Collisions probe forward in list order.
PickId stable_pick_id(std::string_view tag);
void assign_stable_ids(std::vector<PickObject>& objects);

}  // namespace mdpc
