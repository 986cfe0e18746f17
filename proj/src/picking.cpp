#include "mdpc/picking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "mdpc/errors.hpp"

namespace mdpc {

Rgb encode_id(PickId id) {
  if (id > kMaxPickId) {
    throw IdOverflow("pick id " + std::to_string(id) + " does not fit in 24 bits");
  }
  return {static_cast<std::uint8_t>((id >> 16) & 0xFF), static_cast<std::uint8_t>((id >> 8) & 0xFF),
          static_cast<std::uint8_t>(id & 0xFF)};
}

PickId decode_id(Rgb rgb) {
  return (PickId{rgb.r} << 16) | (PickId{rgb.g} << 8) | PickId{rgb.b};
}

PickBuffer::PickBuffer(int width, int height)
    : width_(std::max(width, 0)),
      height_(std::max(height, 0)),
      pixels_(static_cast<std::size_t>(width_) * height_, kBackgroundId) {}

std::string PickBuffer::to_ppm() const {
  std::string header = "P6\n" + std::to_string(width_) + " " + std::to_string(height_) + "\n255\n";
  std::string out;
  out.reserve(header.size() + pixels_.size() * 3);
  out += header;
  for (PickId id : pixels_) {
    const Rgb c = encode_id(id);
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

void PickBuffer::write_ppm(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  const std::string data = to_ppm();
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

namespace {

void check_ids(std::span<const PickObject> objects) {
  std::unordered_set<PickId> seen;
  seen.reserve(objects.size());
  for (const auto& o : objects) {
    if (o.id == kBackgroundId || o.id > kMaxPickId) {
      throw IdOverflow("pick id " + std::to_string(o.id) + " (tag '" + o.tag + "') is outside [1, 2^24-1]");
    }
    if (!seen.insert(o.id).second) {
      throw DuplicateId("pick id " + std::to_string(o.id) + " (tag '" + o.tag + "') appears twice");
    }
  }
}

// Pixel-space bounding box of a transformed shape.
Rect pixel_bounds(const PickObject& o) {
  const Rect b = bounds(o.shape);
  if (o.transform.is_identity()) {
    return b;
  }
  const Point corners[] = {{b.x, b.y}, {b.right(), b.y}, {b.x, b.bottom()}, {b.right(), b.bottom()}};
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (Point c : corners) {
    const Point q = o.transform(c);
    x0 = std::min(x0, q.x);
    y0 = std::min(y0, q.y);
    x1 = std::max(x1, q.x);
    y1 = std::max(y1, q.y);
  }
  return {x0, y0, x1 - x0, y1 - y0};
}

void paint(PickBuffer& buf, const PickObject& o) {
  const Rect b = pixel_bounds(o);
  if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.w) || !std::isfinite(b.h)) {
    return;
  }
  // One pixel of slack on each side; contains() decides.
  const int x0 = static_cast<int>(std::max(std::floor(b.x) - 1.0, 0.0));
  const int y0 = static_cast<int>(std::max(std::floor(b.y) - 1.0, 0.0));
  const int x1 = static_cast<int>(std::min(std::ceil(b.right()) + 1.0, double(buf.width())));
  const int y1 = static_cast<int>(std::min(std::ceil(b.bottom()) + 1.0, double(buf.height())));
  const bool plain = o.transform.is_identity();
  const Affine2 inv = plain ? Affine2{} : affine_invert(o.transform);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      Point center{x + 0.5, y + 0.5};
      if (!plain) {
        center = inv(center);
      }
      if (contains(o.shape, center)) {
        buf.set(x, y, o.id);
      }
    }
  }
}

}  // namespace

PickBuffer rasterize(std::span<const PickObject> objects, int width, int height) {
  check_ids(objects);
  PickBuffer buf(width, height);
  std::vector<std::size_t> order(objects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return objects[a].z < objects[b].z; });
  for (std::size_t i : order) {
    paint(buf, objects[i]);
  }
  return buf;
}

PickId pick(const PickBuffer& buf, Point p) {
  if (!is_finite(p)) {
    return kBackgroundId;
  }
  const double fx = std::floor(p.x);
  const double fy = std::floor(p.y);
  if (fx < 0 || fy < 0 || fx >= buf.width() || fy >= buf.height()) {
    return kBackgroundId;
  }
  return buf.at(static_cast<int>(fx), static_cast<int>(fy));
}

std::vector<Crossing> synthesize_crossings(PickId prev, PickId next) {
  std::vector<Crossing> out;
  if (prev == next) {
    return out;
  }
  if (prev != kBackgroundId) {
    out.push_back({CrossingKind::Leave, prev});
  }
  if (next != kBackgroundId) {
    out.push_back({CrossingKind::Enter, next});
  }
  return out;
}

PickId stable_pick_id(std::string_view tag) {
  // FNV-1a folded to 24 bits.
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 16777619u;
  }
  PickId id = (h >> 24) ^ (h & kMaxPickId);
  return id == kBackgroundId ? 1 : id;
}

void assign_stable_ids(std::vector<PickObject>& objects) {
  std::unordered_set<PickId> used;
  used.reserve(objects.size());
  for (auto& o : objects) {
    PickId id = stable_pick_id(o.tag);
    while (!used.insert(id).second) {
      id = id >= kMaxPickId ? 1 : id + 1;
    }
    o.id = id;
  }
}

}  // namespace mdpc
