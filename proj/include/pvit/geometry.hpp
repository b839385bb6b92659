#pragma once

#include <algorithm>
#include <cstdint>

namespace pvit {

// Axis-aligned pixel box. Origin top-left, width/height in pixels.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const BBox&) const = default;

  long long area() const { return static_cast<long long>(w) * h; }
  bool valid() const { return w >= 1 && h >= 1; }

  BBox clamped(int image_w, int image_h) const {
    int x0 = std::clamp(x, 0, image_w);
    int y0 = std::clamp(y, 0, image_h);
    int x1 = std::clamp(x + w, 0, image_w);
    int y1 = std::clamp(y + h, 0, image_h);
    return BBox{x0, y0, x1 - x0, y1 - y0};
  }

  bool contains(const BBox& inner) const {
    return inner.x >= x && inner.y >= y && inner.x + inner.w <= x + w && inner.y + inner.h <= y + h;
  }
};

inline long long intersection_area(const BBox& a, const BBox& b) {
  long long x0 = std::max(a.x, b.x);
  long long y0 = std::max(a.y, b.y);
  long long x1 = std::min(a.x + a.w, b.x + b.w);
  long long y1 = std::min(a.y + a.h, b.y + b.h);
  if (x1 <= x0 || y1 <= y0) return 0;
  return (x1 - x0) * (y1 - y0);
}

inline double iou(const BBox& a, const BBox& b) {
  long long inter = intersection_area(a, b);
  long long uni = a.area() + b.area() - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

// Fraction of b's area covered by a.
inline double containment_fraction(const BBox& a, const BBox& b) {
  if (b.area() <= 0) return 0.0;
  return static_cast<double>(intersection_area(a, b)) / static_cast<double>(b.area());
}

}  // namespace pvit
