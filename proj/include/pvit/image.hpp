#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pvit/geometry.hpp"

namespace pvit {

// In-memory RGB8 raster, row-major, 3 bytes per pixel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  static Image filled(int w, int h, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  std::uint8_t* pixel(int x, int y) { return rgb.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
  const std::uint8_t* pixel(int x, int y) const {
    return rgb.data() + 3 * (static_cast<std::size_t>(y) * width + x);
  }

  void fill_rect(const BBox& box, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  bool operator==(const Image&) const = default;
};

// --- codecs ---
//
// PNG writing is canonical: fixed chunking, filter 0 on every row, and a
// stored-block zlib stream, so the encoded bytes depend only on the pixels.
// That keeps content hashes stable across zlib versions and platforms, which
// the resumable cache and the determinism contract both rely on. Decoding
// accepts any non-interlaced 8-bit gray/RGB/RGBA PNG (inflate via zlib).

std::vector<std::uint8_t> encode_png(const Image& img);
Image decode_png(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> encode_ppm(const Image& img);
Image decode_ppm(const std::vector<std::uint8_t>& bytes);

// Dispatches on file extension (.png / .ppm). Throws Err::ImageDecode.
Image load_image(const std::filesystem::path& path);
std::vector<std::uint8_t> encode_image(const Image& img, const std::filesystem::path& path_hint);

// --- raster ops ---

Image crop_image(const Image& img, const BBox& box);
Image resize_nearest(const Image& img, int new_w, int new_h);
Image hconcat(const std::vector<Image>& parts);  // all parts must share a height

// Width after scaling to target height, preserving aspect ratio (round half up).
int scaled_width(int w, int h, int target_h);

}  // namespace pvit
