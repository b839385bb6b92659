#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pvit/image.hpp"

namespace pvit {

// Reference to an image on disk. `path` is relative to the owning run root;
// `content_hash` is the sha256 of the encoded bytes on disk.
struct ImageRef {
  std::string path;
  std::string content_hash;
  int width = 0;
  int height = 0;

  bool operator==(const ImageRef&) const = default;
  bool empty() const { return path.empty(); }
};

// All run artifacts live under one root; every ImageRef is relative to it.
// Writes are canonical-encode + atomic rename, so rewriting the same pixels
// always produces the same bytes and the same content hash.
class AssetStore {
 public:
  explicit AssetStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path resolve(const std::string& rel_path) const { return root_ / rel_path; }

  ImageRef write_image(const Image& img, const std::string& rel_path) const;

  // Copies an outside image into the store, re-encoding canonically.
  ImageRef import_image(const std::filesystem::path& src, const std::string& rel_path) const;

  // Makes a ref for a file already under the root (hashes the bytes as-is).
  ImageRef ref_existing(const std::string& rel_path) const;

  Image load(const ImageRef& ref, bool verify_hash = true) const;
  std::vector<std::uint8_t> read_bytes(const ImageRef& ref, bool verify_hash = true) const;

 private:
  std::filesystem::path root_;
};

}  // namespace pvit
