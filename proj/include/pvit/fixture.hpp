#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvit/backends.hpp"
#include "pvit/image.hpp"

namespace pvit {

// Scripted ground truth for fixture scenes, written next to the images as
// annotations.json and keyed by content hash. This file is the oracle the
// fixture detect/caption transports answer from.
struct FixtureAnnotations {
  struct Ann {
    BBox box;
    double score = 1.0;
  };
  struct Entry {
    std::string rel_path;
    std::vector<Ann> persons;
    std::vector<Ann> faces;
  };

  std::map<std::string, Entry> by_hash;

  static FixtureAnnotations load(const std::filesystem::path& dir);
  static FixtureAnnotations load_file(const std::filesystem::path& file);
  void save(const std::filesystem::path& dir) const;

  const Entry* find(const std::string& content_hash) const;
};

// Wardrobe palette shared by the scene painter and the fixture captioner.
// Shirts are painted in exact palette colors so descriptions derived from
// pixel statistics agree with the rendered scene.
struct PaletteEntry {
  const char* color;
  std::uint8_t r, g, b;
  const char* noun;  // distinct per entry so fusion never has to disambiguate
};
const std::vector<PaletteEntry>& fixture_palette();

// Pixel-derived deterministic texts.
std::string fixture_personal_description(const Image& crop);
std::string fixture_holistic_description(const Image& scene,
                                         const std::vector<FixtureAnnotations::Ann>& persons);

// The fusion rule: locate the figure in `holistic` whose wardrobe color
// matches `personal`, then rewrite every mention of that figure as the
// placeholder. Returns holistic unchanged when no figure matches.
std::string fixture_fuse(const std::string& personal, const std::string& holistic);

// Word-overlap similarity in [0,1]; 1.0 exactly when the token sets match.
double fixture_similarity(const Image& image, const std::string& text);

// Test helper: wraps a transport so the first `failures` calls throw
// BackendUnreachable; counts every attempt.
class FaultInjectingTransport : public Transport {
 public:
  FaultInjectingTransport(std::shared_ptr<Transport> inner, int failures)
      : inner_(std::move(inner)), failures_(failures) {}

  std::string perform(const CallRequest& req) override;
  int attempts() const { return attempts_; }

 private:
  std::shared_ptr<Transport> inner_;
  int failures_;
  std::atomic<int> attempts_{0};
};

}  // namespace pvit
