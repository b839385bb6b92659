#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pvit/assets.hpp"
#include "pvit/backends.hpp"
#include "pvit/config.hpp"
#include "pvit/geometry.hpp"

namespace pvit {

// One detected individual: the person/face box pair plus the crops (and any
// generated identity variants) that later stages reference.
struct PersonConcept {
  std::string person_id;  // "<scene_id>/p<index>", unique within a scene
  BBox person_box;
  BBox face_box;
  ImageRef person_crop;
  ImageRef face_crop;
  std::vector<ImageRef> augmented;
  bool quota_warning = false;

  bool operator==(const PersonConcept&) const = default;
};

struct SceneRecord {
  std::string scene_id;
  ImageRef image;
  std::vector<PersonConcept> persons;
  int person_count = 0;
  bool no_persons = false;    // kept for audit; synthesis skips it
  int merged_detections = 0;  // overlap-suppression audit counters
  int excluded_faceless = 0;

  bool operator==(const SceneRecord&) const = default;
};

struct CompositeScene {
  ImageRef image;
  std::vector<std::string> slots;  // ground-truth person_id per position
  std::vector<BBox> slot_boxes;    // tile the composite exactly, left to right
};

// Injective face->person matching: each face goes to the person box holding
// the largest fraction of its area (>= threshold); ties prefer the larger
// person box, then the lower person index. Faces whose best person is taken
// stay unmatched. Returns (person_idx, face_idx) pairs.
std::vector<std::pair<int, int>> associate_faces(const std::vector<BBox>& person_boxes,
                                                 const std::vector<BBox>& face_boxes,
                                                 double containment_threshold = 0.9);

// Box expanded by margin_frac of its own size per side, then clamped.
BBox expand_box(const BBox& box, double margin_frac, int image_w, int image_h);

ImageRef crop_region(const AssetStore& store, const ImageRef& image, const BBox& box,
                     double margin_frac, const std::string& rel_out);

// Detect persons, bind faces, drop faceless detections, write crops.
SceneRecord identify_persons(Backends& backends, const AssetStore& store,
                             const std::string& scene_id, const std::filesystem::path& scene_src,
                             const CurationConfig& cfg);

// Extends subject.augmented by n generated variants. QuotaExceeded degrades
// to the unchanged subject with quota_warning set.
PersonConcept augment_person(Backends& backends, PersonConcept subject, int n, std::uint64_t seed);

// k distinct concepts resized to the minimum crop height and concatenated
// left to right in rng order. Throws InsufficientPersons when |concepts| < k.
CompositeScene compose_scene(const AssetStore& store, const std::vector<PersonConcept>& concepts,
                             int k, Rng& rng, const std::string& rel_out);

// --- manifest (scenes.jsonl) ---

void to_json(nlohmann::json& j, const ImageRef& ref);
void from_json(const nlohmann::json& j, ImageRef& ref);
void to_json(nlohmann::json& j, const BBox& box);
void from_json(const nlohmann::json& j, BBox& box);
void to_json(nlohmann::json& j, const PersonConcept& p);
void from_json(const nlohmann::json& j, PersonConcept& p);
void to_json(nlohmann::json& j, const SceneRecord& s);
void from_json(const nlohmann::json& j, SceneRecord& s);

void write_scene_manifest(const std::filesystem::path& path, const std::vector<SceneRecord>& scenes);
std::vector<SceneRecord> read_scene_manifest(const std::filesystem::path& path);

}  // namespace pvit
