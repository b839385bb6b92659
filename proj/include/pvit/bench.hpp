#pragma once

#include <json.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pvit/backends.hpp"
#include "pvit/curation.hpp"
#include "pvit/extraction.hpp"
#include "pvit/synthesis.hpp"

namespace pvit {

enum class BenchType {
  crop,
  aug_in,
  aug_sc_2,
  aug_sc_3,
  adv_image,
  adv_name,
  desc_answerable,
  desc_adv_image,
  desc_adv_name,
};

const char* bench_type_name(BenchType type);
BenchType bench_type_from_name(const std::string& name);
std::string bench_type_display(BenchType type);  // "Aug-Sc-2" style
bool bench_type_is_mc(BenchType type);
bool bench_type_is_description(BenchType type);
bool bench_type_is_adversarial(BenchType type);

struct BenchItem {
  std::string item_id;
  BenchType bench_type = BenchType::crop;
  std::vector<PrefixEntry> prefix;
  ImageRef scene;
  std::string question;
  std::vector<std::string> choices;  // MC items: exactly 4
  std::string gold;                  // choice letter, "REFUSE", or "" (scored by similarity)
  int person_count = 0;
  ImageRef target_person_image;  // description scoring target
  std::string target_name;
  std::vector<std::string> scene_person_ids;
};

struct BenchManifest {
  std::vector<BenchItem> items;

  std::map<std::string, long> counts_by_type() const;
};

struct BenchStats {
  std::map<std::string, long> by_type;
  long mc_total = 0;
  long desc_total = 0;
  std::map<int, long> crop_person_hist;             // 1,2,3,4 (4 holds >=4)
  std::map<int, long> desc_answerable_person_hist;  // same buckets
};

// Appendix-style composition used when no explicit quotas are configured:
// proportional largest-remainder scaling of the published per-type counts.
const std::map<std::string, int>& reference_bench_composition();
std::map<std::string, int> scale_bench_quotas(int total);

struct BenchBuildInputs {
  const AssetStore* store = nullptr;
  Backends* backends = nullptr;
  const PromptLibrary* prompts = nullptr;
  std::vector<SceneRecord> scenes;           // curated bench scenes
  std::vector<DualLevelInfo> infos;          // extraction output for those scenes
  const NamePool* pool = nullptr;
  std::map<std::string, int> quotas;         // per bench type
  std::set<std::string> train_scene_hashes;  // disjointness precondition
  std::uint64_t master_seed = 0;
  std::filesystem::path review_dir;          // empty disables the export
};

BenchManifest build_bench(const BenchBuildInputs& in);

BenchStats bench_stats(const BenchManifest& manifest);
std::string render_bench_stats(const BenchStats& stats);

// Invariant + adversarial-soundness report; empty means clean.
std::vector<std::string> validate_bench(const BenchManifest& manifest);

void to_json(nlohmann::json& j, const BenchItem& item);
void from_json(const nlohmann::json& j, BenchItem& item);

void write_bench_manifest(const std::filesystem::path& path, const BenchManifest& manifest);
BenchManifest read_bench_manifest(const std::filesystem::path& path);

}  // namespace pvit
