#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pvit/backends.hpp"
#include "pvit/curation.hpp"
#include "pvit/prompts.hpp"

namespace pvit {

// Per-person description triple. `personal` and `fused` carry the literal
// "<name>" placeholder; `holistic` never does — name binding happens only at
// synthesis time.
struct DualLevelInfo {
  std::string scene_id;
  std::string person_id;
  std::string personal;
  std::string holistic;
  std::string fused;

  bool operator==(const DualLevelInfo&) const = default;
};

// True when every placeholder-looking token "<word>" is exactly "<name>".
bool placeholder_clean(const std::string& text);

void validate_dual_level(const DualLevelInfo& info);

// Describes the person crop; one retry with a reinforcement suffix when the
// placeholder is missing, then Err::PlaceholderMissing.
std::string extract_personal_info(Backends& backends, const PromptLibrary& prompts,
                                  const PersonConcept& subject);

std::string extract_holistic_info(Backends& backends, const PromptLibrary& prompts,
                                  const SceneRecord& scene);

// Rewrites the holistic text with the placeholder marking the matched person.
// Throws Err::FusionDegenerate when the model returns the holistic text
// unchanged, Err::PlaceholderMissing when the placeholder never appears.
std::string fuse_info(Backends& backends, const PromptLibrary& prompts, const std::string& personal,
                      const std::string& holistic, std::uint64_t seed);

// Full phase over one scene. Persons whose fusion degenerates are dropped
// (returned in `dropped` when non-null) rather than guessed at.
std::vector<DualLevelInfo> extract_dual_level(Backends& backends, const PromptLibrary& prompts,
                                              const SceneRecord& scene, std::uint64_t master_seed,
                                              std::vector<std::string>* dropped = nullptr);

void to_json(nlohmann::json& j, const DualLevelInfo& info);
void from_json(const nlohmann::json& j, DualLevelInfo& info);

void write_info_manifest(const std::filesystem::path& path, const std::vector<DualLevelInfo>& infos);
std::vector<DualLevelInfo> read_info_manifest(const std::filesystem::path& path);

}  // namespace pvit
