#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvit/backends.hpp"
#include "pvit/curation.hpp"
#include "pvit/extraction.hpp"
#include "pvit/prompts.hpp"
#include "pvit/serializer.hpp"

namespace pvit {

enum class QAKind {
  description,
  freeform,
  multichoice,
  pronoun_description,
  x_person_description,
  personalized_holistic,
  reasoning,
  witty,
  adv_name,
  adv_image,
};

const char* kind_name(QAKind kind);
QAKind kind_from_name(const std::string& name);
bool kind_is_adversarial(QAKind kind);
bool kind_uses_llm(QAKind kind);  // template generation goes through the LLM

struct QATemplate {
  QAKind kind = QAKind::description;
  std::string question;
  std::string answer;
  std::vector<std::string> choices;       // multichoice: exactly 4, answer among them once
  std::vector<std::string> placeholders;  // distinct placeholder tokens used

  bool operator==(const QATemplate&) const = default;
};

struct NamePool {
  std::vector<std::string> names;

  static NamePool load(const std::filesystem::path& path);
  void validate() const;  // unique, non-empty entries
};

struct TrainingInstance {
  std::string instance_id;
  std::vector<PrefixEntry> prefix;
  ImageRef scene;
  std::string query;
  std::string response;
  QAKind kind = QAKind::description;
  bool answerable = true;
  std::string serialized;
  SupervisionSpan supervision;
  std::string target_name;                   // bound name (or relation phrase) the query is about
  int person_count = 0;                      // people visible in the scene image
  std::vector<std::string> scene_person_ids; // persons actually in the scene image
};

// --- template generation and parsing ---

// Tolerant extraction of "[[{...}]]"-style object arrays: normalizes quote
// styles (curly quotes, double backticks), brace-matches each object, and
// drops items violating the four-choice invariant. Throws Err::ParseFailure
// when no object can be extracted at all.
std::vector<QATemplate> parse_mc_response(const std::string& text);
std::vector<QATemplate> parse_qa_response(const std::string& text, QAKind kind);

// LLM-backed kinds only (multichoice, freeform, description,
// personalized_holistic, reasoning, witty). One retry on ParseFailure;
// Err::NoTemplates when every parsed item was dropped.
std::vector<QATemplate> generate_qa_templates(Backends& backends, const PromptLibrary& prompts,
                                              const DualLevelInfo& info, QAKind kind,
                                              std::uint64_t seed);

// --- names, pronouns, instantiation ---

// Distinct pool names for the given persons, repeatable under the rng seed.
std::map<std::string, std::string> bind_names(const std::vector<std::string>& person_ids,
                                              const NamePool& pool, Rng& rng);

// 12 kinship phrases, first-person -> second-person.
const std::map<std::string, std::string>& pronoun_lexicon();

// Replaces "<name>", capitalizing the replacement at sentence starts.
std::string replace_placeholder(const std::string& text, const std::string& replacement);

struct Instantiated {
  std::string query;          // full model input; multichoice renders the choices
  std::string bare_question;  // question text without the rendered choice lines
  std::string response;
  std::vector<std::string> choices;  // shuffled; multichoice only
  std::string gold_letter;           // "A".."D"; multichoice only
};

// Substitutes the assignment into the template. Multichoice templates render
// the (rng-shuffled) choices into the query and record the gold letter.
// Throws Err::UnboundPlaceholder when a template placeholder has no binding.
Instantiated instantiate(const QATemplate& tmpl,
                         const std::map<std::string, std::string>& assignment,
                         Rng* choice_rng = nullptr);

// --- adversarial and special-case builders ---

const std::vector<std::string>& adversarial_question_forms();  // "{name}"-parameterized
const std::vector<std::string>& adv_name_refusals();
const std::vector<std::string>& adv_image_refusals();

TrainingInstance make_pronoun_instance(const SceneRecord& scene, const PersonConcept& subject,
                                       const DualLevelInfo& info, const std::string& relation,
                                       Rng& rng);

TrainingInstance make_adv_name_instance(const SceneRecord& scene,
                                        const std::vector<PrefixEntry>& bound_prefix,
                                        const std::vector<std::string>& prefix_person_ids,
                                        const NamePool& pool, Rng& rng);

struct DonorPerson {
  std::string scene_id;
  PersonConcept subject;
};

TrainingInstance make_adv_image_instance(const SceneRecord& scene,
                                         const std::vector<DonorPerson>& donors,
                                         const NamePool& pool, Rng& rng);

// --- scene variants ---

struct SceneVariant {
  ImageRef image;
  std::vector<std::string> slots;  // empty for the original scene
  std::vector<BBox> slot_boxes;
  bool composite = false;
  bool fallback = false;  // composite requested but scene too small
};

// Picks original / 2-slot / 3-slot per cfg probabilities; composites always
// contain the target person. Falls back to the original (flagged) when the
// scene has too few persons.
SceneVariant choose_scene_variant(const AssetStore& store, const SceneRecord& scene,
                                  const std::string& target_person_id, Rng& rng,
                                  const std::vector<double>& probs, const std::string& rel_stem);

// --- manifest and statistics ---

void to_json(nlohmann::json& j, const TrainingInstance& inst);
void from_json(const nlohmann::json& j, TrainingInstance& inst);

void write_instance_manifest(const std::filesystem::path& path,
                             const std::vector<TrainingInstance>& instances);
std::vector<TrainingInstance> read_instance_manifest(const std::filesystem::path& path);

struct DatasetStats {
  long total = 0;
  std::map<std::string, long> by_kind;
  long answerable = 0;
  long unanswerable = 0;
  std::map<int, long> person_count_hist;

  double unanswerable_ratio() const {
    return total == 0 ? 0.0 : static_cast<double>(unanswerable) / static_cast<double>(total);
  }
};

DatasetStats dataset_stats(const std::filesystem::path& manifest);
std::string render_dataset_stats(const DatasetStats& stats);

// Soundness scan used by `validate` and the acceptance gate: adversarial
// name/image invariants, placeholder leakage, supervision decode, wrapper
// grammar. Returns human-readable violation messages.
std::vector<std::string> validate_instances(const std::vector<TrainingInstance>& instances);

std::string weighted_pick(const std::map<std::string, double>& weights, Rng& rng);

}  // namespace pvit
