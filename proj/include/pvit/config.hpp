#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvit {

struct CapabilityConfig {
  std::string mode;  // "fixture" | "remote"; empty inherits backends.mode
  std::string endpoint;
  std::string api_key_env;  // env var holding the key
  std::string api_key;      // resolved at wiring time, never parsed from config
  std::string model;
  int timeout_ms = 0;  // 0 inherits backends.timeout_ms
  std::string scripted_answers;  // model_under_test fixture only
};

// Stateless fixture fault switches. Faults stay pure functions of the request
// so cached reruns reproduce them.
struct FixtureFaults {
  bool augment_quota = false;
  bool caption_omit_placeholder = false;
  bool fusion_echo = false;
  bool mc_malformed = false;
  bool unreachable = false;
};

struct BackendsConfig {
  std::string mode = "fixture";
  std::filesystem::path fixture_dir;
  int max_retries = 3;  // total upstream attempts per call
  int timeout_ms = 30000;
  int image_limit = 4;
  int prefix_char_budget = 32768;
  FixtureFaults faults;
  std::map<std::string, CapabilityConfig> capabilities;  // keyed by capability name
};

struct CurationConfig {
  std::string person_prompt = "a person";
  double person_threshold = 0.4;
  double face_containment = 0.9;
  double crop_margin = 0.1;
  double iou_suppression = 0.7;
  int augment_n = 2;
};

struct SynthesisConfig {
  int instances_per_person = 4;
  int name_repetition = 1;
  double aug_prefix_prob = 0.5;
  std::vector<double> scene_variant_probs = {0.7, 0.2, 0.1};  // original, composite-2, composite-3
  std::map<std::string, double> kind_weights;
};

struct BenchConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path train_manifest;
  std::map<std::string, int> quotas;  // per bench type; empty -> proportional from `total`
  int total = 0;
};

struct EvalConfig {
  std::filesystem::path manifest;
  int concurrency = 4;
  int timeout_ms = 30000;
  std::filesystem::path refusal_lexicon;
  bool use_judge = false;
};

struct RunConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path output_dir;
  std::uint64_t master_seed = 0;
  int concurrency = 4;
  std::filesystem::path cache_dir;    // default output_dir/cache
  std::filesystem::path prompts_dir;  // optional; built-in defaults when empty
  std::filesystem::path names_file;
  std::filesystem::path log_file;     // default output_dir/logs/pvit.log
  std::map<std::string, bool> stages;

  BackendsConfig backends;
  CurationConfig curation;
  SynthesisConfig synthesis;
  BenchConfig bench;
  EvalConfig eval;

  bool stage_enabled(const std::string& name) const {
    auto it = stages.find(name);
    return it == stages.end() || it->second;
  }
};

// Parses and validates a config file. Unknown keys are rejected; relative
// paths are resolved against the config file's directory. Throws
// Err::ConfigInvalid on any problem.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir);

const std::vector<std::string>& known_instance_kinds();
const std::vector<std::string>& known_bench_types();
std::map<std::string, double> default_kind_weights();

}  // namespace pvit
