#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvit/backends.hpp"
#include "pvit/bench.hpp"

namespace pvit {

struct ModelResponse {
  std::string item_id;
  std::string raw;
  bool no_response = false;  // backend never answered; scored as incorrect
  std::optional<char> extracted;
  bool rejected = false;
  std::optional<double> similarity;  // answerable description items only
};

struct EvalReport {
  // MC accuracy, percentages. Keys are bench type names.
  std::map<std::string, double> mc_answerable;
  std::map<std::string, double> mc_unanswerable;
  double mc_answerable_avg = 0.0;
  double mc_unanswerable_avg = 0.0;
  std::map<int, double> mc_by_person_count;  // buckets 1,2,3,4 (>=4)

  // Description scores: similarity x100 per person-count bucket (answerable),
  // rejection rate x100 per adversarial type.
  std::map<int, double> desc_similarity;
  double desc_answerable_avg = 0.0;
  std::map<std::string, double> desc_unanswerable;
  double desc_unanswerable_avg = 0.0;

  std::map<std::string, double> rejection_rates;  // per type, x100
  long total_items = 0;
  long unanswered_items = 0;
};

// Unweighted macro average used for every "Avg" cell.
double aggregate_group_average(const std::vector<double>& per_type_values);

// Answer-letter extraction cascade: a bare/leading letter form, then a
// punctuation-delimited letter mention, then unique verbatim choice-text
// containment. Ambiguity yields nullopt.
std::optional<char> extract_choice(const std::string& raw, const std::vector<std::string>& choices);

const std::vector<std::string>& default_refusal_lexicon();
bool detect_rejection(const std::string& raw, const std::vector<std::string>& lexicon);

// Asks the complete-capability judge; falls back to the lexicon on any
// backend trouble.
bool detect_rejection_with_judge(Backends& backends, const PromptLibrary& prompts,
                                 const std::string& raw, const std::vector<std::string>& lexicon);

struct EvalOptions {
  int concurrency = 4;
  std::vector<std::string> refusal_lexicon;  // empty -> default lexicon
  bool use_judge = false;
};

// Queries the model under test for every item lacking a persisted response.
// Failures become no-response records; the run never aborts on one item.
std::vector<ModelResponse> run_eval(Backends& backends, const BenchManifest& manifest,
                                    const std::filesystem::path& responses_path,
                                    const EvalOptions& opts, Logger* log);

// Pure given the persisted responses (similarity goes through the cached
// backend). Throws Err::MissingResponses when an item has no record.
EvalReport score(const BenchManifest& manifest, const std::vector<ModelResponse>& responses,
                 Backends& backends, const PromptLibrary& prompts, const EvalOptions& opts);

std::string render_report(const EvalReport& report);
nlohmann::json report_to_json(const EvalReport& report);

void write_responses(const std::filesystem::path& path, const std::vector<ModelResponse>& responses);
std::vector<ModelResponse> read_responses(const std::filesystem::path& path);

}  // namespace pvit
