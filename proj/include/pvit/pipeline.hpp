#pragma once

#include <filesystem>
#include <string>

#include "pvit/bench.hpp"
#include "pvit/config.hpp"
#include "pvit/eval.hpp"
#include "pvit/synthesis.hpp"

namespace pvit {

// Stage drivers behind the CLI commands. Stages communicate only through
// on-disk manifests under cfg.output_dir:
//   curate      corpus images -> scenes.jsonl + assets/
//   extract     scenes.jsonl  -> infos.jsonl
//   synthesize  both          -> pvit.jsonl
//   benchbuild  bench corpus  -> pbench.jsonl + review/
//   eval        pbench.jsonl  -> responses.jsonl + report.txt + report.json
// Every driver is idempotent under an unchanged cache. `limit` > 0 caps the
// number of scenes (or eval items) processed.

struct StageContext {
  RunConfig cfg;
  int limit = 0;

  std::filesystem::path scenes_manifest() const { return cfg.output_dir / "scenes.jsonl"; }
  std::filesystem::path infos_manifest() const { return cfg.output_dir / "infos.jsonl"; }
  std::filesystem::path instances_manifest() const { return cfg.output_dir / "pvit.jsonl"; }
  std::filesystem::path bench_scenes_manifest() const {
    return cfg.output_dir / "bench_scenes.jsonl";
  }
  std::filesystem::path bench_infos_manifest() const { return cfg.output_dir / "bench_infos.jsonl"; }
  std::filesystem::path bench_manifest_path() const { return cfg.output_dir / "pbench.jsonl"; }
  std::filesystem::path responses_path() const { return cfg.output_dir / "responses.jsonl"; }
};

void run_curate(const StageContext& ctx);
void run_extract(const StageContext& ctx);
void run_synthesize(const StageContext& ctx);
void run_benchbuild(const StageContext& ctx);
void run_eval_stage(const StageContext& ctx);

// stats/validate return the rendered text they print.
std::string run_stats(const StageContext& ctx);
std::string run_validate(const StageContext& ctx, int* violation_count = nullptr);

// Synthesis core, exposed for tests: instances for one scene, sorted later.
std::vector<TrainingInstance> synthesize_scene(const SceneRecord& scene,
                                               const std::vector<DualLevelInfo>& scene_infos,
                                               const std::vector<DonorPerson>& donors,
                                               const NamePool& pool, const SynthesisConfig& syn,
                                               const AssetStore& store, Backends& backends,
                                               const PromptLibrary& prompts,
                                               std::uint64_t master_seed);

}  // namespace pvit
