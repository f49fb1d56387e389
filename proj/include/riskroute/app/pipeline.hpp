#pragma once

#include <memory>
#include <stdexcept>

#include "riskroute/app/config.hpp"
#include "riskroute/preprocess/preprocess.hpp"

namespace riskroute::app {

/// A pipeline stage failed; carries the stage name and the CLI exit code
/// (2 for stage failures, 3 for backend failures).
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& cause, int exit_code);
  const std::string& stage() const { return stage_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

/// 0 ok, 1 validation, 2 stage or compute failure, 3 backend failure.
int exit_code_for(const std::exception& e);

/// Mock, or HTTP from the configured environment variables; wrapped in a
/// response cache when `cache` is nonempty.
std::shared_ptr<icl::LlmBackend> make_backend(const BackendConfig& config, const std::filesystem::path& cache,
                                             const icl::Templates& templates);

icl::Templates load_templates(const std::filesystem::path& dir);

/// Layout of a run directory.
struct RunPaths {
  std::filesystem::path root;
  std::filesystem::path patients() const { return root / "patients.jsonl"; }
  std::filesystem::path schema() const { return root / "schema"; }
  std::filesystem::path cohort() const { return root / "cohort.jsonl"; }
  std::filesystem::path cohort_stats() const { return root / "cohort_stats.json"; }
  std::filesystem::path preprocess_stats() const { return root / "preprocess_stats.json"; }
  std::filesystem::path train() const { return root / "train.jsonl"; }
  std::filesystem::path test() const { return root / "test.jsonl"; }
  std::filesystem::path model() const { return root / "model.json"; }
  std::filesystem::path reliable() const { return root / "reliable.json"; }
  std::filesystem::path predictions() const { return root / "predictions.jsonl"; }
  std::filesystem::path metrics() const { return root / "metrics.json"; }
  std::filesystem::path manifest(std::string_view stage) const {
    return root / "manifests" / (std::string(stage) + ".json");
  }
};

struct PreparedSplit {
  preprocess::PreprocessStats stats;
  std::vector<ehr::LabeledSample> train;
  std::vector<ehr::LabeledSample> test;
};

/// Splits cohort members, fits preprocessing on the training members only,
/// and vectorizes both halves.
PreparedSplit prepare_split(const std::vector<cohort::CohortMember>& members, const ehr::SchemaBundle& bundle,
                            const router::SplitOptions& options);

struct PipelineResult {
  RunPaths paths;
  nlohmann::json metrics;
};

/// gen-synth (or input check) -> build-cohort -> preprocess -> train ->
/// reliable -> route -> evaluate. Each stage writes its artifact and a
/// manifest; a failing stage throws StageError and earlier artifacts stay.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Inputs for the ablation harness: the cohort is built once, and each
/// repeat re-splits and re-fits preprocessing with the repeat's seed.
struct AblationInputs {
  router::RepeatProvider provider;
  router::TextContext text;
  router::AblationConfig config;
};
AblationInputs prepare_ablation(const PipelineConfig& config);

}  // namespace riskroute::app
