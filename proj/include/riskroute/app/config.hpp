#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "riskroute/cohort/cohort.hpp"
#include "riskroute/icl/icl.hpp"
#include "riskroute/router/experiments.hpp"
#include "riskroute/sl/ensemble.hpp"
#include "riskroute/synth/planted.hpp"
#include "riskroute/synth/synth.hpp"

namespace riskroute::app {

struct BackendConfig {
  std::string kind = "mock";  // mock | http
  std::string url_env = "RISKROUTE_LLM_URL";
  std::string token_env = "RISKROUTE_LLM_TOKEN";
  /// JSON-lines response cache; relative paths resolve against the output
  /// directory. Empty disables caching.
  std::filesystem::path cache = "llm_cache.jsonl";
  int max_attempts = 3;
  int timeout_seconds = 120;
  std::size_t max_workers = 4;
};

/// All paths are absolute after loading (relative ones resolve against the
/// config file's directory).
struct PipelineConfig {
  std::filesystem::path out_dir;
  std::uint64_t seed = 7;

  /// When false, patients and schema_dir name existing inputs.
  bool synthetic = true;
  synth::SynthConfig synth;
  std::filesystem::path patients;
  std::filesystem::path schema_dir;
  std::filesystem::path rules;

  ehr::CohortConfig cohort;
  router::SplitOptions split;

  std::filesystem::path grids;
  sl::SmotePlacement smote = sl::SmotePlacement::before_cv;
  std::size_t cv_folds = 5;
  std::size_t k_folds = 10;
  std::size_t sl_workers = 1;

  /// Empty uses the built-in templates.
  std::filesystem::path templates;
  icl::PoolStrategy strategy = icl::PoolStrategy::high_confidence;
  double tau = icl::kDefaultReliableThreshold;
  double sigma = 0.6;
  icl::IclOptions icl;
  bool summaries = true;
  BackendConfig backend;

  std::size_t repeats = 5;

  /// Throws ValidationError on out-of-range values or missing input files.
  void validate() const;
  /// Human-readable warnings (e.g. a sigma that makes routing degenerate).
  std::vector<std::string> warnings() const;
};

PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Reads a [synth] table (or top-level keys) into a SynthConfig.
synth::SynthConfig load_synth_config(const std::filesystem::path& path);
synth::PlantedConfig load_planted_config(const std::filesystem::path& path);

/// Rule file keys: adrd_codes, adrd_medications, exclusion_codes.
cohort::CpRule load_rules(const std::filesystem::path& path, ehr::Phenotype cp);

/// Tables [LR], [XGB] (or [GBT]) and [MLP], each {search, n_iter, params}.
std::array<sl::ParamGrid, 3> load_grids(const std::filesystem::path& path);
std::array<std::vector<sl::Params>, 3> expand_grids(const std::array<sl::ParamGrid, 3>& grids, std::uint64_t seed);

}  // namespace riskroute::app
