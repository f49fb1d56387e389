#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "riskroute/router/metrics.hpp"
#include "riskroute/router/split.hpp"

namespace riskroute::router {

struct Strata {
  std::vector<std::size_t> easy;  // max averaged class probability >= sigma
  std::vector<std::size_t> hard;
};

Strata stratify_by_confidence(std::span<const ehr::LabeledSample> test, const sl::TrainedEnsemble& ensemble,
                              double sigma);

inline const std::vector<double> kDefaultSweepSigmas{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

struct SweepRow {
  double sigma = 0.0;
  MetricsReport report;
  std::vector<RoutedPrediction> predictions;
};

/// One routed evaluation per sigma. Each sample's in-context prediction is
/// computed at most once and shared by every sigma that routes it to the LLM.
/// Throws ValidationError on an empty sigma list.
std::vector<SweepRow> threshold_sweep(std::span<const ehr::LabeledSample> test, const sl::TrainedEnsemble& ensemble,
                                      const icl::ReliableSet* reliable, const icl::Summarizer* summarizer,
                                      std::span<const double> sigmas, const RouterOptions& options);

/// Train/test samples for one repeat.
struct RepeatData {
  std::vector<ehr::LabeledSample> train;
  std::vector<ehr::LabeledSample> test;
  /// Layout of this repeat's samples when it differs from TextContext::schema.
  std::optional<ehr::FeatureSchema> schema;
};
using RepeatProvider = std::function<RepeatData(std::size_t repeat, std::uint64_t repeat_seed)>;

/// Everything a summarizer needs besides the summary mode.
struct TextContext {
  std::shared_ptr<icl::LlmBackend> backend;
  icl::Templates templates;
  ehr::FeatureSchema schema;
  ehr::CodeDescriptions descriptions;
};

inline const std::set<std::string> kAblationSuites{"summary", "retrieval", "denoising", "threshold", "strata"};

struct AblationConfig {
  std::size_t repeats = 5;
  std::uint64_t seed = 0;
  /// The seed is replaced per repeat.
  sl::EnsembleConfig ensemble;
  RouterOptions router;
  icl::PoolStrategy strategy = icl::PoolStrategy::high_confidence;
  double tau = icl::kDefaultReliableThreshold;
  std::vector<double> sweep_sigmas = kDefaultSweepSigmas;
  std::set<std::string> suites = kAblationSuites;

  void validate() const;
};

struct AblationRow {
  std::string suite;
  std::string variant;
  std::vector<MetricsReport> runs;  // one per repeat that produced it
  AggregateReport summary;
};

struct AblationReport {
  std::size_t repeats = 0;
  std::uint64_t seed = 0;
  std::vector<AblationRow> rows;

  const AblationRow* find(std::string_view suite, std::string_view variant) const;
};

/// Suites:
///   summary    routed pipeline with LLM summaries vs raw concatenation
///   retrieval  similarity vs seeded uniform-random demonstrations
///   denoising  the four pool strategies with every sample sent to the LLM
///   threshold  the sigma sweep
///   strata     averaged SLs vs the LLM on the easy and hard strata
/// A stratum that is empty in some repeat contributes no run for it.
AblationReport ablation_suite(const RepeatProvider& provider, const TextContext& text, const AblationConfig& config);

/// Seed handed to the provider and the ensemble for repeat r.
std::uint64_t repeat_seed(std::uint64_t seed, std::size_t repeat);

nlohmann::json to_json(const AblationReport& report);
/// Fixed-width table, one line per row.
std::string format_table(const AblationReport& report);
std::string format_csv(const AblationReport& report);

}  // namespace riskroute::router
