#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riskroute/icl/backend.hpp"
#include "riskroute/icl/templates.hpp"

namespace riskroute::icl {

enum class PoolStrategy { full, all_correct, any_correct, high_confidence };
std::string_view to_string(PoolStrategy strategy);
PoolStrategy parse_pool_strategy(std::string_view text);

inline constexpr double kDefaultReliableThreshold = 0.8;

/// Per-model out-of-fold P(case) for one training sample.
using OofProbabilities = std::array<double, 3>;

/// Indices of the samples a strategy keeps. A model "classifies correctly"
/// when its argmax matches the label (P(case) == 0.5 counts as control).
/// Throws ValidationError on size mismatch and ComputeError on an empty result.
std::vector<std::size_t> select_pool(std::span<const ehr::LabeledSample> train, std::span<const OofProbabilities> oof,
                                     PoolStrategy strategy, double tau);

/// Euclidean distance on the continuous block blended with the Hamming
/// distance on the categorical block: lambda * euclid + (1 - lambda) * hamming.
/// Smaller means more alike. Throws ValidationError on a shape mismatch or
/// lambda outside [0, 1].
double similarity(const ehr::LabeledSample& a, const ehr::LabeledSample& b, double lambda);

struct ReliableMember {
  ehr::LabeledSample sample;
  std::string summary;
};

struct ReliableSet {
  std::vector<ReliableMember> members;
  PoolStrategy strategy = PoolStrategy::full;
  double tau = kDefaultReliableThreshold;
};

/// Turns samples into summaries: concat_serialize, then the summary prompt
/// through the backend (greedy, repetition penalty 1.1). An empty or
/// whitespace-only response falls back to the serialized record.
class Summarizer {
 public:
  /// With use_llm_summaries = false the serialized record itself is the
  /// summary and the backend is never asked to summarize.
  Summarizer(std::shared_ptr<LlmBackend> backend, Templates templates, ehr::FeatureSchema schema,
             ehr::CodeDescriptions descriptions, bool use_llm_summaries = true);

  std::string serialize(const ehr::LabeledSample& sample) const;
  std::string summarize_text(const std::string& record) const;
  std::string summarize(const ehr::LabeledSample& sample) const;
  bool uses_llm_summaries() const { return use_llm_summaries_; }

  LlmBackend& backend() const { return *backend_; }
  const Templates& templates() const { return templates_; }

  static constexpr double kRepetitionPenalty = 1.1;
  static constexpr int kMaxNewTokens = 256;

 private:
  std::shared_ptr<LlmBackend> backend_;
  Templates templates_;
  ehr::FeatureSchema schema_;
  ehr::CodeDescriptions descriptions_;
  bool use_llm_summaries_;
};

/// Selects the pool and summarizes every member (up to max_workers backend
/// calls in flight). Member order follows `train`.
ReliableSet build_reliable_set(std::span<const ehr::LabeledSample> train, std::span<const OofProbabilities> oof,
                               PoolStrategy strategy, double tau, const Summarizer& summarizer,
                               std::size_t max_workers = 4);

nlohmann::json to_json(const ReliableSet& set);
ReliableSet reliable_set_from_json(const nlohmann::json& j);
void write_reliable_set(const std::filesystem::path& path, const ReliableSet& set);
ReliableSet read_reliable_set(const std::filesystem::path& path);

enum class DemoOrder {
  most_similar_last,  // default
  ascending_score,    // smallest score first
};

/// Indices into set.members of the k members with the smallest similarity
/// score (ties by patient id), in prompt order. Throws ValidationError if the
/// pool has fewer than k members or k == 0.
std::vector<std::size_t> retrieve_demonstrations(const ehr::LabeledSample& query, const ReliableSet& set,
                                                 std::size_t k, double lambda,
                                                 DemoOrder order = DemoOrder::most_similar_last);

/// k distinct members drawn uniformly, seeded by (seed, query id); the draw
/// for one query does not depend on any other query.
std::vector<std::size_t> random_demonstrations(const ehr::LabeledSample& query, const ReliableSet& set, std::size_t k,
                                               std::uint64_t seed);

enum class Retrieval { similarity, random };

struct IclOptions {
  std::size_t k_demos = 10;
  double lambda = 0.05;
  DemoOrder order = DemoOrder::most_similar_last;
  int max_new_tokens = 8;
  Retrieval retrieval = Retrieval::similarity;
  std::uint64_t random_seed = 0;
};

struct IclPrediction {
  ehr::Label label = ehr::Label::Control;
  bool parsed = false;  // false: the answer had no yes/no and was read as control
  std::string response;
  std::vector<std::string> demo_ids;  // prompt order
};

/// Summarize the query, retrieve demonstrations, prompt, parse.
IclPrediction predict_icl(const ehr::LabeledSample& query, const ReliableSet& set, const Summarizer& summarizer,
                          const IclOptions& options);

/// The full prompt predict_icl would send for `query_summary`.
std::string icl_prompt_for(const ehr::LabeledSample& query, std::string_view query_summary, const ReliableSet& set,
                           const Templates& templates, const IclOptions& options,
                           std::vector<std::string>* demo_ids = nullptr);

}  // namespace riskroute::icl
