#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "riskroute/icl/icl.hpp"
#include "riskroute/sl/ensemble.hpp"

namespace riskroute::router {

enum class Path { SL, LLM };
std::string_view to_string(Path path);
Path parse_path(std::string_view text);

struct RoutedPrediction {
  std::string sample_id;
  Path path = Path::SL;
  ehr::Label label = ehr::Label::Control;
  /// Carried through from the input sample so predictions can be scored alone.
  ehr::Label true_label = ehr::Label::Control;
  /// Larger of the averaged class probabilities.
  double sl_confidence = 0.0;
  /// Averaged P(case).
  double sl_positive = 0.0;
  std::vector<std::string> demonstrations_used;
  bool parse_failed = false;

  bool operator==(const RoutedPrediction&) const = default;
};

struct SlVerdict {
  double positive = 0.0;
  double confidence = 0.0;
  ehr::Label label = ehr::Label::Control;  // case only when P(case) > P(control)
};

SlVerdict sl_verdict(const sl::TrainedEnsemble& ensemble, const ehr::LabeledSample& sample);

RoutedPrediction sl_prediction(const ehr::LabeledSample& sample, const SlVerdict& verdict);
RoutedPrediction llm_prediction(const ehr::LabeledSample& sample, const SlVerdict& verdict,
                                const icl::IclPrediction& icl);

struct RouterOptions {
  double sigma = 0.6;
  icl::IclOptions icl;
  /// Upper bound on samples (and so LLM calls) in flight.
  std::size_t max_workers = 4;
};

/// Confident samples (max class probability >= sigma) keep the averaged SL
/// label; the rest go through in-context prediction. The SL path never
/// touches the backend. reliable and summarizer may be null when no sample
/// can reach the LLM path; a sample that does reach it then throws
/// ComputeError.
class Router {
 public:
  Router(const sl::TrainedEnsemble& ensemble, const icl::ReliableSet* reliable, const icl::Summarizer* summarizer,
         RouterOptions options);

  RoutedPrediction route(const ehr::LabeledSample& sample) const;
  /// Parallel over samples; output sorted by sample id.
  std::vector<RoutedPrediction> route_all(std::span<const ehr::LabeledSample> samples) const;

  const RouterOptions& options() const { return options_; }

 private:
  const sl::TrainedEnsemble& ensemble_;
  const icl::ReliableSet* reliable_;
  const icl::Summarizer* summarizer_;
  RouterOptions options_;
};

/// In-context prediction for every sample regardless of confidence, sorted
/// by sample id (routing disabled).
std::vector<RoutedPrediction> llm_only(std::span<const ehr::LabeledSample> samples, const sl::TrainedEnsemble& ensemble,
                                       const icl::ReliableSet& reliable, const icl::Summarizer& summarizer,
                                       const icl::IclOptions& options, std::size_t max_workers);

/// Averaged-SL prediction for every sample, sorted by sample id.
std::vector<RoutedPrediction> sl_only(std::span<const ehr::LabeledSample> samples, const sl::TrainedEnsemble& ensemble);

/// Single-model prediction (case when its P(case) > 0.5), sorted by sample id.
std::vector<RoutedPrediction> single_model(std::span<const ehr::LabeledSample> samples,
                                           const sl::TrainedEnsemble& ensemble, sl::ModelKind kind);

nlohmann::json to_json(const RoutedPrediction& prediction);
RoutedPrediction prediction_from_json(const nlohmann::json& j);
/// One JSON object per line.
void write_predictions(const std::filesystem::path& path, std::span<const RoutedPrediction> predictions);
std::vector<RoutedPrediction> read_predictions(const std::filesystem::path& path);

}  // namespace riskroute::router
