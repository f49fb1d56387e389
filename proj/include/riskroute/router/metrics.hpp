#pragma once

#include <map>
#include <span>
#include <string>

#include "json.hpp"

#include "riskroute/router/router.hpp"

namespace riskroute::router {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

/// Positive class is case. Precision is 0 without positive predictions,
/// recall is 0 without positive labels, F1 is 0 when P + R = 0.
struct MetricsReport {
  ConfusionCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t sl_count = 0;
  std::size_t llm_count = 0;
  std::size_t parse_failures = 0;

  double sl_fraction() const;
  double llm_fraction() const;
};

MetricsReport metrics_from_counts(const ConfusionCounts& counts);

/// Every label must be covered by exactly one prediction and vice versa.
/// Throws ValidationError on empty input or a coverage mismatch; ComputeError
/// if the confusion matrix disagrees with a direct recount.
MetricsReport evaluate(std::span<const RoutedPrediction> predictions, const std::map<std::string, ehr::Label>& labels);
MetricsReport evaluate(std::span<const RoutedPrediction> predictions, std::span<const ehr::LabeledSample> truth);
/// Scores against each prediction's carried true label.
MetricsReport evaluate(std::span<const RoutedPrediction> predictions);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population
};

MeanStd mean_std(std::span<const double> values);

struct AggregateReport {
  std::size_t runs = 0;
  MeanStd precision, recall, f1, sl_fraction, llm_fraction;
};

/// Throws ValidationError on an empty list.
AggregateReport aggregate(std::span<const MetricsReport> reports);

nlohmann::json to_json(const MetricsReport& report);
nlohmann::json to_json(const AggregateReport& report);

}  // namespace riskroute::router
