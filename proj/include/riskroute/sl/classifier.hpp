#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "riskroute/ehr/types.hpp"

namespace riskroute::sl {

enum class ModelKind { LR, GBT, MLP };
inline constexpr std::array<ModelKind, 3> kModelKinds{ModelKind::LR, ModelKind::GBT, ModelKind::MLP};

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);  // "LR", "GBT" (or "XGB"), "MLP"; case-insensitive

/// Hyperparameters by name, as a JSON object. Unknown names are rejected by train().
using Params = nlohmann::json;

/// Row-major design matrix: continuous block then categorical block.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;  // 0 = control, 1 = case
};

Eigen::VectorXd feature_row(const ehr::LabeledSample& sample);
/// Throws ValidationError on ragged widths or non-finite values.
Dataset to_dataset(std::span<const ehr::LabeledSample> samples);

/// A fitted binary classifier. Immutable after training; safe to share across threads.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual ModelKind kind() const = 0;
  /// Probability of the case class for each row.
  virtual Eigen::VectorXd predict_positive(const Eigen::MatrixXd& x) const = 0;
  virtual nlohmann::json to_json() const = 0;

  double predict_positive(const Eigen::VectorXd& row) const;
  /// {P(control), P(case)}
  std::array<double, 2> predict_proba(const Eigen::VectorXd& row) const;
};

using ClassifierPtr = std::shared_ptr<const Classifier>;

/// Fits one model. Deterministic given (kind, params, data, seed).
/// Throws ValidationError for bad params, non-finite features or single-class data.
ClassifierPtr train(ModelKind kind, const Params& params, const Dataset& data, std::uint64_t seed);
ClassifierPtr train(ModelKind kind, const Params& params,
                    std::span<const ehr::LabeledSample> samples, std::uint64_t seed);

ClassifierPtr classifier_from_json(const nlohmann::json& j);

}  // namespace riskroute::sl
