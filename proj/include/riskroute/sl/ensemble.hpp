#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>

#include "riskroute/sl/tuning.hpp"

namespace riskroute::sl {

enum class SmotePlacement {
  none,
  before_cv,     // balance the whole training split once, then tune on it
  inside_folds,  // balance each CV training fold separately
};

std::string_view to_string(SmotePlacement placement);
SmotePlacement parse_smote_placement(std::string_view text);

struct EnsembleConfig {
  std::array<std::vector<Params>, 3> grids;  // indexed like kModelKinds
  SmotePlacement smote_placement = SmotePlacement::before_cv;
  SmoteOptions smote;
  std::size_t cv_folds = 5;
  std::size_t oof_folds = 10;
  std::uint64_t seed = 0;
  std::size_t max_workers = 1;
};

/// The three fitted models with out-of-fold positive-class probabilities for
/// every real training sample (synthetic SMOTE samples are never scored).
struct TrainedEnsemble {
  std::array<ClassifierPtr, 3> models;
  std::array<Params, 3> params;
  std::array<std::vector<double>, 3> cv_mean_f1;
  std::vector<std::string> train_ids;
  std::vector<ehr::Label> train_labels;
  std::array<std::vector<double>, 3> oof;  // oof[model][sample]

  const Classifier& model(ModelKind kind) const { return *models[static_cast<std::size_t>(kind)]; }
  std::optional<std::size_t> train_index(std::string_view patient_id) const;
  /// Per-model positive-class probability for one feature row.
  std::array<double, 3> positive_probabilities(const Eigen::VectorXd& row) const;
  /// Per-model OOF probability of the sample's own label.
  std::array<double, 3> oof_true_class(std::size_t sample) const;

  std::map<std::string, std::size_t> id_index;
};

/// {P(control), P(case)} as the mean over the given per-model case probabilities.
std::array<double, 2> average_confidence(std::span<const double> positive_probabilities);
std::array<double, 2> ensemble_confidence(const TrainedEnsemble& ensemble, const Eigen::VectorXd& row);

/// Tunes each model by cross-validation, refits it on the full (possibly
/// balanced) training split, and extracts OOF probabilities with the tuned
/// parameters. OOF training complements are balanced whenever SMOTE is on.
TrainedEnsemble train_ensemble(const std::vector<ehr::LabeledSample>& samples, const EnsembleConfig& config);

nlohmann::json to_json(const TrainedEnsemble& ensemble);
TrainedEnsemble ensemble_from_json(const nlohmann::json& j);
void write_ensemble(const std::filesystem::path& path, const TrainedEnsemble& ensemble);
TrainedEnsemble read_ensemble(const std::filesystem::path& path);

}  // namespace riskroute::sl
