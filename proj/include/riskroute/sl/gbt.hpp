#pragma once

#include <cstdint>

#include "riskroute/sl/classifier.hpp"

namespace riskroute::sl {

/// Gradient-boosted trees on logistic loss. Trees grow leaf-wise (best gain
/// first) on histogram bins. Parameter names follow the usual boosting
/// libraries; `tree_learner` is accepted and ignored, `boosting_type = "dart"`
/// is rejected.
struct GbtParams {
  int n_estimators = 100;
  double learning_rate = 0.1;
  int num_leaves = 31;
  int max_depth = -1;  // <= 0: unlimited
  double min_split_gain = 0.0;
  double min_child_weight = 1e-3;  // minimum hessian sum per leaf
  int min_child_samples = 20;
  double subsample = 1.0;          // row fraction per round, without replacement
  double colsample_bytree = 1.0;   // feature fraction per tree
  double reg_alpha = 0.0;
  double reg_lambda = 0.0;
  int max_bin = 255;
  std::string tree_learner = "serial";
  std::string boosting_type = "gbdt";

  static GbtParams from(const Params& params);
  Params to_params() const;
};

struct TreeNode {
  int feature = -1;  // < 0 marks a leaf
  double threshold = 0.0;  // rows with x[feature] <= threshold go left
  int left = -1;
  int right = -1;
  double value = 0.0;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  double predict(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
  std::size_t leaf_count() const;
};

class GbtModel final : public Classifier {
 public:
  GbtModel(double base_score, std::vector<RegressionTree> trees, std::vector<double> training_loss);

  ModelKind kind() const override { return ModelKind::GBT; }
  using Classifier::predict_positive;
  Eigen::VectorXd predict_positive(const Eigen::MatrixXd& x) const override;
  Eigen::VectorXd decision_function(const Eigen::MatrixXd& x) const;
  nlohmann::json to_json() const override;
  static std::shared_ptr<const GbtModel> from_json(const nlohmann::json& j);

  double base_score() const { return base_score_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }
  /// Mean training log-loss before the first round and after each round.
  const std::vector<double>& training_loss() const { return training_loss_; }

 private:
  double base_score_;
  std::vector<RegressionTree> trees_;
  std::vector<double> training_loss_;
};

std::shared_ptr<const GbtModel> fit_gbt(const Dataset& data, const GbtParams& params, std::uint64_t seed);

}  // namespace riskroute::sl
