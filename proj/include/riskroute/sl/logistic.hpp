#pragma once

#include "riskroute/sl/classifier.hpp"

namespace riskroute::sl {

/// L2-regularized logistic regression: minimizes 0.5*|w|^2 + C * sum(log-loss),
/// intercept unpenalized. Fitted by damped Newton steps regardless of `solver`,
/// which is accepted for grid compatibility (sag, saga, lbfgs, newton-cg, liblinear).
struct LogisticParams {
  double c = 1.0;
  double tol = 1e-4;  // stop when max |gradient| / n <= tol
  int max_iter = 100;
  std::string solver = "lbfgs";

  static LogisticParams from(const Params& params);
  Params to_params() const;
};

class LogisticModel final : public Classifier {
 public:
  LogisticModel(Eigen::VectorXd coefficients, double intercept, int iterations, bool converged);

  ModelKind kind() const override { return ModelKind::LR; }
  using Classifier::predict_positive;
  Eigen::VectorXd predict_positive(const Eigen::MatrixXd& x) const override;
  nlohmann::json to_json() const override;
  static std::shared_ptr<const LogisticModel> from_json(const nlohmann::json& j);

  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  double intercept() const { return intercept_; }
  int iterations() const { return iterations_; }
  bool converged() const { return converged_; }

 private:
  Eigen::VectorXd coefficients_;
  double intercept_;
  int iterations_;
  bool converged_;
};

std::shared_ptr<const LogisticModel> fit_logistic(const Dataset& data, const LogisticParams& params);

}  // namespace riskroute::sl
