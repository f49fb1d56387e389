#pragma once

#include <vector>

namespace riskroute::cohort {

struct PropensityOptions {
  double loss_tolerance = 1e-6;
  double gradient_tolerance = 1e-6;
  int max_iterations = 10000;
  double learning_rate = 1.0;
};

struct PropensityFit {
  /// Intercept first, then one weight per (standardized) covariate.
  std::vector<double> coefficients;
  std::vector<double> probabilities;
  int iterations = 0;
  bool converged = false;
};

/// Unregularized logistic regression of `is_case` on `covariates`, fit by
/// full-batch gradient descent on the mean log-loss. Covariates are
/// standardized internally (constant columns contribute nothing), which leaves
/// the fitted probabilities unchanged. Throws ComputeError when only one class
/// is present and ValidationError on ragged input.
PropensityFit fit_propensity(const std::vector<std::vector<double>>& covariates,
                             const std::vector<int>& is_case,
                             const PropensityOptions& options = {});

}  // namespace riskroute::cohort
