#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riskroute/sl/classifier.hpp"
#include "riskroute/sl/smote.hpp"

namespace riskroute::sl {

/// Named value lists. Exhaustive when n_iter == 0, otherwise n_iter distinct
/// points drawn uniformly from the cartesian product.
struct ParamGrid {
  std::vector<std::pair<std::string, std::vector<nlohmann::json>>> axes;
  std::size_t n_iter = 0;

  std::uint64_t size() const;  // cartesian product size (saturates at UINT64_MAX)
};

/// {"search": "grid" | "random", "n_iter": N, "params": {name: [values...]}}
/// or a bare {name: [values...]} object (exhaustive).
ParamGrid grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ParamGrid& grid);

/// Points in mixed-radix order (last axis fastest); random search returns the
/// sampled points sorted in that same order.
std::vector<Params> expand_grid(const ParamGrid& grid, std::uint64_t seed);

/// k disjoint folds covering every sample. Samples are ordered canonically by
/// patient_id (input order only breaks exact duplicates), shuffled within
/// each class, then dealt round-robin so each class is spread evenly and
/// fold sizes differ by at most one. Each fold lists input indices in
/// canonical order. Throws ValidationError if k < 2 or n < k.
std::vector<std::vector<std::size_t>> stratified_folds(std::span<const ehr::LabeledSample> samples,
                                                       std::size_t k, std::uint64_t seed);

/// F1 of the case class, predicting case when p > 0.5 (a tie is a control); 0 when undefined.
double f1_at_half(std::span<const double> positive_probability, std::span<const ehr::Label> labels);

struct CvOptions {
  std::size_t n_folds = 5;
  std::uint64_t seed = 0;
  bool smote_inside_folds = false;
  SmoteOptions smote;
  std::size_t max_workers = 1;
};

struct CvResult {
  std::vector<Params> points;
  std::vector<double> mean_f1;  // per point
  std::size_t best_index = 0;
  const Params& best() const { return points.at(best_index); }
};

/// Picks the grid point with the highest mean F1 over stratified folds; the
/// earliest point wins ties. A single-point grid is returned without fitting.
/// Throws ValidationError on an empty grid or when a class has fewer samples
/// than folds.
CvResult cross_validate(ModelKind kind, const std::vector<Params>& grid,
                        const std::vector<ehr::LabeledSample>& samples, const CvOptions& options);

struct OofOptions {
  std::size_t k_folds = 10;
  std::uint64_t seed = 0;
  bool smote = false;  // balance each training complement before fitting
  SmoteOptions smote_options;
  std::size_t max_workers = 1;
};

/// Positive-class probability for every sample, each from a model trained on
/// the other folds only. Throws ValidationError if k < 2 or n < k, and
/// ComputeError if a training complement holds a single class.
std::vector<double> oof_probabilities(ModelKind kind, const Params& params,
                                      const std::vector<ehr::LabeledSample>& samples, const OofOptions& options);

}  // namespace riskroute::sl
