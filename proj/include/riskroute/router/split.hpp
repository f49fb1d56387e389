#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "riskroute/ehr/types.hpp"

namespace riskroute::router {

struct SplitOptions {
  double train_frac = 0.8;
  /// Total samples kept before splitting: group_cap / (ratio + 1) cases and
  /// ratio times as many controls. 0 keeps every sample.
  std::size_t group_cap = 5500;
  std::size_t ratio = 10;
  /// Split each class separately so both halves keep the class ratio.
  bool stratified = true;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SplitIndices {
  std::vector<std::size_t> train;  // ascending by id
  std::vector<std::size_t> test;
};

/// Works on ids and labels only. Deterministic in (ids, labels, options) and
/// independent of input order. Throws ValidationError on size mismatch,
/// duplicate ids, too few samples of a class, or an empty half.
SplitIndices split_indices(std::span<const std::string> ids, std::span<const ehr::Label> labels,
                           const SplitOptions& options);

struct Split {
  std::vector<ehr::LabeledSample> train;
  std::vector<ehr::LabeledSample> test;
};

Split split_dataset(std::span<const ehr::LabeledSample> samples, const SplitOptions& options);

}  // namespace riskroute::router
