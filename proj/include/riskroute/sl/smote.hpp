#pragma once

#include <cstdint>
#include <vector>

#include "riskroute/ehr/types.hpp"

namespace riskroute::sl {

struct SmoteOptions {
  double target_ratio = 1.0;  // desired minority : majority after balancing
  int k_neighbors = 5;
  std::uint64_t seed = 0;
};

/// Where one synthetic sample came from. `features` is the interpolated row
/// (continuous then categorical) before categorical entries are rounded.
struct SyntheticOrigin {
  std::size_t base = 0;      // index into the input samples
  std::size_t neighbor = 0;  // index into the input samples
  double gap = 0.0;          // features = x_base + gap * (x_neighbor - x_base)
  std::vector<double> features;
};

struct SmoteResult {
  std::vector<ehr::LabeledSample> samples;  // the input followed by the synthetic samples
  std::vector<SyntheticOrigin> origins;     // one per synthetic sample, same order
};

/// Oversamples the minority class up to round(target_ratio * majority).
/// Neighbors are the k nearest minority samples by Euclidean distance over the
/// whole feature row. Synthetic categorical entries are rounded to {0, 1}.
/// Input that already meets the ratio is returned unchanged.
/// Throws ValidationError if the minority class has fewer than k + 1 members
/// or the input mixes widths.
SmoteResult smote(const std::vector<ehr::LabeledSample>& samples, const SmoteOptions& options);

}  // namespace riskroute::sl
