#pragma once

#include <cstdint>
#include <vector>

#include "riskroute/ehr/types.hpp"

namespace riskroute::synth {

/// Sample-level cohort with clustered codes and label noise planted where the
/// supervised models are unsure.
///
/// Codes form `n_groups` pairs of clusters. Each group has its own block of
/// prototype bits; the two clusters of a group differ only in which of two
/// shared switch bits is set, and the switch that means "case" alternates
/// between groups. Code indicators therefore carry no additive signal, yet
/// records within a cluster share a label.
///
/// Easy samples shift the first continuous feature by +-easy_shift according
/// to the label, which additive models pick up with high confidence. Hard
/// samples keep it near zero, and a `label_noise` fraction of them have their
/// label flipped.
struct PlantedConfig {
  int n_samples = 1000;
  int n_groups = 4;
  int bits_per_group = 5;
  double bit_flip = 0.02;
  double hard_fraction = 0.4;
  double easy_shift = 2.5;
  double hard_spread = 0.3;
  double label_noise = 0.3;
  std::uint64_t seed = 1;

  void validate() const;
};

struct PlantedCohort {
  ehr::FeatureSchema schema;
  ehr::CodeDescriptions descriptions;
  std::vector<ehr::LabeledSample> samples;
  std::vector<bool> hard;
  std::vector<bool> flipped;
  /// Label of the sample's cluster before any flip.
  std::vector<ehr::Label> cluster_label;
};

/// Deterministic in `config`; sample i uses its own stream.
PlantedCohort generate_planted(const PlantedConfig& config);

}  // namespace riskroute::synth
