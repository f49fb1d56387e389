#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "riskroute/ehr/io.hpp"
#include "riskroute/ehr/types.hpp"

namespace riskroute::synth {

/// Sizes of each generated feature block.
struct SchemaSpec {
  int n_vitals = 4;
  int n_labs = 8;
  int n_phecodes = 24;
  int n_ingredients = 12;
  int n_ccs = 6;
  /// Raw codes generated per decoded code (many-to-one maps).
  int codes_per_target = 2;
  int latent_dim = 4;

  void validate() const;
};

struct SynthConfig {
  int n_patients = 5000;
  SchemaSpec schema;
  /// Scale of the latent risk direction in the case logit.
  double signal_strength = 2.0;
  /// Fraction of code indicators flipped after thresholding.
  double noise_rate = 0.05;
  std::uint64_t seed = 1;
  /// Case logit at zero latent risk.
  double base_logit = -5.0;
  /// Probability a non-case carries an exclusion diagnosis.
  double exclusion_rate = 0.02;
  /// Probability that a single measurement is a gross outlier.
  double outlier_rate = 0.005;

  void validate() const;
};

/// ADRD-related codes planted by the generator; usable as a CP rule source.
struct PlantedCodes {
  std::set<std::string> adrd_icd{"G30.9", "F03.90"};
  std::set<std::string> adrd_rxnorm{"135447", "4637", "6719", "183379"};
  std::set<std::string> exclusion_icd{"G31.84", "G20"};
};

struct SynthDataset {
  ehr::SchemaBundle schema;
  std::vector<ehr::RawPatient> patients;
  /// Per-patient probability of becoming a case (logistic of the latent risk).
  std::vector<double> latent_risk;
  /// Whether the generator made the patient an ADRD case.
  std::vector<bool> is_case;
  PlantedCodes codes;
};

/// Deterministic in `config`. Patient i is drawn from its own stream derived
/// from (seed, i), so the output does not depend on generation order.
/// Throws ValidationError on invalid sizes.
SynthDataset generate(const SynthConfig& config);

}  // namespace riskroute::synth
