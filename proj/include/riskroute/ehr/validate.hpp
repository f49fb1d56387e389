#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskroute/ehr/types.hpp"

namespace riskroute::ehr {

enum class ViolationKind {
  duplicate_patient_id,
  empty_patient_id,
  unsorted_encounters,
  encounter_before_birth,
  empty_code,
  unknown_vital,
  unknown_lab,
  non_finite_value,
  unmapped_icd,
  unmapped_rxnorm,
  unmapped_cpt,
  code_outside_vocabulary,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string patient_id;
  std::optional<std::size_t> encounter_index;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  std::string summary(std::size_t max_lines = 20) const;
};

/// Lists every problem that would make a downstream stage reject or misread
/// the data. Never throws on bad data.
ValidationReport validate_dataset(const std::vector<RawPatient>& patients,
                                  const FeatureSchema& schema, const CodeMaps& maps);

}  // namespace riskroute::ehr
