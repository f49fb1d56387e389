#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "riskroute/common/date.hpp"

namespace riskroute::ehr {

enum class FeatureCategory { vital, lab };

std::string_view to_string(FeatureCategory category);
FeatureCategory parse_feature_category(std::string_view text);

struct ContinuousFeature {
  std::string name;
  std::string unit;
  FeatureCategory category = FeatureCategory::lab;

  bool operator==(const ContinuousFeature&) const = default;
};

/// Coarsened code spaces the raw ICD / RxNorm / CPT codes decode into.
enum class CodeSpace : std::uint8_t { phecode = 0, ingredient = 1, ccs = 2 };
inline constexpr std::array<CodeSpace, 3> kCodeSpaces = {CodeSpace::phecode, CodeSpace::ingredient,
                                                         CodeSpace::ccs};

std::string_view to_string(CodeSpace space);
CodeSpace parse_code_space(std::string_view text);

/// Fixed feature layout. Index i of the continuous block, and offset+j of the
/// categorical block, always denote the same feature for a given schema.
class FeatureSchema {
 public:
  FeatureSchema() = default;
  /// Throws ValidationError on duplicate feature names or vocabulary entries.
  FeatureSchema(std::vector<ContinuousFeature> continuous,
                std::array<std::vector<std::string>, 3> vocabularies);

  const std::vector<ContinuousFeature>& continuous() const { return continuous_; }
  const std::vector<std::string>& vocabulary(CodeSpace space) const {
    return vocabularies_[static_cast<std::size_t>(space)];
  }

  std::size_t continuous_width() const { return continuous_.size(); }
  std::size_t categorical_width() const;
  std::size_t width() const { return continuous_width() + categorical_width(); }
  /// Offset of `space` inside the categorical block.
  std::size_t categorical_offset(CodeSpace space) const;

  std::optional<std::size_t> continuous_index(std::string_view name) const;
  std::optional<std::size_t> vocabulary_index(CodeSpace space, std::string_view code) const;

  /// Same schema with only the named continuous features kept (order preserved).
  FeatureSchema with_continuous_subset(const std::vector<std::string>& keep) const;

  bool operator==(const FeatureSchema& other) const {
    return continuous_ == other.continuous_ && vocabularies_ == other.vocabularies_;
  }

 private:
  std::vector<ContinuousFeature> continuous_;
  std::array<std::vector<std::string>, 3> vocabularies_;
  std::map<std::string, std::size_t, std::less<>> continuous_lookup_;
  std::array<std::map<std::string, std::size_t, std::less<>>, 3> vocabulary_lookup_;
};

using CodeSet = std::set<std::string>;

struct Encounter {
  Date date;
  CodeSet icd_codes;
  CodeSet rxnorm_codes;
  CodeSet cpt_codes;
  std::map<std::string, double> vitals;
  std::map<std::string, double> labs;

  bool operator==(const Encounter&) const = default;
};

struct RawPatient {
  std::string patient_id;
  Date birth_date;
  std::vector<Encounter> encounters;

  bool operator==(const RawPatient&) const = default;
};

/// Many-to-one code decoding tables plus human-readable descriptions of the
/// decoded codes (used when rendering records as text).
struct CodeMaps {
  std::map<std::string, std::string, std::less<>> icd_to_phecode;
  std::map<std::string, std::string, std::less<>> rxnorm_to_ingredient;
  std::map<std::string, std::string, std::less<>> cpt_to_ccs;

  const std::map<std::string, std::string, std::less<>>& table(CodeSpace target) const;
  std::map<std::string, std::string, std::less<>>& table(CodeSpace target);

  bool operator==(const CodeMaps&) const = default;
};

/// Decoded code -> description, per code space.
struct CodeDescriptions {
  std::array<std::map<std::string, std::string, std::less<>>, 3> by_space;

  const std::map<std::string, std::string, std::less<>>& of(CodeSpace space) const {
    return by_space[static_cast<std::size_t>(space)];
  }
  std::map<std::string, std::string, std::less<>>& of(CodeSpace space) {
    return by_space[static_cast<std::size_t>(space)];
  }

  bool operator==(const CodeDescriptions&) const = default;
};

enum class Label : std::uint8_t { Control = 0, Case = 1 };

std::string_view to_string(Label label);
Label parse_label_name(std::string_view text);

struct LabeledSample {
  std::string patient_id;
  std::vector<double> continuous;
  std::vector<std::uint8_t> categorical;
  Label label = Label::Control;
  Date index_date;

  bool is_case() const { return label == Label::Case; }
  bool operator==(const LabeledSample&) const = default;
};

/// Throws ValidationError unless sample widths match `schema` and every
/// categorical entry is 0 or 1.
void check_sample_shape(const LabeledSample& sample, const FeatureSchema& schema);

enum class Phenotype { CP1, CP2 };

struct CohortConfig {
  Phenotype cp = Phenotype::CP1;
  int pw_years = 0;
  int control_ratio = 10;
  double min_observation_years = 1.0;

  /// Throws ValidationError when pw_years is outside {0, 1, 3} or ratio < 1.
  void validate() const;
};

}  // namespace riskroute::ehr
