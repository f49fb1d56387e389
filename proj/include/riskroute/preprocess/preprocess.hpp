#pragma once

#include <array>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "riskroute/ehr/types.hpp"

namespace riskroute::preprocess {

/// Missing continuous values are NaN throughout this module.
bool is_missing(double v);

struct FeatureStats {
  std::string name;
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  double median = 0.0;
  double missing_fraction = 0.0;

  bool operator==(const FeatureStats&) const = default;
};

/// Training-split statistics. `schema` is the input schema with the sparse
/// labs removed; `features` follows its continuous order.
struct PreprocessStats {
  ehr::FeatureSchema schema;
  std::vector<FeatureStats> features;
  std::vector<std::string> kept_lab_features;
  std::vector<std::string> dropped_lab_features;
  std::size_t n_train = 0;

  const FeatureStats& feature(std::string_view name) const;
  bool operator==(const PreprocessStats&) const = default;
};

inline constexpr double kMaxLabMissingFraction = 0.5;
inline constexpr double kOutlierSigmas = 3.0;

/// Per-patient mean of recorded values for every continuous feature of
/// `schema` (NaN when never recorded).
std::vector<double> aggregate_measurements(const ehr::RawPatient& patient,
                                           const ehr::FeatureSchema& schema);

/// Fits on training patients only. Labs missing for more than half of the
/// patients are dropped. Mean and std come from the raw patient aggregates;
/// the median is taken after outlier nulling, over what remains observed.
/// Throws ValidationError on an empty training set.
PreprocessStats fit_stats(const std::vector<ehr::RawPatient>& train_patients,
                          const ehr::FeatureSchema& schema);

/// `values` are in stats.schema continuous order. A value is an outlier when
/// |v - mean| > 3*std; with std == 0 any v != mean is an outlier.
std::vector<double> null_outliers(std::span<const double> values, const PreprocessStats& stats);

/// Replaces missing entries with the training median.
/// Throws ValidationError if the width does not match the fitted features.
std::vector<double> impute(std::span<const double> values, const PreprocessStats& stats);

/// Column form of impute for a single named feature; throws ValidationError
/// when the feature is not in `stats`.
std::vector<double> impute_column(std::string_view feature, std::span<const double> column,
                                  const PreprocessStats& stats);

struct DecodedCodes {
  std::array<std::set<std::string>, 3> by_space;
  const std::set<std::string>& of(ehr::CodeSpace s) const {
    return by_space[static_cast<std::size_t>(s)];
  }
};

/// Union over encounters of mapped codes. Throws ValidationError on an
/// unmapped code.
DecodedCodes decode_codes(const ehr::RawPatient& patient, const ehr::CodeMaps& maps);

/// Aggregate -> null outliers -> impute for the continuous block; one
/// indicator per vocabulary entry for the categorical block.
ehr::LabeledSample vectorize(const ehr::RawPatient& patient, const PreprocessStats& stats,
                             const ehr::CodeMaps& maps, ehr::Label label, Date index_date);

nlohmann::json to_json(const PreprocessStats& stats);
PreprocessStats stats_from_json(const nlohmann::json& j);
void write_stats(const std::filesystem::path& path, const PreprocessStats& stats);
PreprocessStats read_stats(const std::filesystem::path& path);

}  // namespace riskroute::preprocess
