#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "riskroute/ehr/types.hpp"

namespace riskroute::ehr {

// JSON-lines record layouts (one object per line):
//
//   patient: {"patient_id": str, "birth_date": "YYYY-MM-DD",
//             "encounters": [{"date": "YYYY-MM-DD", "icd": [str], "rxnorm": [str],
//                             "cpt": [str], "vitals": {name: num}, "labs": {name: num}}]}
//   sample:  {"patient_id": str, "index_date": "YYYY-MM-DD", "label": "case"|"control",
//             "continuous": [num], "categorical": [0|1]}
//
// Unknown keys, missing keys and trailing bytes after the object are rejected.

nlohmann::json to_json(const RawPatient& patient);
RawPatient patient_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LabeledSample& sample);
LabeledSample sample_from_json(const nlohmann::json& j);

std::string serialize_patient(const RawPatient& patient);
RawPatient parse_patient(std::string_view line);

std::vector<RawPatient> read_patients(const std::filesystem::path& path);
void write_patients(const std::filesystem::path& path, const std::vector<RawPatient>& patients);

std::vector<LabeledSample> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, const std::vector<LabeledSample>& samples);

/// Parses JSON-lines text, calling `on_record` per non-empty line. Errors name
/// the 1-based line number.
void for_each_jsonl(std::istream& in, const std::function<void(const nlohmann::json&)>& on_record);

// CSV tables. Headers are mandatory and exact:
//   features.csv              name,unit,category
//   icd_to_phecode.csv etc.   source_code,target_code
//   code_descriptions.csv     space,code,description
// Fields may not contain commas or quotes; extra or missing columns are errors.

std::vector<ContinuousFeature> read_features_csv(std::istream& in);
void write_features_csv(std::ostream& out, const std::vector<ContinuousFeature>& features);

std::vector<std::pair<std::string, std::string>> read_map_csv(std::istream& in);
void write_map_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows);

CodeDescriptions read_descriptions_csv(std::istream& in);
void write_descriptions_csv(std::ostream& out, const CodeDescriptions& descriptions);

/// Schema, decoding maps and descriptions stored together in one directory.
/// Each vocabulary is the list of distinct target codes of the matching map,
/// in order of first appearance in its CSV file.
struct SchemaBundle {
  FeatureSchema schema;
  CodeMaps maps;
  CodeDescriptions descriptions;
};

inline constexpr const char* kFeaturesFile = "features.csv";
inline constexpr const char* kIcdMapFile = "icd_to_phecode.csv";
inline constexpr const char* kRxnormMapFile = "rxnorm_to_ingredient.csv";
inline constexpr const char* kCptMapFile = "cpt_to_ccs.csv";
inline constexpr const char* kDescriptionsFile = "code_descriptions.csv";

SchemaBundle read_schema_dir(const std::filesystem::path& dir);
/// Vocabulary order is written through the map files, so the schema's
/// vocabularies must list map targets in first-appearance order.
void write_schema_dir(const std::filesystem::path& dir, const SchemaBundle& bundle);

}  // namespace riskroute::ehr
