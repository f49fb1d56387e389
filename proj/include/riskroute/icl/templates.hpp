#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "riskroute/ehr/types.hpp"

namespace riskroute::icl {

/// Prompt text with "{record}" and "{label}" placeholders.
struct Templates {
  std::string summary;     // must contain {record}
  std::string icl_header;  // free text, no placeholders
  std::string icl_demo;    // must contain {record} then {label}
  std::string icl_query;   // must contain {record}
  std::string yes = "Yes";
  std::string no = "No";

  static Templates defaults();
  /// Reads summary.txt, icl_header.txt, icl_demo.txt and icl_query.txt.
  /// A single trailing newline in each file is dropped.
  static Templates load(const std::filesystem::path& dir);
  void save(const std::filesystem::path& dir) const;
  /// Throws ValidationError on missing placeholders.
  void validate() const;

  const std::string& verbalize(ehr::Label label) const { return label == ehr::Label::Case ? yes : no; }
};

/// Replaces every "{name}" with `value`.
std::string fill(std::string_view templ, std::string_view name, std::string_view value);

/// Renders a sample as "The patient's <feature>: <value>, .... Diagnoses: <d1>,
/// <d2>. Medications: .... Orders: ...." Features in schema order, values in
/// %g form, active codes in vocabulary order, empty sections as "none".
/// Throws ValidationError on a shape mismatch or a code without a description.
std::string concat_serialize(const ehr::LabeledSample& sample, const ehr::FeatureSchema& schema,
                             const ehr::CodeDescriptions& descriptions);

std::string summary_prompt(const Templates& templates, std::string_view record);

/// Header, then one filled demo template per (summary, label) pair, then the query template.
std::string build_icl_prompt(const Templates& templates,
                             const std::vector<std::pair<std::string, ehr::Label>>& demos,
                             std::string_view query_summary);

/// Case-insensitive scan of the first line for whole-word "yes" / "no"; the
/// first one found decides. nullopt when neither occurs.
std::optional<ehr::Label> parse_label(std::string_view response);

}  // namespace riskroute::icl
