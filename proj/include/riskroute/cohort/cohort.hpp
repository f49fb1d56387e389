#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "riskroute/ehr/types.hpp"

namespace riskroute::cohort {

/// Computable-phenotype rule. CP1 requires one ADRD-coded encounter, CP2 two;
/// an ADRD medication qualifies under either.
struct CpRule {
  std::set<std::string> adrd_code_set;        // ICD codes
  std::set<std::string> adrd_medication_set;  // RxNorm codes
  int min_diagnosis_encounters = 1;
  std::set<std::string> exclusion_code_set;   // extra ICD codes barring controls

  static CpRule for_phenotype(ehr::Phenotype cp, std::set<std::string> adrd_codes,
                              std::set<std::string> adrd_medications,
                              std::set<std::string> exclusion_codes = {});
  /// Throws ValidationError on empty code sets or a count outside {1, 2}.
  void validate() const;
};

struct CaseLabels {
  std::map<std::string, Date> cases;  // patient id -> index date
  std::set<std::string> controls_pool;
  std::set<std::string> excluded;
};

/// Partitions patients into cases, eligible-control pool and excluded.
/// A case's index date is its earliest ADRD diagnosis or medication date.
/// Non-cases carrying any ADRD code, ADRD medication or exclusion code are
/// excluded. Throws ValidationError on an empty patient list.
CaseLabels label_cases(const std::vector<ehr::RawPatient>& patients, const CpRule& rule);

struct EligibleControl {
  std::string patient_id;
  Date index_date;  // earliest encounter in [case index, case index + 183 days]
};

/// Pool members born within 365 days of the case and seen within 183 days
/// on or after the case's index date; result sorted by patient id.
std::vector<EligibleControl> find_eligible_controls(
    const ehr::RawPatient& case_patient, Date case_index,
    const std::vector<const ehr::RawPatient*>& pool);

/// (distinct PheCodes, encounter count) over encounters dated <= as_of.
std::array<double, 2> comorbidity_features(const ehr::RawPatient& patient, Date as_of,
                                           const ehr::CodeMaps& maps);

struct MatchedSet {
  std::string case_id;
  std::vector<std::string> control_ids;  // sorted by id
};

struct MatchedCohort {
  std::vector<MatchedSet> pairs;
  std::map<std::string, Date> index_dates;
  ehr::CohortConfig config;
  double total_cost = 0.0;
};

struct MatchInput {
  std::vector<std::string> case_ids;
  /// case id -> eligible controls (with the index date each would inherit)
  std::map<std::string, std::vector<EligibleControl>> eligibles;
  std::map<std::string, double> propensity;
  std::map<std::string, Date> case_index_dates;
};

/// Optimal 1:ratio matching on |propensity(case) - propensity(control)| over
/// eligible pairs. Each case is replicated into `ratio` slots, candidates are
/// ordered by id, and one exact assignment solve gives the global minimum.
/// Throws ComputeError when no complete matching exists.
MatchedCohort match_controls(const MatchInput& input, const ehr::CohortConfig& config);

enum class Role { Case, Control };

struct CohortMember {
  std::string patient_id;
  Role role = Role::Control;
  std::string case_id;  // the matched case (itself for a case)
  Date index_date;
  ehr::RawPatient record;  // truncated to the observation period

  bool operator==(const CohortMember&) const = default;
};

/// Keeps encounters strictly before index - pw_years*365 days; drops members
/// whose observation span (first kept encounter to window start) is shorter
/// than min_observation_years*365 days. A dropped case takes its controls
/// with it. Output order follows the cohort's pairs.
std::vector<CohortMember> derive_windows(const MatchedCohort& cohort,
                                         const std::vector<ehr::RawPatient>& patients,
                                         int pw_years, double min_observation_years);

struct CohortBuildStats {
  std::size_t patients = 0;
  std::size_t cases = 0;
  std::size_t controls_pool = 0;
  std::size_t excluded = 0;
  std::size_t cases_without_enough_eligibles = 0;
  std::size_t matched_cases = 0;
  std::size_t members_after_windowing = 0;
};

struct CohortBuild {
  MatchedCohort cohort;
  std::vector<CohortMember> members;
  CohortBuildStats stats;
};

/// label_cases -> eligibility -> propensity -> matching -> windowing.
/// Cases with fewer than `control_ratio` eligible candidates cannot be matched
/// and are left out before the global solve (counted in the stats).
CohortBuild build_cohort(const std::vector<ehr::RawPatient>& patients, const CpRule& rule,
                         const ehr::CohortConfig& config, const ehr::CodeMaps& maps);

// Cohort member JSON-lines: {"patient_id", "role": "case"|"control", "case_id",
// "index_date", "record": <patient object>}.
void write_members(const std::filesystem::path& path, const std::vector<CohortMember>& members);
std::vector<CohortMember> read_members(const std::filesystem::path& path);

}  // namespace riskroute::cohort
