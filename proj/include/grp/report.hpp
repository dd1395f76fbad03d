#ifndef GRP_REPORT_HPP
#define GRP_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace grp {

struct Counterexample {
  std::string group;
  std::string witness;
  std::string expected;
  std::string actual;
};

struct SkippedGroup {
  std::string group;
  std::string reason;
};

/// Outcome of one suite run. Deterministic for a fixed corpus and options:
/// name lists are sorted and elapsed_ms stays 0 unless timings were requested.
struct VerificationReport {
  std::string suite_id;
  std::string description;
  std::string verdict;  // verified | refuted | skipped
  std::size_t groups_checked = 0;
  std::vector<std::string> hypothesis_holders;
  std::vector<std::string> vacuous_holders;  // subset of hypothesis_holders
  std::vector<Counterexample> counterexamples;
  std::vector<SkippedGroup> skipped;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  void finalize();  // sorts lists, derives the verdict
  bool refuted() const { return verdict == "refuted"; }

  nlohmann::ordered_json to_json() const;
  void write_text(std::ostream& os) const;
};

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports);
void write_reports_text(std::ostream& os, const std::vector<VerificationReport>& reports);

}  // namespace grp

#endif  // GRP_REPORT_HPP
