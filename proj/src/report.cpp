#include "grp/report.hpp"

#include <algorithm>
#include <ostream>

namespace grp {

void VerificationReport::finalize() {
  std::sort(hypothesis_holders.begin(), hypothesis_holders.end());
  std::sort(vacuous_holders.begin(), vacuous_holders.end());
  std::sort(counterexamples.begin(), counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.group, a.witness) < std::tie(b.group, b.witness);
            });
  std::sort(skipped.begin(), skipped.end(),
            [](const SkippedGroup& a, const SkippedGroup& b) {
              return std::tie(a.group, a.reason) < std::tie(b.group, b.reason);
            });
  if (verdict.empty())
    verdict = !counterexamples.empty() ? "refuted"
              : groups_checked == 0    ? "skipped"
                                       : "verified";
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite_id"] = suite_id;
  j["description"] = description;
  j["verdict"] = verdict;
  j["groups_checked"] = groups_checked;
  j["hypothesis_holders"] = hypothesis_holders;
  j["vacuous_holders"] = vacuous_holders;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const Counterexample& ce : counterexamples) {
    nlohmann::ordered_json cj;
    cj["group"] = ce.group;
    cj["witness"] = ce.witness;
    cj["expected"] = ce.expected;
    cj["actual"] = ce.actual;
    j["counterexamples"].push_back(std::move(cj));
  }
  j["skipped"] = nlohmann::ordered_json::array();
  for (const SkippedGroup& sg : skipped) {
    nlohmann::ordered_json sj;
    sj["group"] = sg.group;
    sj["reason"] = sg.reason;
    j["skipped"].push_back(std::move(sj));
  }
  j["notes"] = notes;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

void VerificationReport::write_text(std::ostream& os) const {
  os << "[" << suite_id << "] " << verdict << " | " << description << "\n"
     << "  checked " << groups_checked << ", holders " << hypothesis_holders.size()
     << " (" << vacuous_holders.size() << " vacuous), counterexamples "
     << counterexamples.size() << ", skipped " << skipped.size();
  if (elapsed_ms > 0) os << ", " << elapsed_ms << " ms";
  os << "\n";
  for (const Counterexample& ce : counterexamples)
    os << "  COUNTEREXAMPLE " << ce.group << ": " << ce.witness
       << " | expected: " << ce.expected << " | actual: " << ce.actual << "\n";
  for (const SkippedGroup& sg : skipped)
    os << "  skipped " << sg.group << ": " << sg.reason << "\n";
  for (const std::string& note : notes) os << "  note: " << note << "\n";
}

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j;
  bool refuted = false;
  for (const auto& r : reports) refuted = refuted || r.refuted();
  j["overall"] = refuted ? "refuted" : "verified";
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json());
  return j;
}

void write_reports_text(std::ostream& os, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) r.write_text(os);
}

}  // namespace grp
