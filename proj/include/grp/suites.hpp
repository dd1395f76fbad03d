#ifndef GRP_SUITES_HPP
#define GRP_SUITES_HPP

#include <string>
#include <vector>

#include "grp/corpus.hpp"
#include "grp/report.hpp"

namespace grp {

struct SuiteOptions {
  /// Groups above this order are skipped by the corpus suites (reported as
  /// skipped, never silently dropped).
  std::size_t lattice_cap = FiniteGroup::kDefaultLatticeCap;
  /// Raises the cap to 1200 for the large corpus entries.
  bool opt_in_large = false;
  /// Additional order filter (0 = none).
  std::size_t max_order = 0;
  /// Worker threads; 0 = hardware concurrency. Reports are identical
  /// regardless (assembly is corpus-ordered, lists sorted).
  unsigned jobs = 0;
  /// Record wall-clock per suite; off by default so reports are
  /// byte-identical across runs.
  bool timings = false;
  /// Chain-property scans (the special-triple suite) cover groups up to this
  /// order.
  std::size_t small_order_bound = 60;
  /// Scan bound for the prime-power dichotomy suite.
  unsigned lemma3_t_max = 60;

  std::size_t effective_cap() const {
    std::size_t cap = opt_in_large ? FiniteGroup::kOptInLatticeCap : lattice_cap;
    if (max_order > 0 && max_order < cap) cap = max_order;
    return cap;
  }
};

/// Canonical suite order (excludes "all").
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);
std::string suite_description(const std::string& id);

/// Run one suite; "all" yields a roll-up of every suite. Unknown ids throw
/// UnknownSuite.
VerificationReport run_suite(const std::string& suite_id,
                             const std::vector<CorpusEntry>& corpus,
                             const SuiteOptions& options = {});

/// Every suite in canonical order.
std::vector<VerificationReport> run_all(const std::vector<CorpusEntry>& corpus,
                                        const SuiteOptions& options = {});

}  // namespace grp

#endif  // GRP_SUITES_HPP
