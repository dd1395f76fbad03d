#ifndef GRP_SUITES_INTERNAL_HPP
#define GRP_SUITES_INTERNAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grp/corpus.hpp"
#include "grp/lattice.hpp"
#include "grp/nr.hpp"
#include "grp/report.hpp"
#include "grp/structure.hpp"
#include "grp/suites.hpp"

namespace grp::suites {

/// Per-group accumulation merged into the report in corpus order.
struct GroupResult {
  bool checked = false;
  bool holder = false;
  bool vacuous = false;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  std::optional<std::string> skip_reason;
};

using GroupRunner = std::function<void(const CorpusEntry&, GroupResult&)>;

/// Runs the per-group body over every corpus entry within the effective order
/// cap, in parallel at group granularity; exceptions become counterexamples
/// so one bad record cannot take down the suite.
VerificationReport run_over_corpus(const std::string& suite_id,
                                   const std::vector<CorpusEntry>& corpus,
                                   const SuiteOptions& options,
                                   const GroupRunner& body);

/// Normal subgroups of h as subgroups of g, canonical order.
std::vector<Subgroup> normal_subgroups_within(const FiniteGroup& g, const Subgroup& h);

/// The p-complement test on a subgroup: promotes h and maps the complement
/// back into the parent.
std::optional<Subgroup> p_complement_of_subgroup(const FiniteGroup& g,
                                                 const Subgroup& h, unsigned p);

bool subgroup_is_supersolvable(const FiniteGroup& g, const Subgroup& h);

std::vector<unsigned> prime_divisors_of(std::size_t n);

/// Image of a subgroup under a projection, as a subgroup of the target.
Subgroup image_subgroup(const GroupMap& map, const Subgroup& sub);

// Suite bodies (one per corpus-quantified suite).
VerificationReport run_th1(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_th2(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_cor(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_nc1(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_th4(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_th5(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem1(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem2(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem3(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem7(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem8(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_lem9(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_nr1(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_sch(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_gt(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_zsi(const std::vector<CorpusEntry>&, const SuiteOptions&);
VerificationReport run_anchors(const std::vector<CorpusEntry>&, const SuiteOptions&);

}  // namespace grp::suites

#endif  // GRP_SUITES_INTERNAL_HPP
