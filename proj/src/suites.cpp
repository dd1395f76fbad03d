#include "grp/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "grp/errors.hpp"
#include "grp/util.hpp"
#include "suites_internal.hpp"

namespace grp {

namespace suites {

VerificationReport run_over_corpus(const std::string& suite_id,
                                   const std::vector<CorpusEntry>& corpus,
                                   const SuiteOptions& options,
                                   const GroupRunner& body) {
  VerificationReport report;
  report.suite_id = suite_id;
  report.description = suite_description(suite_id);

  std::size_t cap = options.effective_cap();
  std::vector<GroupResult> results(corpus.size());
  parallel_for(corpus.size(), options.jobs, [&](std::size_t i) {
    const CorpusEntry& entry = corpus[i];
    GroupResult& res = results[i];
    if (entry.group->order() > cap) {
      res.skip_reason = "order " + std::to_string(entry.group->order()) +
                        " above the suite cap " + std::to_string(cap);
      return;
    }
    res.checked = true;
    try {
      body(entry, res);
    } catch (const std::exception& e) {
      res.counterexamples.push_back({entry.spec.name, "internal error",
                                     "no exception", e.what()});
    }
  });

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string& name = corpus[i].spec.name;
    GroupResult& res = results[i];
    if (res.skip_reason) {
      report.skipped.push_back({name, *res.skip_reason});
      continue;
    }
    if (res.checked) ++report.groups_checked;
    if (res.holder) {
      report.hypothesis_holders.push_back(name);
      if (res.vacuous) report.vacuous_holders.push_back(name);
    }
    for (auto& ce : res.counterexamples) report.counterexamples.push_back(std::move(ce));
    for (auto& note : res.notes) report.notes.push_back(std::move(note));
  }
  std::sort(report.notes.begin(), report.notes.end());
  report.finalize();
  return report;
}

std::vector<Subgroup> normal_subgroups_within(const FiniteGroup& g, const Subgroup& h) {
  const PromotedGroup& promo = g.promoted(h);
  std::vector<Subgroup> out;
  for (const Subgroup& n : promo.group->normal_subgroups())
    out.push_back(map_to_parent(h.parent(), promo, n));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<Subgroup> p_complement_of_subgroup(const FiniteGroup& g,
                                                 const Subgroup& h, unsigned p) {
  const PromotedGroup& promo = g.promoted(h);
  auto complement = is_p_nilpotent(*promo.group, p);
  if (!complement) return std::nullopt;
  return map_to_parent(h.parent(), promo, *complement);
}

bool subgroup_is_supersolvable(const FiniteGroup& g, const Subgroup& h) {
  return is_supersolvable(*g.promoted(h).group);
}

std::vector<unsigned> prime_divisors_of(std::size_t n) {
  std::vector<unsigned> primes;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(static_cast<unsigned>(n));
  return primes;
}

Subgroup image_subgroup(const GroupMap& map, const Subgroup& sub) {
  DynBitset image(map.target()->order());
  sub.members().for_each(
      [&](std::size_t m) { image.set(map.apply(static_cast<Ordinal>(m))); });
  return make_subgroup_unchecked(map.target(), std::move(image));
}

// --- theorem suites ---

VerificationReport run_th1(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("th1", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    HypothesisVerdict v = hypothesis(g, TheoremId::th1, options.effective_cap());
    if (!v.holds) return;
    res.holder = true;
    res.vacuous = v.vacuous;
    auto [solvable, series] = is_solvable(g);
    if (!solvable)
      res.counterexamples.push_back(
          {entry.spec.name,
           "hypothesis holds but the derived series stalls at order " +
               std::to_string(series.terms.back().order()),
           "solvable", "not solvable"});
  });
}

VerificationReport run_th2(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  GroupPtr a5 = build(GroupSpec{"A5", {GroupSpec::Alternating{5}}});
  return run_over_corpus("th2", corpus, options, [&, a5](const CorpusEntry& entry,
                                                         GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    HypothesisVerdict v = hypothesis(g, TheoremId::th2, options.effective_cap());
    if (!v.holds) return;
    res.holder = true;
    res.vacuous = v.vacuous;
    Subgroup radical = solvable_radical(g);
    const QuotientResult& quo = quotient(g, radical);
    if (quo.group->order() == 1) return;
    if (are_isomorphic(*quo.group, *a5)) {
      res.notes.push_back(entry.spec.name +
                          ": quotient by the solvable radical is isomorphic to A5");
      return;
    }
    res.counterexamples.push_back(
        {entry.spec.name,
         "quotient by the solvable radical has order " +
             std::to_string(quo.group->order()),
         "trivial or isomorphic to A5", "neither"});
  });
}

VerificationReport run_cor(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("cor", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    HypothesisVerdict v = hypothesis(g, TheoremId::cor, options.effective_cap());
    if (!v.holds) return;
    res.holder = true;
    res.vacuous = v.vacuous;
    auto [solvable, series] = is_solvable(g);
    if (!solvable)
      res.counterexamples.push_back(
          {entry.spec.name,
           "hypothesis holds but the derived series stalls at order " +
               std::to_string(series.terms.back().order()),
           "solvable", "not solvable"});
  });
}

namespace {

// Shared premise loop for the normal-complement suites: visits every
// nontrivial prime-power-order subgroup in the lattice.
void for_each_premise_subgroup(
    const FiniteGroup& g, std::size_t cap,
    const std::function<void(const Subgroup& p_sub, unsigned p, const Subgroup& n)>& fn) {
  const SubgroupLattice& lat = g.lattice(cap);
  for (const Subgroup& p_sub : lat.subgroups) {
    if (p_sub.order() < 2 || !p_sub.is_prime_power_order()) continue;
    unsigned p = prime_divisors_of(p_sub.order()).front();
    auto [ok, n] = nc1_premises(g, p_sub, cap);
    if (ok) fn(p_sub, p, n);
  }
}

}  // namespace

VerificationReport run_nc1(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("nc1", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    for_each_premise_subgroup(g, options.effective_cap(), [&](const Subgroup& p_sub,
                                                              unsigned p,
                                                              const Subgroup& n) {
      res.holder = true;
      auto complement = normal_complement(g, n);
      if (!complement) {
        res.counterexamples.push_back(
            {entry.spec.name,
             "premises hold for p-subgroup " + p_sub.describe() + ", normalizer " +
                 n.describe(),
             "a normal complement exists", "none found"});
        return;
      }
      if (complement->order() % p == 0)
        res.counterexamples.push_back(
            {entry.spec.name,
             "complement " + complement->describe() + " for normalizer " + n.describe(),
             "order coprime to " + std::to_string(p), "divisible"});
    });
  });
}

VerificationReport run_th4(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("th4", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    for_each_premise_subgroup(g, options.effective_cap(), [&](const Subgroup& p_sub,
                                                              unsigned p,
                                                              const Subgroup& n) {
      if (!p_complement_of_subgroup(g, n, p)) return;  // normalizer not p-nilpotent
      res.holder = true;
      if (!is_p_nilpotent(g, p))
        res.counterexamples.push_back(
            {entry.spec.name,
             "premises hold for " + p_sub.describe() + " and the normalizer " +
                 n.describe() + " is " + std::to_string(p) + "-nilpotent",
             "group is " + std::to_string(p) + "-nilpotent", "not p-nilpotent"});
    });
  });
}

VerificationReport run_th5(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("th5", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    const SubgroupLattice& lat = g.lattice(options.effective_cap());
    for (const Subgroup& h : lat.subgroups) {
      std::size_t index = g.order() / h.order();
      if (!is_prime_number(static_cast<unsigned>(index))) continue;
      if (!is_nr_subgroup(g, h).first) continue;
      if (!subgroup_is_supersolvable(g, h)) continue;
      res.holder = true;
      if (!is_supersolvable(g)) {
        res.counterexamples.push_back(
            {entry.spec.name,
             "NR-subgroup " + h.describe() + " of prime index " + std::to_string(index) +
                 " is supersolvable",
             "group is supersolvable", "not supersolvable"});
      }
    }
  });
}

}  // namespace suites

// --- registry ---

namespace {

using SuiteFn = VerificationReport (*)(const std::vector<CorpusEntry>&,
                                       const SuiteOptions&);

struct SuiteInfo {
  const char* id;
  const char* description;
  SuiteFn fn;
};

const SuiteInfo kSuites[] = {
    {"th1", "solvability when every non-nilpotent maximal subgroup is normal or NR",
     suites::run_th1},
    {"th2",
     "quotient by the solvable radical is trivial or A5 when every non-nilpotent "
     "2-maximal subgroup is subnormal or NR",
     suites::run_th2},
    {"cor", "solvability when every 2-maximal subgroup is subnormal or NR",
     suites::run_cor},
    {"nc1",
     "normal complement for the normalizer of a p-subgroup under the special-triple "
     "premises",
     suites::run_nc1},
    {"th4", "p-nilpotency transfers from the normalizer under the special-triple "
            "premises",
     suites::run_th4},
    {"th5", "supersolvability from a supersolvable NR-subgroup of prime index",
     suites::run_th5},
    {"lem1", "special-triple restriction, quotient and factorization properties",
     suites::run_lem1},
    {"lem2", "Tate's criterion: H meet P inside Frattini(P) forces H p-nilpotent",
     suites::run_lem2},
    {"lem3", "prime-power dichotomies for 2^t-1 and 2^t+1", suites::run_lem3},
    {"lem7", "supersolvability passes between G and G/A for A normal of prime order",
     suites::run_lem7},
    {"lem8", "normal p-complements of normal subgroups are normal in the whole group",
     suites::run_lem8},
    {"lem9", "dihedral family: nilpotent iff t is a power of 2, minimal non-nilpotent "
             "iff t is an odd prime",
     suites::run_lem9},
    {"nr1", "solvability when every self-normalizing maximal subgroup is nilpotent",
     suites::run_nr1},
    {"sch", "Schmidt structure of minimal non-nilpotent groups", suites::run_sch},
    {"gt", "Glauberman-Thompson normal p-complement criterion for p in {3, 5, 7}",
     suites::run_gt},
    {"zsi", "Zsigmondy primitive prime divisors over the desk-scale grid",
     suites::run_zsi},
    {"anchors", "concrete example checks in A5, A4, S4, L2(5) and L2(7)",
     suites::run_anchors},
};

const SuiteInfo* find_suite(const std::string& id) {
  for (const SuiteInfo& info : kSuites)
    if (id == info.id) return &info;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const SuiteInfo& info : kSuites) out.push_back(info.id);
    return out;
  }();
  return ids;
}

bool is_suite_id(const std::string& id) {
  return id == "all" || find_suite(id) != nullptr;
}

std::string suite_description(const std::string& id) {
  if (id == "all") return "every suite in canonical order";
  const SuiteInfo* info = find_suite(id);
  return info ? info->description : "";
}

VerificationReport run_suite(const std::string& suite_id,
                             const std::vector<CorpusEntry>& corpus,
                             const SuiteOptions& options) {
  if (suite_id == "all") {
    // Roll-up: counterexamples and counts aggregated over every suite.
    std::vector<VerificationReport> reports = run_all(corpus, options);
    VerificationReport total;
    total.suite_id = "all";
    total.description = suite_description("all");
    for (VerificationReport& r : reports) {
      total.groups_checked += r.groups_checked;
      for (auto& ce : r.counterexamples) {
        ce.witness = "[" + r.suite_id + "] " + ce.witness;
        total.counterexamples.push_back(std::move(ce));
      }
      total.elapsed_ms += r.elapsed_ms;
    }
    total.finalize();
    return total;
  }
  const SuiteInfo* info = find_suite(suite_id);
  if (!info) throw UnknownSuite("unknown suite '" + suite_id + "'");
  auto start = std::chrono::steady_clock::now();
  VerificationReport report = info->fn(corpus, options);
  if (options.timings)
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::vector<VerificationReport> run_all(const std::vector<CorpusEntry>& corpus,
                                        const SuiteOptions& options) {
  std::vector<VerificationReport> reports;
  for (const std::string& id : suite_ids())
    reports.push_back(run_suite(id, corpus, options));
  return reports;
}

}  // namespace grp
