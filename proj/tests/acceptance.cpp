// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All group-theoretic results are exact; every criterion also
// carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grp/corpus.hpp"
#include "grp/errors.hpp"
#include "grp/lattice.hpp"
#include "grp/nr.hpp"
#include "grp/numtheory.hpp"
#include "grp/structure.hpp"
#include "grp/suites.hpp"

using namespace grp;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, const std::string& label, std::string& detail) {
  if (!condition) detail += (detail.empty() ? "" : "; ") + label;
  return condition;
}

GroupPtr named(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& entry : corpus)
    if (entry.spec.name == name) return entry.group;
  throw Error("missing corpus group " + name);
}

}  // namespace

int main() {
  std::vector<CorpusEntry> corpus = default_corpus();
  SuiteOptions options;  // defaults: lattice cap 400, no timings

  std::vector<Criterion> criteria;

  // 1. A5 anchors: 2-maximal nilpotency, 3-maximal NR, V4 not NR.
  criteria.push_back({"A5 anchors (2-maximal nilpotent, 3-maximal NR, V4 witness)", 5.0,
                      [&](std::string& detail) {
    GroupPtr a5 = named(corpus, "A5");
    bool ok = true;
    for (const Subgroup& h : n_maximal_subgroups(*a5, 2))
      ok &= expect(is_nilpotent(h), "2-maximal of order " + std::to_string(h.order()) +
                                        " not nilpotent", detail);
    for (const Subgroup& h : n_maximal_subgroups(*a5, 3))
      ok &= expect(is_nr_subgroup(*a5, h).first,
                   "3-maximal of order " + std::to_string(h.order()) + " not NR",
                   detail);
    Subgroup v4 = [&] {
      for (const Subgroup& sub : a5->lattice().subgroups)
        if (sub.order() == 4) return sub;
      throw Error("no V4 in A5");
    }();
    auto [nr, witness] = is_nr_subgroup(*a5, v4);
    ok &= expect(!nr, "V4 unexpectedly NR", detail);
    ok &= expect(witness && witness->order() == 2, "witness is not an order-2 subgroup",
                 detail);
    if (witness) {
      SpecialTripleRecord rec = is_special_triple(*a5, v4, *witness);
      ok &= expect(rec.closure.order() == 60 && rec.meet.members() == v4.members(),
                   "closure meet V4 differs from V4", detail);
    }
    return ok;
  }});

  // 2. A4 sharpness.
  criteria.push_back({"A4 sharpness (A3 NR, supersolvable, maximal of index 4)", 1.0,
                      [&](std::string& detail) {
    GroupPtr a4 = named(corpus, "A4");
    Subgroup a3 = [&] {
      for (const Subgroup& sub : a4->lattice().subgroups)
        if (sub.order() == 3) return sub;
      throw Error("no A3 in A4");
    }();
    bool a3_maximal = false;
    for (const Subgroup& m : maximal_subgroups(*a4)) a3_maximal |= m == a3;
    bool ok = expect(is_nr_subgroup(*a4, a3).first, "A3 not NR", detail);
    ok &= expect(is_supersolvable(*a4->promoted(a3).group), "A3 not supersolvable",
                 detail);
    ok &= expect(a3_maximal, "A3 not maximal", detail);
    ok &= expect(a3.index_in_parent() == 4, "A3 index differs from 4", detail);
    ok &= expect(!is_supersolvable(*a4), "A4 unexpectedly supersolvable", detail);
    return ok;
  }});

  // 3. S4 maximal classification with the flagged A4 verdict.
  criteria.push_back({"S4 classification (S3 NR, D8 not NR, flagged A4 verdict)", 5.0,
                      [&](std::string& detail) {
    GroupPtr s4 = named(corpus, "S4");
    std::set<std::size_t> orders;
    bool s3_nr = true, d8_nr = false;
    bool a4_verdict_emitted = false;
    std::string a4_flag;
    for (const Subgroup& m : maximal_subgroups(*s4)) {
      orders.insert(m.order());
      bool nr = is_nr_subgroup(*s4, m).first;
      if (m.order() == 6) s3_nr &= nr;
      if (m.order() == 8) d8_nr |= nr;
      if (m.order() == 12) {
        a4_verdict_emitted = true;
        a4_flag = std::string("A4 verdict = ") + (nr ? "NR" : "not NR") +
                  " [flag: disagrees with the classical self-normalizing remark]";
      }
    }
    bool ok = expect(orders == std::set<std::size_t>{12, 8, 6},
                     "maximal orders differ from {12, 8, 6}", detail);
    ok &= expect(s3_nr, "S3 not NR", detail);
    ok &= expect(!d8_nr, "D8 unexpectedly NR", detail);
    ok &= expect(a4_verdict_emitted, "A4 verdict missing", detail);
    if (a4_verdict_emitted) detail += (detail.empty() ? "" : "; ") + a4_flag;
    return ok;
  }});

  // 4. Universal suites th1 / th2 / cor over the default corpus.
  criteria.push_back({"th1 / th2 / cor universal suites over the default corpus",
                      300.0, [&](std::string& detail) {
    bool ok = expect(corpus.size() >= 25, "corpus below 25 groups", detail);
    VerificationReport th1 = run_suite("th1", corpus, options);
    VerificationReport th2 = run_suite("th2", corpus, options);
    VerificationReport cor = run_suite("cor", corpus, options);
    ok &= expect(th1.counterexamples.empty(), "th1 counterexample", detail);
    ok &= expect(th2.counterexamples.empty(), "th2 counterexample", detail);
    ok &= expect(cor.counterexamples.empty(), "cor counterexample", detail);
    bool a5_holder = false;
    for (const auto& name : th2.hypothesis_holders) a5_holder |= name == "A5";
    ok &= expect(a5_holder, "A5 missing from the th2 holders", detail);
    GroupPtr a5 = named(corpus, "A5");
    const QuotientResult& quo = quotient(*a5, solvable_radical(*a5));
    ok &= expect(are_isomorphic(*quo.group, *a5).has_value(),
                 "A5 quotient by its radical is not A5", detail);
    return ok;
  }});

  // 5. nc1 / th4 suites plus the concrete S4 instance.
  criteria.push_back({"nc1 / th4 normal-complement suites with the S4 instance", 600.0,
                      [&](std::string& detail) {
    VerificationReport nc1 = run_suite("nc1", corpus, options);
    VerificationReport th4 = run_suite("th4", corpus, options);
    bool ok = expect(nc1.counterexamples.empty(), "nc1 counterexample", detail);
    ok &= expect(th4.counterexamples.empty(), "th4 counterexample", detail);

    GroupPtr s4 = named(corpus, "S4");
    GroupPtr s3 = named(corpus, "S3");
    Subgroup p = Subgroup::generated_by_perms(
        s4, std::vector<Perm>{parse_cycles("(1 2 3)", 4)});
    auto [premises, n] = nc1_premises(*s4, p);
    ok &= expect(premises, "premises fail for (S4, C3)", detail);
    ok &= expect(are_isomorphic(*s4->promoted(n).group, *s3).has_value(),
                 "normalizer is not an S3", detail);
    auto complement = normal_complement(*s4, n);
    ok &= expect(complement && complement->order() == 4 && complement->is_normal(),
                 "complement is not the normal V4", detail);
    ok &= expect(complement && complement->order() % 3 != 0,
                 "complement order not coprime to 3", detail);
    return ok;
  }});

  // 6. th5 suite.
  criteria.push_back({"th5 supersolvable NR-subgroups of prime index", 120.0,
                      [&](std::string& detail) {
    VerificationReport th5 = run_suite("th5", corpus, options);
    return expect(th5.counterexamples.empty(), "th5 counterexample", detail);
  }});

  // 7. Lemma suites.
  criteria.push_back({"lemma suites (lem1, lem2, lem7, lem8, lem9, nr1, sch, gt)",
                      600.0, [&](std::string& detail) {
    bool ok = true;
    for (const char* id : {"lem1", "lem2", "lem7", "lem8", "lem9", "nr1", "sch", "gt"}) {
      VerificationReport report = run_suite(id, corpus, options);
      ok &= expect(report.counterexamples.empty(),
                   std::string(id) + " counterexample", detail);
      ok &= expect(report.verdict == "verified", std::string(id) + " not verified",
                   detail);
    }
    return ok;
  }});

  // 8. Number theory.
  criteria.push_back({"number theory (prime-power scans and Zsigmondy grid)", 10.0,
                      [&](std::string& detail) {
    bool ok = expect(num::lemma3_scan(num::Lemma3Part::a, 60) == std::set<unsigned>{3},
                     "part a scan differs from {3}", detail);
    ok &= expect(
        num::lemma3_scan(num::Lemma3Part::b, 60) == std::set<unsigned>{0, 1, 2, 3},
        "part b scan differs from {0,1,2,3}", detail);
    for (std::uint64_t q = 2; q <= 10; ++q)
      for (unsigned n = 3; n <= 12; ++n) {
        bool empty = num::primitive_prime_divisors(q, n).empty();
        ok &= expect(empty == (q == 2 && n == 6),
                     "primitive prime divisors wrong at (" + std::to_string(q) + ", " +
                         std::to_string(n) + ")",
                     detail);
      }
    return ok;
  }});

  // 9. Constructions and frozen lattice counts.
  criteria.push_back({"constructions (L2(7), L2(5), lattice counts 30 and 59)", 30.0,
                      [&](std::string& detail) {
    GroupPtr l2_7 = named(corpus, "L2_7");
    GroupPtr l2_5 = named(corpus, "L2_5");
    GroupPtr s4 = named(corpus, "S4");
    GroupPtr a5 = named(corpus, "A5");
    bool ok = expect(l2_7->order() == 168, "L2(7) order differs from 168", detail);
    ok &= expect(l2_7->normal_subgroups().size() == 2, "L2(7) not simple", detail);
    bool has_s4 = false;
    for (const Subgroup& m : maximal_subgroups(*l2_7))
      if (m.order() == 24)
        has_s4 |= are_isomorphic(*l2_7->promoted(m).group, *s4).has_value();
    ok &= expect(has_s4, "no maximal subgroup of L2(7) is an S4", detail);
    ok &= expect(are_isomorphic(*l2_5, *a5).has_value(), "L2(5) is not A5", detail);
    ok &= expect(s4->lattice().size() == 30, "S4 lattice count differs from 30", detail);
    ok &= expect(a5->lattice().size() == 59, "A5 lattice count differs from 59", detail);
    return ok;
  }});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail += (detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (seconds >= criterion.budget_seconds) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
                std::to_string(criterion.budget_seconds) + " s";
    }
    if (!pass) ++failures;
    std::printf("criterion %zu/%zu [%s]: %s (%.2f s)%s%s\n", i + 1, criteria.size(),
                criterion.name.c_str(), pass ? "PASS" : "FAIL", seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
