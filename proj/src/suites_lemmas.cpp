#include <algorithm>
#include <set>

#include "grp/numtheory.hpp"
#include "suites_internal.hpp"

namespace grp::suites {

// Chain properties of special triples over all small-order corpus groups:
// restriction to intermediate subgroups, NR passing to quotients, and the
// factorization sufficient condition.
VerificationReport run_lem1(const std::vector<CorpusEntry>& corpus,
                            const SuiteOptions& options) {
  SuiteOptions bounded = options;
  bounded.max_order = std::min<std::size_t>(
      options.small_order_bound, options.max_order ? options.max_order : SIZE_MAX);
  return run_over_corpus("lem1", corpus, bounded, [&](const CorpusEntry& entry,
                                                      GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    GroupPtr self = g.shared_from_this();
    const SubgroupLattice& lat = g.lattice(options.effective_cap());
    res.holder = true;

    for (std::size_t hi = 0; hi < lat.size(); ++hi) {
      const Subgroup& h = lat.subgroups[hi];
      auto normals_in_h = normal_subgroups_within(g, h);

      // (a) special in g restricts to every intermediate subgroup.
      for (const Subgroup& k : normals_in_h) {
        if (!is_special_triple(g, h, k).special) continue;
        lat.proper_sups[hi].for_each([&](std::size_t ti) {
          const Subgroup& t = lat.subgroups[ti];
          if (t.is_full()) return;  // the triple in g itself is the premise
          const PromotedGroup& promo = g.promoted(t);
          Subgroup h_in_t = restrict_to_promoted(promo, h);
          Subgroup k_in_t = restrict_to_promoted(promo, k);
          if (!is_special_triple(*promo.group, h_in_t, k_in_t).special)
            res.counterexamples.push_back(
                {entry.spec.name,
                 "triple with h = " + h.describe() + ", k = " + k.describe() +
                     " special in the group but not in t = " + t.describe(),
                 "special in every intermediate subgroup", "restriction fails"});
        });
      }

      // (c) an NR-subgroup stays NR in the quotient by any k^g.
      if (is_nr_subgroup(g, h).first) {
        for (const Subgroup& k : normals_in_h) {
          Subgroup closure = normal_closure(g, k);
          const QuotientResult& quo = quotient(g, closure);
          Subgroup h_bar = image_subgroup(quo.projection, h);
          if (!is_nr_subgroup(*quo.group, h_bar).first)
            res.counterexamples.push_back(
                {entry.spec.name,
                 "NR-subgroup " + h.describe() + " maps to a non-NR subgroup in the "
                     "quotient by the normal closure of " + k.describe(),
                 "image is NR in the quotient", "not NR"});
        }
      }
    }

    // (e) a factorization g = h*l with h meet l normal in h makes the triple
    // special.
    for (const Subgroup& h : lat.subgroups)
      for (const Subgroup& l : lat.subgroups) {
        Subgroup k = h.meet(l);
        if (h.order() * l.order() / k.order() != g.order()) continue;
        bool k_normal_in_h = true;
        auto k_gens = k.small_generating_set();
        for (Ordinal c : h.small_generating_set())
          for (Ordinal m : k_gens)
            if (!k.contains(g.conjugate_element(m, c))) {
              k_normal_in_h = false;
              break;
            }
        if (!k_normal_in_h) continue;
        if (!is_special_triple(g, h, k).special)
          res.counterexamples.push_back(
              {entry.spec.name,
               "factorization with h = " + h.describe() + ", l = " + l.describe() +
                   ", meet " + k.describe(),
               "triple is special", "not special"});
      }
  });
}

// Tate: a normal subgroup meeting some Sylow p-subgroup inside its Frattini
// subgroup is p-nilpotent.
VerificationReport run_lem2(const std::vector<CorpusEntry>& corpus,
                            const SuiteOptions& options) {
  return run_over_corpus("lem2", corpus, options, [&](const CorpusEntry& entry,
                                                      GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    std::size_t cap = options.effective_cap();
    for (const Subgroup& h : g.normal_subgroups())
      for (unsigned p : prime_divisors_of(g.order()))
        for (const Subgroup& syl : sylow(g, p, cap)) {
          Subgroup phi = frattini(syl, cap);
          DynBitset meet = h.members() & syl.members();
          if (!meet.is_subset_of(phi.members())) continue;
          res.holder = true;
          if (!p_complement_of_subgroup(g, h, p))
            res.counterexamples.push_back(
                {entry.spec.name,
                 "normal subgroup " + h.describe() + " meets the Sylow " +
                     std::to_string(p) + "-subgroup " + syl.describe() +
                     " inside its Frattini subgroup",
                 "p-nilpotent", "no normal p-complement"});
        }
  });
}

VerificationReport run_lem3(const std::vector<CorpusEntry>&,
                            const SuiteOptions& options) {
  VerificationReport report;
  report.suite_id = "lem3";
  report.description = suite_description("lem3");
  unsigned t_max = options.lemma3_t_max;
  report.groups_checked = 2 * (t_max + 1);

  std::set<unsigned> part_a = num::lemma3_scan(num::Lemma3Part::a, t_max);
  std::set<unsigned> part_b = num::lemma3_scan(num::Lemma3Part::b, t_max);
  auto set_text = [](const std::set<unsigned>& s) {
    std::string out = "{";
    for (unsigned t : s) out += (out.size() > 1 ? ", " : "") + std::to_string(t);
    return out + "}";
  };
  if (part_a != std::set<unsigned>{3})
    report.counterexamples.push_back(
        {"lemma3(a)", "scan up to " + std::to_string(t_max), "{3}", set_text(part_a)});
  if (part_b != std::set<unsigned>{0, 1, 2, 3})
    report.counterexamples.push_back({"lemma3(b)", "scan up to " + std::to_string(t_max),
                                      "{0, 1, 2, 3}", set_text(part_b)});
  report.notes.push_back("part a = " + set_text(part_a));
  report.notes.push_back("part b = " + set_text(part_b));
  report.finalize();
  return report;
}

// Supersolvability passes to and from the quotient by a prime-order normal
// subgroup.
VerificationReport run_lem7(const std::vector<CorpusEntry>& corpus,
                            const SuiteOptions& options) {
  return run_over_corpus("lem7", corpus, options, [&](const CorpusEntry& entry,
                                                      GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    bool lhs = is_supersolvable(g);
    for (const Subgroup& a : g.normal_subgroups()) {
      if (!is_prime_number(static_cast<unsigned>(a.order()))) continue;
      res.holder = true;
      bool rhs = is_supersolvable(*quotient(g, a).group);
      if (lhs != rhs)
        res.counterexamples.push_back(
            {entry.spec.name, "prime-order normal subgroup " + a.describe(),
             "supersolvability equal on both sides",
             std::string("group: ") + (lhs ? "yes" : "no") + ", quotient: " +
                 (rhs ? "yes" : "no")});
    }
  });
}

// A normal p-complement of a normal subgroup is normal in the whole group.
VerificationReport run_lem8(const std::vector<CorpusEntry>& corpus,
                            const SuiteOptions& options) {
  return run_over_corpus("lem8", corpus, options, [&](const CorpusEntry& entry,
                                                      GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    for (const Subgroup& h : g.normal_subgroups())
      for (unsigned p : prime_divisors_of(h.order())) {
        auto complement = p_complement_of_subgroup(g, h, p);
        if (!complement) continue;
        res.holder = true;
        if (!complement->is_normal())
          res.counterexamples.push_back(
              {entry.spec.name,
               "complement " + complement->describe() + " of the normal subgroup " +
                   h.describe() + " at p = " + std::to_string(p),
               "normal in the whole group", "not normal"});
      }
  });
}

// Dihedral family: D_2t nilpotent iff t is a power of two; minimal
// non-nilpotent iff t is an odd prime.
VerificationReport run_lem9(const std::vector<CorpusEntry>& corpus,
                            const SuiteOptions& options) {
  auto is_power_of_two = [](unsigned t) { return t != 0 && (t & (t - 1)) == 0; };
  auto is_odd_prime = [](unsigned t) { return t % 2 == 1 && is_prime_number(t); };
  return run_over_corpus("lem9", corpus, options, [&](const CorpusEntry& entry,
                                                      GroupResult& res) {
    if (entry.spec.factors.size() != 1) {
      res.checked = false;
      return;
    }
    const auto* dihedral = std::get_if<GroupSpec::Dihedral>(&entry.spec.factors[0]);
    if (!dihedral) {
      res.checked = false;
      return;
    }
    unsigned t = dihedral->order / 2;
    res.holder = true;
    const FiniteGroup& g = *entry.group;
    bool nilpotent = is_nilpotent(g);
    if (nilpotent != is_power_of_two(t))
      res.counterexamples.push_back(
          {entry.spec.name, "t = " + std::to_string(t),
           std::string("nilpotent iff t is a power of 2: ") +
               (is_power_of_two(t) ? "nilpotent" : "not nilpotent"),
           nilpotent ? "nilpotent" : "not nilpotent"});
    bool mnn = is_minimal_non_nilpotent(g, options.effective_cap());
    if (mnn != is_odd_prime(t))
      res.counterexamples.push_back(
          {entry.spec.name, "t = " + std::to_string(t),
           std::string("minimal non-nilpotent iff t is an odd prime: ") +
               (is_odd_prime(t) ? "minimal non-nilpotent" : "not minimal non-nilpotent"),
           mnn ? "minimal non-nilpotent" : "not minimal non-nilpotent"});
  });
}

// Every self-normalizing maximal subgroup nilpotent forces solvability.
VerificationReport run_nr1(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("nr1", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    for (const Subgroup& m : maximal_subgroups(g, options.effective_cap())) {
      if (!(normalizer(g, m) == m)) continue;
      if (!is_nilpotent(m)) return;  // hypothesis fails
    }
    res.holder = true;
    if (!is_solvable(g).first)
      res.counterexamples.push_back(
          {entry.spec.name, "every self-normalizing maximal subgroup is nilpotent",
           "solvable", "not solvable"});
  });
}

// Schmidt: a minimal non-nilpotent group is solvable, has exactly two prime
// divisors, a unique (hence normal) Sylow subgroup for one of them and a
// cyclic Sylow subgroup for the other.
VerificationReport run_sch(const std::vector<CorpusEntry>& corpus,
                           const SuiteOptions& options) {
  return run_over_corpus("sch", corpus, options, [&](const CorpusEntry& entry,
                                                     GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    std::size_t cap = options.effective_cap();
    if (!is_minimal_non_nilpotent(g, cap)) return;
    res.holder = true;
    auto fail = [&](const std::string& expected, const std::string& actual) {
      res.counterexamples.push_back(
          {entry.spec.name, "minimal non-nilpotent group", expected, actual});
    };
    if (!is_solvable(g).first) fail("solvable", "not solvable");
    auto primes = prime_divisors_of(g.order());
    if (primes.size() != 2) {
      fail("order p^m q^n with two primes",
           std::to_string(primes.size()) + " prime divisors");
      return;
    }
    auto cyclic = [&](const Subgroup& q_sub) {
      const auto& orders = q_sub.parent()->element_orders();
      bool found = false;
      q_sub.members().for_each([&](std::size_t m) {
        if (orders[m] == q_sub.order()) found = true;
      });
      return found;
    };
    bool structure_found = false;
    for (unsigned swap = 0; swap < 2 && !structure_found; ++swap) {
      unsigned p = primes[swap], q = primes[1 - swap];
      auto syl_p = sylow(g, p, cap);
      auto syl_q = sylow(g, q, cap);
      structure_found = syl_p.size() == 1 && syl_p.front().is_normal() &&
                        !syl_q.empty() && cyclic(syl_q.front());
    }
    if (!structure_found)
      fail("a unique normal Sylow p-subgroup and a cyclic Sylow q-subgroup",
           "no such prime assignment");
  });
}

// Glauberman-Thompson: for odd p, a p-nilpotent normalizer of Z(J(P)) forces
// a normal p-complement in the whole group.
VerificationReport run_gt(const std::vector<CorpusEntry>& corpus,
                          const SuiteOptions& options) {
  return run_over_corpus("gt", corpus, options, [&](const CorpusEntry& entry,
                                                    GroupResult& res) {
    const FiniteGroup& g = *entry.group;
    std::size_t cap = options.effective_cap();
    for (unsigned p : {3u, 5u, 7u}) {
      if (g.order() % p != 0) continue;
      Subgroup syl = sylow(g, p, cap).front();
      Subgroup zjp = z_j(syl, cap);
      Subgroup n = normalizer(g, zjp);
      if (!p_complement_of_subgroup(g, n, p)) continue;
      res.holder = true;
      if (!is_p_nilpotent(g, p))
        res.counterexamples.push_back(
            {entry.spec.name,
             "normalizer of Z(J(P)) for p = " + std::to_string(p) + " is p-nilpotent",
             "group has a normal p-complement", "none"});
    }
  });
}

// Zsigmondy at desk scale: a primitive prime divisor of q^n - 1 exists on the
// whole grid except (2, 6), and every one is congruent to 1 mod n.
VerificationReport run_zsi(const std::vector<CorpusEntry>&,
                           const SuiteOptions&) {
  VerificationReport report;
  report.suite_id = "zsi";
  report.description = suite_description("zsi");
  for (std::uint64_t q = 2; q <= 10; ++q)
    for (unsigned n = 3; n <= 12; ++n) {
      ++report.groups_checked;
      auto divisors = num::primitive_prime_divisors(q, n);
      std::string instance = "(q, n) = (" + std::to_string(q) + ", " +
                             std::to_string(n) + ")";
      bool expect_empty = (q == 2 && n == 6);
      if (expect_empty != divisors.empty())
        report.counterexamples.push_back(
            {"zsigmondy", instance,
             expect_empty ? "no primitive prime divisor" : "a primitive prime divisor",
             expect_empty ? "found one" : "none found"});
      for (std::uint64_t r : divisors)
        if (r % n != 1)
          report.counterexamples.push_back(
              {"zsigmondy", instance + ", r = " + std::to_string(r),
               "r congruent to 1 mod n", "not congruent"});
    }
  report.finalize();
  return report;
}

}  // namespace grp::suites
