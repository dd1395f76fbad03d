// Command-line verification harness: runs theorem suites over a corpus of
// small permutation groups, dumps subgroup lattices and answers ad-hoc
// NR/special-triple queries. Exit codes: 0 verified, 1 counterexample found,
// 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grp/corpus.hpp"
#include "grp/errors.hpp"
#include "grp/lattice.hpp"
#include "grp/nr.hpp"
#include "grp/numtheory.hpp"
#include "grp/report.hpp"
#include "grp/structure.hpp"
#include "grp/suites.hpp"

namespace {

struct CorpusArgs {
  std::string corpus = "default";
};

std::vector<grp::CorpusEntry> load(const CorpusArgs& args,
                                   std::vector<grp::CorpusLoadError>* errors) {
  if (args.corpus == "default") return grp::default_corpus();
  grp::CorpusLoadResult result = grp::load_corpus_tolerant(args.corpus);
  if (errors)
    *errors = result.errors;
  else if (!result.errors.empty())
    throw grp::ParseError(result.errors.front().message, result.errors.front().line);
  return std::move(result.entries);
}

grp::GroupPtr resolve_group(const std::vector<grp::CorpusEntry>& corpus,
                            const std::string& name, const std::string& gens,
                            unsigned degree) {
  if (!name.empty()) {
    for (const auto& entry : corpus)
      if (entry.spec.name == name) return entry.group;
    throw grp::Error("group '" + name + "' not found in the corpus");
  }
  if (gens.empty()) throw grp::Error("pass --group NAME or --gens CYCLES");
  std::vector<grp::Perm> perms = grp::parse_perm_list(gens, degree);
  return grp::FiniteGroup::from_generators(std::move(perms),
                                           perms.empty() ? 1 : perms.front().degree(),
                                           grp::FiniteGroup::kDefaultOrderCap, "adhoc");
}

grp::Subgroup parse_subgroup(const grp::GroupPtr& g, const std::string& gens) {
  std::vector<grp::Perm> perms = grp::parse_perm_list(gens, g->degree());
  return grp::Subgroup::generated_by_perms(g, perms);
}

int cmd_verify(const std::string& suite, const CorpusArgs& corpus_args,
               const grp::SuiteOptions& options, const std::string& report_path,
               const std::string& format) {
  std::vector<grp::CorpusLoadError> corpus_errors;
  auto corpus = load(corpus_args, &corpus_errors);
  for (const auto& err : corpus_errors)
    std::cerr << "corpus record skipped (line " << err.line << "): " << err.message
              << "\n";

  std::vector<grp::VerificationReport> reports;
  if (suite == "all")
    reports = grp::run_all(corpus, options);
  else
    reports.push_back(grp::run_suite(suite, corpus, options));

  grp::write_reports_text(std::cout, reports);
  bool refuted = false;
  for (const auto& r : reports) refuted = refuted || r.refuted();
  std::cout << (refuted ? "RESULT: refuted" : "RESULT: verified") << "\n";

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return 2;
    }
    if (format == "machine")
      out << grp::reports_to_json(reports).dump(2) << "\n";
    else
      grp::write_reports_text(out, reports);
  }
  return refuted ? 1 : 0;
}

int cmd_lattice(const CorpusArgs& corpus_args, const std::string& name,
                const std::string& gens, unsigned degree, const std::string& emit,
                std::size_t cap) {
  auto corpus = load(corpus_args, nullptr);
  grp::GroupPtr g = resolve_group(corpus, name, gens, degree);
  const grp::SubgroupLattice& lat = g->lattice(cap);

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const grp::Subgroup& sub = lat.subgroups[i];
    nlohmann::ordered_json rec;
    rec["order"] = sub.order();
    rec["generators"] = nlohmann::ordered_json::array();
    for (const grp::Perm& p : sub.generator_perms())
      rec["generators"].push_back(grp::format_cycles(p));
    rec["is_normal"] = sub.is_normal();
    rec["conjugacy_class"] = lat.conjugacy_class[i];
    rec["maximal_in"] = lat.maximal_members_of(i);
    records.push_back(std::move(rec));
  }
  std::string text = records.dump(2) + "\n";
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) {
      std::cerr << "cannot write " << emit << "\n";
      return 2;
    }
    out << text;
    std::cout << lat.size() << " subgroups written to " << emit << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

int cmd_check_nr(const CorpusArgs& corpus_args, const std::string& name,
                 const std::string& gens, unsigned degree,
                 const std::string& subgroup_gens) {
  auto corpus = load(corpus_args, nullptr);
  grp::GroupPtr g = resolve_group(corpus, name, gens, degree);
  grp::Subgroup h = parse_subgroup(g, subgroup_gens);
  auto [nr, witness] = grp::is_nr_subgroup(*g, h);
  if (nr) {
    std::cout << h.describe() << " is NR in " << g->name() << "\n";
    return 0;
  }
  std::cout << h.describe() << " is not NR in " << g->name() << "\n";
  if (witness) {
    grp::SpecialTripleRecord rec = grp::is_special_triple(*g, h, *witness);
    std::cout << "witness K = " << witness->describe() << "\n"
              << "K^G = " << rec.closure.describe() << "\n"
              << "K^G meet H = " << rec.meet.describe() << "\n";
  }
  return 1;
}

int cmd_check_triple(const CorpusArgs& corpus_args, const std::string& name,
                     const std::string& gens, unsigned degree, const std::string& h_gens,
                     const std::string& k_gens) {
  auto corpus = load(corpus_args, nullptr);
  grp::GroupPtr g = resolve_group(corpus, name, gens, degree);
  grp::Subgroup h = parse_subgroup(g, h_gens);
  grp::Subgroup k = parse_subgroup(g, k_gens);
  grp::SpecialTripleRecord rec = grp::is_special_triple(*g, h, k);
  std::cout << "K^G = " << rec.closure.describe() << "\n"
            << "K^G meet H = " << rec.meet.describe() << "\n"
            << "triple is " << (rec.special ? "special" : "not special") << "\n";
  return rec.special ? 0 : 1;
}

int cmd_numscan(const std::string& which, unsigned t_max, unsigned q_max,
                unsigned n_max) {
  if (which == "lemma3") {
    auto part_a = grp::num::lemma3_scan(grp::num::Lemma3Part::a, t_max);
    auto part_b = grp::num::lemma3_scan(grp::num::Lemma3Part::b, t_max);
    std::cout << "2^t-1, 2^(t-1)-1 both prime powers for t in {";
    for (unsigned t : part_a) std::cout << " " << t;
    std::cout << " }\n2^t+1, 2^(t+1)+1 both prime powers for t in {";
    for (unsigned t : part_b) std::cout << " " << t;
    std::cout << " }\n";
    return 0;
  }
  if (which == "zsigmondy") {
    for (std::uint64_t q = 2; q <= q_max; ++q)
      for (unsigned n = 3; n <= n_max; ++n) {
        auto divisors = grp::num::primitive_prime_divisors(q, n);
        std::cout << "q = " << q << ", n = " << n << ":";
        if (divisors.empty()) std::cout << " none";
        for (std::uint64_t r : divisors) std::cout << " " << r;
        std::cout << "\n";
      }
    return 0;
  }
  std::cerr << "numscan expects 'lemma3' or 'zsigmondy'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group theorem verification harness"};
  app.require_subcommand(1);

  CorpusArgs corpus_args;
  grp::SuiteOptions options;

  // verify
  auto* verify = app.add_subcommand("verify", "run a suite over the corpus");
  std::string suite, report_path, format = "text";
  verify->add_option("suite", suite, "suite id or 'all'")->required();
  verify->add_option("--corpus", corpus_args.corpus, "corpus file or 'default'");
  verify->add_option("--max-order", options.max_order, "skip groups above this order");
  verify->add_flag("--opt-in-large", options.opt_in_large,
                   "raise the lattice cap to 1200");
  verify->add_option("--report", report_path, "write the report to this file");
  verify->add_option("--format", format, "report format: text | machine")
      ->check(CLI::IsMember({"text", "machine"}));
  verify->add_option("--jobs", options.jobs, "worker threads (0 = hardware)");
  verify->add_flag("--timings", options.timings, "include wall-clock in reports");

  // lattice
  auto* lattice_cmd = app.add_subcommand("lattice", "dump a subgroup lattice");
  std::string lat_group, lat_gens, lat_emit;
  unsigned lat_degree = 0;
  std::size_t lat_cap = grp::FiniteGroup::kDefaultLatticeCap;
  lattice_cmd->add_option("--group", lat_group, "corpus group name");
  lattice_cmd->add_option("--gens", lat_gens, "generators in cycle notation");
  lattice_cmd->add_option("--degree", lat_degree, "degree for --gens");
  lattice_cmd->add_option("--corpus", corpus_args.corpus, "corpus file or 'default'");
  lattice_cmd->add_option("--emit", lat_emit, "output file");
  lattice_cmd->add_option("--cap", lat_cap, "lattice cap");

  // check-nr
  auto* check_nr = app.add_subcommand("check-nr", "test a subgroup for the NR property");
  std::string nr_group, nr_gens, nr_subgroup;
  unsigned nr_degree = 0;
  check_nr->add_option("--group", nr_group, "corpus group name");
  check_nr->add_option("--gens", nr_gens, "group generators in cycle notation");
  check_nr->add_option("--degree", nr_degree, "degree for --gens");
  check_nr->add_option("--corpus", corpus_args.corpus, "corpus file or 'default'");
  check_nr->add_option("--subgroup", nr_subgroup, "subgroup generators")->required();

  // check-triple
  auto* check_triple = app.add_subcommand("check-triple", "test one (G, H, K) triple");
  std::string tr_group, tr_gens, tr_h, tr_k;
  unsigned tr_degree = 0;
  check_triple->add_option("--G", tr_group, "corpus group name");
  check_triple->add_option("--gens", tr_gens, "group generators in cycle notation");
  check_triple->add_option("--degree", tr_degree, "degree for --gens");
  check_triple->add_option("--corpus", corpus_args.corpus, "corpus file or 'default'");
  check_triple->add_option("--H", tr_h, "subgroup generators")->required();
  check_triple->add_option("--K", tr_k, "normal subgroup generators")->required();

  // numscan
  auto* numscan = app.add_subcommand("numscan", "arithmetic scans");
  std::string which;
  unsigned t_max = 60, q_max = 10, n_max = 12;
  numscan->add_option("which", which, "lemma3 | zsigmondy")->required();
  numscan->add_option("--t-max", t_max, "scan bound for lemma3");
  numscan->add_option("--q-max", q_max, "zsigmondy q bound");
  numscan->add_option("--n-max", n_max, "zsigmondy n bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (!grp::is_suite_id(suite)) throw grp::UnknownSuite("unknown suite '" + suite + "'");
      return cmd_verify(suite, corpus_args, options, report_path, format);
    }
    if (*lattice_cmd)
      return cmd_lattice(corpus_args, lat_group, lat_gens, lat_degree, lat_emit, lat_cap);
    if (*check_nr)
      return cmd_check_nr(corpus_args, nr_group, nr_gens, nr_degree, nr_subgroup);
    if (*check_triple)
      return cmd_check_triple(corpus_args, tr_group, tr_gens, tr_degree, tr_h, tr_k);
    if (*numscan) return cmd_numscan(which, t_max, q_max, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
