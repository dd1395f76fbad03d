#ifndef GRP_CORPUS_HPP
#define GRP_CORPUS_HPP

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "grp/group.hpp"

namespace grp {

/// A named group construction. Single atoms build directly; several atoms
/// build the direct product left to right.
struct GroupSpec {
  struct Cyclic { unsigned n; };
  struct Dihedral { unsigned order; };  // order 2t
  struct Quaternion8 {};
  struct Symmetric { unsigned n; };
  struct Alternating { unsigned n; };
  struct Klein4 {};
  struct Sl23 {};
  struct Frobenius20 {};
  struct Psl2 { unsigned q; };  // prime q, 5 <= q <= 13
  struct Explicit {
    unsigned degree;
    std::vector<std::string> generator_cycles;
  };
  using Atom = std::variant<Cyclic, Dihedral, Quaternion8, Symmetric, Alternating,
                            Klein4, Sl23, Frobenius20, Psl2, Explicit>;

  std::string name;
  std::vector<Atom> factors;
};

/// Deterministic generators per kind; see the corpus grammar in the README.
GroupPtr build(const GroupSpec& spec);

/// Parse one corpus record "NAME = SPEC"; line_no is used in errors.
GroupSpec parse_group_def(const std::string& record, int line_no = 0);

struct CorpusEntry {
  GroupSpec spec;
  GroupPtr group;
};

struct CorpusLoadError {
  int line = 0;
  std::string message;
};

struct CorpusLoadResult {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusLoadError> errors;
};

/// Strict load: throws on the first bad record (ParseError / cap errors);
/// duplicate names are rejected.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

/// Tolerant load used by the verifier: bad records are collected and the
/// rest of the corpus still loads.
CorpusLoadResult load_corpus_tolerant(const std::filesystem::path& path);

/// Parse corpus records from text (same grammar as the file).
CorpusLoadResult parse_corpus_text(const std::string& text, bool tolerant);

/// The built-in default corpus (identical to data/corpus.txt).
const std::string& default_corpus_text();
std::vector<CorpusEntry> default_corpus();

}  // namespace grp

#endif  // GRP_CORPUS_HPP
