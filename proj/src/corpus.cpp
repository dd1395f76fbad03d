#include "grp/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "grp/errors.hpp"
#include "grp/structure.hpp"

namespace grp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_on(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    std::size_t hit = s.find(sep, pos);
    if (hit == std::string::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, hit - pos));
    pos = hit + sep.size();
  }
}

unsigned parse_uint(const std::string& text, int line_no) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError("expected a number, got '" + t + "'", line_no);
  return static_cast<unsigned>(std::stoul(t));
}

Perm rotation(unsigned n) {
  std::vector<Point> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return Perm(std::move(images));
}

Perm reversal(unsigned n) {
  std::vector<Point> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = static_cast<Point>(n - 1 - i);
  return Perm(std::move(images));
}

GroupPtr build_cyclic(unsigned n, const std::string& name) {
  if (n == 0) throw UnsupportedSpec("cyclic 0 is not a group");
  if (n == 1) return FiniteGroup::from_generators({}, 1, 1, name);
  return FiniteGroup::from_generators({rotation(n)}, n, n, name);
}

GroupPtr build_dihedral(unsigned order, const std::string& name) {
  if (order < 2 || order % 2 != 0)
    throw UnsupportedSpec("dihedral order must be even and at least 2");
  unsigned t = order / 2;
  if (t == 1)  // D2 is C2 on two points
    return FiniteGroup::from_generators({parse_cycles("(1 2)", 2)}, 2, 2, name);
  if (t == 2)  // D4 is the Klein four-group on four points
    return FiniteGroup::from_generators(
        {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, 4, 4, name);
  return FiniteGroup::from_generators({rotation(t), reversal(t)}, t, order, name);
}

GroupPtr build_symmetric(unsigned n, const std::string& name) {
  if (n == 0) throw UnsupportedSpec("symmetric degree must be at least 1");
  if (n == 1) return FiniteGroup::from_generators({}, 1, 1, name);
  std::size_t order = 1;
  for (unsigned i = 2; i <= n; ++i) order *= i;
  std::vector<Perm> gens{parse_cycles("(1 2)", n)};
  if (n > 2) gens.push_back(rotation(n));
  return FiniteGroup::from_generators(std::move(gens), n, order, name);
}

GroupPtr build_alternating(unsigned n, const std::string& name) {
  if (n < 3) {
    // A1 and A2 are trivial.
    if (n == 0) throw UnsupportedSpec("alternating degree must be at least 1");
    return FiniteGroup::from_generators({}, std::max(n, 1u), 1, name);
  }
  std::size_t order = 1;
  for (unsigned i = 3; i <= n; ++i) order *= i;
  std::vector<Perm> gens{parse_cycles("(1 2 3)", n)};
  if (n > 3) {
    // A 3-cycle together with an n-cycle (n odd) or (n-1)-cycle (n even).
    std::ostringstream cyc;
    cyc << '(';
    for (unsigned i = (n % 2 == 1 ? 1 : 2); i <= n; ++i) {
      if (cyc.str().size() > 1) cyc << ' ';
      cyc << i;
    }
    cyc << ')';
    gens.push_back(parse_cycles(cyc.str(), n));
  }
  return FiniteGroup::from_generators(std::move(gens), n, order, name);
}

GroupPtr build_quaternion8(const std::string& name) {
  // Right translations on {1, i, -1, -i, j, k, -j, -k}.
  return FiniteGroup::from_generators(
      {parse_cycles("(1 2 3 4)(5 8 7 6)", 8), parse_cycles("(1 5 3 7)(2 6 4 8)", 8)},
      8, 8, name);
}

GroupPtr build_sl23(const std::string& name) {
  // Action on the eight nonzero vectors of F3^2, ordered (0,1), (0,2),
  // (1,0), (1,1), (1,2), (2,0), (2,1), (2,2).
  std::vector<std::pair<unsigned, unsigned>> points;
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      if (x || y) points.emplace_back(x, y);
  auto point_of = [&](unsigned x, unsigned y) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == std::make_pair(x, y)) return static_cast<Point>(i);
    throw Error("vector lookup failed");
  };
  auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [x, y] = points[i];
      images[i] = point_of((a * x + b * y) % 3, (c * x + d * y) % 3);
    }
    return Perm(std::move(images));
  };
  return FiniteGroup::from_generators({matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0)},
                                      8, 24, name);
}

GroupPtr build_frobenius20(const std::string& name) {
  // x -> x + 1 and x -> 2x on the residues mod 5.
  std::vector<Point> doubling(5);
  for (unsigned r = 0; r < 5; ++r) doubling[r] = static_cast<Point>((2 * r) % 5);
  return FiniteGroup::from_generators({rotation(5), Perm(std::move(doubling))}, 5, 20,
                                      name);
}

GroupPtr build_psl2(unsigned q, const std::string& name) {
  if (!is_prime_number(q) || q < 5 || q > 13)
    throw UnsupportedSpec("psl2 supports prime q with 5 <= q <= 13");
  // Moebius actions z -> z + 1 and z -> -1/z on the projective line:
  // points 1..q are the residues 0..q-1, point q+1 is infinity.
  unsigned degree = q + 1;
  unsigned inf = q;  // 0-based index of the point at infinity
  std::vector<Point> shift(degree), inv_neg(degree);
  for (unsigned z = 0; z < q; ++z) shift[z] = static_cast<Point>((z + 1) % q);
  shift[inf] = static_cast<Point>(inf);
  auto inverse_mod = [&](unsigned z) {
    for (unsigned w = 1; w < q; ++w)
      if ((z * w) % q == 1) return w;
    throw Error("no modular inverse");
  };
  inv_neg[0] = static_cast<Point>(inf);
  inv_neg[inf] = 0;
  for (unsigned z = 1; z < q; ++z)
    inv_neg[z] = static_cast<Point>((q - inverse_mod(z)) % q);
  std::size_t order = static_cast<std::size_t>(q) * (q * q - 1) / 2;
  return FiniteGroup::from_generators({Perm(std::move(shift)), Perm(std::move(inv_neg))},
                                      degree, order, name);
}

GroupPtr build_atom(const GroupSpec::Atom& atom, const std::string& name) {
  return std::visit(
      [&](const auto& a) -> GroupPtr {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, GroupSpec::Cyclic>)
          return build_cyclic(a.n, name);
        else if constexpr (std::is_same_v<T, GroupSpec::Dihedral>)
          return build_dihedral(a.order, name);
        else if constexpr (std::is_same_v<T, GroupSpec::Quaternion8>)
          return build_quaternion8(name);
        else if constexpr (std::is_same_v<T, GroupSpec::Symmetric>)
          return build_symmetric(a.n, name);
        else if constexpr (std::is_same_v<T, GroupSpec::Alternating>)
          return build_alternating(a.n, name);
        else if constexpr (std::is_same_v<T, GroupSpec::Klein4>)
          return build_dihedral(4, name);
        else if constexpr (std::is_same_v<T, GroupSpec::Sl23>)
          return build_sl23(name);
        else if constexpr (std::is_same_v<T, GroupSpec::Frobenius20>)
          return build_frobenius20(name);
        else if constexpr (std::is_same_v<T, GroupSpec::Psl2>)
          return build_psl2(a.q, name);
        else {
          const GroupSpec::Explicit& ex = a;
          std::vector<Perm> gens;
          for (const std::string& text : ex.generator_cycles)
            gens.push_back(parse_cycles(text, ex.degree));
          return FiniteGroup::from_generators(std::move(gens), ex.degree,
                                              FiniteGroup::kDefaultOrderCap, name);
        }
      },
      atom);
}

}  // namespace

GroupPtr build(const GroupSpec& spec) {
  if (spec.factors.empty()) throw UnsupportedSpec("empty group spec");
  GroupPtr result = build_atom(spec.factors.front(), spec.name);
  for (std::size_t i = 1; i < spec.factors.size(); ++i) {
    GroupPtr next = build_atom(spec.factors[i], "");
    result = direct_product(*result, *next, spec.name);
  }
  return result;
}

GroupSpec parse_group_def(const std::string& record, int line_no) {
  auto eq = record.find('=');
  if (eq == std::string::npos)
    throw ParseError("expected 'NAME = SPEC' in '" + trim(record) + "'", line_no);
  GroupSpec spec;
  spec.name = trim(record.substr(0, eq));
  if (spec.name.empty()) throw ParseError("empty group name", line_no);
  std::string body = trim(record.substr(eq + 1));
  if (body.empty()) throw ParseError("empty spec for " + spec.name, line_no);

  for (const std::string& raw_atom : split_on(body, " x ")) {
    std::string atom_text = trim(raw_atom);
    std::istringstream in(atom_text);
    std::string kind;
    in >> kind;
    std::string rest = trim(atom_text.substr(std::min(atom_text.size(), kind.size())));
    if (kind == "cyclic")
      spec.factors.push_back(GroupSpec::Cyclic{parse_uint(rest, line_no)});
    else if (kind == "dihedral")
      spec.factors.push_back(GroupSpec::Dihedral{parse_uint(rest, line_no)});
    else if (kind == "quaternion8")
      spec.factors.push_back(GroupSpec::Quaternion8{});
    else if (kind == "symmetric")
      spec.factors.push_back(GroupSpec::Symmetric{parse_uint(rest, line_no)});
    else if (kind == "alternating")
      spec.factors.push_back(GroupSpec::Alternating{parse_uint(rest, line_no)});
    else if (kind == "klein4")
      spec.factors.push_back(GroupSpec::Klein4{});
    else if (kind == "sl2_3")
      spec.factors.push_back(GroupSpec::Sl23{});
    else if (kind == "frobenius20")
      spec.factors.push_back(GroupSpec::Frobenius20{});
    else if (kind == "psl2")
      spec.factors.push_back(GroupSpec::Psl2{parse_uint(rest, line_no)});
    else if (kind == "perms") {
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError("perms atom needs 'perms DEGREE : CYCLES, ...'", line_no);
      GroupSpec::Explicit ex;
      ex.degree = parse_uint(rest.substr(0, colon), line_no);
      for (const std::string& gen : split_on(rest.substr(colon + 1), ","))
        ex.generator_cycles.push_back(trim(gen));
      spec.factors.push_back(std::move(ex));
    } else {
      throw ParseError("unknown group kind '" + kind + "'", line_no);
    }
  }
  return spec;
}

CorpusLoadResult parse_corpus_text(const std::string& text, bool tolerant) {
  CorpusLoadResult result;
  std::unordered_set<std::string> names;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    try {
      GroupSpec spec = parse_group_def(line, line_no);
      if (!names.insert(spec.name).second)
        throw ParseError("duplicate group name '" + spec.name + "'", line_no);
      GroupPtr group = build(spec);
      result.entries.push_back({std::move(spec), std::move(group)});
    } catch (const Error& e) {
      if (!tolerant) throw;
      result.errors.push_back({line_no, e.what()});
    }
  }
  return result;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus_text(buffer.str(), /*tolerant=*/false).entries;
}

CorpusLoadResult load_corpus_tolerant(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus_text(buffer.str(), /*tolerant=*/true);
}

std::vector<CorpusEntry> default_corpus() {
  return parse_corpus_text(default_corpus_text(), /*tolerant=*/false).entries;
}

}  // namespace grp
