#ifndef GRP_PERM_HPP
#define GRP_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace grp {

using Point = std::uint16_t;

/// A permutation of {1..degree}, stored as an image sequence. Points are
/// 1-based in all text I/O and 0-based internally.
class Perm {
 public:
  /// Identity permutation of the given degree.
  explicit Perm(unsigned degree);

  /// From an image sequence (0-based); validates that it is a bijection.
  explicit Perm(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of a 0-based point.
  Point operator[](Point p) const { return images_[p]; }

  /// Apply-left-then-right composition: (a * b) maps x to b(a(x)).
  Perm operator*(const Perm& rhs) const;

  Perm inverse() const;

  bool is_identity() const;

  /// Multiplicative order (lcm of cycle lengths).
  unsigned order() const;

  /// Disjoint cycles of length >= 2, each rotated to start at its smallest
  /// point, sorted by first point; 0-based entries.
  std::vector<std::vector<Point>> cycles() const;

  const std::vector<Point>& images() const { return images_; }

  bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
  /// Lexicographic order on image sequences (the canonical tie-break).
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

/// Parse cycle notation: "(1 2 3)(4 5)", whitespace-separated points, the
/// identity spelled "()". Degree 0 infers the largest point mentioned.
Perm parse_cycles(const std::string& text, unsigned degree = 0);

/// Parse a comma-separated list of cycle-notation permutations, all padded to
/// a common degree (the given one, or the largest point mentioned).
std::vector<Perm> parse_perm_list(const std::string& text, unsigned degree = 0);

/// Cycle notation with 1-based points; identity is "()".
std::string format_cycles(const Perm& p);

}  // namespace grp

#endif  // GRP_PERM_HPP
