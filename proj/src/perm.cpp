#include "grp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "grp/errors.hpp"

namespace grp {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw ParseError("image sequence is not a bijection");
    seen[img] = true;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose permutations of degrees " +
                         std::to_string(degree()) + " and " +
                         std::to_string(rhs.degree()));
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = rhs.images_[images_[i]];
  Perm p(degree());
  p.images_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  Perm p(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned Perm::order() const {
  unsigned ord = 1;
  for (const auto& cyc : cycles())
    ord = std::lcm(ord, static_cast<unsigned>(cyc.size()));
  return ord;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cyc;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      cyc.push_back(p);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

// Splits "(1 2 3)(4 5)" into raw cycles of 1-based points.
std::vector<std::vector<unsigned>> scan_cycles(const std::string& text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<unsigned> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw ParseError("unterminated cycle in: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in: " + text);
      unsigned value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value == 0) throw ParseError("points are 1-based in: " + text);
      cyc.push_back(value);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm parse_cycles(const std::string& text, unsigned degree) {
  auto cycles = scan_cycles(text);
  unsigned max_point = 0;
  for (const auto& cyc : cycles)
    for (unsigned p : cyc) max_point = std::max(max_point, p);
  if (degree == 0) degree = std::max(max_point, 1u);
  if (max_point > degree)
    throw ParseError("point " + std::to_string(max_point) +
                     " exceeds degree " + std::to_string(degree));
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> moved(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      unsigned from = cyc[k] - 1;
      unsigned to = cyc[(k + 1) % cyc.size()] - 1;
      if (moved[from])
        throw ParseError("point " + std::to_string(from + 1) +
                         " repeated in: " + text);
      moved[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return Perm(std::move(images));
}

std::vector<Perm> parse_perm_list(const std::string& text, unsigned degree) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (degree == 0) {
    for (const auto& part : parts)
      for (const auto& cyc : scan_cycles(part))
        for (unsigned p : cyc) degree = std::max(degree, p);
    degree = std::max(degree, 1u);
  }
  std::vector<Perm> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(parse_cycles(part, degree));
  return out;
}

std::string format_cycles(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace grp
