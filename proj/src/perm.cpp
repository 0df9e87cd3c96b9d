#include "monodromy/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "monodromy/checked_int.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

Permutation::Permutation(int degree) {
  if (degree < 1) throw ValidationError("bad-degree", "permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty()) throw ValidationError("bad-degree", "permutation degree must be positive");
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= n) throw ValidationError("not-a-bijection", "image out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw ValidationError("not-a-bijection", "repeated image value");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw ValidationError("degree-mismatch", "cannot compose permutations of different degrees");
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.images_[static_cast<std::size_t>(i)] = next((*this)(i));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.images_[static_cast<std::size_t>((*this)(i))] = i;
  return r;
}

long long Permutation::order() const {
  long long result = 1;
  for (int len : cycle_type()) result = lcm_ll(result, len);
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      cycle.push_back(p);
      seen[static_cast<std::size_t>(p)] = true;
      p = (*this)(p);
    } while (p != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a.then(b); }

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw ValidationError("bad-degree", "permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation string");

  // Bare "()" denotes the identity; otherwise every cycle needs >= 2 points.
  std::vector<std::vector<int>> cycles;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point or ')' in cycle notation");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree) break;
        ++i;
      }
      if (value >= degree) throw ParseError("point out of range for degree");
      const int point = static_cast<int>(value);
      if (used[static_cast<std::size_t>(point)]) throw ParseError("repeated point in cycles");
      used[static_cast<std::size_t>(point)] = true;
      cycle.push_back(point);
    }
    cycles.push_back(std::move(cycle));
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after cycles");

  if (cycles.size() == 1 && cycles[0].empty()) return Permutation(degree);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) throw ParseError("cycles must list at least two points");
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation::from_images(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace monodromy
