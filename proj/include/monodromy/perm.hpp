#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace monodromy {

// A bijection of {0..n-1}. images()[i] is the image of point i.
//
// Composition is left-to-right everywhere in this project: a.then(b) applies
// a first and b second, matching left-to-right concatenation of loops.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity
  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  // Least k >= 1 with a^k = id; equals the lcm of the cycle lengths.
  long long order() const;

  // All cycles including fixed points. Each cycle starts at its minimal
  // point; cycles sorted by that minimum.
  std::vector<std::vector<int>> cycles() const;

  // Cycle lengths (fixed points included), sorted descending. Sums to n.
  std::vector<int> cycle_type() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);  // a.then(b)

// Disjoint-cycle text form with zero-based points: "(0 1)(2 3)". Fixed
// points are omitted and the identity renders as "()".
std::string to_cycle_string(const Permutation& p);

// Parses the format above. Rejects repeated points, points outside
// [0, degree), singleton cycles and any malformed syntax.
Permutation parse_cycles(const std::string& text, int degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace monodromy
