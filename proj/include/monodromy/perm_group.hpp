#pragma once

#include <cstddef>
#include <vector>

#include "monodromy/perm.hpp"

namespace monodromy {

// Default cap on materialized group size; the CLI can override it through
// MONODROMY_GROUP_BOUND.
inline constexpr std::size_t kDefaultGroupBound = 10'000;

// A finite permutation group with its element set fully materialized.
// Elements are kept sorted by image sequence, so equal groups compare equal
// and every derived quantity is deterministic.
class PermGroup {
 public:
  static PermGroup generate(const std::vector<Permutation>& generators,
                            std::size_t element_bound = kDefaultGroupBound);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

  std::vector<int> orbit(int point) const;  // sorted
  PermGroup point_stabilizer(int point) const;

  // Closure under product and inverse plus identity membership, checked
  // from scratch; used by property tests.
  bool verify_closure() const;

  bool operator==(const PermGroup&) const = default;

 private:
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

// Orbit of point 0 under the generated group is all of {0..degree-1}.
// The generators may be empty, in which case only degree 1 is transitive.
bool is_transitive(const std::vector<Permutation>& generators, int degree);

// True iff sub is normal in group: every conjugate of sub by a group element
// equals sub as a set. Requires sub's elements to be contained in group's.
bool is_normal_subgroup(const PermGroup& sub, const PermGroup& group);

}  // namespace monodromy
