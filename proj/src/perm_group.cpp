#include "monodromy/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "monodromy/errors.hpp"

namespace monodromy {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

PermGroup PermGroup::generate(const std::vector<Permutation>& generators,
                              std::size_t element_bound) {
  if (element_bound < 1) throw ValidationError("bad-bound", "element bound must be >= 1");
  if (generators.empty())
    throw ValidationError("no-generators", "group generation needs at least one permutation");
  const int n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw ValidationError("degree-mismatch", "generators must share one degree");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> frontier;
  const Permutation id(n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = current.then(g);
      if (seen.insert(next).second) {
        if (seen.size() > element_bound)
          throw ValidationError("bound-exceeded",
                                "group closure exceeds the element bound of " +
                                    std::to_string(element_bound));
        frontier.push_back(std::move(next));
      }
    }
  }

  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return PermGroup(n, generators, std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<int> PermGroup::orbit(int point) const {
  if (point < 0 || point >= degree_)
    throw ValidationError("point-out-of-range", "orbit point must lie in [0, degree)");
  std::vector<bool> in_orbit(static_cast<std::size_t>(degree_), false);
  std::vector<int> stack{point};
  in_orbit[static_cast<std::size_t>(point)] = true;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      int q = g(p);
      if (!in_orbit[static_cast<std::size_t>(q)]) {
        in_orbit[static_cast<std::size_t>(q)] = true;
        stack.push_back(q);
      }
    }
  }
  std::vector<int> result;
  for (int p = 0; p < degree_; ++p)
    if (in_orbit[static_cast<std::size_t>(p)]) result.push_back(p);
  return result;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_)
    throw ValidationError("point-out-of-range", "stabilizer point must lie in [0, degree)");
  std::vector<Permutation> fixed;
  for (const auto& e : elements_)
    if (e(point) == point) fixed.push_back(e);
  // The filtered set is itself closed, so it doubles as the generator list.
  return PermGroup(degree_, fixed, fixed);
}

bool PermGroup::verify_closure() const {
  if (!contains(Permutation(degree_))) return false;
  for (const auto& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements_)
      if (!contains(a.then(b))) return false;
  }
  return true;
}

bool is_transitive(const std::vector<Permutation>& generators, int degree) {
  if (degree < 1) throw ValidationError("bad-degree", "degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("degree-mismatch", "generators must match the stated degree");
  std::vector<bool> in_orbit(static_cast<std::size_t>(degree), false);
  std::vector<int> stack{0};
  in_orbit[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int q = g(p);
      if (!in_orbit[static_cast<std::size_t>(q)]) {
        in_orbit[static_cast<std::size_t>(q)] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == static_cast<std::size_t>(degree);
}

bool is_normal_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree())
    throw ValidationError("degree-mismatch", "subgroup degree differs from group degree");
  for (const auto& h : sub.elements())
    if (!group.contains(h))
      throw ValidationError("not-a-subgroup", "subgroup elements must lie in the group");

  std::unordered_set<Permutation, PermutationHash> sub_set(sub.elements().begin(),
                                                           sub.elements().end());
  for (const auto& g : group.elements()) {
    const Permutation g_inv = g.inverse();
    for (const auto& h : sub.elements()) {
      if (sub_set.find(g_inv.then(h).then(g)) == sub_set.end()) return false;
    }
  }
  return true;
}

}  // namespace monodromy
