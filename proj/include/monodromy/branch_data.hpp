#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "monodromy/perm.hpp"
#include "monodromy/perm_group.hpp"

namespace monodromy {

// Combinatorial branch data of a branched cover of the 2-sphere: the number
// of sheets plus one monodromy permutation per branch value. Valid data
// satisfy the sphere relation (left-to-right product is the identity), act
// transitively, and contain no identity entry.
struct BranchData {
  int degree = 1;
  std::vector<Permutation> branch;

  int branch_count() const { return static_cast<int>(branch.size()); }
};

// Throws ValidationError with a distinct reason code per failed invariant:
// "degree-mismatch", "identity-branch-permutation", "product-not-identity",
// "not-transitive".
void validate(const BranchData& data);

// The group generated by the branch permutations; isomorphic to the deck
// group of the normalization.
PermGroup monodromy_group(const BranchData& data, std::size_t element_bound = kDefaultGroupBound);

// A cover is normal exactly when the stabilizer of a point is normal in the
// monodromy group; under transitivity this is the same as the action being
// regular.
bool is_normal_cover(const BranchData& data, std::size_t element_bound = kDefaultGroupBound);

// Local order n(y) over each branch value: the order of its permutation.
std::vector<long long> local_orders(const BranchData& data);

// All cycle lengths over all branch values, sorted ascending. Contains the
// local degrees of the covering map itself.
std::vector<long long> local_degree_multiset(const BranchData& data);

// chi of the normalization surface via the Riemann-Hurwitz formula
// |G| * (2 - sum (n_i - 1)/n_i), evaluated in exact integer arithmetic.
// Asserts the result is integral, even and <= 2.
long long euler_characteristic_normalization(const BranchData& data,
                                             std::size_t element_bound = kDefaultGroupBound);

long long genus_normalization(const BranchData& data,
                              std::size_t element_bound = kDefaultGroupBound);

// chi of the domain surface: 2n - sum over all cycles c of (len(c) - 1).
long long chi_domain(const BranchData& data);

struct CoverInvariants {
  int degree = 1;
  int branch_count = 0;
  long long monodromy_order = 1;
  std::vector<long long> local_orders;
  long long chi_normalization = 2;
  long long genus_normalization = 0;
  bool is_normal = true;
  long long chi_domain = 2;
  std::vector<long long> local_degrees;

  bool operator==(const CoverInvariants&) const = default;
};

CoverInvariants cover_invariants(const BranchData& data,
                                 std::size_t element_bound = kDefaultGroupBound);

// Branch data of a composite of two winding maps in generic position: a
// degree-`inner_degree` winding followed by a degree-`outer_degree` winding.
// Sheets are pairs (outer sheet j, inner sheet i) flattened as
// j * inner_degree + i. Four branch values in the order (outer branch 1,
// inner image 1, inner image 2, outer branch 2):
//   sigma1: (j, i) -> (j+1 mod b, i)        full cycle on outer blocks
//   sigma2: inner cycle i -> i+1 in block 0, identity elsewhere
//   sigma3: inner cycle i -> i-1 in block 0, identity elsewhere
//   sigma4: inverse of sigma1*sigma2*sigma3 (forced by the sphere relation)
// The lift of the outer basepoint path is declared label-preserving, which
// fixes the block-twist convention; all cover invariants are independent of
// that choice.
BranchData compose_winding_covers(int inner_degree, int outer_degree);

// Enumerates every valid BranchData with degree in [2, n_max] and branch
// count in [2, k_max]: the first k-1 permutations run over all non-identity
// permutations in lexicographic image order (rightmost position fastest),
// the last one is the forced inverse product, and the result is filtered
// through validate. Deduplication up to simultaneous conjugacy is not
// performed. The visitor returns false to stop early.
void enumerate_branch_data(int n_max, int k_max,
                           const std::function<bool(const BranchData&)>& visit);

// First enumerated datum with torus domain (chi_domain == 0), the requested
// normality, and the requested presence of local degree three.
std::optional<BranchData> search_tower_piece(int n_max, bool want_degree3, bool want_normal,
                                             std::size_t element_bound = kDefaultGroupBound);

}  // namespace monodromy
