#pragma once

#include <cstddef>

#include "monodromy/branch_data.hpp"
#include "monodromy/perm_group.hpp"
#include "monodromy/simplicial_complex.hpp"

namespace monodromy {

// Triangulated closed orientable surface of the given genus (0 to 4).
// Genus 0 is the boundary of the 3-simplex; higher genus comes from the
// standard 4g-gon identification, barycentrically subdivided twice so the
// result is honestly simplicial. Every vertex link is checked to be a
// single cycle.
SimplicialComplex surface(int genus);

// The normalization surface of a branched cover, built independently of the
// Euler-characteristic formula: |G| copies of a triangulated fundamental
// 2k-gon, glued along the regular-cover structure in which crossing slit t
// multiplies the sheet label on the right by branch permutation t. Requires
// |G| <= 48.
SimplicialComplex normalization_surface(const BranchData& data,
                                        std::size_t element_bound = kDefaultGroupBound);

}  // namespace monodromy
