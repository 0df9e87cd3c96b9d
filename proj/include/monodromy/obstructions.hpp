#pragma once

#include "monodromy/homology.hpp"
#include "monodromy/simplicial_complex.hpp"

namespace monodromy {

enum class ManifoldVerdict { manifold, not_manifold };

// The suspension of a closed orientable surface F is a manifold exactly when
// F is the sphere, i.e. when H_1(F) vanishes; H_1 is the homology of the
// link of either cone point. Input must pass the closed-surface check.
ManifoldVerdict suspension_manifold_verdict(const SimplicialComplex& f_surface);

// Local Betti number rho^2 at a cone point of the suspension: the rank of
// the degree-2 relative cohomology of the pair (CF, F). Nonzero rules out a
// Wilder manifold and hence a cohomology manifold.
long long wilder_obstruction(const SimplicialComplex& f_surface);

enum class CoverVerdict { h1_nontrivial, inconclusive };

// Mayer-Vietoris trigger: if u and v are connected subcomplexes covering w
// and their intersection is disconnected, H_1(w) cannot vanish. When the
// trigger fires, H_1(w) is recomputed as a cross-check of the instance.
CoverVerdict domain_cover_obstruction(const SimplicialComplex& w, const SimplicialComplex& u,
                                      const SimplicialComplex& v);

}  // namespace monodromy
