#include "monodromy/obstructions.hpp"

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

HomologyProfile checked_surface_homology(const SimplicialComplex& f_surface) {
  if (!is_closed_surface(f_surface))
    throw ValidationError("not-a-surface",
                          "input must be a connected closed triangulated surface");
  const HomologyProfile profile = homology(f_surface);
  // Closed connected orientable surface: H_0 = Z, H_2 = Z, no torsion.
  if (profile.betti[0] != 1 || profile.betti[2] != 1 || !profile.torsion[0].empty() ||
      !profile.torsion[1].empty() || !profile.torsion[2].empty())
    throw ValidationError("not-orientable",
                          "input surface must be orientable (H_2 of rank one, torsion free)");
  return profile;
}

}  // namespace

ManifoldVerdict suspension_manifold_verdict(const SimplicialComplex& f_surface) {
  const HomologyProfile profile = checked_surface_homology(f_surface);
  return profile.betti[1] == 0 ? ManifoldVerdict::manifold : ManifoldVerdict::not_manifold;
}

long long wilder_obstruction(const SimplicialComplex& f_surface) {
  checked_surface_homology(f_surface);
  const ConeResult cf = cone(f_surface);
  const HomologyEntry entry = relative_cohomology(cf.pair, 2);
  if (!entry.torsion.empty())
    throw InternalError("relative H^2 of a cone pair over a surface should be free");
  return entry.rank;
}

CoverVerdict domain_cover_obstruction(const SimplicialComplex& w, const SimplicialComplex& u,
                                      const SimplicialComplex& v) {
  if (!u.is_subcomplex_of(w) || !v.is_subcomplex_of(w))
    throw ValidationError("cover-condition-violated", "u and v must be subcomplexes of w");
  if (complex_union(u, v) != w)
    throw ValidationError("cover-condition-violated", "u and v must cover w");

  if (!u.is_connected() || !v.is_connected()) return CoverVerdict::inconclusive;
  const SimplicialComplex overlap = complex_intersection(u, v);
  if (overlap.component_count() < 2) return CoverVerdict::inconclusive;

  // The instance itself must confirm the conclusion.
  const HomologyProfile profile = homology(w);
  if (profile.betti.size() < 2 || profile.betti[1] < 1)
    throw InternalError("disconnected overlap of connected pieces with trivial H_1");
  return CoverVerdict::h1_nontrivial;
}

}  // namespace monodromy
