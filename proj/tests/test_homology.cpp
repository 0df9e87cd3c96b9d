#include <vector>

#include "doctest.h"
#include "monodromy/homology.hpp"
#include "monodromy/simplicial_complex.hpp"
#include "monodromy/surfaces.hpp"

using namespace monodromy;

namespace {

SimplicialComplex sphere() {
  return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex circle() { return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}); }

// Minimal 6-vertex triangulation of the projective plane; used purely as a
// torsion exercise for the homology backend.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_maximal({{0, 1, 3}, {0, 1, 4}, {0, 2, 4}, {0, 2, 5}, {0, 3, 5},
                                          {1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}});
}

// 3x3 grid torus: simplicial, 9 vertices, 27 edges, 18 triangles.
SimplicialComplex grid_torus() {
  std::vector<SimplicialComplex::Simplex> faces;
  const auto v = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      faces.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  return SimplicialComplex::from_maximal(faces);
}

bool profiles_shifted(const HomologyProfile& base, const HomologyProfile& suspended) {
  for (int i = 0; i <= 2; ++i) {
    if (reduced_betti(base, i) != reduced_betti(suspended, i + 1)) return false;
    const auto base_torsion =
        i < static_cast<int>(base.torsion.size()) ? base.torsion[static_cast<std::size_t>(i)]
                                                  : std::vector<long long>{};
    const auto susp_torsion = i + 1 < static_cast<int>(suspended.torsion.size())
                                  ? suspended.torsion[static_cast<std::size_t>(i + 1)]
                                  : std::vector<long long>{};
    if (base_torsion != susp_torsion) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("homology of standard spaces") {
  const HomologyProfile s2 = homology(sphere());
  CHECK(s2.betti == std::vector<long long>{1, 0, 1});
  CHECK(s2.torsion == std::vector<std::vector<long long>>{{}, {}, {}});

  const HomologyProfile s1 = homology(circle());
  CHECK(s1.betti == std::vector<long long>{1, 1});

  CHECK(homology(SimplicialComplex()).betti.empty());

  const HomologyProfile point = homology(SimplicialComplex::from_maximal({{0}}));
  CHECK(point.betti == std::vector<long long>{1});
}

TEST_CASE("homology of surfaces") {
  CHECK(homology(grid_torus()).betti == std::vector<long long>{1, 2, 1});
  for (int g = 0; g <= 2; ++g) {
    const HomologyProfile p = homology(surface(g));
    CHECK(p.betti == std::vector<long long>{1, 2 * g, 1});
    CHECK(p.torsion == std::vector<std::vector<long long>>{{}, {}, {}});
    CHECK(p.euler_characteristic() == surface(g).euler_characteristic());
  }
}

TEST_CASE("torsion shows up exactly where it should") {
  const HomologyProfile rp2 = homology(projective_plane());
  CHECK(rp2.betti == std::vector<long long>{1, 0, 0});
  CHECK(rp2.torsion == std::vector<std::vector<long long>>{{}, {2}, {}});
}

TEST_CASE("suspension homology shifts reduced homology") {
  const HomologyProfile s3 = homology(suspension(sphere()).complex);
  CHECK(s3.betti == std::vector<long long>{1, 0, 0, 1});

  CHECK(profiles_shifted(homology(grid_torus()), homology(suspension(grid_torus()).complex)));
  CHECK(profiles_shifted(homology(circle()), homology(suspension(circle()).complex)));
  // Torsion shifts one degree up as well.
  CHECK(profiles_shifted(homology(projective_plane()),
                         homology(suspension(projective_plane()).complex)));

  const HomologyProfile s0_suspended =
      homology(suspension(SimplicialComplex::from_maximal({{0}, {1}})).complex);
  CHECK(s0_suspended.betti == std::vector<long long>{1, 1});
}

TEST_CASE("cone is contractible") {
  const HomologyProfile c = homology(cone(grid_torus()).pair.ambient);
  CHECK(c.betti == std::vector<long long>{1, 0, 0, 0});
  for (const auto& t : c.torsion) CHECK(t.empty());
}

TEST_CASE("relative cohomology of cone pairs counts the genus") {
  for (int g = 0; g <= 2; ++g) {
    const ConeResult cf = cone(surface(g));
    const HomologyEntry h2 = relative_cohomology(cf.pair, 2);
    CHECK(h2.rank == 2 * g);
    CHECK(h2.torsion.empty());
    // Both sides of the comparison are computed independently.
    CHECK(h2.rank == homology(surface(g)).betti[1]);
    const HomologyEntry h0 = relative_cohomology(cf.pair, 0);
    CHECK(h0.rank == 0);
  }
}

TEST_CASE("chi from face counts equals chi from betti ranks") {
  const std::vector<SimplicialComplex> complexes{
      sphere(), circle(), grid_torus(), projective_plane(), surface(2),
      suspension(grid_torus()).complex, cone(circle()).pair.ambient};
  for (const auto& c : complexes)
    CHECK(c.euler_characteristic() == homology(c).euler_characteristic());
}
