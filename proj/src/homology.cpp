#include "monodromy/homology.hpp"

#include <algorithm>
#include <map>

#include "monodromy/errors.hpp"
#include "monodromy/smith.hpp"

namespace monodromy {

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * betti[d];
  return chi;
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int dim) {
  if (dim < 1 || dim > 3) throw InternalError("boundary matrix degree out of range");
  const auto& faces = c.simplices(dim - 1);
  const auto& cells = c.simplices(dim);
  std::map<SimplicialComplex::Simplex, int> face_index;
  for (std::size_t i = 0; i < faces.size(); ++i)
    face_index[faces[i]] = static_cast<int>(i);

  IntMatrix result(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& cell = cells[j];
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
      SimplicialComplex::Simplex face;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (k != drop) face.push_back(cell[k]);
      const auto it = face_index.find(face);
      if (it == face_index.end())
        throw InternalError("complex is not downward closed");
      result.at(it->second, static_cast<int>(j)) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return result;
}

HomologyProfile homology(const SimplicialComplex& c) {
  HomologyProfile profile;
  const int top = c.dim();
  if (top < 0) return profile;

  // rank of the boundary map per degree; degree 0 and top+1 are zero maps.
  std::vector<long long> boundary_rank(static_cast<std::size_t>(top) + 2, 0);
  std::vector<std::vector<long long>> boundary_torsion(static_cast<std::size_t>(top) + 2);
  for (int d = 1; d <= top; ++d) {
    const SmithDecomposition snf = smith_normal_form(boundary_matrix(c, d));
    boundary_rank[static_cast<std::size_t>(d)] = snf.rank();
    boundary_torsion[static_cast<std::size_t>(d)] = snf.torsion();
  }

  profile.betti.resize(static_cast<std::size_t>(top) + 1);
  profile.torsion.resize(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    profile.betti[static_cast<std::size_t>(d)] = c.count(d) -
                                                 boundary_rank[static_cast<std::size_t>(d)] -
                                                 boundary_rank[static_cast<std::size_t>(d) + 1];
    if (profile.betti[static_cast<std::size_t>(d)] < 0)
      throw InternalError("negative betti rank");
    profile.torsion[static_cast<std::size_t>(d)] =
        boundary_torsion[static_cast<std::size_t>(d) + 1];
  }
  return profile;
}

namespace {

// Relative cochain bases: simplices of the ambient complex missing from the
// subcomplex, per degree, in lexicographic order.
std::vector<std::vector<SimplicialComplex::Simplex>> relative_bases(const SubcomplexPair& pair) {
  std::vector<std::vector<SimplicialComplex::Simplex>> bases(4);
  for (int d = 0; d <= 3; ++d)
    for (const auto& s : pair.ambient.simplices(d))
      if (!pair.sub.contains(s)) bases[static_cast<std::size_t>(d)].push_back(s);
  return bases;
}

// Coboundary from relative degree d to d+1: transpose-style incidence of the
// ambient boundary restricted to relative cells.
IntMatrix relative_coboundary(const std::vector<std::vector<SimplicialComplex::Simplex>>& bases,
                              int d) {
  const auto& domain = bases[static_cast<std::size_t>(d)];
  const auto& target = bases[static_cast<std::size_t>(d) + 1];
  std::map<SimplicialComplex::Simplex, int> domain_index;
  for (std::size_t i = 0; i < domain.size(); ++i)
    domain_index[domain[i]] = static_cast<int>(i);

  IntMatrix result(static_cast<int>(target.size()), static_cast<int>(domain.size()));
  for (std::size_t row = 0; row < target.size(); ++row) {
    const auto& cell = target[row];
    for (std::size_t drop = 0; drop < cell.size(); ++drop) {
      SimplicialComplex::Simplex face;
      for (std::size_t k = 0; k < cell.size(); ++k)
        if (k != drop) face.push_back(cell[k]);
      const auto it = domain_index.find(face);
      if (it == domain_index.end()) continue;  // face lies in the subcomplex
      result.at(static_cast<int>(row), it->second) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return result;
}

}  // namespace

HomologyEntry relative_cohomology(const SubcomplexPair& pair, int degree) {
  validate_pair(pair);
  if (degree < 0 || degree > 3) return HomologyEntry{};
  const auto bases = relative_bases(pair);
  const long long n_here = static_cast<long long>(bases[static_cast<std::size_t>(degree)].size());
  if (n_here == 0) return HomologyEntry{};

  long long rank_out = 0;
  if (degree < 3) {
    const SmithDecomposition snf =
        smith_normal_form(relative_coboundary(bases, degree));
    rank_out = snf.rank();
  }
  HomologyEntry entry;
  long long rank_in = 0;
  if (degree > 0) {
    const SmithDecomposition snf =
        smith_normal_form(relative_coboundary(bases, degree - 1));
    rank_in = snf.rank();
    entry.torsion = snf.torsion();
  }
  entry.rank = n_here - rank_out - rank_in;
  if (entry.rank < 0) throw InternalError("negative relative cohomology rank");
  return entry;
}

long long reduced_betti(const HomologyProfile& profile, int degree) {
  if (degree < 0 || degree >= static_cast<int>(profile.betti.size())) return 0;
  const long long b = profile.betti[static_cast<std::size_t>(degree)];
  return degree == 0 ? b - 1 : b;
}

}  // namespace monodromy
