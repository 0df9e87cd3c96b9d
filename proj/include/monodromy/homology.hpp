#pragma once

#include <vector>

#include "monodromy/int_matrix.hpp"
#include "monodromy/simplicial_complex.hpp"

namespace monodromy {

// Integral homology summary: one betti rank per degree plus torsion
// coefficients, each dividing the next within a degree.
struct HomologyProfile {
  std::vector<long long> betti;
  std::vector<std::vector<long long>> torsion;

  long long euler_characteristic() const;
  bool operator==(const HomologyProfile&) const = default;
};

struct HomologyEntry {
  long long rank = 0;
  std::vector<long long> torsion;
  bool operator==(const HomologyEntry&) const = default;
};

// Boundary matrix of the given degree: rows are (dim-1)-simplices, columns
// are dim-simplices, both in lexicographic order; signs from vertex-order
// position parity.
IntMatrix boundary_matrix(const SimplicialComplex& c, int dim);

// Integral homology in all degrees via exact Smith normal form.
HomologyProfile homology(const SimplicialComplex& c);

// Cohomology of the relative cochain complex of the pair in one degree:
// cochains on the ambient complex vanishing on the subcomplex.
HomologyEntry relative_cohomology(const SubcomplexPair& pair, int degree);

// betti with the extra point in degree 0 removed.
long long reduced_betti(const HomologyProfile& profile, int degree);

}  // namespace monodromy
