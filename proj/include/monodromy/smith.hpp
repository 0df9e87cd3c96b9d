#pragma once

#include <vector>

#include "monodromy/int_matrix.hpp"

namespace monodromy {

// Smith normal form D = U * A * V with unimodular U and V. The diagonal is
// non-negative and each entry divides the next.
struct SmithDecomposition {
  IntMatrix d, u, v;
  // Determinants of u and v, tracked exactly through the elementary
  // operations that built them; always +1 or -1.
  int det_sign_u = 1;
  int det_sign_v = 1;
  std::vector<long long> diagonal;  // nonzero diagonal entries only

  int rank() const { return static_cast<int>(diagonal.size()); }
  std::vector<long long> torsion() const;  // diagonal entries > 1
};

// Computes the decomposition and always self-verifies it (see verify_smith).
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Re-multiplies U * A * V and compares with D entry by entry, checks the
// divisibility chain, and confirms unimodularity of U and V: the tracked
// determinant signs, a determinant-parity check over GF(2), and for small
// matrices an independent modular determinant. Throws InternalError.
void verify_smith(const IntMatrix& a, const SmithDecomposition& s);

struct SmithVerificationStats {
  long long decompositions = 0;
  long long verified = 0;
};
SmithVerificationStats smith_verification_stats();
void reset_smith_verification_stats();

}  // namespace monodromy
