#include "monodromy/int_matrix.hpp"

#include "monodromy/errors.hpp"

namespace monodromy {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InternalError("matrix dimensions must be non-negative");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace monodromy
