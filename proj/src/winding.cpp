#include "monodromy/branch_data.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

BranchData compose_winding_covers(int inner_degree, int outer_degree) {
  if (inner_degree < 2 || outer_degree < 2)
    throw ValidationError("bad-winding-degree", "winding degrees must be at least 2");
  const int a = inner_degree;
  const int b = outer_degree;
  const int n = a * b;
  const auto sheet = [a](int block, int inner) { return block * a + inner; };

  // Outer branch value 1: cycle the blocks, labels carried unchanged.
  std::vector<int> outer1(static_cast<std::size_t>(n));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < a; ++i)
      outer1[static_cast<std::size_t>(sheet(j, i))] = sheet((j + 1) % b, i);

  // Inner images: one full inner cycle inside block 0, opposite directions.
  std::vector<int> inner1(static_cast<std::size_t>(n));
  std::vector<int> inner2(static_cast<std::size_t>(n));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < a; ++i) {
      const int s = sheet(j, i);
      inner1[static_cast<std::size_t>(s)] = j == 0 ? sheet(0, (i + 1) % a) : s;
      inner2[static_cast<std::size_t>(s)] = j == 0 ? sheet(0, (i + a - 1) % a) : s;
    }

  BranchData data;
  data.degree = n;
  data.branch.push_back(Permutation::from_images(std::move(outer1)));
  data.branch.push_back(Permutation::from_images(std::move(inner1)));
  data.branch.push_back(Permutation::from_images(std::move(inner2)));
  const Permutation forced =
      data.branch[0].then(data.branch[1]).then(data.branch[2]).inverse();
  data.branch.push_back(forced);

  // Structural sanity: the forced closing permutation must look like the
  // second winding point, i.e. all cycles of length b.
  for (int len : forced.cycle_type())
    if (len != b) throw InternalError("closing permutation of a winding composite is not a block cycle");
  validate(data);
  return data;
}

}  // namespace monodromy
