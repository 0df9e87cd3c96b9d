#pragma once

#include <array>
#include <vector>

#include "monodromy/simplicial_complex.hpp"

namespace monodromy {

// Two-dimensional cell structure in which edges and triangles are explicit
// instances. Polygon gluings produce loops, parallel edges and triangles
// with repeated corners, none of which a simplicial complex can express, so
// incidence is tracked by instance id. Barycentric subdivision removes the
// degeneracies: one round kills loops and repeated corners, a second round
// separates parallel cells.
struct DeltaComplex {
  struct Edge {
    int a = -1;  // endpoint slot 0
    int b = -1;  // endpoint slot 1
  };
  struct Side {
    int edge = -1;
    bool reversed = false;  // true: traversed from slot 1 to slot 0
  };
  struct Triangle {
    std::array<int, 3> corner{};  // corner[i] -> corner[i+1] along side[i]
    std::array<Side, 3> side{};
  };

  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;

  // Every side's oriented endpoints must match its triangle's corners.
  void check_consistency() const;

  long long euler_characteristic() const;

  bool is_simplicial() const;
  DeltaComplex barycentric_subdivision() const;

  // Subdivides until the structure is simplicial (at most max_rounds times)
  // and converts. Vertex labels are 0..vertex_count-1 of the final round.
  SimplicialComplex to_simplicial(int max_rounds = 2) const;
};

}  // namespace monodromy
