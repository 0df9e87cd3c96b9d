#pragma once

#include <array>
#include <compare>
#include <vector>

namespace monodromy {

// Finite abstract simplicial complex of dimension at most 3 over integer
// vertex labels. Simplices are stored per dimension as sorted vertex lists
// in lexicographic order; boundary orientation is read off that order.
class SimplicialComplex {
 public:
  using Simplex = std::vector<int>;

  SimplicialComplex() = default;

  // Builds the downward closure of the given simplices. Rejects negative
  // labels, repeated vertices inside a simplex, and dimension > 3.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  // Takes cells already listed per dimension (each cell sorted), checks
  // they form a downward-closed family, and adopts them. Cheaper than
  // from_maximal for bulk constructions.
  static SimplicialComplex from_closed_cells(std::array<std::vector<Simplex>, 4> cells);

  int dim() const;  // -1 for the empty complex
  const std::vector<Simplex>& simplices(int dim) const;
  long long count(int dim) const;
  long long euler_characteristic() const;
  std::vector<int> vertices() const;
  bool contains(const Simplex& sorted_simplex) const;
  bool contains_vertex(int v) const;
  int max_vertex_label() const;  // -1 for the empty complex
  bool empty() const { return dim() < 0; }

  bool is_subcomplex_of(const SimplicialComplex& ambient) const;
  int component_count() const;
  bool is_connected() const;

  // Subcomplex of all s with v not in s and s + {v} present.
  SimplicialComplex vertex_link(int v) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::array<std::vector<Simplex>, 4> cells_;
};

struct SubcomplexPair {
  SimplicialComplex ambient;
  SimplicialComplex sub;
};

// Throws unless pair.sub really is a subcomplex of pair.ambient.
void validate_pair(const SubcomplexPair& pair);

struct SuspensionResult {
  SimplicialComplex complex;
  int north = -1;
  int south = -1;
};

// Two fresh apex vertices coned over every simplex. Input dimension <= 2.
SuspensionResult suspension(const SimplicialComplex& c);

struct ConeResult {
  SubcomplexPair pair;  // ambient = CF, sub = F
  int apex = -1;
};

// One fresh apex coned over every simplex; the pair (CF, F) carries the
// relative cohomology of the open cone. Input dimension <= 2.
ConeResult cone(const SimplicialComplex& c);

// Connected, pure 2-dimensional, every edge in exactly two triangles, and
// every vertex link a single cycle.
bool is_closed_surface(const SimplicialComplex& c);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace monodromy
