#include "monodromy/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

void sort_unique(std::vector<SimplicialComplex::Simplex>& cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  SimplicialComplex result;
  for (const auto& raw : maximal) {
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("bad-simplex", "simplex lists a vertex twice");
    if (!s.empty() && s.front() < 0)
      throw ValidationError("bad-simplex", "vertex labels must be non-negative");
    if (s.size() > 4)
      throw ValidationError("dimension-too-large", "complexes are limited to dimension 3");
    if (s.empty()) continue;

    // All non-empty subsets of s.
    const int n = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[static_cast<std::size_t>(i)]);
      result.cells_[face.size() - 1].push_back(std::move(face));
    }
  }
  for (auto& level : result.cells_) sort_unique(level);
  return result;
}

SimplicialComplex SimplicialComplex::from_closed_cells(std::array<std::vector<Simplex>, 4> cells) {
  SimplicialComplex result;
  for (auto& level : cells) sort_unique(level);
  for (int d = 0; d <= 3; ++d) {
    for (const auto& s : cells[static_cast<std::size_t>(d)]) {
      if (static_cast<int>(s.size()) != d + 1 || !std::is_sorted(s.begin(), s.end()) ||
          std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0)
        throw ValidationError("bad-simplex", "malformed cell in bulk construction");
      if (d == 0) continue;
      const auto& faces = cells[static_cast<std::size_t>(d) - 1];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) face.push_back(s[k]);
        if (!std::binary_search(faces.begin(), faces.end(), face))
          throw ValidationError("not-downward-closed", "bulk cells are missing a face");
      }
    }
  }
  result.cells_ = std::move(cells);
  return result;
}

int SimplicialComplex::dim() const {
  for (int d = 3; d >= 0; --d)
    if (!cells_[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> kEmpty;
  if (dim < 0 || dim > 3) return kEmpty;
  return cells_[static_cast<std::size_t>(dim)];
}

long long SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > 3) return 0;
  return static_cast<long long>(cells_[static_cast<std::size_t>(dim)].size());
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= 3; ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
  return chi;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> result;
  result.reserve(cells_[0].size());
  for (const auto& s : cells_[0]) result.push_back(s[0]);
  return result;
}

bool SimplicialComplex::contains(const Simplex& sorted_simplex) const {
  if (sorted_simplex.empty() || sorted_simplex.size() > 4) return false;
  const auto& level = cells_[sorted_simplex.size() - 1];
  return std::binary_search(level.begin(), level.end(), sorted_simplex);
}

bool SimplicialComplex::contains_vertex(int v) const { return contains({v}); }

int SimplicialComplex::max_vertex_label() const {
  if (cells_[0].empty()) return -1;
  return cells_[0].back()[0];
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& ambient) const {
  for (int d = 0; d <= 3; ++d)
    for (const auto& s : cells_[static_cast<std::size_t>(d)])
      if (!ambient.contains(s)) return false;
  return true;
}

int SimplicialComplex::component_count() const {
  const auto verts = vertices();
  if (verts.empty()) return 0;
  std::map<int, int> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : cells_[1]) {
    const int a = find(index.at(e[0]));
    const int b = find(index.at(e[1]));
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int components = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  return components;
}

bool SimplicialComplex::is_connected() const { return component_count() == 1; }

SimplicialComplex SimplicialComplex::vertex_link(int v) const {
  if (!contains_vertex(v))
    throw ValidationError("vertex-absent", "link requested at a vertex not in the complex");
  std::vector<Simplex> link_cells;
  for (int d = 1; d <= 3; ++d) {
    for (const auto& s : cells_[static_cast<std::size_t>(d)]) {
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex face;
      for (int w : s)
        if (w != v) face.push_back(w);
      link_cells.push_back(std::move(face));
    }
  }
  return from_maximal(link_cells);
}

void validate_pair(const SubcomplexPair& pair) {
  if (!pair.sub.is_subcomplex_of(pair.ambient))
    throw ValidationError("not-a-subcomplex", "pair requires sub to be a subcomplex of ambient");
}

SuspensionResult suspension(const SimplicialComplex& c) {
  if (c.dim() > 2)
    throw ValidationError("dimension-too-large", "suspension input must have dimension <= 2");
  SuspensionResult result;
  result.north = c.max_vertex_label() + 1;
  result.south = c.max_vertex_label() + 2;
  std::vector<SimplicialComplex::Simplex> cells{{result.north}, {result.south}};
  for (int d = 0; d <= 2; ++d) {
    for (const auto& s : c.simplices(d)) {
      cells.push_back(s);
      auto north_cone = s;
      north_cone.push_back(result.north);
      cells.push_back(std::move(north_cone));
      auto south_cone = s;
      south_cone.push_back(result.south);
      cells.push_back(std::move(south_cone));
    }
  }
  result.complex = SimplicialComplex::from_maximal(cells);
  return result;
}

ConeResult cone(const SimplicialComplex& c) {
  if (c.dim() > 2)
    throw ValidationError("dimension-too-large", "cone input must have dimension <= 2");
  ConeResult result;
  result.apex = c.max_vertex_label() + 1;
  std::vector<SimplicialComplex::Simplex> cells{{result.apex}};
  for (int d = 0; d <= 2; ++d) {
    for (const auto& s : c.simplices(d)) {
      cells.push_back(s);
      auto coned = s;
      coned.push_back(result.apex);
      cells.push_back(std::move(coned));
    }
  }
  result.pair.ambient = SimplicialComplex::from_maximal(cells);
  result.pair.sub = c;
  validate_pair(result.pair);
  return result;
}

bool is_closed_surface(const SimplicialComplex& c) {
  if (c.dim() != 2 || !c.is_connected()) return false;

  // Pure: every vertex and edge lies in a triangle.
  for (const auto& e : c.simplices(1)) {
    int incident = 0;
    for (const auto& t : c.simplices(2)) {
      if (std::includes(t.begin(), t.end(), e.begin(), e.end())) ++incident;
    }
    if (incident != 2) return false;
  }
  for (int v : c.vertices()) {
    const SimplicialComplex link = c.vertex_link(v);
    // Single cycle: connected graph, E == V, every link vertex on 2 edges.
    if (link.dim() != 1 || !link.is_connected()) return false;
    if (link.count(0) != link.count(1)) return false;
    for (int w : link.vertices()) {
      int degree = 0;
      for (const auto& e : link.simplices(1))
        if (e[0] == w || e[1] == w) ++degree;
      if (degree != 2) return false;
    }
  }
  return true;
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<SimplicialComplex::Simplex> cells;
  for (int d = 0; d <= 3; ++d) {
    for (const auto& s : a.simplices(d)) cells.push_back(s);
    for (const auto& s : b.simplices(d)) cells.push_back(s);
  }
  return SimplicialComplex::from_maximal(cells);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<SimplicialComplex::Simplex> cells;
  for (int d = 0; d <= 3; ++d)
    for (const auto& s : a.simplices(d))
      if (b.contains(s)) cells.push_back(s);
  return SimplicialComplex::from_maximal(cells);
}

}  // namespace monodromy
