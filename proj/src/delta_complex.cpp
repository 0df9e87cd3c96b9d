#include "monodromy/delta_complex.hpp"

#include <algorithm>
#include <set>

#include "monodromy/errors.hpp"

namespace monodromy {

void DeltaComplex::check_consistency() const {
  for (const auto& e : edges)
    if (e.a < 0 || e.a >= vertex_count || e.b < 0 || e.b >= vertex_count)
      throw InternalError("delta complex edge endpoint out of range");
  for (const auto& t : triangles) {
    for (int m = 0; m < 3; ++m) {
      const int corner_from = t.corner[static_cast<std::size_t>(m)];
      const int corner_to = t.corner[static_cast<std::size_t>((m + 1) % 3)];
      const Side& s = t.side[static_cast<std::size_t>(m)];
      if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
        throw InternalError("delta complex side references a missing edge");
      const Edge& e = edges[static_cast<std::size_t>(s.edge)];
      const int from = s.reversed ? e.b : e.a;
      const int to = s.reversed ? e.a : e.b;
      if (from != corner_from || to != corner_to)
        throw InternalError("delta complex side endpoints disagree with triangle corners");
    }
  }
}

long long DeltaComplex::euler_characteristic() const {
  return static_cast<long long>(vertex_count) - static_cast<long long>(edges.size()) +
         static_cast<long long>(triangles.size());
}

bool DeltaComplex::is_simplicial() const {
  std::set<std::pair<int, int>> edge_sets;
  for (const auto& e : edges) {
    if (e.a == e.b) return false;  // loop
    const auto key = std::minmax(e.a, e.b);
    if (!edge_sets.insert({key.first, key.second}).second) return false;  // parallel pair
  }
  std::set<std::array<int, 3>> triangle_sets;
  for (const auto& t : triangles) {
    std::array<int, 3> key = t.corner;
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2]) return false;  // repeated corner
    if (!triangle_sets.insert(key).second) return false;     // duplicate triangle
  }
  return true;
}

DeltaComplex DeltaComplex::barycentric_subdivision() const {
  check_consistency();
  DeltaComplex out;
  const int edge_count = static_cast<int>(edges.size());
  const int tri_count = static_cast<int>(triangles.size());
  out.vertex_count = vertex_count + edge_count + tri_count;
  const auto edge_bary = [this](int e) { return vertex_count + e; };
  const auto tri_bary = [this, edge_count](int t) { return vertex_count + edge_count + t; };

  // Edge instances of the subdivision, by construction id:
  //   half(e, slot)      : (endpoint of e at slot, edge barycenter)
  //   corner_spoke(t, m) : (corner m of t, triangle barycenter)
  //   side_spoke(t, i)   : (barycenter of side i's edge, triangle barycenter)
  const auto half = [](int e, int slot) { return 2 * e + slot; };
  const auto corner_spoke = [edge_count](int t, int m) { return 2 * edge_count + 3 * t + m; };
  const auto side_spoke = [edge_count, tri_count](int t, int i) {
    return 2 * edge_count + 3 * tri_count + 3 * t + i;
  };

  out.edges.resize(static_cast<std::size_t>(2 * edge_count + 6 * tri_count));
  for (int e = 0; e < edge_count; ++e) {
    out.edges[static_cast<std::size_t>(half(e, 0))] = {edges[static_cast<std::size_t>(e)].a,
                                                       edge_bary(e)};
    out.edges[static_cast<std::size_t>(half(e, 1))] = {edges[static_cast<std::size_t>(e)].b,
                                                       edge_bary(e)};
  }
  for (int t = 0; t < tri_count; ++t) {
    const Triangle& tri = triangles[static_cast<std::size_t>(t)];
    for (int m = 0; m < 3; ++m)
      out.edges[static_cast<std::size_t>(corner_spoke(t, m))] = {
          tri.corner[static_cast<std::size_t>(m)], tri_bary(t)};
    for (int i = 0; i < 3; ++i)
      out.edges[static_cast<std::size_t>(side_spoke(t, i))] = {
          edge_bary(tri.side[static_cast<std::size_t>(i)].edge), tri_bary(t)};
  }

  // Six triangles per input triangle, one per flag (corner, side, triangle).
  out.triangles.reserve(static_cast<std::size_t>(6 * tri_count));
  for (int t = 0; t < tri_count; ++t) {
    const Triangle& tri = triangles[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i) {
      const int m_from = i;
      const int m_to = (i + 1) % 3;
      const Side& s = tri.side[static_cast<std::size_t>(i)];
      const int slot_from = s.reversed ? 1 : 0;
      const int slot_to = 1 - slot_from;

      Triangle first;
      first.corner = {tri.corner[static_cast<std::size_t>(m_from)],
                      edge_bary(s.edge), tri_bary(t)};
      first.side = {Side{half(s.edge, slot_from), false},
                    Side{side_spoke(t, i), false},
                    Side{corner_spoke(t, m_from), true}};
      out.triangles.push_back(first);

      Triangle second;
      second.corner = {edge_bary(s.edge),
                       tri.corner[static_cast<std::size_t>(m_to)], tri_bary(t)};
      second.side = {Side{half(s.edge, slot_to), true},
                     Side{corner_spoke(t, m_to), false},
                     Side{side_spoke(t, i), true}};
      out.triangles.push_back(second);
    }
  }
  out.check_consistency();
  return out;
}

SimplicialComplex DeltaComplex::to_simplicial(int max_rounds) const {
  DeltaComplex current = *this;
  current.check_consistency();
  for (int round = 0; round <= max_rounds && !current.is_simplicial(); ++round) {
    if (round == max_rounds)
      throw InternalError("delta complex still not simplicial after subdivision budget");
    current = current.barycentric_subdivision();
  }

  std::array<std::vector<SimplicialComplex::Simplex>, 4> cells;
  cells[0].reserve(static_cast<std::size_t>(current.vertex_count));
  for (int v = 0; v < current.vertex_count; ++v) cells[0].push_back({v});
  cells[1].reserve(current.edges.size());
  for (const auto& e : current.edges)
    cells[1].push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
  cells[2].reserve(current.triangles.size());
  for (const auto& t : current.triangles) {
    SimplicialComplex::Simplex tri{t.corner[0], t.corner[1], t.corner[2]};
    std::sort(tri.begin(), tri.end());
    cells[2].push_back(std::move(tri));
  }
  SimplicialComplex result = SimplicialComplex::from_closed_cells(std::move(cells));

  // Instances collapsing onto each other would silently change the space.
  if (result.count(1) != static_cast<long long>(current.edges.size()) ||
      result.count(2) != static_cast<long long>(current.triangles.size()) ||
      result.count(0) != current.vertex_count)
    throw InternalError("cell instances collapsed while converting to a simplicial complex");
  return result;
}

}  // namespace monodromy
