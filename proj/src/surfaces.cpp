#include "monodromy/surfaces.hpp"

#include <map>
#include <numeric>
#include <vector>

#include "monodromy/delta_complex.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

// Union-find over dense int labels.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<int> parent_;
};

// The 4g-gon with the canonical identification word a1 b1 a1' b1' ... as a
// delta complex: one boundary vertex class, 2g boundary edge cells, a
// barycenter, and 4g coned triangles.
DeltaComplex genus_polygon(int genus) {
  const int sides = 4 * genus;
  DeltaComplex dc;
  dc.vertex_count = 2;  // 0: the single boundary class, 1: the barycenter
  const int rim = 0;
  const int center = 1;

  // side s pairs with its inverse partner; both instances share one cell.
  // Word position 4m..4m+3 holds a_m, b_m, a_m reversed, b_m reversed.
  std::vector<int> cell_of_side(static_cast<std::size_t>(sides));
  std::vector<bool> side_reversed(static_cast<std::size_t>(sides));
  int next_cell = 0;
  for (int m = 0; m < genus; ++m) {
    const int a_cell = next_cell++;
    const int b_cell = next_cell++;
    cell_of_side[static_cast<std::size_t>(4 * m)] = a_cell;
    side_reversed[static_cast<std::size_t>(4 * m)] = false;
    cell_of_side[static_cast<std::size_t>(4 * m + 1)] = b_cell;
    side_reversed[static_cast<std::size_t>(4 * m + 1)] = false;
    cell_of_side[static_cast<std::size_t>(4 * m + 2)] = a_cell;
    side_reversed[static_cast<std::size_t>(4 * m + 2)] = true;
    cell_of_side[static_cast<std::size_t>(4 * m + 3)] = b_cell;
    side_reversed[static_cast<std::size_t>(4 * m + 3)] = true;
  }
  dc.edges.assign(static_cast<std::size_t>(next_cell), DeltaComplex::Edge{rim, rim});

  // Spokes from the barycenter to each polygon corner stay distinct cells.
  std::vector<int> spoke(static_cast<std::size_t>(sides));
  for (int s = 0; s < sides; ++s) {
    spoke[static_cast<std::size_t>(s)] = static_cast<int>(dc.edges.size());
    dc.edges.push_back(DeltaComplex::Edge{center, rim});
  }

  for (int s = 0; s < sides; ++s) {
    DeltaComplex::Triangle t;
    t.corner = {center, rim, rim};
    t.side = {DeltaComplex::Side{spoke[static_cast<std::size_t>(s)], false},
              DeltaComplex::Side{cell_of_side[static_cast<std::size_t>(s)],
                                 side_reversed[static_cast<std::size_t>(s)]},
              DeltaComplex::Side{spoke[static_cast<std::size_t>((s + 1) % sides)], true}};
    dc.triangles.push_back(t);
  }
  dc.check_consistency();
  return dc;
}

}  // namespace

SimplicialComplex surface(int genus) {
  if (genus < 0 || genus > 4)
    throw ValidationError("genus-out-of-range", "surface builder covers genus 0 to 4");
  SimplicialComplex result;
  if (genus == 0) {
    result = SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  } else {
    result = genus_polygon(genus).to_simplicial();
  }
  if (!is_closed_surface(result))
    throw InternalError("constructed surface failed the vertex-link check");
  if (result.euler_characteristic() != 2 - 2 * genus)
    throw InternalError("constructed surface has the wrong Euler characteristic");
  return result;
}

SimplicialComplex normalization_surface(const BranchData& data, std::size_t element_bound) {
  if (data.branch.empty())
    throw ValidationError("no-branch-values",
                          "normalization surface needs at least one branch value");
  const PermGroup group = monodromy_group(data, element_bound);
  if (group.order() > 48)
    throw ValidationError("group-too-large",
                          "normalization surface construction is capped at group order 48");
  const int sheet_count = static_cast<int>(group.order());
  const int k = data.branch_count();

  std::map<Permutation, int> sheet_index;
  for (int i = 0; i < sheet_count; ++i) sheet_index[group.elements()[static_cast<std::size_t>(i)]] = i;
  const auto act = [&](int sheet, const Permutation& by) {
    return sheet_index.at(group.elements()[static_cast<std::size_t>(sheet)].then(by));
  };

  // Fundamental 2k-gon of the cut sphere, one copy per group element.
  // Boundary alternates base-point corners c_t and branch tips T_t; the two
  // sides of slit t are e_t (corner c_{t-1} to tip) and its partner from the
  // sheet moved by sigma_t. Corner classes obey c_{t-1}(g) ~ c_t(g sigma_t),
  // tip classes are the right cosets of <sigma_t>.
  DeltaComplex dc;

  // Corner classes via union-find over (sheet, corner slot).
  DisjointSets corner_sets(sheet_count * k);
  const auto corner_slot = [k](int sheet, int t) { return sheet * k + t; };
  for (int g = 0; g < sheet_count; ++g)
    for (int t = 0; t < k; ++t) {
      const int moved = act(g, data.branch[static_cast<std::size_t>(t)]);
      corner_sets.merge(corner_slot(g, (t + k - 1) % k), corner_slot(moved, t));
    }

  // Tip classes via union-find over (sheet, value index).
  DisjointSets tip_sets(sheet_count * k);
  const auto tip_slot = [k](int sheet, int t) { return sheet * k + t; };
  for (int g = 0; g < sheet_count; ++g)
    for (int t = 0; t < k; ++t)
      tip_sets.merge(tip_slot(g, t),
                     tip_slot(act(g, data.branch[static_cast<std::size_t>(t)]), t));

  // Dense vertex ids: barycenters, then corner classes, then tip classes.
  std::map<int, int> corner_id, tip_id;
  int next_vertex = sheet_count;
  for (int slot = 0; slot < sheet_count * k; ++slot) {
    const int root = corner_sets.find(slot);
    if (!corner_id.count(root)) corner_id[root] = next_vertex++;
  }
  for (int slot = 0; slot < sheet_count * k; ++slot) {
    const int root = tip_sets.find(slot);
    if (!tip_id.count(root)) tip_id[root] = next_vertex++;
  }
  dc.vertex_count = next_vertex;
  const auto corner_vertex = [&](int g, int t) {
    return corner_id.at(corner_sets.find(corner_slot(g, t)));
  };
  const auto tip_vertex = [&](int g, int t) { return tip_id.at(tip_sets.find(tip_slot(g, t))); };

  // Edge cells. Slit cells are shared: e_t(g) is the same cell as the
  // returning side on sheet g*sigma_t; spokes stay per sheet.
  std::vector<int> slit_cell(static_cast<std::size_t>(sheet_count * k));
  for (int g = 0; g < sheet_count; ++g)
    for (int t = 0; t < k; ++t) {
      slit_cell[static_cast<std::size_t>(g * k + t)] = static_cast<int>(dc.edges.size());
      dc.edges.push_back(
          DeltaComplex::Edge{corner_vertex(g, (t + k - 1) % k), tip_vertex(g, t)});
    }
  std::vector<int> corner_spoke(static_cast<std::size_t>(sheet_count * k));
  std::vector<int> tip_spoke(static_cast<std::size_t>(sheet_count * k));
  for (int g = 0; g < sheet_count; ++g)
    for (int t = 0; t < k; ++t) {
      corner_spoke[static_cast<std::size_t>(g * k + t)] = static_cast<int>(dc.edges.size());
      dc.edges.push_back(DeltaComplex::Edge{g, corner_vertex(g, t)});
      tip_spoke[static_cast<std::size_t>(g * k + t)] = static_cast<int>(dc.edges.size());
      dc.edges.push_back(DeltaComplex::Edge{g, tip_vertex(g, t)});
    }

  for (int g = 0; g < sheet_count; ++g) {
    for (int t = 0; t < k; ++t) {
      // Outgoing side of slit t on this sheet.
      DeltaComplex::Triangle outgoing;
      outgoing.corner = {g, corner_vertex(g, (t + k - 1) % k), tip_vertex(g, t)};
      outgoing.side = {
          DeltaComplex::Side{corner_spoke[static_cast<std::size_t>(g * k + (t + k - 1) % k)],
                             false},
          DeltaComplex::Side{slit_cell[static_cast<std::size_t>(g * k + t)], false},
          DeltaComplex::Side{tip_spoke[static_cast<std::size_t>(g * k + t)], true}};
      dc.triangles.push_back(outgoing);

      // Returning side: the matching slit cell lives on the sheet whose
      // crossing lands here.
      const int source = act(g, data.branch[static_cast<std::size_t>(t)].inverse());
      DeltaComplex::Triangle returning;
      returning.corner = {g, tip_vertex(g, t), corner_vertex(g, t)};
      returning.side = {
          DeltaComplex::Side{tip_spoke[static_cast<std::size_t>(g * k + t)], false},
          DeltaComplex::Side{slit_cell[static_cast<std::size_t>(source * k + t)], true},
          DeltaComplex::Side{corner_spoke[static_cast<std::size_t>(g * k + t)], true}};
      dc.triangles.push_back(returning);
    }
  }
  dc.check_consistency();
  return dc.to_simplicial();
}

}  // namespace monodromy
