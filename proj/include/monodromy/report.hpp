#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/perm_group.hpp"

namespace monodromy {

// One checked claim with the numbers that decided it.
struct Verdict {
  std::string claim;
  std::string status;  // "verified", "refuted" or "inconclusive"
  nlohmann::json witness;
};

struct Report {
  std::string command;
  nlohmann::json input;
  nlohmann::json results;
  std::vector<Verdict> verdicts;

  nlohmann::json to_json() const;
};

// Full invariant report for one branch datum.
Report cmd_invariants(const nlohmann::json& input, std::size_t group_bound = kDefaultGroupBound);

// Composite-winding pipeline: branch data, invariants, normalization
// surface, suspension verdict and the Wilder obstruction.
Report cmd_theorem1(int inner_degree, int outer_degree,
                    std::size_t group_bound = kDefaultGroupBound);

// Exhaustive enumeration with the three invariant claims checked on every
// datum. Refuses n_max > 5 unless override_budget is set.
Report cmd_sweep(int n_max, int k_max, bool override_budget = false,
                 std::size_t group_bound = kDefaultGroupBound);

// Searches for the two boundary-map profiles: normal with no local degree
// three, and non-normal with local degree three, both over a torus domain.
Report cmd_tower_search(int n_max, std::size_t group_bound = kDefaultGroupBound);

Report cmd_homology(const nlohmann::json& input);
Report cmd_suspend(const nlohmann::json& input);

}  // namespace monodromy
