#pragma once

#include "json.hpp"
#include "monodromy/branch_data.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/simplicial_complex.hpp"

namespace monodromy {

// {"degree": n, "branch": ["(0 1)", "(0 1)"]}
BranchData branch_data_from_json(const nlohmann::json& j);
nlohmann::json branch_data_to_json(const BranchData& data);

nlohmann::json cover_invariants_to_json(const CoverInvariants& inv);

// {"simplices": [[0, 1, 2], ...]}, maximal simplices; downward closure is
// recomputed on load.
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& c);

// {"betti": [...], "torsion": [[...], ...]}
nlohmann::json homology_profile_to_json(const HomologyProfile& profile);

}  // namespace monodromy
