#include "monodromy/json_io.hpp"

#include <algorithm>

#include "monodromy/errors.hpp"

namespace monodromy {

using nlohmann::json;

BranchData branch_data_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("branch data must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw ParseError("branch data needs an integer \"degree\"");
  if (!j.contains("branch") || !j["branch"].is_array())
    throw ParseError("branch data needs a \"branch\" array of cycle strings");
  const long long degree = j["degree"].get<long long>();
  if (degree < 1 || degree > 1024) throw ParseError("degree out of supported range");

  BranchData data;
  data.degree = static_cast<int>(degree);
  for (const auto& entry : j["branch"]) {
    if (!entry.is_string()) throw ParseError("branch entries must be cycle strings");
    data.branch.push_back(parse_cycles(entry.get<std::string>(), data.degree));
  }
  return data;
}

json branch_data_to_json(const BranchData& data) {
  json j;
  j["degree"] = data.degree;
  json branch = json::array();
  for (const auto& sigma : data.branch) branch.push_back(to_cycle_string(sigma));
  j["branch"] = branch;
  return j;
}

json cover_invariants_to_json(const CoverInvariants& inv) {
  json j;
  j["degree"] = inv.degree;
  j["branch_count"] = inv.branch_count;
  j["monodromy_order"] = inv.monodromy_order;
  j["local_orders"] = inv.local_orders;
  j["chi_normalization"] = inv.chi_normalization;
  j["genus_normalization"] = inv.genus_normalization;
  j["is_normal"] = inv.is_normal;
  j["chi_domain"] = inv.chi_domain;
  j["local_degrees"] = inv.local_degrees;
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
    throw ParseError("complex must be an object with a \"simplices\" array");
  std::vector<SimplicialComplex::Simplex> maximal;
  for (const auto& entry : j["simplices"]) {
    if (!entry.is_array()) throw ParseError("each simplex must be an array of vertex labels");
    SimplicialComplex::Simplex s;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw ParseError("vertex labels must be integers");
      const long long label = v.get<long long>();
      if (label < 0 || label > 1'000'000) throw ParseError("vertex label out of range");
      s.push_back(static_cast<int>(label));
    }
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(maximal);
}

json complex_to_json(const SimplicialComplex& c) {
  // Maximal simplices only: everything not a face of a higher cell.
  std::vector<SimplicialComplex::Simplex> maximal;
  for (int d = 0; d <= 3; ++d) {
    for (const auto& s : c.simplices(d)) {
      bool covered = false;
      for (int upper = d + 1; upper <= 3 && !covered; ++upper)
        for (const auto& t : c.simplices(upper)) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            covered = true;
            break;
          }
        }
      if (!covered) maximal.push_back(s);
    }
  }
  json j;
  j["simplices"] = maximal;
  return j;
}

json homology_profile_to_json(const HomologyProfile& profile) {
  json j;
  j["betti"] = profile.betti;
  j["torsion"] = profile.torsion;
  return j;
}

}  // namespace monodromy
