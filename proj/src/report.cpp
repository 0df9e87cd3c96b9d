#include "monodromy/report.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "monodromy/branch_data.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/json_io.hpp"
#include "monodromy/obstructions.hpp"
#include "monodromy/surfaces.hpp"

namespace monodromy {

using nlohmann::json;

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["results"] = results;
  json verdict_list = json::array();
  for (const auto& v : verdicts)
    verdict_list.push_back({{"claim", v.claim}, {"status", v.status}, {"witness", v.witness}});
  j["verdicts"] = verdict_list;
  return j;
}

Report cmd_invariants(const json& input, std::size_t group_bound) {
  const BranchData data = branch_data_from_json(input);
  const CoverInvariants inv = cover_invariants(data, group_bound);
  Report report;
  report.command = "invariants";
  report.input = branch_data_to_json(data);
  report.results = cover_invariants_to_json(inv);
  return report;
}

Report cmd_theorem1(int inner_degree, int outer_degree, std::size_t group_bound) {
  const BranchData data = compose_winding_covers(inner_degree, outer_degree);
  const CoverInvariants inv = cover_invariants(data, group_bound);
  const SimplicialComplex surf = normalization_surface(data, group_bound);
  const HomologyProfile surf_homology = homology(surf);
  const ManifoldVerdict verdict = suspension_manifold_verdict(surf);
  const long long rho2 = wilder_obstruction(surf);

  Report report;
  report.command = "theorem1";
  report.input = {{"inner_degree", inner_degree}, {"outer_degree", outer_degree}};
  report.results = {{"branch_data", branch_data_to_json(data)},
                    {"invariants", cover_invariants_to_json(inv)},
                    {"normalization_surface",
                     {{"vertices", surf.count(0)},
                      {"edges", surf.count(1)},
                      {"triangles", surf.count(2)},
                      {"euler_characteristic", surf.euler_characteristic()}}},
                    {"surface_homology", homology_profile_to_json(surf_homology)},
                    {"suspension_verdict",
                     verdict == ManifoldVerdict::manifold ? "manifold" : "not_manifold"},
                    {"rho2", rho2}};

  const auto status = [](bool ok) { return ok ? "verified" : "refuted"; };
  report.verdicts.push_back(
      {"branch_count_is_4", status(inv.branch_count == 4), {{"branch_count", inv.branch_count}}});
  report.verdicts.push_back({"genus_at_least_1", status(inv.genus_normalization >= 1),
                             {{"genus", inv.genus_normalization},
                              {"chi_normalization", inv.chi_normalization}}});
  report.verdicts.push_back({"suspension_not_manifold",
                             status(verdict == ManifoldVerdict::not_manifold),
                             {{"surface_h1_rank", surf_homology.betti[1]}}});
  report.verdicts.push_back(
      {"wilder_obstruction_positive", status(rho2 > 0), {{"rho2", rho2}}});
  return report;
}

Report cmd_sweep(int n_max, int k_max, bool override_budget, std::size_t group_bound) {
  if (n_max > 5 && !override_budget)
    throw ValidationError("budget-exceeded",
                          "sweep refuses n_max > 5 without --override-budget");
  Report report;
  report.command = "sweep";
  report.input = {{"n_max", n_max}, {"k_max", k_max}, {"override_budget", override_budget}};

  long long total = 0;
  std::map<std::tuple<int, int, long long>, long long> buckets;
  json violations_normal = json::array();
  json violations_chi_positive = json::array();
  json violations_chi_shape = json::array();
  long long checked_normal = 0;

  enumerate_branch_data(n_max, k_max, [&](const BranchData& data) {
    ++total;
    long long chi = 0;
    bool chi_ok = true;
    try {
      chi = euler_characteristic_normalization(data, group_bound);
    } catch (const InternalError&) {
      chi_ok = false;
    }
    if (!chi_ok || chi % 2 != 0 || chi > 2) {
      violations_chi_shape.push_back(
          {{"branch_data", branch_data_to_json(data)}, {"chi", chi_ok ? json(chi) : json()}});
      return true;
    }
    const long long genus = (2 - chi) / 2;
    ++buckets[{data.degree, data.branch_count(), genus}];

    if (data.branch_count() <= 2) {
      ++checked_normal;
      if (!is_normal_cover(data, group_bound))
        violations_normal.push_back({{"branch_data", branch_data_to_json(data)}});
    }
    if (data.branch_count() >= 4 && chi > 0)
      violations_chi_positive.push_back(
          {{"branch_data", branch_data_to_json(data)}, {"chi", chi}});
    return true;
  });

  json bucket_list = json::array();
  for (const auto& [key, count] : buckets)
    bucket_list.push_back({{"degree", std::get<0>(key)},
                           {"branch_count", std::get<1>(key)},
                           {"genus", std::get<2>(key)},
                           {"count", count}});
  report.results = {{"total_valid", total}, {"buckets", bucket_list}};

  const auto status = [](bool ok) { return ok ? "verified" : "refuted"; };
  report.verdicts.push_back({"at_most_two_branch_values_normal",
                             status(violations_normal.empty()),
                             {{"checked", checked_normal}, {"violations", violations_normal}}});
  report.verdicts.push_back(
      {"four_or_more_branch_values_chi_nonpositive", status(violations_chi_positive.empty()),
       {{"checked", total}, {"violations", violations_chi_positive}}});
  report.verdicts.push_back({"chi_even_and_at_most_two", status(violations_chi_shape.empty()),
                             {{"checked", total}, {"violations", violations_chi_shape}}});
  return report;
}

Report cmd_tower_search(int n_max, std::size_t group_bound) {
  Report report;
  report.command = "tower-search";
  report.input = {{"n_max", n_max}};

  json profile_list = json::array();
  const auto run_profile = [&](bool want_degree3, bool want_normal, const std::string& claim) {
    const auto found = search_tower_piece(n_max, want_degree3, want_normal, group_bound);
    json entry = {{"want_degree3", want_degree3},
                  {"want_normal", want_normal},
                  {"found", found.has_value()}};
    json witness = {{"found", found.has_value()}, {"n_max", n_max}};
    if (found) {
      entry["witness"] = branch_data_to_json(*found);
      entry["invariants"] = cover_invariants_to_json(cover_invariants(*found, group_bound));
      witness["branch_data"] = entry["witness"];
    }
    profile_list.push_back(entry);
    report.verdicts.push_back(
        {claim, found.has_value() ? "verified" : "inconclusive", witness});
  };
  run_profile(false, true, "torus_normal_without_degree3_found");
  run_profile(true, false, "torus_nonnormal_with_degree3_found");
  report.results = {{"profiles", profile_list}};
  return report;
}

Report cmd_homology(const json& input) {
  const SimplicialComplex c = complex_from_json(input);
  const HomologyProfile profile = homology(c);
  Report report;
  report.command = "homology";
  report.input = complex_to_json(c);
  report.results = {{"cells", {c.count(0), c.count(1), c.count(2), c.count(3)}},
                    {"euler_characteristic", c.euler_characteristic()},
                    {"homology", homology_profile_to_json(profile)}};
  return report;
}

Report cmd_suspend(const json& input) {
  const SimplicialComplex c = complex_from_json(input);
  const SuspensionResult s = suspension(c);
  Report report;
  report.command = "suspend";
  report.input = complex_to_json(c);
  report.results = {{"suspension", complex_to_json(s.complex)},
                    {"north", s.north},
                    {"south", s.south},
                    {"cells",
                     {s.complex.count(0), s.complex.count(1), s.complex.count(2),
                      s.complex.count(3)}}};
  return report;
}

}  // namespace monodromy
