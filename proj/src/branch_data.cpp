#include "monodromy/branch_data.hpp"

#include <algorithm>

#include "monodromy/checked_int.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

void validate(const BranchData& data) {
  if (data.degree < 1) throw ValidationError("bad-degree", "degree must be positive");
  for (const auto& sigma : data.branch) {
    if (sigma.degree() != data.degree)
      throw ValidationError("degree-mismatch",
                            "branch permutation degree differs from the cover degree");
  }
  for (const auto& sigma : data.branch) {
    if (sigma.is_identity())
      throw ValidationError("identity-branch-permutation",
                            "every listed branch value needs a nontrivial permutation");
  }
  Permutation product(data.degree);
  for (const auto& sigma : data.branch) product = product.then(sigma);
  if (!product.is_identity())
    throw ValidationError("product-not-identity",
                          "left-to-right product of branch permutations must be the identity");
  if (!is_transitive(data.branch, data.degree))
    throw ValidationError("not-transitive",
                          "branch permutations must act transitively on the sheets");
}

PermGroup monodromy_group(const BranchData& data, std::size_t element_bound) {
  validate(data);
  // A cover with no branch values is the trivial degree-1 cover.
  if (data.branch.empty())
    return PermGroup::generate({Permutation(data.degree)}, element_bound);
  return PermGroup::generate(data.branch, element_bound);
}

bool is_normal_cover(const BranchData& data, std::size_t element_bound) {
  const PermGroup group = monodromy_group(data, element_bound);
  return is_normal_subgroup(group.point_stabilizer(0), group);
}

std::vector<long long> local_orders(const BranchData& data) {
  validate(data);
  std::vector<long long> orders;
  orders.reserve(data.branch.size());
  for (const auto& sigma : data.branch) orders.push_back(sigma.order());
  return orders;
}

std::vector<long long> local_degree_multiset(const BranchData& data) {
  validate(data);
  std::vector<long long> degrees;
  for (const auto& sigma : data.branch)
    for (int len : sigma.cycle_type()) degrees.push_back(len);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

long long euler_characteristic_normalization(const BranchData& data, std::size_t element_bound) {
  const PermGroup group = monodromy_group(data, element_bound);
  const long long group_order = static_cast<long long>(group.order());

  // chi = |G| * (2 - sum (n_i - 1)/n_i) over a common denominator.
  long long denom = 1;
  std::vector<long long> orders;
  for (const auto& sigma : data.branch) {
    orders.push_back(sigma.order());
    denom = lcm_ll(denom, orders.back());
  }
  long long numer = checked_mul(2, denom);
  for (long long n_y : orders)
    numer = checked_sub(numer, checked_mul(denom / n_y, n_y - 1));
  const long long scaled = checked_mul(group_order, numer);
  if (scaled % denom != 0)
    throw InternalError("Riemann-Hurwitz sum is not integral for valid branch data");
  const long long chi = scaled / denom;
  if (chi % 2 != 0 || chi > 2)
    throw InternalError("normalization Euler characteristic must be even and at most 2");
  return chi;
}

long long genus_normalization(const BranchData& data, std::size_t element_bound) {
  return (2 - euler_characteristic_normalization(data, element_bound)) / 2;
}

long long chi_domain(const BranchData& data) {
  validate(data);
  long long defect = 0;
  for (const auto& sigma : data.branch)
    for (int len : sigma.cycle_type()) defect = checked_add(defect, len - 1);
  const long long chi = checked_sub(2LL * data.degree, defect);
  if (chi % 2 != 0 || chi > 2)
    throw InternalError("domain Euler characteristic must be even and at most 2");
  return chi;
}

CoverInvariants cover_invariants(const BranchData& data, std::size_t element_bound) {
  const PermGroup group = monodromy_group(data, element_bound);
  CoverInvariants inv;
  inv.degree = data.degree;
  inv.branch_count = data.branch_count();
  inv.monodromy_order = static_cast<long long>(group.order());
  inv.local_orders = local_orders(data);
  inv.chi_normalization = euler_characteristic_normalization(data, element_bound);
  inv.genus_normalization = (2 - inv.chi_normalization) / 2;
  inv.is_normal = is_normal_subgroup(group.point_stabilizer(0), group);
  inv.chi_domain = chi_domain(data);
  inv.local_degrees = local_degree_multiset(data);
  return inv;
}

namespace {

// Non-identity permutations of the given degree in lexicographic image order.
std::vector<Permutation> non_identity_permutations(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<Permutation> result;
  while (std::next_permutation(images.begin(), images.end()))
    result.push_back(Permutation::from_images(images));
  return result;
}

}  // namespace

void enumerate_branch_data(int n_max, int k_max,
                           const std::function<bool(const BranchData&)>& visit) {
  if (n_max < 1 || n_max > 6)
    throw ValidationError("bad-range", "enumeration degree cap must lie in [1, 6]");
  if (k_max < 1 || k_max > 6)
    throw ValidationError("bad-range", "enumeration branch-count cap must lie in [1, 6]");

  for (int n = 2; n <= n_max; ++n) {
    const std::vector<Permutation> pool = non_identity_permutations(n);
    for (int k = 2; k <= k_max; ++k) {
      const int free_count = k - 1;
      std::vector<std::size_t> index(static_cast<std::size_t>(free_count), 0);
      // prefix[t] = product of the first t chosen permutations.
      std::vector<Permutation> prefix(static_cast<std::size_t>(free_count) + 1, Permutation(n));
      for (int t = 0; t < free_count; ++t)
        prefix[static_cast<std::size_t>(t) + 1] =
            prefix[static_cast<std::size_t>(t)].then(pool[index[static_cast<std::size_t>(t)]]);

      while (true) {
        const Permutation last = prefix.back().inverse();
        if (!last.is_identity()) {
          BranchData data;
          data.degree = n;
          for (int t = 0; t < free_count; ++t)
            data.branch.push_back(pool[index[static_cast<std::size_t>(t)]]);
          data.branch.push_back(last);
          if (is_transitive(data.branch, n)) {
            validate(data);
            if (!visit(data)) return;
          }
        }

        // Odometer step, rightmost position fastest.
        int pos = free_count - 1;
        while (pos >= 0 && index[static_cast<std::size_t>(pos)] + 1 == pool.size()) {
          index[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++index[static_cast<std::size_t>(pos)];
        for (int t = pos; t < free_count; ++t)
          prefix[static_cast<std::size_t>(t) + 1] =
              prefix[static_cast<std::size_t>(t)].then(pool[index[static_cast<std::size_t>(t)]]);
      }
    }
  }
}

std::optional<BranchData> search_tower_piece(int n_max, bool want_degree3, bool want_normal,
                                             std::size_t element_bound) {
  if (n_max < 1 || n_max > 6)
    throw ValidationError("bad-range", "search degree cap must lie in [1, 6]");
  std::optional<BranchData> found;
  enumerate_branch_data(n_max, 6, [&](const BranchData& data) {
    if (chi_domain(data) != 0) return true;
    const auto degrees = local_degree_multiset(data);
    const bool has_degree3 = std::find(degrees.begin(), degrees.end(), 3LL) != degrees.end();
    if (has_degree3 != want_degree3) return true;
    if (is_normal_cover(data, element_bound) != want_normal) return true;
    found = data;
    return false;
  });
  return found;
}

}  // namespace monodromy
