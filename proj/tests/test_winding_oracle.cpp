// Independent oracle for compose_winding_covers.
//
// The composite of two winding maps is modeled concretely: the outer map is
// z -> z^b, the inner map winds a times with branch values u and v placed
// off the outer branch points. Loops in the target are polar paths (arcs at
// fixed radius, radial moves at fixed angle) with exact rational angles
// measured in turns, so lifts through z -> z^b and all winding numbers are
// exact integer computations. The inner cover is cyclic, so the sheet pair
// (outer block, inner label) transports by (block shift, winding of the
// based loop around u minus winding around v, mod a).
//
// The oracle only pins convention-independent quantities: group order,
// local orders, chi, genus, normality, domain chi and the cycle shapes.

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "monodromy/branch_data.hpp"
#include "monodromy/errors.hpp"

using namespace monodromy;

namespace {

struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    REQUIRE(den != 0);
    if (den < 0) {
      den = -den;
      num = -num;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  Frac operator/(long long k) const { return Frac(num, den * k); }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
  bool operator>(const Frac& o) const { return o < *this; }
  bool is_integer() const { return den == 1; }
};

long long floor_frac(const Frac& f) {
  long long q = f.num / f.den;
  if (f.num % f.den != 0 && f.num < 0) --q;
  return q;
}

struct Piece {
  bool is_arc = true;
  Frac radius;            // arc: fixed radius; rad: ignored
  Frac angle_from, angle_to;  // arc sweep (continuous turns); rad: both = angle
  Frac radius_from, radius_to;  // rad move; arc: ignored
};

Piece make_arc(const Frac& r, const Frac& from, const Frac& to) {
  Piece p;
  p.is_arc = true;
  p.radius = r;
  p.angle_from = from;
  p.angle_to = to;
  return p;
}

Piece make_rad(const Frac& angle, const Frac& from, const Frac& to) {
  Piece p;
  p.is_arc = false;
  p.angle_from = angle;
  p.angle_to = angle;
  p.radius_from = from;
  p.radius_to = to;
  return p;
}

struct Puncture {
  Frac radius;
  Frac angle;  // turns in [0, 1)
};

// Winding of a closed polar path around a puncture: arcs strictly outside
// the puncture radius contribute the signed count of times their sweep
// passes the puncture angle mod 1.
long long winding(const std::vector<Piece>& path, const Puncture& q) {
  long long total = 0;
  for (const auto& piece : path) {
    if (!piece.is_arc) {
      // A radial move on the puncture's ray would be ambiguous.
      REQUIRE(!(piece.angle_from - q.angle).is_integer());
      continue;
    }
    if (!(piece.radius > q.radius)) continue;
    const Frac from = piece.angle_from - q.angle;
    const Frac to = piece.angle_to - q.angle;
    REQUIRE(!from.is_integer());
    REQUIRE(!to.is_integer());
    total += floor_frac(to) - floor_frac(from);
  }
  return total;
}

// Lift of a target polar path through z -> z^b starting on outer block j.
// Radii are stored at middle scale already, so only angles divide by b.
std::vector<Piece> lift_path(const std::vector<Piece>& path, int b, int block,
                             const Frac& base_angle) {
  std::vector<Piece> lifted;
  Frac target_angle = base_angle;
  Frac middle_angle = (base_angle + Frac(block)) / b;
  for (const auto& piece : path) {
    REQUIRE(piece.angle_from == target_angle);
    if (piece.is_arc) {
      const Frac sweep = piece.angle_to - piece.angle_from;
      lifted.push_back(make_arc(piece.radius, middle_angle, middle_angle + sweep / b));
      middle_angle = middle_angle + sweep / b;
      target_angle = piece.angle_to;
    } else {
      lifted.push_back(make_rad(middle_angle, piece.radius_from, piece.radius_to));
    }
  }
  return lifted;
}

std::vector<Piece> reversed(const std::vector<Piece>& path) {
  std::vector<Piece> result;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Piece p = *it;
    if (p.is_arc)
      std::swap(p.angle_from, p.angle_to);
    else
      std::swap(p.radius_from, p.radius_to);
    result.push_back(p);
  }
  return result;
}

struct WindingModel {
  int a, b;
  Frac base_angle;     // alpha0, turns
  Puncture inner_u;    // middle sphere
  Puncture inner_v;

  explicit WindingModel(int a_, int b_) : a(a_), b(b_) {
    base_angle = Frac(1, 4 * b);
    inner_u = {Frac(1, 2), Frac(1, 2 * b)};
    inner_v = {Frac(2), Frac(0)};
  }

  // Reference arc from middle basepoint m_0 to m_j along the unit circle.
  std::vector<Piece> reference(int j) const {
    return {make_arc(Frac(1), base_angle / b, (base_angle + Frac(j)) / b)};
  }

  Permutation monodromy(const std::vector<Piece>& loop) const {
    // Outer block shift is the winding around the origin.
    const long long w0 = winding(loop, Puncture{Frac(0), Frac(1, 3)});
    std::vector<int> images(static_cast<std::size_t>(a * b));
    for (int j = 0; j < b; ++j) {
      const int target_block = static_cast<int>(((j + w0) % b + b) % b);
      std::vector<Piece> based = reference(j);
      const auto lifted = lift_path(loop, b, j, base_angle);
      based.insert(based.end(), lifted.begin(), lifted.end());
      const auto back = reversed(reference(target_block));
      based.insert(based.end(), back.begin(), back.end());
      const long long phi = winding(based, inner_u) - winding(based, inner_v);
      const int twist = static_cast<int>(((phi % a) + a) % a);
      for (int i = 0; i < a; ++i)
        images[static_cast<std::size_t>(j * a + i)] = target_block * a + (i + twist) % a;
    }
    return Permutation::from_images(std::move(images));
  }

  // Loop around the origin only: a small full circle reached radially. The
  // end point coincides with the start modulo one turn.
  std::vector<Piece> loop_origin() const {
    const Frac r(1, 4);
    return {make_rad(base_angle, Frac(1), r),
            make_arc(r, base_angle, base_angle + Frac(1)),
            make_rad(base_angle + Frac(1), r, Frac(1))};
  }

  // Lasso around one off-center puncture: a polar rectangle strictly
  // containing it and nothing else, reached along the unit circle.
  std::vector<Piece> loop_rectangle(const Puncture& q, const Frac& r_in,
                                    const Frac& r_out) const {
    const Frac half_width(1, 4 * b);
    const Frac th1 = q.angle - half_width;
    const Frac th2 = q.angle + half_width;
    std::vector<Piece> path;
    path.push_back(make_arc(Frac(1), base_angle, th1));
    path.push_back(make_rad(th1, Frac(1), r_in));
    path.push_back(make_rad(th1, r_in, r_out));
    path.push_back(make_arc(r_out, th1, th2));
    path.push_back(make_rad(th2, r_out, r_in));
    path.push_back(make_arc(r_in, th2, th1));
    path.push_back(make_rad(th1, r_in, Frac(1)));
    path.push_back(make_arc(Frac(1), th1, base_angle));
    return path;
  }

  // The four branch-value monodromies; the closing one is forced.
  std::vector<Permutation> branch_tuple() const {
    const Puncture image_u{Frac(1, 2), Frac(1, 2)};  // angle b * angle(u) mod 1
    const Puncture image_v{Frac(2), Frac(0)};
    const Permutation m1 = monodromy(loop_origin());
    const Permutation m2 = monodromy(loop_rectangle(image_u, Frac(1, 4), Frac(3, 4)));
    const Permutation m3 = monodromy(loop_rectangle(image_v, Frac(3, 2), Frac(3)));
    const Permutation m4 = m1.then(m2).then(m3).inverse();
    return {m1, m2, m3, m4};
  }
};

}  // namespace

TEST_CASE("winding model reproduces the degree-2 composite by hand") {
  const WindingModel model(2, 2);
  const auto tuple = model.branch_tuple();

  // Around the origin: both blocks swap; around an inner image: one block
  // turns, the other stands still.
  CHECK(tuple[0].cycle_type() == std::vector<int>{2, 2});
  CHECK(tuple[1].cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(tuple[2].cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(tuple[3].cycle_type() == std::vector<int>{2, 2});
}

TEST_CASE("composite winding covers match the path-lifting oracle") {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    CAPTURE(a);
    CAPTURE(b);
    const WindingModel model(a, b);
    const auto tuple = model.branch_tuple();

    // Structure of the oracle tuple itself.
    for (int len : tuple[0].cycle_type()) CHECK(len == b);
    for (int len : tuple[3].cycle_type()) CHECK(len == b);
    const auto inner_shape = [&](const Permutation& p) {
      auto type = p.cycle_type();
      std::sort(type.rbegin(), type.rend());
      CHECK(type.front() == a);
      for (std::size_t i = 1; i < type.size(); ++i) CHECK(type[i] == 1);
    };
    inner_shape(tuple[1]);
    inner_shape(tuple[2]);

    BranchData oracle;
    oracle.degree = a * b;
    oracle.branch = tuple;
    CHECK_NOTHROW(validate(oracle));

    const BranchData built = compose_winding_covers(a, b);
    CHECK_NOTHROW(validate(built));
    CHECK(built.degree == a * b);
    CHECK(built.branch_count() == 4);

    const CoverInvariants via_oracle = cover_invariants(oracle);
    const CoverInvariants via_built = cover_invariants(built);
    CHECK(via_oracle.monodromy_order == via_built.monodromy_order);
    CHECK(via_oracle.chi_normalization == via_built.chi_normalization);
    CHECK(via_oracle.genus_normalization == via_built.genus_normalization);
    CHECK(via_oracle.is_normal == via_built.is_normal);
    CHECK(via_oracle.chi_domain == via_built.chi_domain);
    auto orders_oracle = via_oracle.local_orders;
    auto orders_built = via_built.local_orders;
    std::sort(orders_oracle.begin(), orders_oracle.end());
    std::sort(orders_built.begin(), orders_built.end());
    CHECK(orders_oracle == orders_built);
    CHECK(via_oracle.local_degrees == via_built.local_degrees);
  }
}

TEST_CASE("acceptance values of the 2,2 composite") {
  const CoverInvariants inv = cover_invariants(compose_winding_covers(2, 2));
  CHECK(inv.degree == 4);
  CHECK(inv.branch_count == 4);
  CHECK(inv.monodromy_order == 8);
  CHECK(inv.chi_normalization == 0);
  CHECK(inv.genus_normalization == 1);
  CHECK_FALSE(inv.is_normal);
  CHECK(inv.chi_domain == 2);  // the composite still maps a sphere
}

TEST_CASE("winding degrees below 2 are rejected") {
  CHECK_THROWS_AS(compose_winding_covers(1, 2), ValidationError);
  CHECK_THROWS_AS(compose_winding_covers(2, 0), ValidationError);
}
