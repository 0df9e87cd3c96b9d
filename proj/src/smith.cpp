#include "monodromy/smith.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

std::atomic<long long> g_decompositions{0};
std::atomic<long long> g_verified{0};

// U * A computed column by column through the nonzero entries of A; boundary
// matrices are very sparse, so this keeps verification cheap on the left.
// 128-bit accumulators give headroom over the 64-bit entries.
std::vector<__int128> multiply_dense_sparse_128(const IntMatrix& u, const IntMatrix& a) {
  std::vector<__int128> result(static_cast<std::size_t>(u.rows()) * a.cols(), 0);
  for (int j = 0; j < a.cols(); ++j) {
    for (int k = 0; k < a.rows(); ++k) {
      const long long a_kj = a.at(k, j);
      if (a_kj == 0) continue;
      for (int r = 0; r < u.rows(); ++r) {
        const long long u_rk = u.at(r, k);
        if (u_rk == 0) continue;
        __int128 product, sum;
        if (__builtin_mul_overflow(static_cast<__int128>(u_rk), static_cast<__int128>(a_kj),
                                   &product) ||
            __builtin_add_overflow(result[static_cast<std::size_t>(r) * a.cols() + j], product,
                                   &sum))
          throw InternalError("integer overflow while re-multiplying a Smith decomposition");
        result[static_cast<std::size_t>(r) * a.cols() + j] = sum;
      }
    }
  }
  return result;
}

// (U*A) * V compared against D entry by entry without materializing the
// product. Uses a plain 64-bit inner loop when every operand is small
// enough for that to be provably exact.
void check_product_equals(const std::vector<__int128>& ua, int rows, int inner,
                          const IntMatrix& v, const IntMatrix& d) {
  __int128 max_ua = 0, max_v = 0;
  for (const __int128& x : ua) max_ua = std::max(max_ua, x < 0 ? -x : x);
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) {
      const __int128 x = v.at(i, j) < 0 ? -static_cast<__int128>(v.at(i, j)) : v.at(i, j);
      max_v = std::max(max_v, x);
    }
  const bool fits_64 = max_ua > 0 && max_v > 0
                           ? max_ua <= (static_cast<__int128>(1) << 62) / (max_v * inner)
                           : true;

  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < v.cols(); ++j) {
      __int128 sum = 0;
      if (fits_64) {
        long long fast = 0;
        for (int k = 0; k < inner; ++k)
          fast += static_cast<long long>(ua[static_cast<std::size_t>(i) * inner + k]) *
                  v.at(k, j);
        sum = fast;
      } else {
        for (int k = 0; k < inner; ++k) {
          __int128 product, next;
          if (__builtin_mul_overflow(ua[static_cast<std::size_t>(i) * inner + k],
                                     static_cast<__int128>(v.at(k, j)), &product) ||
              __builtin_add_overflow(sum, product, &next))
            throw InternalError("integer overflow while re-multiplying a Smith decomposition");
          sum = next;
        }
      }
      if (sum != static_cast<__int128>(d.at(i, j)))
        throw InternalError("U*A*V does not reproduce the Smith form");
    }
}

// Determinant parity over GF(2) via packed Gaussian elimination. A
// unimodular integer matrix must have odd determinant.
bool det_is_odd(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) return false;
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(words),
                                  0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) % 2 != 0)
        bits[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j / 64)] ^=
            (std::uint64_t{1} << (j % 64));

  for (int col = 0; col < n; ++col) {
    const std::size_t w = static_cast<std::size_t>(col / 64);
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (bits[static_cast<std::size_t>(r) * words + w] & mask) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int k = 0; k < words; ++k)
        std::swap(bits[static_cast<std::size_t>(pivot) * words + k],
                  bits[static_cast<std::size_t>(col) * words + k]);
    for (int r = col + 1; r < n; ++r)
      if (bits[static_cast<std::size_t>(r) * words + w] & mask)
        for (int k = 0; k < words; ++k)
          bits[static_cast<std::size_t>(r) * words + k] ^=
              bits[static_cast<std::size_t>(col) * words + k];
  }
  return true;
}

constexpr long long kDetPrime = 1'000'000'007LL;

long long pow_mod(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Determinant modulo a large prime; used as an independent unimodularity
// witness on matrices small enough for the cubic cost to stay negligible.
long long det_mod_prime(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<long long> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long v = m.at(i, j) % kDetPrime;
      if (v < 0) v += kDetPrime;
      a[static_cast<std::size_t>(i) * n + j] = v;
    }
  long long det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<std::size_t>(r) * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = col; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      det = kDetPrime - det;
    }
    const long long p = a[static_cast<std::size_t>(col) * n + col];
    det = det * p % kDetPrime;
    const long long p_inv = pow_mod(p, kDetPrime - 2, kDetPrime);
    for (int r = col + 1; r < n; ++r) {
      const long long f = a[static_cast<std::size_t>(r) * n + col];
      if (f == 0) continue;
      const long long scale = f * p_inv % kDetPrime;
      for (int j = col; j < n; ++j) {
        long long v = a[static_cast<std::size_t>(r) * n + j] -
                      scale * a[static_cast<std::size_t>(col) * n + j] % kDetPrime;
        if (v < 0) v += kDetPrime;
        a[static_cast<std::size_t>(r) * n + j] = v;
      }
    }
  }
  return det % kDetPrime;
}

}  // namespace

std::vector<long long> SmithDecomposition::torsion() const {
  std::vector<long long> result;
  for (long long d : diagonal)
    if (d > 1) result.push_back(d);
  return result;
}

namespace {

// Elimination workspace in 128-bit arithmetic: intermediate entries can
// far exceed the final Smith data. Operations stay overflow checked and
// the result is narrowed back to 64 bits at the end.
struct Mat128 {
  int rows = 0, cols = 0;
  std::vector<__int128> a;

  Mat128(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Mat128 from(const IntMatrix& m) {
    Mat128 out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
  }
  static Mat128 identity(int n) {
    Mat128 out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
  }
  __int128& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  __int128 at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  void add_row_multiple(int dst, int src, __int128 factor) {
    for (int c = 0; c < cols; ++c) {
      __int128 product, sum;
      if (__builtin_mul_overflow(factor, at(src, c), &product) ||
          __builtin_add_overflow(at(dst, c), product, &sum))
        throw InternalError("integer overflow in Smith elimination");
      at(dst, c) = sum;
    }
  }
  void add_col_multiple(int dst, int src, __int128 factor) {
    for (int r = 0; r < rows; ++r) {
      __int128 product, sum;
      if (__builtin_mul_overflow(factor, at(r, src), &product) ||
          __builtin_add_overflow(at(r, dst), product, &sum))
        throw InternalError("integer overflow in Smith elimination");
      at(r, dst) = sum;
    }
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }

  IntMatrix narrowed() const {
    IntMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const __int128 v = at(i, j);
        if (v > INT64_MAX || v < INT64_MIN)
          throw InternalError("Smith decomposition entry exceeds 64-bit range");
        out.at(i, j) = static_cast<long long>(v);
      }
    return out;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  Mat128 d = Mat128::from(a);
  Mat128 u = Mat128::identity(m);
  Mat128 v = Mat128::identity(n);
  SmithDecomposition s;

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    bool submatrix_nonzero = true;
    while (true) {
      // Minimal nonzero absolute value keeps coefficient growth tame.
      int pi = -1, pj = -1;
      __int128 best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          __int128 value = d.at(i, j);
          if (value == 0) continue;
          if (value < 0) value = -value;
          if (pi < 0 || value < best) {
            best = value;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        submatrix_nonzero = false;
        break;
      }
      if (pi != t) {
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.det_sign_u = -s.det_sign_u;
      }
      if (pj != t) {
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        s.det_sign_v = -s.det_sign_v;
      }

      bool remainder_left = false;
      const __int128 pivot = d.at(t, t);
      for (int i = t + 1; i < m; ++i) {
        const __int128 q = d.at(i, t) / pivot;
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (d.at(i, t) != 0) remainder_left = true;
      }
      for (int j = t + 1; j < n; ++j) {
        const __int128 q = d.at(t, j) / pivot;
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (d.at(t, j) != 0) remainder_left = true;
      }
      if (remainder_left) continue;

      // Pivot must divide the rest of the submatrix for the divisibility
      // chain; folding an offending row back in shrinks the pivot.
      int bad_row = -1;
      for (int i = t + 1; i < m && bad_row < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (d.at(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      d.add_row_multiple(t, bad_row, 1);
      u.add_row_multiple(t, bad_row, 1);
    }
    if (!submatrix_nonzero) break;
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
      s.det_sign_u = -s.det_sign_u;
    }
  }

  s.d = d.narrowed();
  s.u = u.narrowed();
  s.v = v.narrowed();
  for (int t = 0; t < steps; ++t)
    if (s.d.at(t, t) != 0) s.diagonal.push_back(s.d.at(t, t));

  ++g_decompositions;
  verify_smith(a, s);
  ++g_verified;
  return s;
}

void verify_smith(const IntMatrix& a, const SmithDecomposition& s) {
  if (s.u.rows() != a.rows() || s.u.cols() != a.rows() || s.v.rows() != a.cols() ||
      s.v.cols() != a.cols() || s.d.rows() != a.rows() || s.d.cols() != a.cols())
    throw InternalError("Smith decomposition has wrong shapes");

  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j) {
      if (i != j && s.d.at(i, j) != 0) throw InternalError("Smith form is not diagonal");
      if (i == j && s.d.at(i, j) < 0) throw InternalError("Smith diagonal must be non-negative");
    }
  const int steps = std::min(s.d.rows(), s.d.cols());
  bool seen_zero = false;
  for (int t = 0; t < steps; ++t) {
    const long long dt = s.d.at(t, t);
    if (dt == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw InternalError("Smith diagonal has a gap");
    if (t + 1 < steps && s.d.at(t + 1, t + 1) != 0 && s.d.at(t + 1, t + 1) % dt != 0)
      throw InternalError("Smith diagonal entries do not form a divisibility chain");
  }
  std::vector<long long> expected_diagonal;
  for (int t = 0; t < steps; ++t)
    if (s.d.at(t, t) != 0) expected_diagonal.push_back(s.d.at(t, t));
  if (expected_diagonal != s.diagonal)
    throw InternalError("Smith diagonal bookkeeping is inconsistent");

  const std::vector<__int128> ua = multiply_dense_sparse_128(s.u, a);
  check_product_equals(ua, a.rows(), a.cols(), s.v, s.d);

  if (s.det_sign_u != 1 && s.det_sign_u != -1)
    throw InternalError("tracked determinant of U is not a unit");
  if (s.det_sign_v != 1 && s.det_sign_v != -1)
    throw InternalError("tracked determinant of V is not a unit");
  if (!det_is_odd(s.u)) throw InternalError("U is not unimodular (even determinant)");
  if (!det_is_odd(s.v)) throw InternalError("V is not unimodular (even determinant)");

  // Independent modular determinant on desk-sized matrices.
  if (s.u.rows() <= 600) {
    const long long expect_u =
        s.det_sign_u == 1 ? 1 : kDetPrime - 1;
    if (det_mod_prime(s.u) != expect_u)
      throw InternalError("modular determinant of U disagrees with the tracked sign");
  }
  if (s.v.rows() <= 600) {
    const long long expect_v =
        s.det_sign_v == 1 ? 1 : kDetPrime - 1;
    if (det_mod_prime(s.v) != expect_v)
      throw InternalError("modular determinant of V disagrees with the tracked sign");
  }
}

SmithVerificationStats smith_verification_stats() {
  return SmithVerificationStats{g_decompositions.load(), g_verified.load()};
}

void reset_smith_verification_stats() {
  g_decompositions.store(0);
  g_verified.store(0);
}

}  // namespace monodromy
