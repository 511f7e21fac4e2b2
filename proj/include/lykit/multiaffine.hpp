#pragma once

// Multiaffine complex polynomials: dense coefficient tables indexed by
// subsets of the variable set, together with the basic algebra on them
// (evaluation, conjugate reflection, coefficient-wise product, variable
// scaling, tensor product, self-dual lift and its inverse slice).

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lykit {

using cplx = std::complex<double>;

/// Point in C^n; entries[i] is the value of variable i+1.
using ComplexPoint = std::vector<cplx>;

/// Hard cap on the variable count; tables are dense with 2^n entries.
inline int& max_variables() {
  static int cap = 20;
  return cap;
}

/// Polynomial of degree <= 1 in each of n variables.  Coefficient E_X is
/// stored at the bitmask index of X (bit i-1 set iff variable i is in X).
class MultiAffinePoly {
 public:
  explicit MultiAffinePoly(int n) : n_(check_n(n)), coeffs_(std::size_t{1} << n) {}

  MultiAffinePoly(int n, std::vector<cplx> coeffs) : n_(check_n(n)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t{1} << n_))
      throw std::invalid_argument("coefficient table must have exactly 2^n entries");
  }

  /// Builds a polynomial from a sparse subset->coefficient map; absent
  /// subsets are zero.  Keys must be subsets of [n].
  static MultiAffinePoly from_map(int n, const std::map<std::uint32_t, cplx>& coeffs) {
    MultiAffinePoly p(n);
    const std::uint32_t full = p.full_mask();
    for (const auto& [mask, value] : coeffs) {
      if (mask & ~full)
        throw std::invalid_argument("subset key " + std::to_string(mask) +
                                    " mentions a variable outside [n]");
      p.coeffs_[mask] = value;
    }
    return p;
  }

  int n() const { return n_; }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::size_t{1} << n_) - 1); }
  std::size_t table_size() const { return coeffs_.size(); }

  const cplx& operator[](std::uint32_t mask) const { return coeffs_[mask]; }
  cplx& operator[](std::uint32_t mask) { return coeffs_[mask]; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
  }

  /// Largest coefficient modulus; 0 for the zero polynomial.
  double scale() const {
    double s = 0;
    for (const cplx& c : coeffs_) s = std::max(s, std::abs(c));
    return s;
  }

  bool is_constant(double tol = 0.0) const {
    for (std::size_t m = 1; m < coeffs_.size(); ++m)
      if (std::abs(coeffs_[m]) > tol) return false;
    return true;
  }

 private:
  static int check_n(int n) {
    if (n < 1) throw std::invalid_argument("variable count must be >= 1");
    if (n > max_variables()) throw std::invalid_argument("variable count exceeds cap");
    return n;
  }

  int n_;
  std::vector<cplx> coeffs_;
};

namespace detail {

// Horner-style evaluation splitting on the last remaining variable.
inline cplx eval_rec(std::span<const cplx> table, std::span<const cplx> z) {
  if (z.empty()) return table[0];
  const std::size_t half = table.size() / 2;
  const auto zrest = z.first(z.size() - 1);
  return eval_rec(table.first(half), zrest) + z.back() * eval_rec(table.subspan(half), zrest);
}

}  // namespace detail

inline cplx eval(const MultiAffinePoly& p, const ComplexPoint& z) {
  if (static_cast<int>(z.size()) != p.n())
    throw std::invalid_argument("point dimension does not match variable count");
  return detail::eval_rec(p.coeffs(), z);
}

/// Conjugate-reflect involution: coefficient of X becomes conj(E_{[n]\X}).
inline MultiAffinePoly dagger(const MultiAffinePoly& p) {
  MultiAffinePoly out(p.n());
  const std::uint32_t full = p.full_mask();
  for (std::uint32_t m = 0; m <= full; ++m) out[m] = std::conj(p[full ^ m]);
  return out;
}

/// Coefficient-wise (Hadamard) product; the all-ones table is the identity.
inline MultiAffinePoly convolve(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("convolution requires equal variable counts");
  MultiAffinePoly out(a.n());
  for (std::size_t m = 0; m < out.table_size(); ++m)
    out[static_cast<std::uint32_t>(m)] = a[static_cast<std::uint32_t>(m)] * b[static_cast<std::uint32_t>(m)];
  return out;
}

/// (scale_vars(p, t))(z) == p(t*z); coefficient of X picks up t^|X|.
inline MultiAffinePoly scale_vars(const MultiAffinePoly& p, cplx t) {
  if (t == cplx{}) throw std::invalid_argument("scale factor must be nonzero");
  MultiAffinePoly out(p.n());
  std::vector<cplx> powers(static_cast<std::size_t>(p.n()) + 1);
  powers[0] = 1.0;
  for (int k = 1; k <= p.n(); ++k) powers[k] = powers[k - 1] * t;
  for (std::uint32_t m = 0; m < out.table_size(); ++m)
    out[m] = p[m] * powers[static_cast<std::size_t>(std::popcount(m))];
  return out;
}

/// Product of a over variables 1..k with b over variables k+1..k+m.
inline MultiAffinePoly tensor(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  MultiAffinePoly out(a.n() + b.n());
  for (std::uint32_t mb = 0; mb < b.table_size(); ++mb)
    for (std::uint32_t ma = 0; ma < a.table_size(); ++ma)
      out[(mb << a.n()) | ma] = a[ma] * b[mb];
  return out;
}

/// Self-dual lift: Psi(z, w) = w * dagger(p)(z) + p(z) over n+1 variables.
inline MultiAffinePoly self_dual_lift(const MultiAffinePoly& p) {
  MultiAffinePoly out(p.n() + 1);
  const std::uint32_t full = p.full_mask();
  const std::uint32_t top = std::uint32_t{1} << p.n();
  for (std::uint32_t m = 0; m <= full; ++m) {
    out[m] = p[m];
    out[top | m] = std::conj(p[full ^ m]);
  }
  return out;
}

/// Splits q = first + z_n * second on its last variable; both parts live
/// in one variable fewer.
inline std::pair<MultiAffinePoly, MultiAffinePoly> split_last(const MultiAffinePoly& q) {
  if (q.n() < 2)
    throw std::invalid_argument("split needs at least two variables");
  MultiAffinePoly a(q.n() - 1), b(q.n() - 1);
  const std::uint32_t top = std::uint32_t{1} << (q.n() - 1);
  for (std::uint32_t m = 0; m < top; ++m) {
    a[m] = q[m];
    b[m] = q[top | m];
  }
  return {a, b};
}

/// Max deviation |E_X - conj(E_{[n]\X})| over all subsets.
inline double self_dual_defect(const MultiAffinePoly& p) {
  const std::uint32_t full = p.full_mask();
  double worst = 0;
  for (std::uint32_t m = 0; m <= full; ++m)
    worst = std::max(worst, std::abs(p[m] - std::conj(p[full ^ m])));
  return worst;
}

inline bool is_self_dual(const MultiAffinePoly& p, double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be >= 0");
  return self_dual_defect(p) <= tol;
}

inline MultiAffinePoly operator*(cplx s, const MultiAffinePoly& p) {
  MultiAffinePoly out(p.n());
  for (std::uint32_t m = 0; m < p.table_size(); ++m) out[m] = s * p[m];
  return out;
}

inline MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sum requires equal variable counts");
  MultiAffinePoly out(a.n());
  for (std::uint32_t m = 0; m < a.table_size(); ++m) out[m] = a[m] + b[m];
  return out;
}

inline double max_coeff_distance(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("distance requires equal variable counts");
  double worst = 0;
  for (std::uint32_t m = 0; m < a.table_size(); ++m)
    worst = std::max(worst, std::abs(a[m] - b[m]));
  return worst;
}

}  // namespace lykit
