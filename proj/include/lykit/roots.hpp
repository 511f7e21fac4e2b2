#pragma once

// Complex univariate root finding via balanced companion-matrix
// eigenvalues (Eigen) with a few Newton polish steps.  Good to roughly
// 1e-10 relative accuracy at the degrees used here (<= ~20).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lykit {

using cplx = std::complex<double>;

/// Horner evaluation; coeffs[k] multiplies z^k.
inline cplx eval_poly(const std::vector<cplx>& coeffs, cplx z) {
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline cplx eval_poly_deriv(const std::vector<cplx>& coeffs, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

/// Index of the highest coefficient above rel_tol * max|c|; -1 if none.
inline int effective_degree(const std::vector<cplx>& coeffs, double rel_tol = 1e-14) {
  double top = 0;
  for (const cplx& c : coeffs) top = std::max(top, std::abs(c));
  if (top == 0) return -1;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (std::abs(coeffs[static_cast<std::size_t>(k)]) > rel_tol * top) return k;
  return -1;
}

/// All finite roots (effective degree many).  Throws on the zero polynomial.
inline std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  const int deg = effective_degree(coeffs);
  if (deg < 0) throw std::invalid_argument("root finding needs a nonzero polynomial");
  if (deg == 0) return {};
  std::vector<cplx> c(coeffs.begin(), coeffs.begin() + deg + 1);

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
  for (int r = 0; r < deg; ++r) comp(r, deg - 1) = -c[static_cast<std::size_t>(r)] / c[static_cast<std::size_t>(deg)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion eigensolver failed");

  std::vector<cplx> roots(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k) {
    cplx z = solver.eigenvalues()(k);
    for (int it = 0; it < 3; ++it) {  // Newton polish
      const cplx d = eval_poly_deriv(c, z);
      if (std::abs(d) == 0) break;
      const cplx step = eval_poly(c, z) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
      z -= step;
    }
    roots[static_cast<std::size_t>(k)] = z;
  }
  return roots;
}

inline double min_root_modulus(const std::vector<cplx>& roots) {
  double lo = std::numeric_limits<double>::infinity();
  for (const cplx& r : roots) lo = std::min(lo, std::abs(r));
  return lo;
}

}  // namespace lykit
