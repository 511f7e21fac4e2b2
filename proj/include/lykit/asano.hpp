#pragma once

// Asano contraction of a variable pair and the contraction route to the
// coefficient-wise product.  Writing p = A + B z_i + C z_j + D z_i z_j with
// A..D free of z_i, z_j, the contraction keeps A and D on a single merged
// variable and drops the cross terms.  Used as an independent cross-check
// of convolve().

#include <cstdint>
#include <stdexcept>

#include "lykit/multiaffine.hpp"

namespace lykit {

/// Region {z : |z| >= radius}; the only zero-free region shape the
/// contraction machinery here certifies against.
struct DiskComplement {
  double radius;
  explicit DiskComplement(double r) : radius(r) {
    if (!(r > 0)) throw std::invalid_argument("disk complement needs radius > 0");
  }
};

/// Contracts variables i and j (1-based, i != j) into one.  The merged
/// variable sits at position min(i,j); the remaining variables keep their
/// relative order.
inline MultiAffinePoly asano_contract(const MultiAffinePoly& p, int i, int j) {
  const int n = p.n();
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("contraction needs two distinct variables in [n]");
  if (n < 2) throw std::invalid_argument("contraction needs n >= 2");
  const int blo = std::min(i, j) - 1, bhi = std::max(i, j) - 1;
  const std::uint32_t lo_bit = std::uint32_t{1} << blo;
  const std::uint32_t hi_bit = std::uint32_t{1} << bhi;

  MultiAffinePoly out(n - 1);
  const std::uint32_t keep = ~(lo_bit | hi_bit);
  for (std::uint32_t m = 0; m < p.table_size(); ++m) {
    if (m & ~keep) continue;  // enumerate masks with both pair bits clear
    // Drop the bit slot of the larger index; the smaller slot hosts the
    // merged variable.
    const std::uint32_t base =
        static_cast<std::uint32_t>((m & (hi_bit - 1)) | ((m >> (bhi + 1)) << bhi));
    out[base] = p[m];                              // A-part
    out[base | lo_bit] = p[m | lo_bit | hi_bit];   // D-part
  }
  return out;
}

/// Builds the 2n-variable product p1(z_11..z_1n) * p2(z_21..z_2n) and
/// contracts the pairs (z_1k, z_2k) one at a time.  Must agree with
/// convolve(p1, p2) coefficient by coefficient.
inline MultiAffinePoly convolve_by_contraction(const MultiAffinePoly& p1,
                                               const MultiAffinePoly& p2) {
  if (p1.n() != p2.n()) throw std::invalid_argument("convolution requires equal variable counts");
  const int n = p1.n();
  MultiAffinePoly acc = tensor(p1, p2);
  // After k-1 contractions the k-th variable of p2 sits at position n+1.
  for (int k = 1; k <= n; ++k) acc = asano_contract(acc, k, n + 1);
  return acc;
}

}  // namespace lykit
