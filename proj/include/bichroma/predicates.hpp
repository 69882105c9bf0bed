#pragma once

// Exact orientation sign for double coordinates.
//
// A floating-point filter answers most queries; when the rounded determinant
// is too close to zero the determinant is re-evaluated exactly as a
// nonoverlapping floating-point expansion built from error-free products and
// sums. No input can make the returned sign disagree with the real sign.

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace bichroma::detail {

struct TwoTerm {
  double hi;
  double lo;
};

inline TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

inline TwoTerm two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Adds b to the nonoverlapping expansion e[0..len) (increasing magnitude);
// writes len + 1 components into out.
inline std::size_t grow_expansion(const double* e, std::size_t len, double b, double* out) {
  double q = b;
  for (std::size_t i = 0; i < len; ++i) {
    const TwoTerm t = two_sum(q, e[i]);
    out[i] = t.lo;
    q = t.hi;
  }
  out[len] = q;
  return len + 1;
}

inline int expansion_sign(const double* e, std::size_t len) {
  for (std::size_t i = len; i-- > 0;) {
    if (e[i] > 0) return 1;
    if (e[i] < 0) return -1;
  }
  return 0;
}

// Sign of (q - p) x (r - p) evaluated without rounding error.
inline int orient_exact(double px, double py, double qx, double qy, double rx, double ry) {
  // (qx-px)(ry-py) - (qy-py)(rx-px) with the px*py terms cancelled.
  const std::array<TwoTerm, 6> products = {
      two_product(qx, ry),  two_product(-qx, py), two_product(-px, ry),
      two_product(-qy, rx), two_product(qy, px),  two_product(py, rx),
  };
  std::array<double, 16> buf_a{};
  std::array<double, 16> buf_b{};
  double* cur = buf_a.data();
  double* next = buf_b.data();
  std::size_t len = 0;
  for (const TwoTerm& t : products) {
    len = grow_expansion(cur, len, t.lo, next);
    std::swap(cur, next);
    len = grow_expansion(cur, len, t.hi, next);
    std::swap(cur, next);
  }
  return expansion_sign(cur, len);
}

inline int orient_sign(double px, double py, double qx, double qy, double rx, double ry) {
  const double left = (qx - px) * (ry - py);
  const double right = (qy - py) * (rx - px);
  const double det = left - right;
  // Shewchuk's first-stage bound for orient2d.
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
  constexpr double bound_factor = (3.0 + 16.0 * eps) * eps;
  const double detsum = std::fabs(left) + std::fabs(right);
  if (std::fabs(det) > bound_factor * detsum) return det > 0 ? 1 : -1;
  return orient_exact(px, py, qx, qy, rx, ry);
}

}  // namespace bichroma::detail
