// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

// (1 / 2 pi i) of the contour integral of f over |z - center| = radius, n-point trapezoid.
cx contour_residue(const std::function<cx(cx)>& f, cx center, double radius, int n = 512);

// x = z + 1/z, y = z - 1/z.
struct FixtureA {
  static cx dx(cx z) { return 1.0 - 1.0 / (z * z); }
  static cx dy(cx z) { return 1.0 + 1.0 / (z * z); }
};
// x = z^3 - 3z, y = z.
struct FixtureB {
  static cx dx(cx z) { return 3.0 * z * z - 3.0; }
  static cx dy(cx) { return 1.0; }
};

inline cx bergmann(cx a, cx b) { return 1.0 / ((a - b) * (a - b)); }

// sum over the zeros +-1 of dx of Res B(q, p1) B(q, p2) B(q, p3) / (dx(q) dy(q)).
template <class Curve>
cx rauch(cx p1, cx p2, cx p3) {
  cx total{};
  for (double a : {-1.0, 1.0})
    total += contour_residue(
        [&](cx q) { return bergmann(q, p1) * bergmann(q, p2) * bergmann(q, p3) / (Curve::dx(q) * Curve::dy(q)); }, a,
        0.25);
  return total;
}

// Points in |z| < 2.5 at distance >= 0.3 from +-1, 0, the given avoid list and each other.
std::vector<cx> random_points(std::mt19937& rng, int n, const std::vector<cx>& avoid = {});

double relative(cx a, cx b);
// max |v - v0| / |v0| over the list.
double spread(const std::vector<cx>& v);

}  // namespace oracle
