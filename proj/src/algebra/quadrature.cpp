// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "algebra/series.hpp"

namespace twomat::algebra {

cx residue_quadrature(const std::function<cx(cx)>& f, cx center, double radius, int n) {
  if (radius <= 0.0 || n < 1) fail(ErrorCode::InvalidArgument, "quadrature needs positive radius and samples");
  cx sum{};
  for (int k = 0; k < n; ++k) {
    const cx e = std::polar(1.0, 2.0 * M_PI * k / n);
    const cx v = f(center + radius * e);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorCode::NonFinite, "non-finite quadrature sample");
    sum += v * e;
  }
  return sum * radius / double(n);
}

}  // namespace twomat::algebra
