// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curve/curve.hpp"

namespace testing {

using cx = std::complex<double>;

inline std::string fixture_path(const std::string& name) { return std::string(TWOMAT_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline twomat::curve::SpectralCurve load(const std::string& name) {
  return twomat::curve::load_curve_json(read_fixture(name));
}

inline double rel(cx a, cx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Generic points away from the branch points of the fixtures (at +-1) and from 0.
inline const std::vector<cx> kPoints{{3.0, 0.0}, {0.0, 4.0}, {-2.0, 1.0}, {0.5, 0.5}, {1.5, -2.0}};

inline std::vector<cx> first(std::size_t n) { return {kPoints.begin(), kPoints.begin() + n}; }

}  // namespace testing
