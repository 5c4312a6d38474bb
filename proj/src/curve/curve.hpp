// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/polynomial.hpp"
#include "algebra/series.hpp"

namespace twomat::curve {

using algebra::cx;
using algebra::Polynomial;
using algebra::RationalFunction;
using algebra::Scalar;

// Parsed curve-spec document.
struct CurveSpec {
  RationalFunction x;
  RationalFunction y;
  std::optional<cx> g_lead;
  std::string label;
};

// Parses the JSON curve-spec format; throws ParseError on malformed input.
CurveSpec parse_curve_spec(const std::string& text);
std::string curve_spec_to_json(const CurveSpec& spec);

struct BranchPoint {
  cx a;
  cx conjugate_seed;
  std::vector<cx> regular_sheet_seeds;
  // Distance scale used by the near-branch-point guard.
  double spacing = 1.0;
};

struct ResidueAtPole {
  bool at_infinity = false;
  cx pole{};
  cx residue{};
};

struct NormalizationReport {
  std::vector<ResidueAtPole> y_dx;  // Res y dx at the poles of x
  std::vector<ResidueAtPole> x_dy;  // Res x dy at the poles of y
  bool y_dx_ok = false;
  bool x_dy_ok = false;
  bool normalized = false;
};

class SpectralCurve {
 public:
  SpectralCurve(CurveSpec spec, std::vector<BranchPoint> branch, int d1, int d2);

  const RationalFunction& x() const noexcept { return spec_.x; }
  const RationalFunction& y() const noexcept { return spec_.y; }
  const RationalFunction& dx() const noexcept { return dx_; }
  const RationalFunction& dy() const noexcept { return dy_; }
  int d1() const noexcept { return d1_; }
  int d2() const noexcept { return d2_; }
  int sheet_count() const noexcept { return d2_ + 1; }
  const std::vector<BranchPoint>& branch() const noexcept { return branch_; }
  cx g_lead() const noexcept { return spec_.g_lead.value_or(cx(1.0)); }
  const std::string& label() const noexcept { return spec_.label; }
  const CurveSpec& spec() const noexcept { return spec_; }

  std::optional<bool> normalization_flag() const noexcept { return normalized_; }
  void set_normalization_flag(bool v) { normalized_ = v; }

  // Index of the branch point within `tol_factor * spacing` of z, or -1.
  int near_branch_point(cx z, double tol_factor = 1e-4) const;

 private:
  CurveSpec spec_;
  RationalFunction dx_;
  RationalFunction dy_;
  std::vector<BranchPoint> branch_;
  int d1_;
  int d2_;
  std::optional<bool> normalized_;
};

// Builds and validates a curve: branch points, simplicity, sheet counts.
SpectralCurve load_curve(const CurveSpec& spec);
SpectralCurve load_curve_json(const std::string& text);

// All preimages of x(z0): z0 first, the other sheets ordered by (re, im) of their value.
std::vector<Scalar> sheets_global(const SpectralCurve& c, const Scalar& z0);

// Local sheet maps at a branch point: w0 = a + t, w1 the conjugate sheet, then the
// regular sheets. Structural zeros (w1(0) = a, x'(w0(0)) = x'(w1(0)) = 0) are exact.
struct SheetSystem {
  int branch_index = 0;
  BranchPoint center;
  int order = 0;
  std::vector<Scalar> sheets;
  std::vector<Scalar> xprime;
  std::vector<Scalar> yval;
};
SheetSystem sheets_local(const SpectralCurve& c, int branch_index, int order);

Scalar bergmann(const SpectralCurve& c, const Scalar& z1, const Scalar& z2);
Scalar third_kind(const SpectralCurve& c, const Scalar& p, const Scalar& q, cx o);

// E_y(x, y(p^i)) = -g * prod_{j != i} (y(p^i) - y(p^j)).
Scalar ey_at(const SpectralCurve& c, const std::vector<Scalar>& yvals, int i);
Scalar ey_at(const SpectralCurve& c, const Scalar& z, int i);

NormalizationReport validate_resolvent_normalization(SpectralCurve& c);

// Reduced-to-dx conversion: divides a reduced value by prod x'(z_i).
Scalar to_dx_normalized(const SpectralCurve& c, const Scalar& reduced, const std::vector<Scalar>& points);

}  // namespace twomat::curve
