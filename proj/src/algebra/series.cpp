// SPDX-License-Identifier: Apache-2.0
#include "algebra/series.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace twomat::algebra {

namespace {

constexpr int kUnbounded = INT_MAX / 4;

Scalar make(int level, cx base, int lowest, std::vector<Scalar> c) {
  return Scalar::from_series(level, LaurentSeries(base, lowest, std::move(c)));
}

void check_centers(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.base != b.base) fail(ErrorCode::CenterMismatch, "series expanded at different centers");
}

// Adds a lower-level scalar c to the constant term of the series h (level L).
Scalar add_constant(const Scalar& h, const Scalar& c) {
  const LaurentSeries& s = h.series();
  if (c.is_exact_zero() || s.top() < 0) return h;
  if (s.lowest > 0) {
    std::vector<Scalar> out(static_cast<size_t>(s.top() + 1));
    out[0] = c;
    for (int e = s.lowest; e <= s.top(); ++e) out[e] = s.coeffs[e - s.lowest];
    return make(h.level(), s.base, 0, std::move(out));
  }
  std::vector<Scalar> out = s.coeffs;
  out[-s.lowest] = out[-s.lowest] + c;
  return make(h.level(), s.base, s.lowest, std::move(out));
}

Scalar scale(const Scalar& h, const Scalar& c) {
  const LaurentSeries& s = h.series();
  std::vector<Scalar> out;
  out.reserve(s.coeffs.size());
  for (const auto& v : s.coeffs) out.push_back(v * c);
  return make(h.level(), s.base, s.lowest, std::move(out));
}

Scalar add_same(const Scalar& a, const Scalar& b) {
  const LaurentSeries& x = a.series();
  const LaurentSeries& y = b.series();
  check_centers(x, y);
  const int lo = std::min(x.lowest, y.lowest);
  const int hi = std::min(x.top(), y.top());
  std::vector<Scalar> out;
  if (hi >= lo) {
    out.resize(static_cast<size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) {
      const bool ix = e >= x.lowest, iy = e >= y.lowest;
      if (ix && iy)
        out[e - lo] = x.coeffs[e - x.lowest] + y.coeffs[e - y.lowest];
      else if (ix)
        out[e - lo] = x.coeffs[e - x.lowest];
      else
        out[e - lo] = y.coeffs[e - y.lowest];
    }
  }
  return make(a.level(), x.base, lo, std::move(out));
}

Scalar mul_same(const Scalar& a, const Scalar& b) {
  const LaurentSeries& x = a.series();
  const LaurentSeries& y = b.series();
  check_centers(x, y);
  const int n = std::min(x.order(), y.order());
  std::vector<Scalar> out(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const Scalar& xi = x.coeffs[i];
    if (xi.is_exact_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      const Scalar& yj = y.coeffs[j];
      if (yj.is_exact_zero()) continue;
      out[i + j] = out[i + j] + xi * yj;
    }
  }
  return make(a.level(), x.base, x.lowest + y.lowest, std::move(out));
}

}  // namespace

Scalar LaurentSeries::at(int e) const {
  if (e < lowest) return Scalar();
  if (e > top()) fail(ErrorCode::WindowMiss, "exponent " + std::to_string(e) + " beyond validity " +
                                                 std::to_string(top()));
  return coeffs[e - lowest];
}

Scalar Scalar::from_series(int level, LaurentSeries s) {
  if (level < 1) fail(ErrorCode::InvalidArgument, "series scalar needs level >= 1");
  Scalar r;
  r.level_ = level;
  r.s_ = std::make_shared<const LaurentSeries>(std::move(s));
  return r;
}

Scalar Scalar::variable(int level, const Scalar& center, int top, cx base) {
  std::vector<Scalar> c(static_cast<size_t>(std::max(top, 0) + 1));
  c[0] = center;
  if (top >= 1) c[1] = Scalar(1.0);
  return make(level, base, 0, std::move(c));
}

cx Scalar::number() const {
  if (level_ != 0) fail(ErrorCode::InvalidArgument, "scalar is a series, not a number");
  return value_;
}

const LaurentSeries& Scalar::series() const {
  if (level_ == 0) fail(ErrorCode::InvalidArgument, "scalar is a number, not a series");
  return *s_;
}

bool Scalar::vanishes() const {
  if (level_ == 0) return value_ == cx{};
  return std::all_of(s_->coeffs.begin(), s_->coeffs.end(), [](const Scalar& c) { return c.vanishes(); });
}

double Scalar::max_abs() const {
  if (level_ == 0) return std::abs(value_);
  double m = 0.0;
  for (const auto& c : s_->coeffs) m = std::max(m, c.max_abs());
  return m;
}

cx Scalar::constant_number() const {
  if (level_ == 0) return value_;
  if (!s_->known(0)) fail(ErrorCode::WindowMiss, "constant term outside validity");
  return s_->at(0).constant_number();
}

int Scalar::top() const { return level_ == 0 ? kUnbounded : s_->top(); }

Scalar Scalar::coeff(int e) const {
  if (level_ == 0) fail(ErrorCode::InvalidArgument, "coefficient of a number");
  return s_->at(e);
}

Scalar Scalar::coeff_at(int level, int e) const {
  if (level_ < level) return e == 0 ? *this : Scalar();
  if (level_ == level) return coeff(e);
  fail(ErrorCode::InvalidArgument, "coefficient requested below the top level");
}

Scalar Scalar::operator-() const {
  if (level_ == 0) return Scalar(-value_);
  return scale(*this, Scalar(-1.0));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.level_ == 0 && b.level_ == 0) return Scalar(a.value_ + b.value_);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  if (a.level_ > b.level_) return add_constant(a, b);
  if (b.level_ > a.level_) return add_constant(b, a);
  return add_same(a, b);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.level_ == 0 && b.level_ == 0) return Scalar(a.value_ * b.value_);
  if (a.is_exact_zero() || b.is_exact_zero()) return Scalar();
  if (a.level_ > b.level_) return scale(a, b);
  if (b.level_ > a.level_) return scale(b, a);
  return mul_same(a, b);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.level_ == 0) {
    if (b.value_ == cx{}) fail(ErrorCode::DivisionByZeroSeries, "division by exact zero");
    if (a.level_ == 0) return Scalar(a.value_ / b.value_);
    return scale(a, Scalar(1.0 / b.value_));
  }
  if (a.level_ > b.level_) {
    // b is a constant in a's variable.
    const Scalar ib = b.inverse();
    return scale(a, ib);
  }
  return a * b.inverse();
}

Scalar Scalar::inverse() const {
  if (level_ == 0) {
    if (value_ == cx{}) fail(ErrorCode::DivisionByZeroSeries, "inverse of exact zero");
    return Scalar(1.0 / value_);
  }
  const LaurentSeries& s = *s_;
  int v = 0;
  while (v < s.order() && s.coeffs[v].vanishes()) ++v;
  if (v == s.order()) fail(ErrorCode::DivisionByZeroSeries, "all known coefficients vanish");
  const int n = s.order() - v;
  const Scalar inv0 = s.coeffs[v].inverse();
  std::vector<Scalar> c(static_cast<size_t>(n));
  c[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Scalar acc;
    for (int i = 1; i <= k; ++i) {
      const Scalar& u = s.coeffs[v + i];
      if (u.is_exact_zero()) continue;
      acc = acc + u * c[k - i];
    }
    c[k] = -(acc * inv0);
  }
  return make(level_, s.base, -(s.lowest + v), std::move(c));
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1.0), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Scalar Scalar::derivative() const {
  if (level_ == 0) return Scalar();
  const LaurentSeries& s = *s_;
  std::vector<Scalar> c;
  c.reserve(s.coeffs.size());
  for (int e = s.lowest; e <= s.top(); ++e) c.push_back(s.coeffs[e - s.lowest] * Scalar(double(e)));
  return make(level_, s.base, s.lowest - 1, std::move(c));
}

Scalar compose(const Scalar& f, const Scalar& g) {
  if (f.is_number()) return f;
  if (g.level() != f.level()) fail(ErrorCode::InvalidArgument, "compose needs operands of one level");
  const LaurentSeries& fs = f.series();
  const LaurentSeries& gs = g.series();
  int v = 0;
  while (v < gs.order() && gs.coeffs[v].vanishes() && gs.lowest + v <= 0) ++v;
  const int val = gs.lowest + v;
  if (val <= 0) fail(ErrorCode::ComposeValuation, "inner series must have positive valuation");
  Scalar acc;
  const Scalar ginv = fs.lowest < 0 ? g.inverse() : Scalar();
  for (int e = fs.lowest; e <= fs.top(); ++e) {
    const Scalar& c = fs.coeffs[e - fs.lowest];
    if (c.is_exact_zero()) continue;
    acc = acc + c * (e >= 0 ? g.pow(e) : ginv.pow(-e));
  }
  // The unknown tail O(u^{top+1}) maps to O(t^{val (top+1)}).
  const int limit = val * (fs.top() + 1) - 1;
  if (acc.is_number()) {
    std::vector<Scalar> c(static_cast<size_t>(std::max(limit, 0) + 1));
    c[0] = acc;
    return make(f.level(), gs.base, 0, std::move(c));
  }
  const LaurentSeries& as = acc.series();
  if (as.top() <= limit) return acc;
  std::vector<Scalar> c(as.coeffs.begin(), as.coeffs.begin() + std::max(0, limit - as.lowest + 1));
  return make(f.level(), as.base, as.lowest, std::move(c));
}

LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op, int level) {
  const Scalar x = Scalar::from_series(level, a);
  const Scalar y = Scalar::from_series(level, b);
  if (a.base != b.base) fail(ErrorCode::CenterMismatch, "series expanded at different centers");
  Scalar r;
  switch (op) {
    case SeriesOp::Add: r = x + y; break;
    case SeriesOp::Sub: r = x - y; break;
    case SeriesOp::Mul: r = x * y; break;
    case SeriesOp::Div: r = x / y; break;
    case SeriesOp::Compose: r = compose(x, y); break;
  }
  if (r.is_number()) return LaurentSeries(a.base, 0, {r});
  return r.series();
}

Scalar residue(const Scalar& s) { return s.residue(); }

}  // namespace twomat::algebra
