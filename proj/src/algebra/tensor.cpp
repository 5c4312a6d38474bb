// SPDX-License-Identifier: Apache-2.0
#include "algebra/tensor.hpp"

#include <algorithm>

namespace twomat::algebra {

namespace {

size_t product(const std::vector<int>& dims) {
  size_t n = 1;
  for (int d : dims) n *= static_cast<size_t>(d);
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<int> labels, std::vector<int> dims)
    : labels_(std::move(labels)), dims_(std::move(dims)), data_(product(dims_)) {
  if (labels_.size() != dims_.size()) fail(ErrorCode::InvalidArgument, "tensor label/dimension mismatch");
  if (!std::is_sorted(labels_.begin(), labels_.end()))
    fail(ErrorCode::InvalidArgument, "tensor labels must be ascending");
}

Tensor Tensor::scalar(const Scalar& s) {
  Tensor t;
  t.data_[0] = s;
  return t;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_exact_zero(); });
}

int Tensor::dim_of(int label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return dims_[i];
  fail(ErrorCode::InvalidArgument, "tensor has no axis " + std::to_string(label));
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const auto& s : data_) m = std::max(m, s.max_abs());
  return m;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (rank() == 0 && other.rank() > 0 && is_zero()) return *this = other;
  if (other.rank() == 0 && rank() > 0 && other.is_zero()) return *this;
  if (other.labels_ != labels_) fail(ErrorCode::InvalidArgument, "adding tensors with different axes");
  if (other.dims_ == dims_) {
    for (size_t i = 0; i < data_.size(); ++i)
      if (!other.data_[i].is_exact_zero()) data_[i] = data_[i] + other.data_[i];
    return *this;
  }
  std::vector<int> dims(dims_.size());
  for (size_t a = 0; a < dims.size(); ++a) dims[a] = std::max(dims_[a], other.dims_[a]);
  auto scatter = [&](const Tensor& src, std::vector<Scalar>& dst) {
    const int r = src.rank();
    std::vector<int> idx(r, 0);
    for (size_t flat = 0; flat < src.data_.size(); ++flat) {
      if (!src.data_[flat].is_exact_zero()) {
        size_t off = 0;
        for (int a = 0; a < r; ++a) off = off * dims[a] + idx[a];
        dst[off] = dst[off] + src.data_[flat];
      }
      for (int a = r - 1; a >= 0; --a) {
        if (++idx[a] < src.dims_[a]) break;
        idx[a] = 0;
      }
    }
  };
  std::vector<Scalar> out(product(dims));
  scatter(*this, out);
  scatter(other, out);
  dims_ = std::move(dims);
  data_ = std::move(out);
  return *this;
}

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor t = *this;
  if (s.is_exact_zero()) {
    for (auto& v : t.data_) v = Scalar();
    return t;
  }
  for (auto& v : t.data_)
    if (!v.is_exact_zero()) v = v * s;
  return t;
}

Tensor Tensor::outer(const Tensor& other) const {
  if (rank() == 0) return other.scaled(value());
  if (other.rank() == 0) return scaled(other.value());
  std::vector<int> labels, dims;
  std::vector<int> from, src_axis;  // from: 0 = this, 1 = other
  size_t i = 0, j = 0;
  while (i < labels_.size() || j < other.labels_.size()) {
    const bool take_this =
        j >= other.labels_.size() || (i < labels_.size() && labels_[i] < other.labels_[j]);
    if (!take_this && i < labels_.size() && labels_[i] == other.labels_[j])
      fail(ErrorCode::InvalidArgument, "outer product of tensors sharing an axis");
    if (take_this) {
      labels.push_back(labels_[i]);
      dims.push_back(dims_[i]);
      from.push_back(0);
      src_axis.push_back(static_cast<int>(i++));
    } else {
      labels.push_back(other.labels_[j]);
      dims.push_back(other.dims_[j]);
      from.push_back(1);
      src_axis.push_back(static_cast<int>(j++));
    }
  }
  auto strides = [](const std::vector<int>& d) {
    std::vector<size_t> s(d.size(), 1);
    for (int a = static_cast<int>(d.size()) - 2; a >= 0; --a) s[a] = s[a + 1] * d[a + 1];
    return s;
  };
  const std::vector<size_t> sa = strides(dims_), sb = strides(other.dims_);
  const int r = static_cast<int>(labels.size());
  std::vector<size_t> step(r);
  for (int a = 0; a < r; ++a) step[a] = from[a] == 0 ? sa[src_axis[a]] : sb[src_axis[a]];
  Tensor out(labels, dims);
  std::vector<int> idx(r, 0);
  size_t ia = 0, ib = 0;
  for (size_t flat = 0; flat < out.data_.size(); ++flat) {
    const Scalar& x = data_[ia];
    const Scalar& y = other.data_[ib];
    if (!x.is_exact_zero() && !y.is_exact_zero()) out.data_[flat] = x * y;
    for (int a = r - 1; a >= 0; --a) {
      size_t& off = from[a] == 0 ? ia : ib;
      if (++idx[a] < dims[a]) {
        off += step[a];
        break;
      }
      off -= step[a] * (dims[a] - 1);
      idx[a] = 0;
    }
  }
  return out;
}

Tensor Tensor::contract(int label, const std::vector<Scalar>& v) const {
  int p = -1;
  for (int a = 0; a < rank(); ++a)
    if (labels_[a] == label) p = a;
  if (p < 0) fail(ErrorCode::InvalidArgument, "contracting a missing axis");
  const int d = dims_[p];
  if (static_cast<int>(v.size()) < d) fail(ErrorCode::InvalidArgument, "basis vector shorter than axis");
  size_t outer = 1, inner = 1;
  for (int a = 0; a < p; ++a) outer *= dims_[a];
  for (int a = p + 1; a < rank(); ++a) inner *= dims_[a];
  std::vector<int> labels = labels_, dims = dims_;
  labels.erase(labels.begin() + p);
  dims.erase(dims.begin() + p);
  Tensor out(labels, dims);
  for (size_t o = 0; o < outer; ++o)
    for (int r = 0; r < d; ++r) {
      const Scalar& w = v[r];
      if (w.is_exact_zero()) continue;
      const size_t base = (o * d + r) * inner;
      for (size_t i = 0; i < inner; ++i) {
        const Scalar& x = data_[base + i];
        if (x.is_exact_zero()) continue;
        Scalar& dst = out.data_[o * inner + i];
        dst = dst + x * w;
      }
    }
  return out;
}

Tensor Tensor::relabeled(const std::vector<int>& labels) const {
  if (labels.size() != labels_.size()) fail(ErrorCode::InvalidArgument, "relabel rank mismatch");
  if (!std::is_sorted(labels.begin(), labels.end())) fail(ErrorCode::InvalidArgument, "relabel must be ascending");
  Tensor t = *this;
  t.labels_ = labels;
  return t;
}

Tensor Tensor::mapped(const std::function<Scalar(const Scalar&)>& f) const {
  Tensor t = *this;
  for (auto& v : t.data_) v = f(v);
  return t;
}

}  // namespace twomat::algebra
