// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "algebra/series.hpp"

namespace twomat::algebra {

// Dense tensor of tower scalars. Each axis carries an integer label; labels are kept in
// ascending order and data is row-major in that order. Adding tensors whose axes have
// different extents zero-pads the shorter axis; a zero scalar tensor is the additive
// identity for tensors of any shape.
class Tensor {
 public:
  Tensor() : data_(1) {}
  Tensor(std::vector<int> labels, std::vector<int> dims);
  static Tensor scalar(const Scalar& s);

  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  size_t size() const noexcept { return data_.size(); }
  Scalar& operator[](size_t i) { return data_[i]; }
  const Scalar& operator[](size_t i) const { return data_[i]; }
  const Scalar& value() const { return data_.at(0); }
  bool is_zero() const;
  int dim_of(int label) const;
  double max_abs() const;

  Tensor& operator+=(const Tensor& other);
  Tensor scaled(const Scalar& s) const;
  Tensor outer(const Tensor& other) const;
  // Sums the axis `label` against v (v must cover the axis extent).
  Tensor contract(int label, const std::vector<Scalar>& v) const;
  // Renames axes; the new labels must be ascending in the same order.
  Tensor relabeled(const std::vector<int>& labels) const;
  Tensor mapped(const std::function<Scalar(const Scalar&)>& f) const;

 private:
  std::vector<int> labels_;
  std::vector<int> dims_;
  std::vector<Scalar> data_;
};

}  // namespace twomat::algebra
