#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "tles/core/error.hpp"

namespace tles {

/// Dense row-major double tensor. Shapes are small vectors of extents; the
/// layers index flat data directly for speed.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<long> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<std::size_t>(numel_of(shape_)), 0.0);
  }
  Tensor(std::initializer_list<long> shape) : Tensor(std::vector<long>(shape)) {}

  static long numel_of(const std::vector<long>& shape) {
    long n = 1;
    for (long d : shape) {
      require(d >= 0, "TENSOR_SHAPE", "negative extent");
      n *= d;
    }
    return n;
  }

  const std::vector<long>& shape() const { return shape_; }
  long dim(std::size_t i) const { return shape_.at(i); }
  long numel() const { return static_cast<long>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](long i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](long i) const { return data_[static_cast<std::size_t>(i)]; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }
  void zero() { fill(0.0); }

  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

 private:
  std::vector<long> shape_;
  std::vector<double> data_;
};

}  // namespace tles
