#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "garf/error.hpp"
#include "garf/rng.hpp"

namespace garf {

/// Dense row-major 2-D array of reals. This is the unit every tape
/// primitive operates on: scalars are 1x1, row vectors 1xn, coordinate
/// batches n x dim, small matrices 3x3 / 4x4.
template <class T>
struct Tensor {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  Tensor() = default;
  Tensor(int r, int c) : rows(r), cols(c), v(size_t(r) * size_t(c), T(0)) {}
  Tensor(int r, int c, std::initializer_list<T> init)
      : rows(r), cols(c), v(init) {
    if (v.size() != numel()) throw ContractError("Tensor: init size mismatch");
  }

  static Tensor zeros(int r, int c) { return Tensor(r, c); }

  static Tensor full(int r, int c, T x) {
    Tensor t(r, c);
    std::fill(t.v.begin(), t.v.end(), x);
    return t;
  }

  static Tensor scalar(T x) { return full(1, 1, x); }

  static Tensor identity(int n) {
    Tensor t(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = T(1);
    return t;
  }

  static Tensor uniform(int r, int c, T lo, T hi, Rng& rng) {
    Tensor t(r, c);
    for (auto& x : t.v) x = T(rng.uniform(double(lo), double(hi)));
    return t;
  }

  size_t numel() const { return size_t(rows) * size_t(cols); }
  bool same_shape(const Tensor& o) const {
    return rows == o.rows && cols == o.cols;
  }

  T& operator()(int r, int c) { return v[size_t(r) * cols + c]; }
  T operator()(int r, int c) const { return v[size_t(r) * cols + c]; }
  T& operator[](size_t i) { return v[i]; }
  T operator[](size_t i) const { return v[i]; }

  bool all_finite() const {
    for (T x : v)
      if (!std::isfinite(double(x))) return false;
    return true;
  }

  using EigenMat =
      Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<EigenMat> mat() {
    return Eigen::Map<EigenMat>(v.data(), rows, cols);
  }
  Eigen::Map<const EigenMat> mat() const {
    return Eigen::Map<const EigenMat>(v.data(), rows, cols);
  }

  template <class U>
  Tensor<U> cast() const {
    Tensor<U> out(rows, cols);
    for (size_t i = 0; i < numel(); ++i) out.v[i] = U(v[i]);
    return out;
  }
};

}  // namespace garf
