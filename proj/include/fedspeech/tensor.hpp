#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fedspeech/error.hpp"

namespace fedspeech {

// Dense row-major tensor. Training and inference run on float; finite
// difference gradient checks instantiate the same code on double.
template <typename T>
struct Tensor {
  std::vector<int> dims;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> d) : dims(std::move(d)) {
    data.assign(numel_of(dims), T(0));
  }
  Tensor(std::vector<int> d, std::vector<T> v) : dims(std::move(d)), data(std::move(v)) {
    if (data.size() != numel_of(dims)) throw ShapeError("tensor data length does not match dims");
  }

  static size_t numel_of(const std::vector<int>& d) {
    size_t n = 1;
    for (int x : d) {
      if (x <= 0) throw ShapeError("tensor dims must be positive");
      n *= static_cast<size_t>(x);
    }
    return n;
  }

  size_t numel() const { return data.size(); }
  int dim(size_t i) const { return dims.at(i); }
  size_t rank() const { return dims.size(); }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }
  void zero() { fill(T(0)); }

  bool same_shape(const Tensor& o) const { return dims == o.dims; }

  bool all_finite() const {
    for (T v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.dims = dims;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < dims.size(); ++i) os << (i ? "x" : "") << dims[i];
    os << ']';
    return os.str();
  }

  // 2-D accessors, used by feature matrices
  T& at2(int r, int c) { return data[static_cast<size_t>(r) * dims[1] + c]; }
  T at2(int r, int c) const { return data[static_cast<size_t>(r) * dims[1] + c]; }
};

using Matrix = Tensor<float>;

// C[M x N] += A[M x K] * B[K x N]
template <typename T>
inline void gemm_acc(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const T* arow = a + static_cast<size_t>(i) * k;
    T* crow = c + static_cast<size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      T av = arow[p];
      if (av == T(0)) continue;
      const T* brow = b + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

// C[M x N] += A^T[(K x M)]^T * B[K x N]  (A stored K x M)
template <typename T>
inline void gemm_at_b_acc(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int p = 0; p < k; ++p) {
    const T* arow = a + static_cast<size_t>(p) * m;
    const T* brow = b + static_cast<size_t>(p) * n;
    for (int i = 0; i < m; ++i) {
      T av = arow[i];
      if (av == T(0)) continue;
      T* crow = c + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

// C[M x N] += A[M x K] * B^T[(N x K)]^T  (B stored N x K)
template <typename T>
inline void gemm_a_bt_acc(const T* a, const T* b, T* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const T* arow = a + static_cast<size_t>(i) * k;
    T* crow = c + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const T* brow = b + static_cast<size_t>(j) * k;
      T acc = T(0);
      for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] += acc;
    }
  }
}

}  // namespace fedspeech
