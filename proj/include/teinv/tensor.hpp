#pragma once

/**
 * @brief Dense even-order complex tensor with the Einstein contraction
 *        product, conjugate transpose, Kronecker product, and the canonical
 *        matricization that grounds every inverse computation.
 *
 * A tensor of shape (I_1 x ... x I_m, J_1 x ... x J_n) is addressed by a left
 * (row-like) index group and a right (column-like) index group. The canonical
 * flattening sends a multi-index to a flat index row-major with the last
 * index fastest, for 1-based indices:
 *
 *   t1 = i_m + sum over K < m of (i_K - 1) * (I_{K+1} * ... * I_m)
 *   t2 = j_n + sum over K < n of (j_K - 1) * (J_{K+1} * ... * J_n)
 *
 * The pair (t1, t2) is bijective, so the tensor is stored directly as its
 * matricization. Under this flattening the Einstein product becomes the
 * matrix product and the tensor Kronecker product becomes the matrix
 * Kronecker product.
 */

#include <Eigen/Dense>

#include <complex>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "teinv/errors.hpp"

namespace teinv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/** @brief Shape of an even-order tensor: left (row) dims and right (column) dims. */
struct TensorShape {
  std::vector<std::size_t> left_dims;
  std::vector<std::size_t> right_dims;

  static std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
  }

  std::size_t left_size() const { return product(left_dims); }
  std::size_t right_size() const { return product(right_dims); }
  std::size_t size() const { return left_size() * right_size(); }

  /** @brief Square shapes (left == right) admit powers, index, and inverses. */
  bool square() const { return left_dims == right_dims; }

  /** @brief Empty index groups are normalized to a single size-1 mode. */
  TensorShape normalized() const {
    TensorShape s = *this;
    if (s.left_dims.empty()) s.left_dims = {1};
    if (s.right_dims.empty()) s.right_dims = {1};
    return s;
  }

  std::string to_string() const {
    auto dims_str = [](const std::vector<std::size_t>& dims) {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ',';
        os << dims[i];
      }
      os << ']';
      return os.str();
    };
    return dims_str(left_dims) + "x" + dims_str(right_dims);
  }

  friend bool operator==(const TensorShape& a, const TensorShape& b) {
    return a.left_dims == b.left_dims && a.right_dims == b.right_dims;
  }
  friend bool operator!=(const TensorShape& a, const TensorShape& b) { return !(a == b); }
};

/** @brief Row-major flat index of a 0-based multi-index, last index fastest. */
inline std::size_t flat_index(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& idx) {
  if (dims.size() != idx.size()) {
    throw ShapeMismatchError("multi-index has " + std::to_string(idx.size()) +
                             " components, expected " + std::to_string(dims.size()));
  }
  std::size_t t = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (idx[k] >= dims[k]) {
      throw ShapeMismatchError("index component " + std::to_string(idx[k]) +
                               " out of range for dim " + std::to_string(dims[k]));
    }
    t = t * dims[k] + idx[k];
  }
  return t;
}

/**
 * @brief Dense even-order complex tensor stored as its canonical matricization.
 *
 * Entries are ordered by the flat pair (t1, t2) with t2 fastest; that order is
 * the one used by the JSON interchange format and by vectorized views.
 */
class DenseTensor {
 public:
  DenseTensor() : shape_{{1}, {1}}, mat_(Matrix::Zero(1, 1)) {}

  explicit DenseTensor(TensorShape shape) : shape_(validated(std::move(shape))) {
    mat_ = Matrix::Zero(static_cast<Eigen::Index>(shape_.left_size()),
                        static_cast<Eigen::Index>(shape_.right_size()));
  }

  /** @brief Build from entries in (t1, t2) order, t2 fastest. Rejects non-finite values. */
  DenseTensor(TensorShape shape, const std::vector<Complex>& entries)
      : DenseTensor(std::move(shape)) {
    if (entries.size() != shape_.size()) {
      throw ShapeMismatchError("entry count " + std::to_string(entries.size()) +
                               " does not match shape " + shape_.to_string() + " (" +
                               std::to_string(shape_.size()) + " entries)");
    }
    const std::size_t cols = shape_.right_size();
    for (std::size_t t = 0; t < entries.size(); ++t) {
      const Complex v = entries[t];
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ShapeMismatchError("non-finite entry at flat position " + std::to_string(t));
      }
      mat_(static_cast<Eigen::Index>(t / cols), static_cast<Eigen::Index>(t % cols)) = v;
    }
  }

  /** @brief Adopt a matrix as the matricization of the given shape. */
  static DenseTensor from_matrix(TensorShape shape, Matrix m) {
    DenseTensor t(std::move(shape));
    if (m.rows() != t.mat_.rows() || m.cols() != t.mat_.cols()) {
      throw ShapeMismatchError("matrix is " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + ", shape " + t.shape_.to_string() +
                               " needs " + std::to_string(t.mat_.rows()) + "x" +
                               std::to_string(t.mat_.cols()));
    }
    t.mat_ = std::move(m);
    return t;
  }

  const TensorShape& shape() const { return shape_; }
  const Matrix& matrix() const { return mat_; }

  std::size_t rows() const { return shape_.left_size(); }
  std::size_t cols() const { return shape_.right_size(); }

  Complex at(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right) const {
    return mat_(static_cast<Eigen::Index>(flat_index(shape_.left_dims, left)),
                static_cast<Eigen::Index>(flat_index(shape_.right_dims, right)));
  }

  void set(const std::vector<std::size_t>& left, const std::vector<std::size_t>& right,
           Complex value) {
    mat_(static_cast<Eigen::Index>(flat_index(shape_.left_dims, left)),
         static_cast<Eigen::Index>(flat_index(shape_.right_dims, right))) = value;
  }

  /** @brief Entries in (t1, t2) order with t2 fastest. */
  std::vector<Complex> entries() const {
    std::vector<Complex> out;
    out.reserve(shape_.size());
    for (Eigen::Index r = 0; r < mat_.rows(); ++r)
      for (Eigen::Index c = 0; c < mat_.cols(); ++c) out.push_back(mat_(r, c));
    return out;
  }

 private:
  static TensorShape validated(TensorShape shape) {
    TensorShape s = shape.normalized();
    for (std::size_t d : s.left_dims)
      if (d == 0) throw ShapeMismatchError("zero dimension in shape " + s.to_string());
    for (std::size_t d : s.right_dims)
      if (d == 0) throw ShapeMismatchError("zero dimension in shape " + s.to_string());
    return s;
  }

  TensorShape shape_;
  Matrix mat_;
};

/** @brief Canonical matricization (the stored matrix itself). */
inline const Matrix& matricize(const DenseTensor& a) { return a.matrix(); }

/** @brief Inverse of matricize for a given shape. */
inline DenseTensor dematricize(Matrix m, TensorShape shape) {
  return DenseTensor::from_matrix(std::move(shape), std::move(m));
}

/** @brief Einstein product: contract the right index group of a with the left group of b. */
inline DenseTensor einstein_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape().right_dims != b.shape().left_dims) {
    throw ShapeMismatchError("einstein product needs right dims of " + a.shape().to_string() +
                             " to equal left dims of " + b.shape().to_string());
  }
  return DenseTensor::from_matrix({a.shape().left_dims, b.shape().right_dims},
                                  a.matrix() * b.matrix());
}

inline DenseTensor operator*(const DenseTensor& a, const DenseTensor& b) {
  return einstein_product(a, b);
}

/** @brief Conjugate transpose: swaps index groups and conjugates entries. */
inline DenseTensor conj_transpose(const DenseTensor& a) {
  return DenseTensor::from_matrix({a.shape().right_dims, a.shape().left_dims},
                                  a.matrix().adjoint());
}

/** @brief Plain transpose without conjugation. */
inline DenseTensor transpose(const DenseTensor& a) {
  return DenseTensor::from_matrix({a.shape().right_dims, a.shape().left_dims},
                                  a.matrix().transpose());
}

/** @brief Kronecker product; shapes concatenate, matricizations Kronecker-multiply. */
inline DenseTensor kron(const DenseTensor& a, const DenseTensor& b) {
  std::vector<std::size_t> left = a.shape().left_dims;
  left.insert(left.end(), b.shape().left_dims.begin(), b.shape().left_dims.end());
  std::vector<std::size_t> right = a.shape().right_dims;
  right.insert(right.end(), b.shape().right_dims.begin(), b.shape().right_dims.end());

  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  Matrix k(ma.rows() * mb.rows(), ma.cols() * mb.cols());
  for (Eigen::Index r = 0; r < ma.rows(); ++r)
    for (Eigen::Index c = 0; c < ma.cols(); ++c)
      k.block(r * mb.rows(), c * mb.cols(), mb.rows(), mb.cols()) = ma(r, c) * mb;
  return DenseTensor::from_matrix({std::move(left), std::move(right)}, std::move(k));
}

/** @brief Identity tensor over the given (square) left dims. */
inline DenseTensor identity(const std::vector<std::size_t>& dims) {
  const auto n = static_cast<Eigen::Index>(TensorShape::product(dims));
  return DenseTensor::from_matrix({dims, dims}, Matrix::Identity(n, n));
}

/** @brief All-zero tensor of the given shape. */
inline DenseTensor zero(TensorShape shape) { return DenseTensor(std::move(shape)); }

/** @brief Frobenius norm. */
inline double norm_fro(const DenseTensor& a) { return a.matrix().norm(); }

inline DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatchError("addition needs equal shapes, got " + a.shape().to_string() +
                             " and " + b.shape().to_string());
  }
  return DenseTensor::from_matrix(a.shape(), a.matrix() + b.matrix());
}

inline DenseTensor sub(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatchError("subtraction needs equal shapes, got " + a.shape().to_string() +
                             " and " + b.shape().to_string());
  }
  return DenseTensor::from_matrix(a.shape(), a.matrix() - b.matrix());
}

inline DenseTensor scale(const DenseTensor& a, Complex s) {
  return DenseTensor::from_matrix(a.shape(), s * a.matrix());
}

inline DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) { return add(a, b); }
inline DenseTensor operator-(const DenseTensor& a, const DenseTensor& b) { return sub(a, b); }
inline DenseTensor operator*(Complex s, const DenseTensor& a) { return scale(a, s); }

/** @brief Relative distance ||a - b|| / (1 + ||b||), the residual used by all checks. */
inline double rel_dist(const DenseTensor& a, const DenseTensor& b) {
  return norm_fro(sub(a, b)) / (1.0 + norm_fro(b));
}

}  // namespace teinv
