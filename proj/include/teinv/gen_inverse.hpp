#pragma once

/**
 * @brief Generalized inverses of square even-order tensors: Moore-Penrose,
 *        group, Drazin, and core inverse, plus index computation, EP
 *        classification, and range-inclusion tests.
 *
 * All computations run on the canonical matricization. Numerical rank uses an
 * SVD with threshold rank_tol_factor * max(dim) * sigma_max; singular values
 * falling inside a guard band around that threshold raise RankAmbiguousError
 * instead of silently picking a rank.
 */

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "teinv/errors.hpp"
#include "teinv/tensor.hpp"

namespace teinv {

/** @brief Tolerances shared by every inverse computation and predicate. */
struct InverseOptions {
  double rank_tol_factor = 1e-12;
  double residual_tol = 1e-10;
};

/** @brief Index k of a square tensor with the matricized ranks of A^1..A^{k+1}. */
struct IndexResult {
  std::size_t k = 0;
  std::vector<std::size_t> ranks;
};

namespace detail {

/** @brief Width of the guard band around the rank threshold. */
inline constexpr double kRankGuardBand = 16.0;

inline double rank_threshold(const Matrix& m, const Eigen::VectorXd& sv,
                             double rank_tol_factor) {
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  return rank_tol_factor * static_cast<double>(std::max(m.rows(), m.cols())) * smax;
}

/** @brief Rank at the thresholded SVD; throws if any sigma sits in the guard band. */
inline std::size_t checked_rank(const Matrix& m, const InverseOptions& opts) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double tau = rank_threshold(m, sv, opts.rank_tol_factor);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double s = sv(i);
    if (tau > 0.0 && s > tau / kRankGuardBand && s < tau * kRankGuardBand) {
      throw RankAmbiguousError("singular value " + std::to_string(s) +
                               " lies inside the guard band around rank threshold " +
                               std::to_string(tau));
    }
    if (s > tau) ++rank;
  }
  return rank;
}

/** @brief Moore-Penrose inverse of a matrix via thresholded SVD. */
inline Matrix pinv(const Matrix& m, const InverseOptions& opts) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double tau = rank_threshold(m, sv, opts.rank_tol_factor);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tau) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

inline Matrix matrix_power(const Matrix& m, std::size_t p) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (std::size_t i = 0; i < p; ++i) out = out * m;
  return out;
}

inline void require_square(const DenseTensor& a, const char* what) {
  if (!a.shape().square()) {
    throw ShapeMismatchError(std::string(what) + " needs a square shape, got " +
                             a.shape().to_string());
  }
}

}  // namespace detail

/** @brief Moore-Penrose inverse; the unique solution of all four Penrose equations. */
inline DenseTensor moore_penrose(const DenseTensor& a, const InverseOptions& opts = {}) {
  return DenseTensor::from_matrix({a.shape().right_dims, a.shape().left_dims},
                                  detail::pinv(a.matrix(), opts));
}

/** @brief Residual and verdict of one defining equation from verify_inverse_class. */
struct EquationCheck {
  int equation = 0;
  double residual = 0.0;
  bool pass = false;
};

/**
 * @brief Residuals of the requested defining equations for a candidate inverse x of a.
 *
 * Equations: (1) A*X*A = A; (2) X*A*X = X; (3) (A*X)^* = A*X; (4) (X*A)^* = X*A;
 * (5) X*A = A*X; (6) X*A^2 = A; (7) A*X^2 = X. Each residual is scaled as
 * ||lhs - rhs|| / (1 + ||rhs||).
 */
inline std::vector<EquationCheck> verify_inverse_class(const DenseTensor& a,
                                                       const DenseTensor& x,
                                                       const std::vector<int>& equations,
                                                       const InverseOptions& opts = {}) {
  std::vector<EquationCheck> out;
  out.reserve(equations.size());
  for (int eq : equations) {
    double r = 0.0;
    switch (eq) {
      case 1:
        r = rel_dist(a * x * a, a);
        break;
      case 2:
        r = rel_dist(x * a * x, x);
        break;
      case 3: {
        DenseTensor ax = a * x;
        r = rel_dist(conj_transpose(ax), ax);
        break;
      }
      case 4: {
        DenseTensor xa = x * a;
        r = rel_dist(conj_transpose(xa), xa);
        break;
      }
      case 5:
        r = rel_dist(x * a, a * x);
        break;
      case 6:
        r = rel_dist(x * a * a, a);
        break;
      case 7:
        r = rel_dist(a * x * x, x);
        break;
      default:
        throw UsageError("unknown defining equation " + std::to_string(eq));
    }
    out.push_back({eq, r, r <= opts.residual_tol});
  }
  return out;
}

/** @brief Smallest k with rank(A^k) == rank(A^{k+1}), via rank stabilization. */
inline IndexResult index(const DenseTensor& a, const InverseOptions& opts = {}) {
  detail::require_square(a, "index");
  const Matrix& m = a.matrix();
  const std::size_t n = a.rows();

  IndexResult result;
  Matrix power = m;
  result.ranks.push_back(detail::checked_rank(power, opts));
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * m;
    result.ranks.push_back(detail::checked_rank(power, opts));
    if (result.ranks[k - 1] == result.ranks[k]) {
      result.k = k;
      return result;
    }
  }
  throw RankAmbiguousError("matricized ranks of powers of " + a.shape().to_string() +
                           " never stabilized");
}

/** @brief Drazin inverse A^k * (A^{2k+1})^dagger * A^k with k = index(a). */
inline DenseTensor drazin(const DenseTensor& a, const InverseOptions& opts = {}) {
  detail::require_square(a, "drazin");
  const std::size_t k = index(a, opts).k;
  const Matrix& m = a.matrix();
  const Matrix ak = detail::matrix_power(m, k);
  const Matrix mid = detail::pinv(detail::matrix_power(m, 2 * k + 1), opts);
  return DenseTensor::from_matrix(a.shape(), ak * mid * ak);
}

/** @brief Group inverse; exists only at index 1, otherwise IndexTooHighError. */
inline DenseTensor group_inverse(const DenseTensor& a, const InverseOptions& opts = {}) {
  detail::require_square(a, "group inverse");
  const std::size_t k = index(a, opts).k;
  if (k != 1) {
    throw IndexTooHighError(k, "group inverse needs index 1, computed index " +
                                   std::to_string(k));
  }
  const Matrix& m = a.matrix();
  return DenseTensor::from_matrix(a.shape(),
                                  m * detail::pinv(detail::matrix_power(m, 3), opts) * m);
}

/**
 * @brief Core inverse of an index-1 tensor, computed as A^# * A * A^dagger.
 *
 * The result is the unique X with (A*X)^* = A*X, X*A^2 = A, and A*X^2 = X.
 */
inline DenseTensor core_inverse(const DenseTensor& a, const InverseOptions& opts = {}) {
  DenseTensor g = group_inverse(a, opts);
  return DenseTensor::from_matrix(
      a.shape(), g.matrix() * a.matrix() * detail::pinv(a.matrix(), opts));
}

/** @brief True iff A * A^dagger == A^dagger * A within residual_tol * (1 + ||A||). */
inline bool is_ep(const DenseTensor& a, const InverseOptions& opts = {}) {
  detail::require_square(a, "is_ep");
  const Matrix p = detail::pinv(a.matrix(), opts);
  const double diff = (a.matrix() * p - p * a.matrix()).norm();
  return diff <= opts.residual_tol * (1.0 + a.matrix().norm());
}

/** @brief True iff R(b) is contained in R(a), tested as A * A^dagger * B == B. */
inline bool range_contains(const DenseTensor& a, const DenseTensor& b,
                           const InverseOptions& opts = {}) {
  if (a.shape().left_dims != b.shape().left_dims) {
    throw ShapeMismatchError("range test needs equal left dims, got " +
                             a.shape().to_string() + " and " + b.shape().to_string());
  }
  const Matrix proj = a.matrix() * detail::pinv(a.matrix(), opts);
  const double diff = (proj * b.matrix() - b.matrix()).norm();
  return diff <= opts.residual_tol * (1.0 + b.matrix().norm());
}

}  // namespace teinv
