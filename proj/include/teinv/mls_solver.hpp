#pragma once

/**
 * @brief Core-inverse solution theory for multilinear systems.
 *
 * One-sided systems A*X = B and two-sided systems C*X*D = B are solved through
 * the core inverse: the certificate A*A^+*B == B (resp. C*C^+*B*D^+*D == B)
 * decides solvability, the particular solution is A^+*B (resp. C^+*B*D^+), and
 * the full solution set is parameterized by a free tensor Z. The Kronecker
 * lift turns the two-sided system into an equivalent one-sided system over the
 * vec-form of X, and the Sylvester block form materializes C*X + X*D as a
 * single block product.
 *
 * The lift uses kron(c, transpose(d)): under the row-major flattening that
 * DenseTensor uses everywhere, K * vec(X) == vec(C*X*D) holds exactly with the
 * non-conjugated transpose, which is the identity the solver equivalence is
 * validated against. Over real tensors this coincides with the adjoint form.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teinv/errors.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/tensor.hpp"
#include "teinv/tensor_json.hpp"

namespace teinv {

/** @brief Tolerances for solvability certificates. */
struct SolveOptions {
  InverseOptions inverse;
  double solve_tol = 1e-8;
};

/**
 * @brief Solution record of a one- or two-sided system.
 *
 * free_projector is I - A^+*A for one-sided systems; for two-sided systems it
 * is I - C^+*C and free_projector_right is I - D*D^+. family_member(z) walks
 * the full solution set as z ranges over all tensors of the solution shape.
 */
struct SolveOutcome {
  bool solvable = false;
  DenseTensor particular;
  double residual = 0.0;
  double certificate_residual = 0.0;
  DenseTensor free_projector;
  std::optional<DenseTensor> free_projector_right;

  DenseTensor family_member(const DenseTensor& z) const {
    if (!free_projector_right) {
      return particular + free_projector * z;
    }
    const DenseTensor left = identity(free_projector.shape().left_dims) - free_projector;
    const DenseTensor right =
        identity(free_projector_right->shape().left_dims) - *free_projector_right;
    return particular + z - left * z * right;
  }
};

namespace solve_detail {

inline void require_square(const DenseTensor& t, const char* role) {
  if (!t.shape().square()) {
    throw ShapeMismatchError(std::string(role) + " tensor must be square, got " +
                             t.shape().to_string());
  }
}

inline void require_left_dims(const DenseTensor& b, const std::vector<std::size_t>& dims,
                              const char* role) {
  if (b.shape().left_dims != dims) {
    throw ShapeMismatchError(std::string("right-hand side left dims do not match the ") +
                             role + " tensor");
  }
}

inline double scaled(const DenseTensor& deviation, const DenseTensor& b) {
  return norm_fro(deviation) / (1.0 + norm_fro(b));
}

}  // namespace solve_detail

/** @brief Solve A*X = B via the core inverse; A must be square of index 1. */
inline SolveOutcome solve_one_sided(const DenseTensor& a, const DenseTensor& b,
                                    const SolveOptions& opts = {}) {
  solve_detail::require_square(a, "coefficient");
  solve_detail::require_left_dims(b, a.shape().left_dims, "coefficient");
  const DenseTensor ca = core_inverse(a, opts.inverse);
  SolveOutcome out;
  out.particular = ca * b;
  out.certificate_residual = solve_detail::scaled(a * (ca * b) - b, b);
  out.solvable = out.certificate_residual <= opts.solve_tol;
  out.residual = solve_detail::scaled(a * out.particular - b, b);
  out.free_projector = identity(a.shape().left_dims) - ca * a;
  return out;
}

/** @brief Unique solution of a consistent A*X = B inside the range of A. */
inline DenseTensor solve_unique_in_range(const DenseTensor& a, const DenseTensor& b,
                                         const SolveOptions& opts = {}) {
  solve_detail::require_square(a, "coefficient");
  solve_detail::require_left_dims(b, a.shape().left_dims, "coefficient");
  if (!range_contains(a, b, opts.inverse)) {
    throw NotConsistentError(
        "right-hand side is not in the range of the coefficient tensor");
  }
  return core_inverse(a, opts.inverse) * b;
}

/** @brief Solve C*X*D = B via core inverses; C and D must be square of index 1. */
inline SolveOutcome solve_two_sided(const DenseTensor& c, const DenseTensor& d,
                                    const DenseTensor& b, const SolveOptions& opts = {}) {
  solve_detail::require_square(c, "left coefficient");
  solve_detail::require_square(d, "right coefficient");
  solve_detail::require_left_dims(b, c.shape().left_dims, "left coefficient");
  if (b.shape().right_dims != d.shape().left_dims) {
    throw ShapeMismatchError(
        "right-hand side right dims do not match the right coefficient tensor");
  }
  const DenseTensor cc = core_inverse(c, opts.inverse);
  const DenseTensor dc = core_inverse(d, opts.inverse);
  SolveOutcome out;
  out.particular = cc * b * dc;
  out.certificate_residual = solve_detail::scaled((c * cc) * b * (dc * d) - b, b);
  out.solvable = out.certificate_residual <= opts.solve_tol;
  out.residual = solve_detail::scaled(c * out.particular * d - b, b);
  out.free_projector = identity(c.shape().left_dims) - cc * c;
  out.free_projector_right = identity(d.shape().left_dims) - d * dc;
  return out;
}

/** @brief Reshape to a column: (M, N) becomes (M ++ N, [1]) with unchanged entries. */
inline DenseTensor vec_form(const DenseTensor& x) {
  std::vector<std::size_t> stacked = x.shape().left_dims;
  stacked.insert(stacked.end(), x.shape().right_dims.begin(), x.shape().right_dims.end());
  return DenseTensor(TensorShape{std::move(stacked), {1}}, x.entries());
}

/** @brief Inverse of vec_form for a given target shape. */
inline DenseTensor unvec_form(const DenseTensor& v, const TensorShape& shape) {
  std::vector<std::size_t> stacked = shape.left_dims;
  stacked.insert(stacked.end(), shape.right_dims.begin(), shape.right_dims.end());
  if (v.shape().left_dims != stacked || v.shape().right_dims != std::vector<std::size_t>{1}) {
    throw ShapeMismatchError("vec-form tensor " + v.shape().to_string() +
                             " does not match target shape " + shape.to_string());
  }
  return DenseTensor(shape, v.entries());
}

/**
 * @brief Kronecker lift of the two-sided system: K with K*vec_form(X) ==
 *        vec_form(C*X*D).
 */
inline DenseTensor kron_lift(const DenseTensor& c, const DenseTensor& d) {
  solve_detail::require_square(c, "left coefficient");
  solve_detail::require_square(d, "right coefficient");
  return kron(c, transpose(d));
}

/**
 * @brief Block tensors realizing C*X + X*D as row * embed(X) * col.
 *
 * row is [C I] over a doubling axis, col is [I; D] over the same axis, and
 * embed(X) places X twice on the block diagonal.
 */
struct SylvesterBlocks {
  DenseTensor row;
  DenseTensor col;
  TensorShape x_shape;

  DenseTensor embed(const DenseTensor& x) const {
    if (x.shape() != x_shape) {
      throw ShapeMismatchError("embedded tensor must have shape " + x_shape.to_string() +
                               ", got " + x.shape().to_string());
    }
    const Matrix& xm = x.matrix();
    Matrix em = Matrix::Zero(2 * xm.rows(), 2 * xm.cols());
    em.topLeftCorner(xm.rows(), xm.cols()) = xm;
    em.bottomRightCorner(xm.rows(), xm.cols()) = xm;
    std::vector<std::size_t> left = {2};
    left.insert(left.end(), x_shape.left_dims.begin(), x_shape.left_dims.end());
    std::vector<std::size_t> right = {2};
    right.insert(right.end(), x_shape.right_dims.begin(), x_shape.right_dims.end());
    return DenseTensor::from_matrix(TensorShape{std::move(left), std::move(right)}, em);
  }

  DenseTensor apply(const DenseTensor& x) const { return row * embed(x) * col; }
};

/** @brief Materialize the Sylvester block factors for C*X + X*D. */
inline SylvesterBlocks sylvester_block_form(const DenseTensor& c, const DenseTensor& d) {
  solve_detail::require_square(c, "left coefficient");
  solve_detail::require_square(d, "right coefficient");
  const Matrix& cm = c.matrix();
  const Matrix& dm = d.matrix();

  Matrix rm(cm.rows(), 2 * cm.cols());
  rm.leftCols(cm.cols()) = cm;
  rm.rightCols(cm.cols()) = Matrix::Identity(cm.rows(), cm.cols());
  std::vector<std::size_t> row_right = {2};
  row_right.insert(row_right.end(), c.shape().right_dims.begin(), c.shape().right_dims.end());

  Matrix lm(2 * dm.rows(), dm.cols());
  lm.topRows(dm.rows()) = Matrix::Identity(dm.rows(), dm.cols());
  lm.bottomRows(dm.rows()) = dm;
  std::vector<std::size_t> col_left = {2};
  col_left.insert(col_left.end(), d.shape().left_dims.begin(), d.shape().left_dims.end());

  SylvesterBlocks blocks;
  blocks.row = DenseTensor::from_matrix(
      TensorShape{c.shape().left_dims, std::move(row_right)}, rm);
  blocks.col = DenseTensor::from_matrix(
      TensorShape{std::move(col_left), d.shape().right_dims}, lm);
  blocks.x_shape = TensorShape{c.shape().right_dims, d.shape().left_dims};
  return blocks;
}

/** @brief Compact JSON rendering of a solve outcome for the CLI. */
inline std::string solve_outcome_to_json(const SolveOutcome& out) {
  std::string text = "{\"solvable\":";
  text += out.solvable ? "true" : "false";
  text += ",\"residual\":";
  json_detail::append_double(text, out.residual);
  text += ",\"certificate_residual\":";
  json_detail::append_double(text, out.certificate_residual);
  text += ",\"particular\":";
  text += write_tensor_json(out.particular);
  text += "}";
  return text;
}

}  // namespace teinv
