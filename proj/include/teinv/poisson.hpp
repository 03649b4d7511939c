#pragma once

/**
 * @brief Fourth-order stencil operator for the 2-D Neumann Poisson problem.
 *
 * Discretizing u_xx + u_yy = f on a uniform m x m grid with the 5-point
 * stencil and Neumann boundary conditions gives the multilinear system
 * A*X = B with A = kron(I, P) + kron(P, I) + D, where P is the m x m
 * tridiagonal(-1, 0, -1) tensor and D is diagonal. The NeighborCount recipe
 * sets each diagonal entry to the number of grid neighbors (2 at corners,
 * 3 on edges, 4 in the interior), so the matricization of A is the graph
 * Laplacian of the grid: real, symmetric, row sums zero, index 1, singular
 * with the constants as its null space. The system is therefore solved with
 * the core inverse, X = A^+*B, after projecting the right-hand side onto
 * the range of A.
 *
 * Grids travel in two interchangeable layouts with identical entry order:
 * the natural matrix form with shape ([m], [m]) and the column form with
 * shape ([m, m], [1]) that the Einstein product with A consumes.
 */

#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <string>
#include <utility>

#include "teinv/errors.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/mls_solver.hpp"
#include "teinv/tensor.hpp"

namespace teinv {

/** @brief Recipe for the diagonal tensor D of the stencil. */
enum class DiagonalRecipe { NeighborCount };

/** @brief Grid size and diagonal recipe of the discretized operator. */
struct GridSpec {
  std::size_t m = 8;
  DiagonalRecipe diagonal_recipe = DiagonalRecipe::NeighborCount;
};

/** @brief Builds A = kron(I, P) + kron(P, I) + D with shape ([m, m], [m, m]). */
inline DenseTensor build_stencil(const GridSpec& spec) {
  if (spec.m < 3) {
    throw UsageError("poisson grid needs m >= 3, got " + std::to_string(spec.m));
  }
  const std::size_t m = spec.m;
  DenseTensor p(TensorShape{{m}, {m}});
  for (std::size_t i = 0; i + 1 < m; ++i) {
    p.set({i}, {i + 1}, -1.0);
    p.set({i + 1}, {i}, -1.0);
  }
  const DenseTensor eye = identity({m});
  DenseTensor a = kron(eye, p) + kron(p, eye);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const double neighbors = static_cast<double>((k > 0) + (k + 1 < m) + (l > 0) + (l + 1 < m));
      a.set({k, l}, {k, l}, neighbors);
    }
  }
  return a;
}

namespace poisson_detail {

/** @brief Normalizes a grid given in matrix or column form to the column form. */
inline DenseTensor grid_column(std::size_t m, const DenseTensor& f) {
  const TensorShape matrix_form{{m}, {m}};
  const TensorShape column_form{{m, m}, {1}};
  if (f.shape() == matrix_form) {
    return vec_form(f);
  }
  if (f.shape() == column_form) {
    return f;
  }
  throw ShapeMismatchError("poisson grid must have shape " + matrix_form.to_string() + " or " +
                           column_form.to_string() + ", got " + f.shape().to_string());
}

/** @brief Reshapes a column-form grid back to the layout of the original input. */
inline DenseTensor shaped_like(const DenseTensor& original, const DenseTensor& column) {
  if (original.shape() == column.shape()) {
    return column;
  }
  return unvec_form(column, original.shape());
}

}  // namespace poisson_detail

/** @brief Solution record: the grid X, the projected right-hand side, and the residual. */
struct PoissonSolution {
  DenseTensor solution;
  DenseTensor rhs;
  double residual = 0.0;
  bool within_tol = false;
};

/**
 * @brief Discretized operator with its core inverse precomputed once.
 *
 * The core inverse is computed in the constructor and shared by all
 * projections and solves, so many right-hand sides amortize one
 * factorization. The object is immutable after construction.
 */
class PoissonOperator {
 public:
  explicit PoissonOperator(const GridSpec& spec, SolveOptions opts = {})
      : spec_(spec),
        opts_(std::move(opts)),
        stencil_(build_stencil(spec)),
        core_(teinv::core_inverse(stencil_, opts_.inverse)) {}

  const GridSpec& spec() const { return spec_; }
  const DenseTensor& stencil() const { return stencil_; }
  const DenseTensor& core_inverse() const { return core_; }

  /** @brief Nearest consistent right-hand side A*A^+*f, in the layout of f. */
  DenseTensor project_rhs(const DenseTensor& f) const {
    const DenseTensor column = poisson_detail::grid_column(spec_.m, f);
    return poisson_detail::shaped_like(f, stencil_ * (core_ * column));
  }

  /** @brief Solves A*X = project_rhs(f); both grids come back in matrix form. */
  PoissonSolution solve(const DenseTensor& f) const {
    const DenseTensor column = poisson_detail::grid_column(spec_.m, f);
    const DenseTensor b = stencil_ * (core_ * column);
    const DenseTensor x = core_ * b;
    const double residual = norm_fro(stencil_ * x - b) / (1.0 + norm_fro(b));
    const TensorShape matrix_form{{spec_.m}, {spec_.m}};
    return PoissonSolution{unvec_form(x, matrix_form), unvec_form(b, matrix_form), residual,
                           residual <= opts_.solve_tol};
  }

 private:
  GridSpec spec_;
  SolveOptions opts_;
  DenseTensor stencil_;
  DenseTensor core_;
};

/** @brief Projects f onto the range of a through a*a^+*f, in the layout of f. */
inline DenseTensor project_rhs(const DenseTensor& a, const DenseTensor& f,
                               const InverseOptions& opts = {}) {
  detail::require_square(a, "project_rhs");
  const DenseTensor core = core_inverse(a, opts);
  if (f.shape().left_dims == a.shape().right_dims) {
    return a * (core * f);
  }
  const DenseTensor column = vec_form(f);
  if (column.shape().left_dims != a.shape().right_dims) {
    throw ShapeMismatchError("right-hand side " + f.shape().to_string() +
                             " does not match coefficient " + a.shape().to_string());
  }
  return unvec_form(a * (core * column), f.shape());
}

/** @brief One-shot build-and-solve for a single right-hand side. */
inline PoissonSolution solve_poisson(const GridSpec& spec, const DenseTensor& f_grid,
                                     const SolveOptions& opts = {}) {
  return PoissonOperator(spec, opts).solve(f_grid);
}

/** @brief Sine bump sin(pi x) sin(pi y) sampled on the grid, shifted to zero mean. */
inline DenseTensor centered_sine_rhs(std::size_t m) {
  DenseTensor f(TensorShape{{m}, {m}});
  const double h = m > 1 ? 1.0 / static_cast<double>(m - 1) : 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      const double v = std::sin(std::numbers::pi * static_cast<double>(k) * h) *
                       std::sin(std::numbers::pi * static_cast<double>(l) * h);
      f.set({k}, {l}, v);
      sum += v;
    }
  }
  const double mean = sum / static_cast<double>(m * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      f.set({k}, {l}, f.at({k}, {l}).real() - mean);
    }
  }
  return f;
}

/** @brief Real parts of a matrix-form grid as CSV: one line per row, LF endings. */
inline std::string grid_csv(const DenseTensor& grid) {
  const TensorShape& s = grid.shape();
  if (s.left_dims.size() != 1 || s.right_dims.size() != 1) {
    throw ShapeMismatchError("csv output needs a matrix-form grid, got " + s.to_string());
  }
  std::string out;
  char buf[64];
  for (std::size_t k = 0; k < s.left_dims[0]; ++k) {
    for (std::size_t l = 0; l < s.right_dims[0]; ++l) {
      std::snprintf(buf, sizeof(buf), "%.17g", grid.at({k}, {l}).real());
      if (l > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace teinv
