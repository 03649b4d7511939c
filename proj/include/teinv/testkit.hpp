#pragma once

/**
 * @brief Structured random tensor generators and brute-force oracles backing
 *        the property tests and the acceptance suite.
 *
 * Determinism: all randomness flows from xoshiro256++ seeded through
 * splitmix64, both implemented verbatim below, so a fixed seed reproduces the
 * same tensors bit-for-bit on any platform with IEEE-754 doubles. Parallel
 * trials derive per-trial seeds by adding the trial counter to the base seed.
 *
 * splitmix64 (seed expansion):
 *   x += 0x9E3779B97F4A7C15; z = x;
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
 *   output z ^ (z >> 31).
 * xoshiro256++ (stream, state s[0..3] from four splitmix64 outputs):
 *   output = rotl(s[0] + s[3], 23) + s[0];
 *   t = s[1] << 17; s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3];
 *   s[2] ^= t; s[3] = rotl(s[3], 45).
 * Uniform doubles take the top 53 bits of an output; Gaussians come from the
 * Box-Muller transform on two uniforms. No standard-library distributions are
 * used anywhere, since their streams are implementation-defined.
 */

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "teinv/errors.hpp"
#include "teinv/gen_inverse.hpp"
#include "teinv/tensor.hpp"

namespace teinv::testkit {

/** @brief xoshiro256++ stream seeded via splitmix64. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /** @brief Uniform double in [0, 1) from the top 53 bits. */
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /** @brief Uniform integer in [lo, hi] inclusive. */
  std::size_t uniform_index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform01() * static_cast<double>(hi - lo + 1));
  }

  /** @brief Standard real Gaussian via Box-Muller. */
  double gaussian() {
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /** @brief Complex Gaussian with independent real and imaginary parts. */
  Complex cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t state_[4] = {};
};

inline constexpr int kMaxRetries = 64;

/** @brief Matrix with independent complex Gaussian entries. */
inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.cgaussian();
  return m;
}

/** @brief Haar-like random unitary: QR of a Gaussian matrix with phase fix. */
inline Matrix random_unitary(Rng& rng, std::size_t n) {
  Matrix g = random_matrix(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex d = r(i, i);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(i) *= d / ad;
  }
  return q;
}

/**
 * @brief Random invertible matrix with controlled conditioning, built from
 *        two QR-orthogonalized Gaussian factors and an explicit spectrum.
 */
inline Matrix random_well_conditioned(Rng& rng, std::size_t n) {
  Matrix u = random_unitary(rng, n);
  Matrix v = random_unitary(rng, n);
  Eigen::VectorXd d(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = rng.uniform(0.2, 1.0);
  return u * d.asDiagonal() * v.adjoint();
}

/** @brief Gaussian invertible matrix filtered to sigma_min/sigma_max >= 1e-4. */
inline Matrix random_invertible(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix m = random_matrix(rng, n, n);
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) >= 1e-4 * sv(0)) return m;
  }
  throw GenerationExhaustedError("no invertible matrix passed the conditioning filter after " +
                                 std::to_string(kMaxRetries) + " tries");
}

/** @brief Structured tensor families mirroring the hypotheses of the checked laws. */
enum class Family {
  GeneralComplex,
  Index1,
  Hermitian,
  HermitianIdempotent,
  EP,
  Unitary,
  CommutingPolyPair,
  SquareCondition,
  Nilpotent,
};

/** @brief Support relation between the two members of CommutingPolyPair. */
enum class SupportPattern { Random, SecondInvertible, Equal };

/** @brief Deterministic recipe: identical spec and seed give identical tensors. */
struct GeneratorSpec {
  TensorShape shape;
  Family family = Family::GeneralComplex;
  std::uint64_t seed = 0;
  std::optional<std::size_t> rank;        ///< pins the rank where the family has one
  std::size_t nilpotency = 2;             ///< k for Family::Nilpotent
  SupportPattern pattern = SupportPattern::Random;  ///< CommutingPolyPair only
};

/** @brief Output of generate(): one tensor, or two for the pair families. */
struct Generated {
  DenseTensor a;
  std::optional<DenseTensor> b;
};

namespace detail {

inline void require_square(const GeneratorSpec& spec) {
  if (!spec.shape.square()) {
    throw GenerationExhaustedError("family needs a square shape, got " +
                                   spec.shape.to_string());
  }
}

inline std::size_t draw_rank(Rng& rng, const GeneratorSpec& spec, std::size_t n) {
  if (spec.rank) {
    if (*spec.rank > n) {
      throw GenerationExhaustedError("pinned rank " + std::to_string(*spec.rank) +
                                     " exceeds dimension " + std::to_string(n));
    }
    return *spec.rank;
  }
  if (n == 1) return 1;
  return rng.uniform_index(1, n - 1);
}

/** @brief S * blockdiag(C_r, 0) * S^{-1}: index 1, rank r, generally not EP. */
inline Matrix index1_matrix(Rng& rng, std::size_t n, std::size_t r) {
  Matrix core = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (r > 0) {
    core.topLeftCorner(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) =
        random_invertible(rng, r);
  }
  const Matrix s = random_well_conditioned(rng, n);
  return s * core * s.inverse();
}

/** @brief Real diagonal values with the requested support, nonzero magnitudes in [0.5, 1.5]. */
inline Eigen::VectorXd supported_values(Rng& rng, std::size_t n,
                                        const std::vector<bool>& support) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (support[i]) {
      const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
      v(static_cast<Eigen::Index>(i)) = sign * rng.uniform(0.5, 1.5);
    }
  }
  return v;
}

inline std::vector<bool> random_support(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<bool> s(n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = rng.uniform01() >= 1.0 / 3.0;
      any = any || s[i];
    }
    if (any) return s;
  }
  throw GenerationExhaustedError("empty support drawn repeatedly");
}

/**
 * @brief Random signed permutation. Conjugating by it keeps entries exactly
 *        representable, so powers of a nilpotent stay exactly zero and the
 *        guarded rank computation never sees noise-level singular values.
 */
inline Matrix random_signed_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.uniform_index(0, i - 1);
    std::swap(perm[i - 1], perm[j]);
  }
  Matrix p = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    p(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = sign;
  }
  return p;
}

}  // namespace detail

/**
 * @brief Draw from the requested family. Identical spec gives identical output.
 *
 * Family recipes:
 *  - GeneralComplex: independent complex Gaussian entries, any shape.
 *  - Index1: S * blockdiag(C_r, 0) * S^{-1} with invertible Gaussian C_r and a
 *    well-conditioned similarity S; rank r drawn from [1, n-1] unless pinned.
 *  - Hermitian: (G + G^*) / 2, or a rank-pinned U diag(real) U^*.
 *  - HermitianIdempotent: U (I_r + 0) U^*.
 *  - EP: U diag(complex, rank r) U^* (normal, hence EP).
 *  - Unitary: QR-orthogonalized Gaussian.
 *  - CommutingPolyPair: common unitary eigenbasis U with real spectra v, w,
 *    realizing real polynomials of one Hermitian tensor; both members commute
 *    and star-commute by construction. Support of w per SupportPattern.
 *  - SquareCondition: index-1 A, then B = A^2 * A^# + W * (I - A * A^#), which
 *    satisfies B * A = A^2 exactly; retried until B has index 1.
 *  - Nilpotent: the k x k shift block J_k padded with zeros and conjugated by
 *    a signed permutation, so every power is exactly zero in floating point.
 */
inline Generated generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const TensorShape shape = spec.shape.normalized();

  if (spec.family == Family::GeneralComplex) {
    return {DenseTensor::from_matrix(shape,
                                     random_matrix(rng, shape.left_size(), shape.right_size())),
            std::nullopt};
  }

  GeneratorSpec sq = spec;
  sq.shape = shape;
  detail::require_square(sq);
  const std::size_t n = shape.left_size();

  switch (spec.family) {
    case Family::Index1: {
      const std::size_t r = detail::draw_rank(rng, spec, n);
      return {DenseTensor::from_matrix(shape, detail::index1_matrix(rng, n, r)), std::nullopt};
    }
    case Family::Hermitian: {
      if (spec.rank) {
        const std::size_t r = detail::draw_rank(rng, spec, n);
        std::vector<bool> support(n, false);
        for (std::size_t i = 0; i < r; ++i) support[i] = true;
        const Matrix u = random_unitary(rng, n);
        const Eigen::VectorXd d = detail::supported_values(rng, n, support);
        return {DenseTensor::from_matrix(shape, u * d.asDiagonal() * u.adjoint()),
                std::nullopt};
      }
      const Matrix g = random_matrix(rng, n, n);
      return {DenseTensor::from_matrix(shape, 0.5 * (g + g.adjoint())), std::nullopt};
    }
    case Family::HermitianIdempotent: {
      const std::size_t r = detail::draw_rank(rng, spec, n);
      const Matrix u = random_unitary(rng, n);
      Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < r; ++i) d(static_cast<Eigen::Index>(i)) = 1.0;
      return {DenseTensor::from_matrix(shape, u * d.asDiagonal() * u.adjoint()), std::nullopt};
    }
    case Family::EP: {
      const std::size_t r = detail::draw_rank(rng, spec, n);
      const Matrix u = random_unitary(rng, n);
      Eigen::VectorXcd d = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i < r; ++i) {
        const double mag = rng.uniform(0.5, 1.5);
        const double phase = rng.uniform(0.0, 2.0 * M_PI);
        d(static_cast<Eigen::Index>(i)) = std::polar(mag, phase);
      }
      return {DenseTensor::from_matrix(shape, u * d.asDiagonal() * u.adjoint()), std::nullopt};
    }
    case Family::Unitary:
      return {DenseTensor::from_matrix(shape, random_unitary(rng, n)), std::nullopt};
    case Family::CommutingPolyPair: {
      const Matrix u = random_unitary(rng, n);
      const std::vector<bool> sa = detail::random_support(rng, n);
      std::vector<bool> sb;
      switch (spec.pattern) {
        case SupportPattern::Random:
          sb = detail::random_support(rng, n);
          break;
        case SupportPattern::SecondInvertible:
          sb.assign(n, true);
          break;
        case SupportPattern::Equal:
          sb = sa;
          break;
      }
      const Eigen::VectorXd va = detail::supported_values(rng, n, sa);
      const Eigen::VectorXd vb = detail::supported_values(rng, n, sb);
      return {DenseTensor::from_matrix(shape, u * va.asDiagonal() * u.adjoint()),
              DenseTensor::from_matrix(shape, u * vb.asDiagonal() * u.adjoint())};
    }
    case Family::SquareCondition: {
      const InverseOptions opts;
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const std::size_t r = detail::draw_rank(rng, spec, n);
        const Matrix ma = detail::index1_matrix(rng, n, r);
        const Matrix group = ma * teinv::detail::pinv(ma * ma * ma, opts) * ma;
        const Matrix w = random_matrix(rng, n, n);
        const Matrix proj = Matrix::Identity(ma.rows(), ma.cols()) - ma * group;
        const Matrix mb = ma * ma * group + w * proj;
        if ((mb * ma - ma * ma).norm() > 1e-12 * (1.0 + (ma * ma).norm())) continue;
        DenseTensor a = DenseTensor::from_matrix(shape, ma);
        DenseTensor b = DenseTensor::from_matrix(shape, mb);
        try {
          if (index(b, opts).k != 1) continue;
        } catch (const RankAmbiguousError&) {
          continue;
        }
        return {std::move(a), std::move(b)};
      }
      throw GenerationExhaustedError("no pair with B * A = A^2 and index-1 B after " +
                                     std::to_string(kMaxRetries) + " tries");
    }
    case Family::Nilpotent: {
      const std::size_t k = spec.nilpotency;
      if (k < 1 || k > n) {
        throw GenerationExhaustedError("nilpotency " + std::to_string(k) +
                                       " out of range for dimension " + std::to_string(n));
      }
      Matrix j = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t i = 0; i + 1 < k; ++i)
        j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = 1.0;
      const Matrix s = detail::random_signed_permutation(rng, n);
      return {DenseTensor::from_matrix(shape, s * j * s.transpose()), std::nullopt};
    }
    default:
      throw GenerationExhaustedError("unhandled family");
  }
}

/**
 * @brief Square tensor of exact index k: similarity image of C_r + J_k + 0.
 *
 * With an invertible block present the similarity is a random well-conditioned
 * matrix; a purely nilpotent draw (k == n) falls back to a signed permutation
 * so that powers vanish exactly rather than decaying into rounding noise.
 */
inline DenseTensor generate_with_index(const TensorShape& shape, std::size_t k,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const TensorShape s = shape.normalized();
  const std::size_t n = s.left_size();
  if (k < 1 || k > n) {
    throw GenerationExhaustedError("index " + std::to_string(k) +
                                   " out of range for dimension " + std::to_string(n));
  }
  const std::size_t invertible = (k < n) ? rng.uniform_index(1, n - k) : 0;
  Matrix core = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (invertible > 0) {
    core.topLeftCorner(static_cast<Eigen::Index>(invertible),
                       static_cast<Eigen::Index>(invertible)) =
        random_invertible(rng, invertible);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto p = static_cast<Eigen::Index>(invertible + i);
    core(p, p + 1) = 1.0;
  }
  if (invertible == 0) {
    const Matrix sim = detail::random_signed_permutation(rng, n);
    return DenseTensor::from_matrix(s, sim * core * sim.transpose());
  }
  const Matrix sim = random_well_conditioned(rng, n);
  return DenseTensor::from_matrix(s, sim * core * sim.inverse());
}

/** @brief Einstein product evaluated by literal nested summation over multi-indices. */
inline DenseTensor oracle_naive_einstein(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape().right_dims != b.shape().left_dims) {
    throw ShapeMismatchError("einstein product needs right dims of " + a.shape().to_string() +
                             " to equal left dims of " + b.shape().to_string());
  }
  const auto& li = a.shape().left_dims;
  const auto& ki = a.shape().right_dims;
  const auto& ri = b.shape().right_dims;

  auto advance = [](std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    for (std::size_t p = dims.size(); p-- > 0;) {
      if (++idx[p] < dims[p]) return true;
      idx[p] = 0;
    }
    return false;
  };

  DenseTensor out({li, ri});
  std::vector<std::size_t> i(li.size(), 0);
  do {
    std::vector<std::size_t> j(ri.size(), 0);
    do {
      Complex sum = 0.0;
      std::vector<std::size_t> k(ki.size(), 0);
      do {
        sum += a.at(i, k) * b.at(k, j);
      } while (advance(k, ki));
      out.set(i, j, sum);
    } while (advance(j, ri));
  } while (advance(i, li));
  return out;
}

/** @brief Residuals of the three core-inverse defining equations. */
struct CoreResiduals {
  double eq3 = 0.0;  ///< (A*X)^* = A*X
  double eq6 = 0.0;  ///< X*A^2 = A
  double eq7 = 0.0;  ///< A*X^2 = X
  double max() const { return std::max(eq3, std::max(eq6, eq7)); }
  bool pass(double tol) const { return max() <= tol; }
};

/**
 * @brief Ground truth for every core-inverse claim, evaluated with the naive
 *        Einstein product only.
 */
inline CoreResiduals oracle_core_equations(const DenseTensor& a, const DenseTensor& x) {
  const DenseTensor ax = oracle_naive_einstein(a, x);
  const DenseTensor xaa = oracle_naive_einstein(oracle_naive_einstein(x, a), a);
  const DenseTensor axx = oracle_naive_einstein(ax, x);
  CoreResiduals r;
  r.eq3 = norm_fro(conj_transpose(ax) - ax) / (1.0 + norm_fro(ax));
  r.eq6 = norm_fro(xaa - a) / (1.0 + norm_fro(a));
  r.eq7 = norm_fro(axx - x) / (1.0 + norm_fro(x));
  return r;
}

}  // namespace teinv::testkit
