#include <gtest/gtest.h>

#include <complex>
#include <limits>
#include <vector>

#include "teinv/tensor.hpp"
#include "teinv/testkit.hpp"

namespace {

using teinv::Complex;
using teinv::DenseTensor;
using teinv::Matrix;
using teinv::TensorShape;

DenseTensor random_tensor(std::uint64_t seed, TensorShape shape) {
  teinv::testkit::GeneratorSpec spec{std::move(shape),
                                     teinv::testkit::Family::GeneralComplex, seed};
  return teinv::testkit::generate(spec).a;
}

TEST(TensorShape, SizesAndPredicates) {
  TensorShape s{{2, 3}, {4}};
  EXPECT_EQ(s.left_size(), 6u);
  EXPECT_EQ(s.right_size(), 4u);
  EXPECT_EQ(s.size(), 24u);
  EXPECT_FALSE(s.square());
  EXPECT_TRUE((TensorShape{{2, 3}, {2, 3}}).square());
  EXPECT_FALSE((TensorShape{{6}, {2, 3}}).square());
  EXPECT_EQ(s.to_string(), "[2,3]x[4]");
}

TEST(TensorShape, NormalizedFillsEmptyGroups) {
  TensorShape s{{}, {3}};
  TensorShape n = s.normalized();
  EXPECT_EQ(n.left_dims, (std::vector<std::size_t>{1}));
  EXPECT_EQ(n.right_dims, (std::vector<std::size_t>{3}));
  EXPECT_EQ(n.left_size(), 1u);
}

TEST(TensorShape, Equality) {
  TensorShape a{{2, 3}, {4}};
  TensorShape b{{2, 3}, {4}};
  TensorShape c{{3, 2}, {4}};
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(FlatIndex, LastIndexFastest) {
  std::vector<std::size_t> dims{2, 3};
  EXPECT_EQ(teinv::flat_index(dims, {0, 0}), 0u);
  EXPECT_EQ(teinv::flat_index(dims, {0, 2}), 2u);
  EXPECT_EQ(teinv::flat_index(dims, {1, 0}), 3u);
  EXPECT_EQ(teinv::flat_index(dims, {1, 2}), 5u);
}

TEST(FlatIndex, RejectsBadIndices) {
  std::vector<std::size_t> dims{2, 3};
  EXPECT_THROW(teinv::flat_index(dims, {0}), teinv::ShapeMismatchError);
  EXPECT_THROW(teinv::flat_index(dims, {2, 0}), teinv::ShapeMismatchError);
  EXPECT_THROW(teinv::flat_index(dims, {0, 3}), teinv::ShapeMismatchError);
}

TEST(DenseTensor, DefaultIsScalarZero) {
  DenseTensor t;
  EXPECT_EQ(t.shape(), (TensorShape{{1}, {1}}));
  EXPECT_EQ(t.at({0}, {0}), Complex(0.0));
}

TEST(DenseTensor, EntriesOrderIsRightGroupFastest) {
  std::vector<Complex> e;
  for (int v = 1; v <= 12; ++v) e.emplace_back(static_cast<double>(v), 0.0);
  DenseTensor t({{2}, {2, 3}}, e);
  EXPECT_EQ(t.at({0}, {0, 0}), Complex(1.0));
  EXPECT_EQ(t.at({0}, {0, 2}), Complex(3.0));
  EXPECT_EQ(t.at({0}, {1, 0}), Complex(4.0));
  EXPECT_EQ(t.at({1}, {0, 0}), Complex(7.0));
  EXPECT_EQ(t.at({1}, {1, 2}), Complex(12.0));
  EXPECT_EQ(t.entries(), e);
}

TEST(DenseTensor, SetAndAtRoundTrip) {
  DenseTensor t(TensorShape{{2, 2}, {2}});
  t.set({1, 0}, {1}, Complex(3.0, -4.0));
  EXPECT_EQ(t.at({1, 0}, {1}), Complex(3.0, -4.0));
  EXPECT_EQ(t.at({0, 0}, {0}), Complex(0.0));
}

TEST(DenseTensor, RejectsWrongEntryCount) {
  EXPECT_THROW(DenseTensor(TensorShape{{2}, {2}}, std::vector<Complex>(3)),
               teinv::ShapeMismatchError);
}

TEST(DenseTensor, RejectsNonFiniteEntries) {
  std::vector<Complex> e(4, Complex(0.0));
  e[2] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  EXPECT_THROW(DenseTensor(TensorShape{{2}, {2}}, e), teinv::ShapeMismatchError);
  e[2] = Complex(0.0, std::numeric_limits<double>::infinity());
  EXPECT_THROW(DenseTensor(TensorShape{{2}, {2}}, e), teinv::ShapeMismatchError);
}

TEST(DenseTensor, RejectsZeroDimension) {
  EXPECT_THROW(DenseTensor(TensorShape{{2, 0}, {2}}), teinv::ShapeMismatchError);
}

TEST(DenseTensor, FromMatrixChecksDimensions) {
  EXPECT_THROW(DenseTensor::from_matrix({{2}, {2}}, Matrix::Zero(2, 3)),
               teinv::ShapeMismatchError);
}

TEST(Matricize, RoundTripsThroughDematricize) {
  DenseTensor a = random_tensor(1, {{2, 3}, {2, 2}});
  DenseTensor b = teinv::dematricize(teinv::matricize(a), a.shape());
  EXPECT_EQ(a.shape(), b.shape());
  EXPECT_DOUBLE_EQ(teinv::norm_fro(a - b), 0.0);
}

TEST(EinsteinProduct, MatchesHandComputedMatrixProduct) {
  DenseTensor a({{2}, {2}}, {Complex(1), Complex(2), Complex(3), Complex(4)});
  DenseTensor b({{2}, {2}}, {Complex(5), Complex(6), Complex(7), Complex(8)});
  DenseTensor c = a * b;
  EXPECT_EQ(c.at({0}, {0}), Complex(19.0));
  EXPECT_EQ(c.at({0}, {1}), Complex(22.0));
  EXPECT_EQ(c.at({1}, {0}), Complex(43.0));
  EXPECT_EQ(c.at({1}, {1}), Complex(50.0));
}

TEST(EinsteinProduct, ContractsWholeIndexGroup) {
  DenseTensor a = random_tensor(2, {{2}, {2, 3}});
  DenseTensor b = random_tensor(3, {{2, 3}, {2}});
  DenseTensor c = a * b;
  EXPECT_EQ(c.shape(), (TensorShape{{2}, {2}}));
  Complex expected(0.0);
  for (std::size_t k0 = 0; k0 < 2; ++k0)
    for (std::size_t k1 = 0; k1 < 3; ++k1)
      expected += a.at({1}, {k0, k1}) * b.at({k0, k1}, {0});
  EXPECT_NEAR(std::abs(c.at({1}, {0}) - expected), 0.0, 1e-13);
}

TEST(EinsteinProduct, IdentityIsNeutral) {
  DenseTensor a = random_tensor(4, {{2, 2}, {3}});
  DenseTensor left = teinv::identity({2, 2}) * a;
  DenseTensor right = a * teinv::identity({3});
  EXPECT_LT(teinv::rel_dist(left, a), 1e-15);
  EXPECT_LT(teinv::rel_dist(right, a), 1e-15);
}

TEST(EinsteinProduct, IsAssociative) {
  DenseTensor a = random_tensor(5, {{2}, {2, 2}});
  DenseTensor b = random_tensor(6, {{2, 2}, {3}});
  DenseTensor c = random_tensor(7, {{3}, {2}});
  EXPECT_LT(teinv::rel_dist((a * b) * c, a * (b * c)), 1e-13);
}

TEST(EinsteinProduct, AdjointReversesFactors) {
  DenseTensor a = random_tensor(8, {{2, 2}, {3}});
  DenseTensor b = random_tensor(9, {{3}, {2}});
  DenseTensor lhs = teinv::conj_transpose(a * b);
  DenseTensor rhs = teinv::conj_transpose(b) * teinv::conj_transpose(a);
  EXPECT_LT(teinv::rel_dist(lhs, rhs), 1e-13);
}

TEST(EinsteinProduct, RejectsMismatchedContraction) {
  DenseTensor a = random_tensor(10, {{2}, {2, 3}});
  DenseTensor b = random_tensor(11, {{3, 2}, {2}});
  EXPECT_THROW(a * b, teinv::ShapeMismatchError);
}

TEST(ConjTranspose, SwapsGroupsAndConjugates) {
  DenseTensor a(TensorShape{{2}, {3}});
  a.set({0}, {1}, Complex(1.0, 2.0));
  DenseTensor h = teinv::conj_transpose(a);
  EXPECT_EQ(h.shape(), (TensorShape{{3}, {2}}));
  EXPECT_EQ(h.at({1}, {0}), Complex(1.0, -2.0));
}

TEST(ConjTranspose, IsInvolutive) {
  DenseTensor a = random_tensor(12, {{2, 3}, {2, 2}});
  EXPECT_DOUBLE_EQ(teinv::norm_fro(teinv::conj_transpose(teinv::conj_transpose(a)) - a), 0.0);
}

TEST(Transpose, DoesNotConjugate) {
  DenseTensor a(TensorShape{{2}, {2}});
  a.set({0}, {1}, Complex(1.0, 2.0));
  DenseTensor t = teinv::transpose(a);
  EXPECT_EQ(t.at({1}, {0}), Complex(1.0, 2.0));
}

TEST(Kron, ConcatenatesShapes) {
  DenseTensor a = random_tensor(13, {{2}, {3}});
  DenseTensor b = random_tensor(14, {{4}, {5}});
  DenseTensor k = teinv::kron(a, b);
  EXPECT_EQ(k.shape(), (TensorShape{{2, 4}, {3, 5}}));
}

TEST(Kron, EntriesAreProductsOfFactors) {
  DenseTensor a = random_tensor(15, {{2}, {2}});
  DenseTensor b = random_tensor(16, {{2}, {2}});
  DenseTensor k = teinv::kron(a, b);
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ib = 0; ib < 2; ++ib)
      for (std::size_t ja = 0; ja < 2; ++ja)
        for (std::size_t jb = 0; jb < 2; ++jb) {
          const Complex expected = a.at({ia}, {ja}) * b.at({ib}, {jb});
          EXPECT_NEAR(std::abs(k.at({ia, ib}, {ja, jb}) - expected), 0.0, 1e-15);
        }
}

TEST(Kron, SatisfiesMixedProductRule) {
  DenseTensor a = random_tensor(17, {{2}, {3}});
  DenseTensor c = random_tensor(18, {{3}, {2}});
  DenseTensor b = random_tensor(19, {{2}, {2}});
  DenseTensor d = random_tensor(20, {{2}, {3}});
  DenseTensor lhs = teinv::kron(a, b) * teinv::kron(c, d);
  DenseTensor rhs = teinv::kron(a * c, b * d);
  EXPECT_LT(teinv::rel_dist(lhs, rhs), 1e-12);
}

TEST(Kron, CommutesWithAdjoint) {
  DenseTensor a = random_tensor(21, {{2}, {3}});
  DenseTensor b = random_tensor(22, {{3}, {2}});
  DenseTensor lhs = teinv::conj_transpose(teinv::kron(a, b));
  DenseTensor rhs = teinv::kron(teinv::conj_transpose(a), teinv::conj_transpose(b));
  EXPECT_LT(teinv::rel_dist(lhs, rhs), 1e-15);
}

TEST(Kron, IdentityFactorsCombine) {
  DenseTensor lhs = teinv::kron(teinv::identity({2}), teinv::identity({3}));
  EXPECT_DOUBLE_EQ(teinv::norm_fro(lhs - teinv::identity({2, 3})), 0.0);
}

TEST(Arithmetic, OperatorsMatchDefinitions) {
  DenseTensor a = random_tensor(23, {{2}, {2}});
  DenseTensor b = random_tensor(24, {{2}, {2}});
  EXPECT_LT(teinv::rel_dist((a + b) - b, a), 1e-14);
  DenseTensor twice = Complex(2.0) * a;
  EXPECT_LT(teinv::rel_dist(twice, a + a), 1e-15);
  EXPECT_THROW(a + random_tensor(25, {{3}, {3}}), teinv::ShapeMismatchError);
  EXPECT_THROW(a - random_tensor(26, {{3}, {3}}), teinv::ShapeMismatchError);
}

TEST(Norms, FrobeniusAndRelativeDistance) {
  DenseTensor a({{2}, {2}}, {Complex(3), Complex(0), Complex(0), Complex(4)});
  EXPECT_DOUBLE_EQ(teinv::norm_fro(a), 5.0);
  DenseTensor z = teinv::zero(TensorShape{{2}, {2}});
  EXPECT_DOUBLE_EQ(teinv::rel_dist(a, a), 0.0);
  EXPECT_DOUBLE_EQ(teinv::rel_dist(a, z), 5.0);
  EXPECT_DOUBLE_EQ(teinv::rel_dist(z, a), 5.0 / 6.0);
}

TEST(Degenerate, SingletonModesActAsScalars) {
  DenseTensor s({{1}, {1}}, {Complex(2.0)});
  DenseTensor a = random_tensor(27, {{1}, {1, 3}});
  DenseTensor prod = s * a;
  EXPECT_LT(teinv::rel_dist(prod, Complex(2.0) * a), 1e-15);
}

}  // namespace
