#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "teinv/errors.hpp"
#include "teinv/tensor.hpp"
#include "teinv/tensor_json.hpp"
#include "teinv/testkit.hpp"

namespace {

using teinv::Complex;
using teinv::DenseTensor;
using teinv::TensorShape;

DenseTensor random_tensor(TensorShape shape, std::uint64_t seed) {
  return teinv::testkit::generate({std::move(shape), teinv::testkit::Family::GeneralComplex, seed})
      .a;
}

void expect_message_contains(const std::function<void()>& call, const std::string& needle) {
  try {
    call();
    FAIL() << "expected IoError mentioning '" << needle << "'";
  } catch (const teinv::IoError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    EXPECT_EQ(e.exit_code(), 2);
  }
}

TEST(TensorJsonTest, WriteReadRoundTripIsBitIdentical) {
  const DenseTensor t = random_tensor({{2, 3}, {2}}, 17);
  const DenseTensor back = teinv::read_tensor_json(teinv::write_tensor_json(t));
  ASSERT_EQ(back.shape(), t.shape());
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    EXPECT_EQ(back.entries()[i].real(), t.entries()[i].real());
    EXPECT_EQ(back.entries()[i].imag(), t.entries()[i].imag());
  }
}

TEST(TensorJsonTest, WriterEmitsAByteStableDocument) {
  const DenseTensor eye = teinv::identity({2});
  EXPECT_EQ(teinv::write_tensor_json(eye),
            "{\"left_shape\":[2],\"right_shape\":[2],"
            "\"re\":[1.0,0.0,0.0,1.0],\"im\":[0.0,0.0,0.0,0.0]}");
  EXPECT_EQ(teinv::write_tensor_json(eye), teinv::write_tensor_json(eye));
}

TEST(TensorJsonTest, MissingImaginaryPartDefaultsToZero) {
  const DenseTensor t = teinv::read_tensor_json(
      R"({"left_shape":[2],"right_shape":[1],"re":[3.5,-1.25]})");
  ASSERT_EQ(t.shape(), (TensorShape{{2}, {1}}));
  EXPECT_EQ(t.entries()[0], Complex(3.5, 0.0));
  EXPECT_EQ(t.entries()[1], Complex(-1.25, 0.0));
}

TEST(TensorJsonTest, ValueCountMismatchNamesExpectedAndActual) {
  const std::string doc = R"({"left_shape":[2],"right_shape":[2],"re":[1,2,3]})";
  expect_message_contains([&] { teinv::read_tensor_json(doc); }, "3");
  expect_message_contains([&] { teinv::read_tensor_json(doc); }, "4");
  expect_message_contains([&] { teinv::read_tensor_json(doc); }, "re");
}

TEST(TensorJsonTest, MissingFieldsAreNamed) {
  expect_message_contains(
      [] { teinv::read_tensor_json(R"({"right_shape":[2],"re":[1,2]})"); }, "left_shape");
  expect_message_contains(
      [] { teinv::read_tensor_json(R"({"left_shape":[2],"re":[1,2]})"); }, "right_shape");
  expect_message_contains(
      [] { teinv::read_tensor_json(R"({"left_shape":[2],"right_shape":[1]})"); }, "re");
}

TEST(TensorJsonTest, RejectsBadShapeEntries) {
  expect_message_contains(
      [] {
        teinv::read_tensor_json(R"({"left_shape":[0],"right_shape":[1],"re":[]})");
      },
      "left_shape");
  expect_message_contains(
      [] {
        teinv::read_tensor_json(R"({"left_shape":[-2],"right_shape":[1],"re":[1,2]})");
      },
      "positive");
  expect_message_contains(
      [] {
        teinv::read_tensor_json(R"({"left_shape":"x","right_shape":[1],"re":[1]})");
      },
      "array");
}

TEST(TensorJsonTest, RejectsNonFiniteAndNonNumericValues) {
  EXPECT_THROW(teinv::read_tensor_json(
                   R"({"left_shape":[1],"right_shape":[1],"re":[1e999]})"),
               teinv::IoError);
  expect_message_contains(
      [] {
        teinv::read_tensor_json(R"({"left_shape":[1],"right_shape":[1],"re":["a"]})");
      },
      "number");
}

TEST(TensorJsonTest, RejectsMalformedDocuments) {
  EXPECT_THROW(teinv::read_tensor_json("{"), teinv::IoError);
  EXPECT_THROW(teinv::read_tensor_json("[1,2,3]"), teinv::IoError);
  EXPECT_THROW(teinv::read_tensor_json(""), teinv::IoError);
}

TEST(TensorJsonTest, FileRoundTripAndMissingFile) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "teinv_json_test.json").string();
  const DenseTensor t = random_tensor({{2}, {3}}, 23);
  teinv::save_tensor(path, t);
  const DenseTensor back = teinv::load_tensor(path);
  EXPECT_EQ(back.shape(), t.shape());
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    EXPECT_EQ(back.entries()[i], t.entries()[i]);
  }
  std::filesystem::remove(path);
  expect_message_contains([&] { teinv::load_tensor(path); }, path);
}

TEST(TensorJsonTest, NegativeZeroKeepsItsSign) {
  DenseTensor t(TensorShape{{1}, {1}});
  t.set({0}, {0}, Complex(-0.0, 0.0));
  const std::string doc = teinv::write_tensor_json(t);
  EXPECT_NE(doc.find("-0.0"), std::string::npos);
  const DenseTensor back = teinv::read_tensor_json(doc);
  EXPECT_TRUE(std::signbit(back.entries()[0].real()));
}

TEST(TensorJsonTest, SingletonShapesWork) {
  DenseTensor t(TensorShape{{1}, {1}});
  t.set({0}, {0}, Complex(2.5, -1.0));
  const DenseTensor back = teinv::read_tensor_json(teinv::write_tensor_json(t));
  EXPECT_EQ(back.entries()[0], Complex(2.5, -1.0));
}

}  // namespace
