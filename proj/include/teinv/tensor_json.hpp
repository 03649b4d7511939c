#pragma once

/**
 * @brief Tensor JSON serialization.
 *
 * The wire format is an object with "left_shape" and "right_shape" (arrays of
 * positive integers), "re" (array of doubles), and an optional "im" array that
 * defaults to all zeros. Values are ordered with the right index group fastest,
 * matching DenseTensor's entry order, and are written with 17 significant
 * digits so that write/read round-trips are bit-identical.
 */

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "teinv/errors.hpp"
#include "teinv/tensor.hpp"

namespace teinv {

namespace json_detail {

/** @brief %.17g with a guaranteed decimal point so JSON parsers keep the sign of -0.0. */
inline void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
  if (std::strcspn(buf, ".eE") == std::strlen(buf)) out += ".0";
}

inline void append_dims(std::string& out, const std::vector<std::size_t>& dims) {
  out += '[';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  out += ']';
}

inline std::vector<std::size_t> read_dims(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw IoError(std::string("tensor JSON is missing \"") + key + "\"");
  }
  const nlohmann::json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw IoError(std::string("tensor JSON field \"") + key + "\" must be an array");
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const nlohmann::json& v = arr.at(i);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw IoError(std::string("tensor JSON field \"") + key + "\"[" +
                    std::to_string(i) + "] must be a positive integer");
    }
    dims.push_back(static_cast<std::size_t>(v.get<long long>()));
  }
  return dims;
}

inline std::vector<double> read_values(const nlohmann::json& doc, const char* key,
                                       std::size_t expected) {
  const nlohmann::json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw IoError(std::string("tensor JSON field \"") + key + "\" must be an array");
  }
  if (arr.size() != expected) {
    throw IoError(std::string("tensor JSON field \"") + key + "\" has " +
                  std::to_string(arr.size()) + " values, expected " +
                  std::to_string(expected));
  }
  std::vector<double> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const nlohmann::json& v = arr.at(i);
    if (!v.is_number()) {
      throw IoError(std::string("tensor JSON field \"") + key + "\"[" +
                    std::to_string(i) + "] must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      throw IoError(std::string("tensor JSON field \"") + key + "\"[" +
                    std::to_string(i) + "] is not finite");
    }
    values.push_back(x);
  }
  return values;
}

}  // namespace json_detail

/** @brief Serialize a tensor to the JSON wire format (always emits "im"). */
inline std::string write_tensor_json(const DenseTensor& t) {
  const std::vector<Complex>& entries = t.entries();
  std::string out = "{\"left_shape\":";
  json_detail::append_dims(out, t.shape().left_dims);
  out += ",\"right_shape\":";
  json_detail::append_dims(out, t.shape().right_dims);
  out += ",\"re\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    json_detail::append_double(out, entries[i].real());
  }
  out += "],\"im\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    json_detail::append_double(out, entries[i].imag());
  }
  out += "]}";
  return out;
}

/** @brief Parse the JSON wire format; a missing "im" means all-zero imaginary parts. */
inline DenseTensor read_tensor_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("tensor JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw IoError("tensor JSON must be an object");
  }
  const TensorShape shape{json_detail::read_dims(doc, "left_shape"),
                          json_detail::read_dims(doc, "right_shape")};
  const std::size_t expected = shape.size();
  if (!doc.contains("re")) {
    throw IoError("tensor JSON is missing \"re\"");
  }
  const std::vector<double> re = json_detail::read_values(doc, "re", expected);
  std::vector<double> im(expected, 0.0);
  if (doc.contains("im")) {
    im = json_detail::read_values(doc, "im", expected);
  }
  std::vector<Complex> entries;
  entries.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) entries.emplace_back(re[i], im[i]);
  return DenseTensor(shape, std::move(entries));
}

/** @brief Read a tensor from a JSON file. */
inline DenseTensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return read_tensor_json(buffer.str());
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

/** @brief Write a tensor to a JSON file, with a trailing newline. */
inline void save_tensor(const std::string& path, const DenseTensor& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << write_tensor_json(t) << "\n";
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace teinv
