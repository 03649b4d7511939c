#pragma once

/**
 * @brief Error taxonomy shared by the library and the CLI.
 *
 * Every error carries a stable machine-readable kind string and the process
 * exit code the CLI maps it to: 1 for numerical failures, 2 for usage or IO
 * failures.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace teinv {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message, int exit_code)
      : std::runtime_error(message), kind_(std::move(kind)), exit_code_(exit_code) {}

  const std::string& kind() const { return kind_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string kind_;
  int exit_code_;
};

/** @brief Operands do not conform (contraction dims, addition shapes, ...). */
class ShapeMismatchError : public Error {
 public:
  explicit ShapeMismatchError(const std::string& message)
      : Error("shape_mismatch", message, 1) {}
};

/** @brief Group or core inverse requested for a tensor of index > 1. */
class IndexTooHighError : public Error {
 public:
  IndexTooHighError(std::size_t k, const std::string& message)
      : Error("index_too_high", message, 1), k_(k) {}
  std::size_t index() const { return k_; }

 private:
  std::size_t k_;
};

/** @brief Singular values straddle the rank threshold; rank is undecidable. */
class RankAmbiguousError : public Error {
 public:
  explicit RankAmbiguousError(const std::string& message)
      : Error("rank_ambiguous", message, 1) {}
};

/** @brief Right-hand side lies outside the range required for a solution. */
class NotConsistentError : public Error {
 public:
  explicit NotConsistentError(const std::string& message)
      : Error("not_consistent", message, 1) {}
};

/** @brief A structured random generator ran out of retries. */
class GenerationExhaustedError : public Error {
 public:
  explicit GenerationExhaustedError(const std::string& message)
      : Error("generation_exhausted", message, 1) {}
};

/** @brief File or serialization failure. */
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message, 2) {}
};

/** @brief Bad command line. */
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("usage", message, 2) {}
};

}  // namespace teinv
