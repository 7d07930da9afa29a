#pragma once

#include <stdexcept>
#include <string>

namespace nff {

/// Invalid argument or configuration value supplied by the caller.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Kernel matrix is numerically singular or indefinite.
class DegenerateKernelError : public std::runtime_error {
 public:
  explicit DegenerateKernelError(const std::string& what) : std::runtime_error(what) {}
};

/// Measurement matrix does not have full row rank.
class RankError : public std::runtime_error {
 public:
  explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nff
