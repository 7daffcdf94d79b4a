#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtk {

/// A point of a permutation domain {0, ..., d-1}.
using point_t = std::uint32_t;

/// Exact unsigned integer used for group orders and element counts.
using BigCount = unsigned __int128;

std::string to_string(BigCount value);

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs);
};

}  // namespace qtk
