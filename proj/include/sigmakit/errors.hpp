#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigmakit {

/// Malformed literal. `position` is the 0-based offset of the offending
/// character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An enumeration or elimination would exceed its configured budget. The
/// computation is abandoned rather than truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource limits shared by the enumeration and homology code.
struct Budget {
  std::size_t max_faces = 5'000'000;
  std::size_t max_entries = 50'000'000;
  std::size_t max_vertices = 200'000;
};

}  // namespace sigmakit
