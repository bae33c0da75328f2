#pragma once

#include <stdexcept>
#include <string>

namespace sempat {

// Unreadable or malformed input data (files, streams, matrices).
// CLI maps DataError to exit code 2, std::invalid_argument to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sempat
