#pragma once

#include <stdexcept>
#include <string>

namespace knotadj {

// Raised on bad input or violated operation preconditions. The CLI maps
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotadj
