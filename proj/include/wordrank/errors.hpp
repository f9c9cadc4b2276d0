#pragma once

#include <stdexcept>
#include <string>

namespace wordrank {

// An enumeration exceeded a configured cap; retry with a larger cap.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wordrank
