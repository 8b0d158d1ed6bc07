#pragma once

#include <stdexcept>
#include <string>

namespace chirality {

/// Thrown when a computation would exceed a configured guard (automorphism
/// group order cap, minor enumeration budget, generation budget).
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chirality
