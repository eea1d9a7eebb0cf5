#pragma once
#include <stdexcept>
#include <string>

namespace extlim {

/// Malformed user input (bad expression, ill-defined map, broken diagram file).
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was refused because it would exceed the basis-size cap.
class SizeGuardError : public std::runtime_error {
  public:
    explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace extlim
