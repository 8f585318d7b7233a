#pragma once

#include <stdexcept>
#include <string>

namespace evoalg {

/// Malformed or inconsistent caller input: bad dimensions, mixed rings,
/// unparsable scalars, invalid walks.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The input is well formed but lies outside what the routine can decide
/// (e.g. automorphism enumeration over an infinite field, or a singular
/// structure matrix where the theory needs E^2 = E).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evoalg
