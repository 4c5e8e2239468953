#pragma once

#include <stdexcept>
#include <string>

namespace adnil {

/// (kind, rank) pair that does not name a simple Lie type, or one the
/// library cannot represent.
class UnsupportedType : public std::invalid_argument {
public:
  explicit UnsupportedType(const std::string& what) : std::invalid_argument(what) {}
};

/// A golden table was checked against a root system of a different type.
class TypeMismatch : public std::invalid_argument {
public:
  explicit TypeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Brute-force routine refused an input above its size bound.
class TooLarge : public std::length_error {
public:
  explicit TooLarge(const std::string& what) : std::length_error(what) {}
};

}  // namespace adnil
