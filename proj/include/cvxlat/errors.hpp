#pragma once

#include <stdexcept>
#include <string>

namespace cvxlat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (dimension mismatch, bad file, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A configured size bound was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// The request is outside the supported range (e.g. face enumeration above dimension 4).
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// A geometric construction could not be completed or failed verification.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& what) : Error(what) {}
};

}  // namespace cvxlat
