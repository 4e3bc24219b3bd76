#pragma once

#include <stdexcept>
#include <string>

namespace tsys {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: out-of-bounds vertices, bad edges, unparsable text,
// mismatched grids.
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// An explicit enumeration guard was exceeded.
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// An operation was called outside its stated precondition
// (e.g. a chain-only operation on a proper grid).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace tsys
