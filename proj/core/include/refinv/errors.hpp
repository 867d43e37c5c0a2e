#ifndef REFINV_ERRORS_HPP
#define REFINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace refinv {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid caller input: bad field spec, dimension mismatch, singular
/// inversion, violated preconditions.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// Violation of an invariant the algorithms guarantee internally.
/// Reaching one of these means a bug, not bad input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace refinv

#endif
