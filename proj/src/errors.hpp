#pragma once

#include <stdexcept>
#include <string>

namespace afb {

// Library-level error. Everything thrown by the core derives from this so the
// C API boundary can translate it into a status code plus message.
class AfbError : public std::runtime_error {
public:
  explicit AfbError(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the 64-bit range. Inputs in this domain keep
// values tiny; hitting this means the input is out of supported range, never
// that a result was silently rounded.
class OverflowError : public AfbError {
public:
  explicit OverflowError(const std::string& what) : AfbError(what) {}
};

} // namespace afb
