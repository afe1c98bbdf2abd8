#pragma once

#include <stdexcept>
#include <string>

namespace walkdom {

enum class Errc {
  IndexOutOfRange,
  SelfLoop,
  MalformedGraph6,
  UnsupportedSize,
  EmptySelection,
  NotAWalk,
  AdjacentEndpoints,
  NotRealizable,
  EndpointMismatch,
  DisconnectedGraph,
  UnknownPatternName,
  SizeTooLarge,
  ParseError,
};

/// Library error with a machine-checkable code. User-facing tools map
/// these to one-line diagnostics, never stack traces.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace walkdom
