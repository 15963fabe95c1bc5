#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace privzone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unreadable file, bad token, out-of-range argument.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The graph violates a structural requirement of the requested analysis.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Raised by analyses that need a connected graph.
class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError(std::uint32_t unreachable, const std::string& what)
      : GraphError(what), unreachable_(unreachable) {}

  std::uint32_t unreachable_node() const noexcept { return unreachable_; }

 private:
  std::uint32_t unreachable_;
};

/// A requested operation has no admissible answer (e.g. an observed
/// broadcast set no symmetric policy can produce).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace privzone
