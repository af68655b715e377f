#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltacvx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. Carries the 1-based line (edge lists) or the
/// 0-based byte offset (graph6) where decoding failed.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t offset)
      : Error(what), line_(line), offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// A vertex id or vertex set refers to vertices outside the graph.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy an operation's structural requirement
/// (connectivity, chordality, order bounds, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its declared size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace deltacvx
