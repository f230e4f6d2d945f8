#ifndef ARBORITH_ERROR_HPP
#define ARBORITH_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arborith {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the operation's domain (e.g. n = 0 where n >= 2 is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would need a sieve larger than the configured budget allows.
/// The answer exists but is out of reach at the current limit.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& msg, uint64_t attempted_bound)
      : Error(msg), attempted_bound_(attempted_bound) {}

  /// Sieve bound the operation would have needed next.
  uint64_t attempted_bound() const noexcept { return attempted_bound_; }

  /// Tree node (pre-order index) whose resolution hit the limit, or -1
  /// when the error did not originate inside a tree decode.
  int64_t node_index() const noexcept { return node_index_; }
  void set_node_index(int64_t idx) noexcept { node_index_ = idx; }

 private:
  uint64_t attempted_bound_;
  int64_t node_index_ = -1;
};

/// A value would exceed 2^63-1; the library refuses to wrap silently.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `offset` is the 0-based byte position of the
/// offending character (or the input length for an unexpected end).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, size_t offset)
      : Error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  size_t offset() const noexcept { return offset_; }

 private:
  size_t offset_;
};

/// Missing or unreadable file, or a structurally invalid data file.
/// `line` is 1-based when the problem is tied to a specific line, else 0.
class FileError : public Error {
 public:
  explicit FileError(const std::string& msg, size_t line = 0)
      : Error(line ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}

  size_t line() const noexcept { return line_; }

 private:
  size_t line_;
};

/// Network failure while fetching a remote resource.
class NetworkError : public Error {
 public:
  using Error::Error;
};

}  // namespace arborith

#endif
