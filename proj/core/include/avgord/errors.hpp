#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace avgord {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group-spec text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A precondition or invariant was violated; the message names it.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// 64-bit exact arithmetic would overflow.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// Enumeration exceeded the configured cap; carries the partial element count
/// (or the predicted order when the overflow was detected up front).
class ResourceError : public Error {
 public:
  ResourceError(std::uint64_t partial_count, std::uint64_t cap, bool predicted = false)
      : Error("enumeration cap of " + std::to_string(cap) + " elements exceeded; " +
              (predicted ? "predicted order " : "stopped after ") +
              std::to_string(partial_count)),
        partial_count_(partial_count),
        cap_(cap) {}

  std::uint64_t partial_count() const { return partial_count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t partial_count_;
  std::uint64_t cap_;
};

}  // namespace avgord
