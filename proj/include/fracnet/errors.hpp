#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracnet {

/// Input stream violates the tagged record grammar (e.g. a record without `ER`).
class MalformedRecord : public std::runtime_error {
 public:
  MalformedRecord(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is not UTF-8 text.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition between two in-memory objects does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fracnet

namespace fracnet {

/// Command line or environment cannot be turned into a run configuration.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracnet
