#pragma once

#include <stdexcept>
#include <string>

namespace distk {

/// An exact search refused to run because the instance exceeds its
/// configured limit. Callers are expected to fall back to approximations.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, std::size_t size, std::size_t limit)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

/// A caller-supplied witness does not satisfy its defining property.
class InvalidWitness : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internally constructed object failed its own postcondition check.
class PostconditionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace distk
