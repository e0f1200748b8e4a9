#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycontact {

// Malformed text input. `offset` is the byte position where parsing stopped.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), reason_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }
  // Same error for text embedded `by` bytes into a larger input.
  ParseError shifted(std::size_t by) const { return ParseError(reason_, offset_ + by); }

private:
  std::string reason_;
  std::size_t offset_;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A lemma identity that must hold by construction failed to verify.
class VerificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace polycontact
