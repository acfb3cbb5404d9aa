#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tamari_lab {

// Input text could not be parsed. `offset` is the byte position of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An enumeration size cap was exceeded (see Lab::max_n and TAMARI_LAB_LIMIT).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed but semantically invalid input: size mismatch, pair that is not
// an interval, segment index out of range, and so on.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bundled data file is missing or fails its checksum.
class DataFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant the library relies on was violated. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tamari_lab
