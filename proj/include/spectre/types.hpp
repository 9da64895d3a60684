#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectre {

using NodeId = std::uint32_t;

constexpr NodeId kNoNode = 0xffffffffu;

// A pair (i in G1, j in G2) packed into one key for sparse tables.
using PairKey = std::uint64_t;

constexpr PairKey pair_key(NodeId i, NodeId j) {
  return (static_cast<PairKey>(i) << 32) | j;
}
constexpr NodeId pair_left(PairKey k) { return static_cast<NodeId>(k >> 32); }
constexpr NodeId pair_right(PairKey k) {
  return static_cast<NodeId>(k & 0xffffffffu);
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition (bad parameter, id out of range, ...).
class InvalidParam : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (missing or unwritable file).
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spectre
