#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace catg {

// Base class for all toolkit errors. Input problems (bad files, bad
// arguments) and exceeded resource caps both derive from this.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `offset` is the byte offset into the parsed
// text (0-based); `line` is 1-based and only set by line-oriented parsers.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset(offset),
        line(line) {}

  std::size_t offset;
  std::size_t line;
};

class DegreeMismatch : public Error {
public:
  DegreeMismatch(int lhs, int rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class PointOutOfRange : public Error {
public:
  PointOutOfRange(int point, int degree)
      : Error("point " + std::to_string(point) + " out of range 1.." +
              std::to_string(degree)) {}
};

class OrderExceedsCap : public Error {
public:
  OrderExceedsCap(const std::string& order, std::uint64_t cap)
      : Error("group order " + order + " exceeds cap " + std::to_string(cap)) {}
};

class IndexExceedsCap : public Error {
public:
  IndexExceedsCap(const std::string& index, std::uint64_t cap)
      : Error("subgroup index " + index + " exceeds cap " +
              std::to_string(cap)) {}
};

class VertexCapExceeded : public Error {
public:
  VertexCapExceeded(std::size_t vertices, std::size_t cap)
      : Error("graph has " + std::to_string(vertices) +
              " vertices, cap is " + std::to_string(cap)) {}
};

class InvalidSpec : public Error {
public:
  explicit InvalidSpec(const std::string& what) : Error(what) {}
};

class InvalidConnectionSet : public InvalidSpec {
public:
  explicit InvalidConnectionSet(const std::string& what) : InvalidSpec(what) {}
};

class NotNormal : public Error {
public:
  explicit NotNormal(const std::string& what) : Error(what) {}
};

class NotAutomorphism : public Error {
public:
  explicit NotAutomorphism(const std::string& what) : Error(what) {}
};

class NotArcTransitive : public Error {
public:
  explicit NotArcTransitive(const std::string& what) : Error(what) {}
};

}  // namespace catg
