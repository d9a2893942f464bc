#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crosslab {

enum class ValidationKind : std::uint8_t {
  EmptyWord,
  TooShort,
  InvalidLabel,
  OddLength,
  Backtracking,
  NonPrimitive,
  NonGeodesicArc,
  InvalidHalfEdge,
};

inline const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::EmptyWord: return "EmptyWord";
    case ValidationKind::TooShort: return "TooShort";
    case ValidationKind::InvalidLabel: return "InvalidLabel";
    case ValidationKind::OddLength: return "OddLength";
    case ValidationKind::Backtracking: return "Backtracking";
    case ValidationKind::NonPrimitive: return "NonPrimitive";
    case ValidationKind::NonGeodesicArc: return "NonGeodesicArc";
    case ValidationKind::InvalidHalfEdge: return "InvalidHalfEdge";
  }
  return "Unknown";
}

// Rejected input word or arc. kind() names the failed check.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationKind kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  ValidationKind kind() const noexcept { return kind_; }

 private:
  ValidationKind kind_;
};

// An enumeration would materialize more classes than the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error("census cap exceeded: " + std::to_string(requested) + " > " +
                           std::to_string(cap)),
        requested_(requested), cap_(cap) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHyperbolicImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hyperbolic oracle did not stabilize; partial() is a lower bound.
class NotConverged : public std::runtime_error {
 public:
  NotConverged(const std::string& what, std::uint64_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

class InvalidSurface : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownContext : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace crosslab
