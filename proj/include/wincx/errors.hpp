#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wincx {

// Malformed construction parameters or unparseable input.
struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds an exactness cap (e.g. automorphism vertex cap).
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Product vertex count exceeds the configured cap.
struct SizeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vertex map that sends some arc to a non-arc, non-collapsed pair.
struct NotAMorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A geodesic certificate that does not cover the requested window.
struct RadiusTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal validator: a vertex map failed to carry simplices to simplices.
struct NotASimplicialMap : std::logic_error {
  using std::logic_error::logic_error;
};

// Mixing results computed over different coefficient fields.
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Coordinate space too small for the requested affine independence degree:
// k affinely independent points need at least k-1 ambient dimensions.
struct DimensionTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Search budget exhausted; carries the best bracket found so far.
struct Timeout : std::runtime_error {
  long long best_lower;
  long long best_upper;
  std::uint64_t nodes;
  Timeout(const std::string& what, long long lo, long long hi, std::uint64_t n)
      : std::runtime_error(what), best_lower(lo), best_upper(hi), nodes(n) {}
};

}  // namespace wincx
