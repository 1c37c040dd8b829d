#pragma once

#include <stdexcept>
#include <string>

namespace weyltab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid rank/p configuration, or elements of mismatched rank combined.
struct RankError : Error {
  using Error::Error;
};

// Bad vector length, or a weight whose sum-zero representative is not
// integral (i.e. the weight is outside the root lattice).
struct WeightError : Error {
  using Error::Error;
};

// A weight that is not in the dot orbit of -2*rho (recovery of the affine
// element failed: residues do not form a permutation, or round trip broke).
struct OrbitError : Error {
  using Error::Error;
};

// Element is not maximal in its right W_f-coset.
struct NotInWplusError : Error {
  using Error::Error;
};

// Subword oracle invoked beyond its configured length bound.
struct BoundError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct CacheError : Error {
  enum class Kind { io, version, mismatch, corrupt };
  Kind kind;
  CacheError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

}  // namespace weyltab
