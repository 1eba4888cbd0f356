#ifndef G2GAMMA_ERRORS_HPP
#define G2GAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2gamma {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input: zero denominators, unparsable expressions,
// schema violations, violated constructor invariants.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// A computation needs data the caller did not supply (e.g. the adjoint
// support of a GL2 atom). The message names the missing field.
class IncompleteInput : public Error {
 public:
  using Error::Error;
};

// Valid input outside what this release computes: ramified additive
// characters, non half-integral twists, exterior squares of large atoms,
// lifts of bare supercuspidal G2 data.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

// An internal identity failed. Seeing one of these is a bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace g2gamma

#endif  // G2GAMMA_ERRORS_HPP
