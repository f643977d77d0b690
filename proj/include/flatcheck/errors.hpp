#pragma once

#include <stdexcept>
#include <string>

namespace flatcheck {

// Base class of all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid ring descriptor: bad modulus, non-monic polynomial, composite
// characteristic, empty product, seq-of-seq.
struct ConstructionError : Error {
  using Error::Error;
};

// Malformed operation input: wrong vector length, non-canonical entry,
// ring mismatch, relation that does not hold.
struct InputError : Error {
  using Error::Error;
};

// A finite-support ideal reached an operation that only handles
// finitely generated bodies.
struct UnsupportedIdealError : Error {
  using Error::Error;
};

// The ideal admits no idempotent generator.
struct NoIdempotentGeneratorError : Error {
  using Error::Error;
};

// The module failed the flatness oracle where flatness is required.
struct NotFlatError : Error {
  using Error::Error;
};

// The operation requires a local ring.
struct NonLocalError : Error {
  using Error::Error;
};

// A stated precondition failed: non-injective embedding, ideal not inside
// the Jacobson radical, residue images dependent.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace flatcheck
