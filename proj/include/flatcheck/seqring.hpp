#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/ring.hpp"

namespace flatcheck {

// The ring of eventually constant sequences over a finite base ring: a
// computable subring of the infinite power that still contains the
// finite-support ideal I = { x : tail(x) = 0 } and exhibits R/I as a
// finitely generated flat module that is not projective.

// Canonical eventually constant sequence from prefix and tail.
Elem seq_element(const Ring& seq_ring, std::vector<Elem> prefix, Elem tail);

// tail(x) = 0, i.e. membership in the finite-support ideal.
bool in_finite_support_ideal(const Ring& seq_ring, const Elem& x);

// Triple (f, g, h) with g * f = 0, h in I, g + h = 1.
struct FlatTriple {
  Elem f, g, h;
};

// The complement-indicator construction: g vanishes on the support of f and
// is 1 elsewhere; h = 1 - g. All three identities are re-verified.
FlatTriple example1_flat_witness(const Ring& seq_ring, const Elem& f);

bool verify_flat_triple(const Ring& seq_ring, const FlatTriple& t);

struct QuotientFlatnessReport {
  Ring seq_ring;
  std::uint64_t seed = 0;
  std::vector<FlatTriple> triples;
  bool all_verified = false;
};

// Seeded random f in I (prefix length <= 16), each run through the witness
// construction and re-verified.
QuotientFlatnessReport quotient_flatness_suite(const Ring& base,
                                               std::size_t samples,
                                               std::uint64_t seed);

enum class RefutationKind { NotInIdeal, TooSmall };

// Why a given idempotent e cannot generate the finite-support ideal: either
// e has a nonzero tail (so e lies outside I), or e has finite support and
// the delta sequence just past its prefix is in I but not in Re.
struct Refutation {
  Elem candidate;
  RefutationKind kind = RefutationKind::NotInIdeal;
  std::optional<Elem> witness;           // TooSmall: element of I \ Re
  std::optional<std::size_t> coordinate; // TooSmall: index where Re fails
};

Refutation refute_idempotent_generator(const Ring& seq_ring, const Elem& e);

// Independent structural re-verification of a refutation.
bool verify_refutation(const Ring& seq_ring, const Refutation& r);

// Finitely many generators inside I have bounded support; the delta
// sequence past the longest prefix witnesses that they cannot span I.
Elem finite_support_generation_witness(const Ring& seq_ring,
                                       const std::vector<Elem>& gens);

struct StructuralCase {
  std::string description;
  std::uint64_t instances_checked = 0;
  bool verified = false;
};

struct Example1Certificate {
  Ring base;
  Ring seq_ring;
  std::string adaptation;  // "eventually-constant subring"
  std::vector<FlatTriple> flat_samples;
  std::vector<Refutation> refutations;
  StructuralCase tail_nonzero_case;
  StructuralCase tail_zero_case;
  bool valid = false;
};

// Machine-checked certificate that R/I over seq(base) is finitely generated,
// flat, and not projective: sampled flatness triples plus refutations of a
// structured family of idempotent candidates and seeded random idempotents.
Example1Certificate example1_certificate(const Ring& base, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace flatcheck
