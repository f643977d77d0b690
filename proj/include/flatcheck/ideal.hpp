#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flatcheck/ring.hpp"

namespace flatcheck {

enum class IdealBody { Generators, FiniteSupport };

// Ideal of a ring: a finitely generated body given by a generator list, or
// the structural finite-support ideal {x : tail(x) = 0} of a seq ring. The
// finite-support body is a distinct variant because that ideal is not
// finitely generated; generator-list operations reject it.
struct Ideal {
  Ring ring;
  IdealBody body = IdealBody::Generators;
  std::vector<Elem> gens;

  static Ideal span(Ring R, std::vector<Elem> generators);
  static Ideal zero(Ring R) { return span(std::move(R), {}); }
  static Ideal unit(Ring R);
  static Ideal finite_support(Ring seq_ring);
};

// Sorted element indices of a finitely generated ideal over a finite ring.
std::vector<std::uint32_t> ideal_elements(const Ideal& I);

bool ideal_contains(const Ideal& I, const Elem& x);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_subset(const Ideal& I, const Ideal& J);
bool ideal_is_unit(const Ideal& I);
bool ideal_is_zero(const Ideal& I);

// I^2 = I as element sets.
bool is_idempotent_ideal(const Ring& R, const Ideal& I);

// First element e of I in ring enumeration order with e^2 = e and Re = I.
std::optional<Elem> try_idempotent_generator(const Ideal& I);
Elem idempotent_generator(const Ring& R, const Ideal& I);  // throws if none

// Greedy minimal generating subset, deterministic in enumeration order.
std::vector<Elem> minimal_generators(const Ideal& I);

// Reduced ideal spanned by the listed element indices.
Ideal ideal_from_indices(const Ring& R, const std::vector<std::uint32_t>& elems);

// Every ideal of a finite ring, cached per ring, in a deterministic order
// (breadth-first closure of the ideal lattice from (0)).
const std::vector<Ideal>& enumerate_ideals(const Ring& R);

// Greedy reduction of a spanning list of vectors in R^k to a minimal
// generating sublist (used for ideal generators and syzygy lists).
std::vector<std::vector<Elem>> reduce_span_generators(
    const Ring& R, std::size_t k, const std::vector<std::vector<Elem>>& vectors);

}  // namespace flatcheck
