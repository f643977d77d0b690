#pragma once

#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/ring.hpp"

namespace flatcheck {

// One local factor of a finite ring: the piece R*e cut out by a primitive
// idempotent e, realized as a ring of its own with the projection R -> Re
// and the section picking x*e back out of R.
struct LocalFactor {
  Ring ring;
  RingMap projection;  // R -> factor
  RingMap section;     // factor -> R; projection o section = id, and the
                       // other projections of a section image are zero
  Elem idempotent;     // the primitive idempotent of R
  Ideal max_ideal;     // maximal ideal of the factor (its non-units)
};

struct LocalDecomposition {
  Ring ring;
  std::vector<LocalFactor> factors;

  // CRT inverse: the unique x with projection_i(x) = parts[i] for all i.
  Elem recombine(const std::vector<Elem>& parts) const;
};

// Complete set of local factors of a finite ring, ordered by the enumeration
// index of their primitive idempotents. Cached per ring; the decomposition is
// verified on construction (orthogonality, idempotent sum, CRT bijectivity,
// single maximal ideal per factor).
const LocalDecomposition& local_decomposition(const Ring& R);

bool is_local_ring(const Ring& R);

// Intersection of the maximal ideals, as a reduced generator list.
Ideal jacobson_radical(const Ring& R);

// Set of nilpotent elements, as a reduced generator list.
Ideal nilradical(const Ring& R);

// Quotient of a local zmod/poly factor ring by the span of the given
// elements (must be a proper ideal). Returns the quotient ring and the
// quotient map.
struct FactorQuotient {
  Ring ring;
  RingMap map;
};
FactorQuotient quotient_local_factor(const Ring& factor,
                                     const std::vector<Elem>& ideal_gens);

}  // namespace flatcheck
