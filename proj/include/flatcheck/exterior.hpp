#pragma once

#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/spectrum.hpp"

namespace flatcheck {

// Presentation of an exterior power: generators are the n-subsets of the
// source generator indices in lexicographic order; for every source relation
// a and (n-1)-subset T the wedge relation
//   sum_{i not in T} sign(i, T) a_i e_{T u {i}},  sign(i, T) = (-1)^{#{t in T : t < i}}
// is included.
struct ExteriorPresentation {
  PresentedModule source;
  std::size_t degree = 0;
  PresentedModule result;
  std::vector<std::vector<std::size_t>> subsets;  // generator index sets
};

ExteriorPresentation exterior_presentation(const PresentedModule& M,
                                           std::size_t n);

// n = 0 gives R^1, n = 1 gives M back, n > generator count gives the zero
// module.
PresentedModule exterior_power(const PresentedModule& M, std::size_t n);

// I_n(M) = Ann(Lambda^n M).
Ideal invariant_factor(const PresentedModule& M, std::size_t n);

// Ideal of (k - n) x (k - n) minors of the presentation matrix; the unit
// ideal when k - n <= 0, the zero ideal when the matrix has no minor that
// large.
Ideal fitting_ideal(const PresentedModule& M, std::size_t n);

// Free rank of every localization; defined only for flat modules (throws
// NotFlatError otherwise, matching the scope of the notion).
RankMap rank_map(const PresentedModule& M);

// Supp(Lambda^n M) = { p : rank at p >= n }, checked as a set equality.
bool support_formula_check(const PresentedModule& M, std::size_t n);

}  // namespace flatcheck
