#include <doctest.h>

#include "flatcheck/exterior.hpp"

using namespace flatcheck;

namespace {

PresentedModule cyclic(const Ring& R, std::int64_t g) {
  return PresentedModule(R, 1, {{R.from_int(g)}});
}

std::uint64_t binom(std::uint64_t k, std::uint64_t n) {
  if (n > k) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) r = r * (k - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("exterior powers of free modules are free of binomial rank") {
  for (const Ring& R : {Ring::zmod(6), Ring::zmod(4),
                        Ring::poly_quotient(2, {1, 1, 1})}) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const PresentedModule F = free_module(R, k);
      for (std::size_t n = 0; n <= k; ++n) {
        const PresentedModule L = exterior_power(F, n);
        CHECK(L.generators() == binom(k, n));
        std::uint64_t expect = 1;
        for (std::uint64_t i = 0; i < binom(k, n); ++i) expect *= R.size();
        CHECK(L.size() == expect);
        CHECK(ideal_is_zero(annihilator(L)));
      }
      CHECK(exterior_power(F, k + 1).is_zero_module());
    }
  }
}

TEST_CASE("exterior squares of small sums") {
  const Ring R = Ring::zmod(6);
  // Lambda^2(R/(2) (+) R/(3)) has one generator killed by both 2 and 3.
  const PresentedModule A = direct_sum(cyclic(R, 2), cyclic(R, 3));
  CHECK(exterior_power(A, 2).is_zero_module());

  // Lambda^2(R/(2) (+) R/(2)) keeps the cross term with annihilator (2).
  const PresentedModule B = direct_sum(cyclic(R, 2), cyclic(R, 2));
  const PresentedModule L = exterior_power(B, 2);
  CHECK_FALSE(L.is_zero_module());
  CHECK(ideal_equal(annihilator(L), Ideal::span(R, {R.from_int(2)})));

  CHECK(exterior_power(B, 1).size() == B.size());
  CHECK(exterior_power(B, 0).size() == R.size());
}

TEST_CASE("invariant factors") {
  const Ring R = Ring::zmod(6);
  CHECK(ideal_is_zero(invariant_factor(free_module(R, 1), 1)));
  CHECK(ideal_is_unit(invariant_factor(free_module(R, 1), 2)));
  const PresentedModule M = direct_sum(free_module(R, 1), cyclic(R, 2));
  CHECK(ideal_equal(invariant_factor(M, 2), Ideal::span(R, {R.from_int(2)})));
  CHECK(ideal_is_unit(invariant_factor(cyclic(R, 1), 1)));
}

TEST_CASE("fitting ideals from presentation minors") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M = cyclic(R, 2);
  CHECK(ideal_equal(fitting_ideal(M, 0), Ideal::span(R, {R.from_int(2)})));
  CHECK(ideal_is_unit(fitting_ideal(M, 1)));

  const PresentedModule F = free_module(R, 1);
  CHECK(ideal_is_zero(fitting_ideal(F, 0)));
  CHECK(ideal_is_unit(fitting_ideal(F, 1)));

  // diag(2, 3): Fitt_0 = (6) = (0), Fitt_1 = (2, 3) = R.
  const PresentedModule D = direct_sum(cyclic(R, 2), cyclic(R, 3));
  CHECK((2 * 3) % 6 == 0);
  CHECK(ideal_is_zero(fitting_ideal(D, 0)));
  CHECK(ideal_is_unit(fitting_ideal(D, 1)));
}

TEST_CASE("rank maps of flat modules") {
  const Ring R = Ring::zmod(6);
  const RankMap r1 = rank_map(free_module(R, 1));
  CHECK(r1.ranks == std::vector<std::size_t>{1, 1});
  const RankMap r2 = rank_map(cyclic(R, 2));
  CHECK(r2.ranks == std::vector<std::size_t>{1, 0});
  CHECK_THROWS_AS(rank_map(cyclic(Ring::zmod(4), 2)), NotFlatError);
}

TEST_CASE("support formula for exterior powers") {
  const Ring R = Ring::zmod(6);
  CHECK(support_formula_check(free_module(R, 1), 1));
  CHECK(support_formula_check(cyclic(R, 2), 1));
  CHECK(support_formula_check(cyclic(R, 2), 2));
}

TEST_CASE("exterior power commutes with localization on invariants") {
  const Ring R = Ring::zmod(6);
  const auto& sites = prime_sites(R);
  for (std::int64_t g : {0, 2, 3}) {
    const PresentedModule M = direct_sum(cyclic(R, g), free_module(R, 1));
    for (std::size_t n = 0; n <= M.generators(); ++n) {
      const PresentedModule L = exterior_power(M, n);
      for (const auto& p : sites) {
        const PresentedModule a = localize_module(L, p);
        const PresentedModule b = exterior_power(localize_module(M, p), n);
        CHECK(a.size() == b.size());
        CHECK(ideal_equal(annihilator(a), annihilator(b)));
      }
    }
  }
}

TEST_CASE("fitting strata agree with rank strata on flat modules") {
  for (const Ring& R : {Ring::zmod(6), Ring::zmod(12)}) {
    for_each_presented_module(R, 2, 1, [&](const PresentedModule& M) {
      if (!flatness_oracle(M)) return;
      const RankMap rm = rank_map(M);
      const auto& sites = prime_sites(R);
      for (std::size_t n = 0; n <= M.generators(); ++n) {
        // p has rank >= n iff Fitt_{n-1} vanishes at p (for flat modules).
        const Ideal fit = n == 0 ? Ideal::zero(R) : fitting_ideal(M, n - 1);
        for (std::size_t i = 0; i < sites.size(); ++i) {
          const bool fit_vanishes = ideal_is_zero(localize_ideal(fit, sites[i]));
          CHECK(fit_vanishes == (rm.ranks[i] >= n));
        }
      }
    });
  }
}
