#include <doctest.h>

#include "flatcheck/spectrum.hpp"

using namespace flatcheck;

namespace {

PresentedModule cyclic(const Ring& R, std::int64_t g) {
  return PresentedModule(R, 1, {{R.from_int(g)}});
}

}  // namespace

TEST_CASE("prime sites of the family rings") {
  const Ring R6 = Ring::zmod(6);
  const auto& sites6 = prime_sites(R6);
  REQUIRE(sites6.size() == 2);
  CHECK(ideal_equal(sites6[0].prime, Ideal::span(R6, {R6.from_int(2)})));
  CHECK(ideal_equal(sites6[1].prime, Ideal::span(R6, {R6.from_int(3)})));
  CHECK(sites6[0].residue_field.size() == 2);
  CHECK(sites6[1].residue_field.size() == 3);

  const Ring R4 = Ring::zmod(4);
  const auto& sites4 = prime_sites(R4);
  REQUIRE(sites4.size() == 1);
  CHECK(ideal_equal(sites4[0].prime, Ideal::span(R4, {R4.from_int(2)})));
  CHECK(sites4[0].residue_field.size() == 2);

  const Ring F4 = Ring::poly_quotient(2, {1, 1, 1});
  const auto& sitesF = prime_sites(F4);
  REQUIRE(sitesF.size() == 1);
  CHECK(ideal_is_zero(sitesF[0].prime));
  CHECK(sitesF[0].residue_field == F4);

  CHECK(prime_sites(Ring::zmod(12)).size() ==
        local_decomposition(Ring::zmod(12)).factors.size());
}

TEST_CASE("localization of modules at prime sites") {
  const Ring R = Ring::zmod(6);
  const auto& sites = prime_sites(R);
  const PresentedModule F = free_module(R, 1);
  for (const auto& p : sites) {
    const PresentedModule Fp = localize_module(F, p);
    const auto fl = is_free_local(Fp);
    CHECK(fl.free);
    CHECK(fl.rank == 1);
  }
  const PresentedModule M = cyclic(R, 2);
  // At (2): the relation becomes 0 and the module is the residue line.
  const PresentedModule M2 = localize_module(M, sites[0]);
  CHECK(M2.size() == 2);
  CHECK(is_free_local(M2).rank == 1);
  // At (3): 2 is a unit there and the generator dies.
  const PresentedModule M3 = localize_module(M, sites[1]);
  CHECK(M3.is_zero_module());
}

TEST_CASE("localized annihilator agreement") {
  const Ring R = Ring::zmod(6);
  const auto& sites = prime_sites(R);
  CHECK(localized_annihilator_check(cyclic(R, 2), sites[1]));
  CHECK(localized_annihilator_check(cyclic(R, 2), sites[0]));
  for (const auto& p : sites)
    CHECK(localized_annihilator_check(free_module(R, 1), p));
}

TEST_CASE("support computation") {
  const Ring R = Ring::zmod(6);
  CHECK(support_indices(free_module(R, 1)) == std::vector<std::size_t>{0, 1});
  CHECK(support_indices(cyclic(R, 2)) == std::vector<std::size_t>{0});
  CHECK(support_indices(cyclic(R, 1)).empty());
}

TEST_CASE("support is monotone under direct sums") {
  const Ring R = Ring::zmod(12);
  for (std::int64_t a : {0, 1, 2, 3, 4, 6})
    for (std::int64_t b : {0, 1, 2, 3, 4, 6}) {
      const PresentedModule M = cyclic(R, a), N = cyclic(R, b);
      auto lhs = support_indices(direct_sum(M, N));
      auto ma = support_indices(M), nb = support_indices(N);
      std::vector<std::size_t> rhs;
      std::set_union(ma.begin(), ma.end(), nb.begin(), nb.end(),
                     std::back_inserter(rhs));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rank maps over a finite ring are locally constant") {
  const Ring R = Ring::zmod(6);
  RankMap rm;
  rm.ring = R;
  rm.ranks = {1, 0};
  CHECK(is_locally_constant(rm));
  rm.ranks = {2, 2};
  CHECK(is_locally_constant(rm));
  rm.ranks = {1};
  CHECK_THROWS_AS(is_locally_constant(rm), InputError);
}
