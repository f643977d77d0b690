#include <doctest.h>

#include <algorithm>
#include <set>

#include "flatcheck/ideal.hpp"
#include "flatcheck/local.hpp"

using namespace flatcheck;

namespace {

Ideal principal(const Ring& R, std::int64_t g) {
  return Ideal::span(R, {R.from_int(g)});
}

std::set<std::int64_t> residues(const Ideal& I) {
  std::set<std::int64_t> out;
  for (auto i : ideal_elements(I))
    out.insert(I.ring.element_at(i).residue_value());
  return out;
}

}  // namespace

TEST_CASE("ideal arithmetic over zmod(6)") {
  const Ring R = Ring::zmod(6);
  // (2) + (3) is everything: 2*2 + 3*1 = 7 = 1.
  std::set<std::int64_t> sums;
  for (std::int64_t a = 0; a < 6; ++a)
    for (std::int64_t b = 0; b < 6; ++b) sums.insert((2 * a + 3 * b) % 6);
  CHECK(sums.size() == 6);
  const Ideal total = ideal_sum(principal(R, 2), principal(R, 3));
  CHECK(ideal_is_unit(total));
  CHECK(ideal_elements(total).size() == 6);

  // (2) intersect (3) = (0).
  CHECK(residues(principal(R, 2)) == std::set<std::int64_t>{0, 2, 4});
  CHECK(residues(principal(R, 3)) == std::set<std::int64_t>{0, 3});
  const Ideal meet = ideal_intersection(principal(R, 2), principal(R, 3));
  CHECK(ideal_is_zero(meet));

  // I + (0) = I.
  for (std::int64_t g = 0; g < 6; ++g)
    CHECK(ideal_equal(ideal_sum(principal(R, g), Ideal::zero(R)), principal(R, g)));
}

TEST_CASE("idempotent ideals") {
  const Ring R6 = Ring::zmod(6);
  // (2)^2 = (4) = (2): 4 generates {0,4,2}.
  CHECK(residues(principal(R6, 4)) == std::set<std::int64_t>{0, 2, 4});
  CHECK(is_idempotent_ideal(R6, principal(R6, 2)));

  const Ring R4 = Ring::zmod(4);
  CHECK((2 * 2) % 4 == 0);
  CHECK_FALSE(is_idempotent_ideal(R4, principal(R4, 2)));

  CHECK(is_idempotent_ideal(R6, Ideal::zero(R6)));
  CHECK(is_idempotent_ideal(R4, Ideal::zero(R4)));
}

TEST_CASE("idempotent generators are found in enumeration order") {
  const Ring R6 = Ring::zmod(6);
  const Ideal I = principal(R6, 2);
  // Brute-force oracle: first element e of (2) with e^2 = e and (e) = (2).
  std::int64_t expected = -1;
  const auto target = residues(I);
  for (std::int64_t e = 0; e < 6 && expected < 0; ++e) {
    if (target.count(e) == 0) continue;
    if ((e * e) % 6 != e) continue;
    if (residues(principal(R6, e)) == target) expected = e;
  }
  CHECK(expected == 4);
  CHECK(idempotent_generator(R6, I) == R6.from_int(4));

  CHECK(idempotent_generator(R6, Ideal::zero(R6)) == R6.zero());

  const Ring R4 = Ring::zmod(4);
  CHECK_THROWS_AS(idempotent_generator(R4, principal(R4, 2)),
                  NoIdempotentGeneratorError);
  CHECK_FALSE(try_idempotent_generator(principal(R4, 2)).has_value());
}

TEST_CASE("finite-support ideals are rejected outside seq machinery") {
  const Ring S = Ring::seq(Ring::zmod(2));
  const Ideal I = Ideal::finite_support(S);
  CHECK_THROWS_AS(ideal_elements(I), UnsupportedIdealError);
  CHECK_THROWS_AS(ideal_sum(I, I), UnsupportedIdealError);
  // Membership is still decidable: tail must vanish.
  CHECK(ideal_contains(I, S.zero()));
  CHECK_FALSE(ideal_contains(I, S.one()));
}

TEST_CASE("local decomposition of zmod(12)") {
  const Ring R = Ring::zmod(12);
  // Oracle: idempotents of Z/12 by direct search, primitives by divisibility
  // in the idempotent lattice.
  std::set<std::int64_t> idems;
  for (std::int64_t x = 0; x < 12; ++x)
    if ((x * x) % 12 == x) idems.insert(x);
  CHECK(idems == std::set<std::int64_t>{0, 1, 4, 9});

  const auto& dec = local_decomposition(R);
  REQUIRE(dec.factors.size() == 2);
  std::set<std::int64_t> primitive;
  for (const auto& f : dec.factors) primitive.insert(f.idempotent.residue_value());
  CHECK(primitive == std::set<std::int64_t>{4, 9});
  // 9 + 4 = 13 = 1 and 9 * 4 = 36 = 0.
  CHECK((9 + 4) % 12 == 1);
  CHECK((9 * 4) % 12 == 0);
  std::multiset<std::uint64_t> sizes;
  for (const auto& f : dec.factors) sizes.insert(f.ring.size());
  CHECK(sizes == std::multiset<std::uint64_t>{3, 4});

  // CRT round trip on every element.
  for (std::uint64_t x = 0; x < 12; ++x) {
    std::vector<Elem> parts;
    for (const auto& f : dec.factors)
      parts.push_back(f.ring.element_at(
          f.projection.apply_idx(static_cast<std::uint32_t>(x))));
    CHECK(dec.recombine(parts) == R.element_at(x));
  }
}

TEST_CASE("local decomposition of a local ring is itself") {
  const auto& dec = local_decomposition(Ring::zmod(4));
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0].ring == Ring::zmod(4));
  CHECK(dec.factors[0].idempotent == Ring::zmod(4).one());
}

TEST_CASE("poly quotient with split modulus decomposes") {
  const Ring R = Ring::poly_quotient(2, {0, 1, 1});  // F_2[x]/(x^2+x)
  const auto& dec = local_decomposition(R);
  REQUIRE(dec.factors.size() == 2);
  for (const auto& f : dec.factors) CHECK(f.ring.size() == 2);
}

TEST_CASE("jacobson radicals") {
  // Oracle for Z/12: intersect the maximal ideals (2) and (3).
  std::set<std::int64_t> expect;
  for (std::int64_t x = 0; x < 12; ++x)
    if (x % 2 == 0 && x % 3 == 0) expect.insert(x);
  CHECK(expect == std::set<std::int64_t>{0, 6});
  const Ring R12 = Ring::zmod(12);
  CHECK(ideal_equal(jacobson_radical(R12), principal(R12, 6)));

  const Ring R4 = Ring::zmod(4);
  CHECK(ideal_equal(jacobson_radical(R4), principal(R4, 2)));

  CHECK(ideal_is_zero(jacobson_radical(Ring::zmod(3))));
  CHECK(ideal_is_zero(jacobson_radical(Ring::poly_quotient(2, {1, 1, 1}))));
}

TEST_CASE("nilradical of zmod(12)") {
  const Ring R = Ring::zmod(12);
  std::set<std::int64_t> nil;
  for (std::int64_t x = 0; x < 12; ++x) {
    std::int64_t p = 1;
    bool failed = true;
    for (int k = 0; k < 12; ++k) {
      p = (p * x) % 12;
      if (p == 0) failed = false;
    }
    if (!failed) nil.insert(x);
  }
  CHECK(nil == std::set<std::int64_t>{0, 6});
  CHECK(ideal_equal(nilradical(R), principal(R, 6)));
}

TEST_CASE("ideal lattice enumeration matches divisors of n") {
  const Ring R = Ring::zmod(12);
  const auto& ideals = enumerate_ideals(R);
  CHECK(ideals.size() == 6);  // one per divisor of 12
  std::set<std::size_t> sizes;
  for (const auto& I : ideals) sizes.insert(ideal_elements(I).size());
  CHECK(sizes == std::set<std::size_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("ideal algebra laws hold exhaustively on family rings") {
  for (const Ring& R : {Ring::zmod(6), Ring::zmod(8),
                        Ring::product({Ring::zmod(2), Ring::zmod(4)})}) {
    const auto& ideals = enumerate_ideals(R);
    for (const auto& I : ideals)
      for (const auto& J : ideals) {
        CHECK(ideal_equal(ideal_sum(I, J), ideal_sum(J, I)));
        CHECK(ideal_equal(ideal_product(I, J), ideal_product(J, I)));
        for (const auto& K : ideals) {
          CHECK(ideal_equal(ideal_sum(ideal_sum(I, J), K),
                            ideal_sum(I, ideal_sum(J, K))));
          CHECK(ideal_equal(ideal_product(ideal_product(I, J), K),
                            ideal_product(I, ideal_product(J, K))));
          CHECK(ideal_equal(ideal_product(I, ideal_sum(J, K)),
                            ideal_sum(ideal_product(I, J), ideal_product(I, K))));
        }
      }
  }
}

TEST_CASE("every idempotent ideal of a family ring has an idempotent generator") {
  for (const Ring& R : {Ring::zmod(4), Ring::zmod(6), Ring::zmod(8),
                        Ring::zmod(9), Ring::zmod(12),
                        Ring::poly_quotient(2, {0, 0, 1}),
                        Ring::poly_quotient(2, {1, 1, 1}),
                        Ring::product({Ring::zmod(2), Ring::zmod(4)})}) {
    for (const Ideal& I : enumerate_ideals(R)) {
      if (!is_idempotent_ideal(R, I)) {
        CHECK_FALSE(try_idempotent_generator(I).has_value());
        continue;
      }
      const Elem e = idempotent_generator(R, I);
      CHECK(R.mul(e, e) == e);
      CHECK(ideal_equal(Ideal::span(R, {e}), I));
    }
  }
}

TEST_CASE("units are exactly the elements invertible in every local factor") {
  for (const Ring& R : {Ring::zmod(12), Ring::poly_quotient(2, {0, 1, 1}),
                        Ring::product({Ring::zmod(2), Ring::zmod(4)})}) {
    const auto& dec = local_decomposition(R);
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      bool all_units = true;
      for (const auto& f : dec.factors)
        all_units = all_units &&
                    f.ring.unit_idx(f.projection.apply_idx(static_cast<std::uint32_t>(x)));
      CHECK(R.is_unit(R.element_at(x)) == all_units);
    }
  }
}
