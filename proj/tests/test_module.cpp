#include <doctest.h>

#include <set>

#include "flatcheck/module.hpp"

using namespace flatcheck;

namespace {

PresentedModule cyclic(const Ring& R, std::int64_t g) {
  return PresentedModule(R, 1, {{R.from_int(g)}});
}

}  // namespace

TEST_CASE("module construction and cardinality") {
  const Ring R = Ring::zmod(6);
  CHECK(free_module(R, 1).size() == 6);
  // Cosets of {0,2,4}: two of them.
  CHECK(cyclic(R, 2).size() == 2);
  CHECK(cyclic(R, 1).is_zero_module());
  CHECK(free_module(R, 0).is_zero_module());
  CHECK_THROWS_AS(PresentedModule(R, 2, {{R.one()}}), InputError);
}

TEST_CASE("coset arithmetic satisfies the counting identity") {
  for (const Ring& R : {Ring::zmod(6), Ring::zmod(8)}) {
    for_each_presented_module(R, 2, 1, [&](const PresentedModule& M) {
      std::uint64_t ambient = 1;
      for (std::size_t i = 0; i < M.generators(); ++i) ambient *= R.size();
      CHECK(M.size() * M.relation_span().size() == ambient);
    });
  }
}

TEST_CASE("annihilators") {
  const Ring R = Ring::zmod(6);
  // R/(2) (+) R/(3): r kills both cosets iff r in (2) cap (3) = 0.
  const PresentedModule M = direct_sum(cyclic(R, 2), cyclic(R, 3));
  CHECK(ideal_is_zero(annihilator(M)));
  CHECK(ideal_is_zero(annihilator(free_module(R, 1))));
  CHECK(ideal_equal(annihilator(cyclic(R, 2)), Ideal::span(R, {R.from_int(2)})));
}

TEST_CASE("tensor, direct sum, quotient") {
  const Ring R = Ring::zmod(6);
  CHECK(tensor(cyclic(R, 2), cyclic(R, 3)).is_zero_module());

  // M (x) R^1 keeps cardinality and annihilator.
  for (std::int64_t g : {0, 2, 3}) {
    const PresentedModule M = cyclic(R, g);
    const PresentedModule T = tensor(M, free_module(R, 1));
    CHECK(T.size() == M.size());
    CHECK(ideal_equal(annihilator(T), annihilator(M)));
  }

  const PresentedModule Q =
      quotient_by_ideal(free_module(R, 1), Ideal::span(R, {R.from_int(2)}));
  CHECK(Q.size() == cyclic(R, 2).size());
  CHECK(ideal_equal(annihilator(Q), annihilator(cyclic(R, 2))));

  CHECK_THROWS_AS(tensor(cyclic(R, 2), cyclic(Ring::zmod(4), 2)), InputError);
}

TEST_CASE("Nakayama generator counts over local rings") {
  const Ring R = Ring::zmod(4);
  CHECK(minimal_generators_local(free_module(R, 1)) == 1);
  CHECK(minimal_generators_local(cyclic(R, 2)) == 1);
  CHECK(minimal_generators_local(cyclic(R, 1)) == 0);
  CHECK_THROWS_AS(minimal_generators_local(free_module(Ring::zmod(6), 1)),
                  NonLocalError);
}

TEST_CASE("local freeness by cardinality") {
  const Ring R = Ring::zmod(4);
  const auto f1 = is_free_local(free_module(R, 1));
  CHECK(f1.free);
  CHECK(f1.rank == 1);
  CHECK_FALSE(is_free_local(cyclic(R, 2)).free);
  const auto f0 = is_free_local(cyclic(R, 1));
  CHECK(f0.free);
  CHECK(f0.rank == 0);
}

TEST_CASE("flatness oracle via tensor injectivity") {
  const Ring R4 = Ring::zmod(4);
  const auto& report = flatness_report(cyclic(R4, 2));
  CHECK_FALSE(report.flat);
  REQUIRE(report.failing_ideal.has_value());
  CHECK(ideal_equal(*report.failing_ideal, Ideal::span(R4, {R4.from_int(2)})));
  CHECK(report.tensor_count == 2);
  CHECK(report.image_count == 1);

  const Ring R6 = Ring::zmod(6);
  CHECK(flatness_oracle(cyclic(R6, 2)));
  CHECK(flatness_oracle(free_module(R6, 1)));
  CHECK(flatness_oracle(free_module(R4, 2)));
}

TEST_CASE("flatness witness: brute force reproduces the small instances") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M = free_module(R, 1);
  // 2 * 3 = 0 in Z/6.
  const auto w =
      flatness_witness_bruteforce(M, {R.from_int(2)}, {{R.from_int(3)}}, 1);
  REQUIRE(w.has_value());
  CHECK(verify_flatness_witness(M, *w));
  CHECK(w->coeffs == std::vector<std::vector<Elem>>{{R.from_int(3)}});
  CHECK(w->ys == std::vector<ModVec>{{R.from_int(1)}});

  const PresentedModule M2 = free_module(R, 2);
  const auto w2 = flatness_witness_bruteforce(
      M2, {R.from_int(3)}, {{R.from_int(2), R.from_int(0)}}, 2);
  REQUIRE(w2.has_value());
  CHECK(verify_flatness_witness(M2, *w2));
  CHECK(w2->coeffs == std::vector<std::vector<Elem>>{{R.from_int(2)}});
  CHECK(w2->ys == std::vector<ModVec>{{R.from_int(1), R.from_int(0)}});
}

TEST_CASE("flatness witness: constructive route verifies and cross-checks") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M = free_module(R, 1);
  const auto w = flatness_witness(M, {R.from_int(2)}, {{R.from_int(3)}});
  CHECK(verify_flatness_witness(M, w));

  // Zero relation: identity coefficients, same vectors.
  const auto wz = flatness_witness(M, {R.zero()}, {{R.from_int(5)}});
  CHECK(wz.coeffs == std::vector<std::vector<Elem>>{{R.one()}});
  CHECK(wz.ys == std::vector<ModVec>{{R.from_int(5)}});

  // A non-free flat module: R/(2) over Z/6 with 3 * 1 = 3 nonzero... use
  // the relation 3 * (coset of 3) = coset of 9 = coset of 1? Pick a real
  // relation: 2 annihilates the module, so 2 * generator = 0.
  const PresentedModule C = cyclic(R, 2);
  const auto wc = flatness_witness(C, {R.from_int(2)}, {C.generator(0)});
  CHECK(verify_flatness_witness(C, wc));

  CHECK_THROWS_AS(flatness_witness(M, {R.from_int(2)}, {{R.from_int(1)}}),
                  InputError);
  const Ring R4 = Ring::zmod(4);
  const PresentedModule N = cyclic(R4, 2);
  CHECK_THROWS_AS(
      flatness_witness(N, {R4.from_int(2)}, {N.generator(0)}), NotFlatError);
}

TEST_CASE("independence lifting over a local ring") {
  const Ring R = Ring::zmod(4);
  const PresentedModule M = free_module(R, 2);
  const ModVec e1{R.one(), R.zero()}, e2{R.zero(), R.one()};
  CHECK(independence_lift_check(M, {e1, e2}));

  // a * (1,2) = 0 forces a = 0: direct enumeration oracle.
  for (std::int64_t a = 1; a < 4; ++a) {
    const bool kills_both = (a * 1) % 4 == 0 && (a * 2) % 4 == 0;
    CHECK_FALSE(kills_both);
  }
  CHECK(independence_lift_check(M, {{R.one(), R.from_int(2)}}));

  CHECK_THROWS_AS(independence_lift_check(M, {{R.from_int(2), R.zero()}}),
                  PreconditionError);
  CHECK_THROWS_AS(independence_lift_check(free_module(Ring::zmod(6), 1), {}),
                  NonLocalError);
}

TEST_CASE("quotient annihilator comparison") {
  const Ring R = Ring::zmod(6);
  CHECK(quotient_annihilator_check(free_module(R, 1),
                                   Ideal::span(R, {R.from_int(2)})));
  CHECK(quotient_annihilator_check(cyclic(R, 2),
                                   Ideal::span(R, {R.from_int(3)})));
  // Non-flat module: the function reports the comparison truthfully.
  const Ring R4 = Ring::zmod(4);
  const Ideal J = Ideal::span(R4, {R4.from_int(2)});
  const PresentedModule N = cyclic(R4, 2);
  const bool lhs_equals_rhs = ideal_equal(annihilator(quotient_by_ideal(N, J)),
                                          ideal_sum(annihilator(N), J));
  CHECK(quotient_annihilator_check(N, J) == lhs_equals_rhs);
}

TEST_CASE("direct sum annihilator is the intersection") {
  const Ring R = Ring::zmod(12);
  for (std::int64_t a : {0, 2, 3, 4, 6})
    for (std::int64_t b : {0, 2, 3, 4, 6}) {
      const PresentedModule M = cyclic(R, a), N = cyclic(R, b);
      CHECK(ideal_equal(annihilator(direct_sum(M, N)),
                        ideal_intersection(annihilator(M), annihilator(N))));
    }
}

TEST_CASE("base change maps presentations through a ring map") {
  const Ring R = Ring::zmod(6);
  const Ring T = Ring::zmod(2);
  const RingMap phi = enumerate_ring_maps(R, T).at(0);
  const PresentedModule M = cyclic(R, 2);
  const PresentedModule MT = base_change(M, phi);
  CHECK(MT.ring() == T);
  // 2 maps to 0 in Z/2, so the quotient is free of rank 1 there.
  CHECK(MT.size() == 2);
  CHECK(ideal_is_zero(annihilator(MT)));
}
