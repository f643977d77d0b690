#include <doctest.h>

#include "flatcheck/json_io.hpp"
#include "flatcheck/report.hpp"
#include "flatcheck/suites.hpp"

using namespace flatcheck;

TEST_CASE("ring descriptors round-trip") {
  for (const Ring& R : default_ring_family()) {
    const json j = ring_to_json(R);
    CHECK(ring_from_json(j) == R);
  }
  const Ring S = Ring::seq(Ring::zmod(2));
  CHECK(ring_from_json(ring_to_json(S)) == S);
  CHECK(ring_to_json(Ring::zmod(6)) == json{{"kind", "zmod"}, {"n", 6}});
  CHECK(ring_to_json(Ring::poly_quotient(2, {0, 1, 1})) ==
        json{{"kind", "poly_quotient"}, {"p", 2}, {"f", {0, 1, 1}}});
}

TEST_CASE("elements round-trip, including seq encodings") {
  for (const Ring& R : default_ring_family()) {
    for (std::uint64_t i = 0; i < R.size(); ++i) {
      const Elem e = R.element_at(i);
      CHECK(elem_from_json(R, elem_to_json(R, e)) == e);
    }
  }
  const Ring S = Ring::seq(Ring::zmod(2));
  const Elem e = Elem::seq({S.seq_base().one()}, S.seq_base().zero());
  const json j = elem_to_json(S, e);
  CHECK(j["prefix"] == json::array({1}));
  CHECK(j["tail"] == 0);
  CHECK(elem_from_json(S, j) == e);
}

TEST_CASE("module documents round-trip") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M(R, 2,
                          {{R.from_int(2), R.zero()}, {R.zero(), R.from_int(3)}});
  const PresentedModule back = module_from_json(module_to_json(M));
  CHECK(back == M);
}

TEST_CASE("parse failures name the offending field") {
  CHECK_THROWS_WITH_AS(ring_from_json(json{{"n", 6}}),
                       doctest::Contains("kind"), InputError);
  CHECK_THROWS_AS(ring_from_json(json{{"kind", "zmod"}, {"n", 1}}),
                  ConstructionError);
  CHECK_THROWS_WITH_AS(ring_from_json(json{{"kind", "hyperreal"}}),
                       doctest::Contains("kind"), InputError);
  const Ring R = Ring::zmod(6);
  CHECK_THROWS_WITH_AS(elem_from_json(R, json(7)),
                       doctest::Contains("element"), InputError);
  CHECK_THROWS_WITH_AS(
      module_from_json(json{{"ring", ring_to_json(R)}, {"generators", 1}}),
      doctest::Contains("relations"), InputError);
}

TEST_CASE("analysis reports are deterministic and round-trip") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M(R, 1, {{R.from_int(2)}});
  const auto r1 = analyze_module(M, 8);
  const auto r2 = analyze_module(M, 8);
  CHECK(r1.document.dump() == r2.document.dump());
  CHECK(json::parse(r1.document.dump()) == r1.document);
  CHECK(r1.document["schema"] == "flatcheck/1");
  CHECK(r1.document["cardinality"] == 2);
  CHECK(r1.document["flatness"]["flat"] == true);
  CHECK(r1.document["projectivity"]["status"] == "projective");
  // I_1 = (2) with idempotent generator 4.
  const auto& f1 = r1.document["invariant_factors"][0];
  CHECK(f1["n"] == 1);
  CHECK(f1["idempotent"] == true);
  CHECK(f1["idempotent_generator"] == 4);
  // Rank map {(2) -> 1, (3) -> 0}.
  CHECK(r1.document["rank_map"][0]["rank"] == 1);
  CHECK(r1.document["rank_map"][1]["rank"] == 0);
  // The text rendering is derived from the document alone.
  const std::string text = render_analysis_text(r1.document);
  CHECK(text.find("projective: yes") != std::string::npos);
}

TEST_CASE("analysis of a non-flat module reports the witness ideal") {
  const Ring R = Ring::zmod(4);
  const PresentedModule M(R, 1, {{R.from_int(2)}});
  const auto r = analyze_module(M, 8);
  CHECK(r.document["flatness"]["flat"] == false);
  CHECK(r.document["flatness"]["failing_ideal"] == json::array({2}));
  CHECK(r.document["flatness"]["tensor_count"] == 2);
  CHECK(r.document["flatness"]["image_count"] == 1);
  CHECK(r.document["projectivity"]["status"] == "not_projective");
  CHECK_FALSE(r.document.contains("rank_map"));
  const std::string text = render_analysis_text(r.document);
  CHECK(text.find("projective: no") != std::string::npos);
}

TEST_CASE("zero module analysis") {
  const Ring R = Ring::zmod(6);
  const PresentedModule M(R, 1, {{R.one()}});
  const auto r = analyze_module(M, 8);
  CHECK(r.document["cardinality"] == 1);
  CHECK(r.document["flatness"]["flat"] == true);
  CHECK(r.document["projectivity"]["status"] == "projective");
  CHECK(r.document["rank_map"][0]["rank"] == 0);
  CHECK(r.document["rank_map"][1]["rank"] == 0);
}

TEST_CASE("suite results serialize with the schema tag") {
  SuiteConfig cfg;
  cfg.rings = {Ring::zmod(4)};
  cfg.gen_bound = 1;
  cfg.rel_bound = 1;
  const auto res = run_suite("prop030", cfg);
  const json j = suite_result_to_json(res);
  CHECK(j["schema"] == "flatcheck/1");
  CHECK(j["suite"] == "prop030");
  CHECK(j["pass"] == true);

  const json cfg_json = {{"rings", json::array({ring_to_json(Ring::zmod(4))})},
                         {"gen_bound", 1},
                         {"rel_bound", 1},
                         {"seed", 5},
                         {"samples", 10}};
  const SuiteConfig parsed = suite_config_from_json(cfg_json);
  CHECK(parsed.rings.size() == 1);
  CHECK(parsed.gen_bound == 1);
  CHECK(parsed.seed == 5);
}
