// Acceptance suite: one line per criterion, exact arithmetic throughout,
// nonzero exit if anything fails or a runtime budget is blown.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "flatcheck/decide.hpp"
#include "flatcheck/json_io.hpp"
#include "flatcheck/suites.hpp"

using namespace flatcheck;

namespace {

struct Outcome {
  int number;
  std::string name;
  bool pass;
  double seconds;
  std::string detail;
};

std::vector<Outcome> outcomes;

template <class Fn>
void criterion(int number, const std::string& name, double budget_seconds,
               Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = fn();
    pass = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (pass && budget_seconds > 0 && secs > budget_seconds) {
    pass = false;
    detail += " [exceeded runtime budget]";
  }
  outcomes.push_back({number, name, pass, secs, detail});
  std::printf("criterion %2d (%s): %s (%.2fs%s%s)\n", number, name.c_str(),
              pass ? "PASS" : "FAIL", secs, detail.empty() ? "" : "; ",
              detail.c_str());
  std::fflush(stdout);
}

std::string require(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
  return message;
}

std::string run_named_suite(const std::string& name) {
  SuiteConfig cfg;
  const auto res = run_suite(name, cfg);
  if (!res.pass())
    throw Error("suite " + name + " failed: " + res.failures.front().dump());
  return std::to_string(res.instances) + " instances";
}

}  // namespace

int main() {
  const auto family = default_ring_family();

  // 1. Trichotomy and oracle equivalence over the exhaustive sweep.
  criterion(1, "th4 trichotomy & oracle equivalence", 300.0,
            [] { return run_named_suite("th4"); });

  // 2. Idempotent annihilators and invariant factors for flat modules, with
  //    the designated non-flat contrast.
  criterion(2, "idempotent annihilators & invariant factors", 300.0,
            [] { return run_named_suite("lemma3"); });

  // 3. Ann(M/JM) = Ann(M) + J on every flat instance and ideal.
  criterion(3, "quotient annihilator identity", 300.0,
            [] { return run_named_suite("lemma7"); });

  // 4. Localized annihilators and the exterior support formula.
  criterion(4, "localized annihilators & support formula", 300.0, [] {
    const std::string a = run_named_suite("lemma2");
    const std::string b = run_named_suite("remark040");
    return a + " + " + b;
  });

  // 5. Flat quotient criterion against the tensor oracle, all ideals.
  criterion(5, "flat quotient criterion cross-oracle", 300.0,
            [] { return run_named_suite("prop030"); });

  // 6. Random linear relations untangle through flatness witnesses.
  criterion(6, "linear relation witnesses", 60.0, [&family] {
    std::mt19937_64 rng(12345);
    std::size_t verified = 0;
    std::vector<std::pair<Ring, PresentedModule>> flats;
    for (const auto& R : family)
      for_each_presented_module(R, 2, 2, [&](const PresentedModule& M) {
        if (M.generators() > 0 && flatness_oracle(M)) flats.emplace_back(R, M);
      });
    require(!flats.empty(), "no flat modules found");
    while (verified < 150) {
      const auto& [R, M] = flats[rng() % flats.size()];
      const std::size_t n = 1 + rng() % 2;
      std::vector<ModVec> xs;
      for (std::size_t i = 0; i < n; ++i)
        xs.push_back(M.element_at(rng() % M.size()));
      // Solve for relation coefficients, then pick one solution at random.
      std::vector<std::vector<Elem>> solutions;
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < n; ++i) combos *= R.size();
      for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t x = c;
        std::vector<Elem> a;
        ModVec acc = M.zero_element();
        for (std::size_t i = 0; i < n; ++i) {
          a.push_back(R.element_at(x % R.size()));
          x /= R.size();
          acc = M.add(acc, M.scale(a.back(), xs[i]));
        }
        if (M.is_zero_element(acc)) solutions.push_back(std::move(a));
      }
      if (solutions.empty()) continue;
      const auto& a = solutions[rng() % solutions.size()];
      const FlatnessWitness w = flatness_witness(M, a, xs);
      require(verify_flatness_witness(M, w), "witness failed re-verification");
      ++verified;
    }
    return std::to_string(verified) + " witnesses verified";
  });

  // 7. Independence lifting over local rings.
  criterion(7, "independence lifting", 300.0,
            [] { return run_named_suite("theorem1"); });

  // 8. Descent: ring extensions, radical quotients, kernel-in-radical maps,
  //    and pointwise localizations.
  criterion(8, "descent suites", 300.0, [&family] {
    const std::string a = run_named_suite("th6");
    const std::string b = run_named_suite("th3");
    std::size_t pointwise_instances = 0;
    for (const auto& R : family) {
      std::vector<PresentedModule> flats;
      for_each_presented_module(R, 2, 1, [&](const PresentedModule& M) {
        if (flatness_oracle(M)) flats.push_back(M);
      });
      // Subset generator: every singleton, plus a few pairs.
      std::vector<std::vector<Elem>> subsets;
      for (std::uint64_t s = 0; s < R.size(); ++s)
        subsets.push_back({R.element_at(s)});
      subsets.push_back({R.zero(), R.one()});
      if (R.size() > 2)
        subsets.push_back({R.element_at(2), R.element_at(R.size() - 1)});
      for (const auto& M : flats)
        for (const auto& S : subsets) {
          require(pointwise_descent_check(R, S, M),
                  "pointwise descent implication failed");
          ++pointwise_instances;
        }
    }
    return a + " + " + b + " + " + std::to_string(pointwise_instances) +
           " pointwise instances";
  });

  // 9. Pointwise localization relations, kernel bound, universal property.
  criterion(9, "pointwise localization universal property", 300.0,
            [] { return run_named_suite("pointwise"); });

  // 10. The flat non-projective certificate and the S-ring contrast.
  criterion(10, "example 1 certificate & s-ring verdicts", 60.0, [&family] {
    const auto cert = example1_certificate(Ring::zmod(2), 200, 7);
    require(cert.valid, "certificate is not VALID");
    require(cert.flat_samples.size() == 200, "expected 200 flatness triples");
    for (const auto& t : cert.flat_samples)
      require(verify_flat_triple(cert.seq_ring, t), "triple re-check failed");
    std::size_t random_refutations = 0;
    for (const auto& r : cert.refutations) {
      require(verify_refutation(cert.seq_ring, r), "refutation re-check failed");
      ++random_refutations;
    }
    require(random_refutations >= 200, "expected at least 200 refutations");

    const auto seq_verdict = is_s_ring(Ring::seq(Ring::zmod(2)), 2, 2);
    require(!seq_verdict.s_ring, "seq ring wrongly judged an S-ring");
    require(seq_verdict.certificate.has_value() && seq_verdict.certificate->valid,
            "missing certificate");
    for (const auto& R : family) {
      const auto v = is_s_ring(R, 2, 2);
      require(v.s_ring, R.describe() + " wrongly judged not an S-ring");
    }
    return std::to_string(cert.flat_samples.size()) + " triples, " +
           std::to_string(cert.refutations.size()) + " refutations";
  });

  int failures = 0;
  for (const auto& o : outcomes)
    if (!o.pass) ++failures;
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all %zu criteria passed\n", outcomes.size());
  return failures ? 1 : 0;
}
