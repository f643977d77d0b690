#include "flatcheck/suites.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "parallel.hpp"

namespace flatcheck {

std::vector<Ring> default_ring_family() {
  return {Ring::zmod(4),
          Ring::zmod(6),
          Ring::zmod(8),
          Ring::zmod(9),
          Ring::zmod(12),
          Ring::poly_quotient(2, {0, 0, 1}),   // F_2[x]/(x^2)
          Ring::poly_quotient(2, {1, 1, 1}),   // F_4
          Ring::product({Ring::zmod(2), Ring::zmod(4)})};
}

std::vector<Ring> small_target_rings() {
  return {Ring::zmod(2),
          Ring::zmod(3),
          Ring::zmod(4),
          Ring::zmod(6),
          Ring::zmod(8),
          Ring::zmod(9),
          Ring::poly_quotient(2, {0, 0, 1}),
          Ring::poly_quotient(2, {1, 1, 1}),
          Ring::product({Ring::zmod(2), Ring::zmod(2)}),
          Ring::product({Ring::zmod(2), Ring::zmod(4)})};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "th4",       "th6",     "th3",       "lemma2",   "lemma3", "lemma7",
      "remark040", "prop030", "pointwise", "theorem1", "ringlaws"};
  return names;
}

namespace {

struct FailureSink {
  std::mutex mu;
  std::vector<std::pair<std::uint64_t, json>> entries;

  void report(std::uint64_t order, json j) {
    std::lock_guard<std::mutex> lock(mu);
    entries.emplace_back(order, std::move(j));
  }

  std::vector<json> drain() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<json> out;
    out.reserve(entries.size());
    for (auto& e : entries) out.push_back(std::move(e.second));
    return out;
  }
};

json instance_json(const PresentedModule& M) { return module_to_json(M); }

// Runs fn over every module of the sweep, in parallel within each
// (ring, k, m) block; fn receives a global instance order for deterministic
// failure reporting.
void sweep_modules(const std::vector<Ring>& rings, std::size_t gen_bound,
                   std::size_t rel_bound,
                   const std::function<void(std::uint64_t order,
                                            const PresentedModule&)>& fn) {
  std::uint64_t order_base = 0;
  for (const auto& R : rings) {
    const std::uint64_t s = R.size();
    for (std::size_t k = 0; k <= gen_bound; ++k)
      for (std::size_t m = 0; m <= rel_bound; ++m) {
        std::uint64_t matrices = 1;
        for (std::size_t i = 0; i < k * m; ++i) matrices *= s;
        detail::parallel_for(matrices, [&](std::uint64_t code) {
          fn(order_base + code, presented_module_from_code(R, k, m, code));
        });
        order_base += matrices;
      }
  }
}

// Flat modules for the descent suites: every flat presentation with at most
// one relation, plus a deterministic stride through each larger relation
// block. Descent instances pay for verdicts over the extension ring, so the
// instance generator thins the (heavily redundant) full sweep.
std::vector<PresentedModule> flat_descent_sample(const Ring& R,
                                                 std::size_t gen_bound,
                                                 std::size_t rel_bound) {
  std::vector<PresentedModule> out;
  const std::uint64_t s = R.size();
  for (std::size_t k = 0; k <= gen_bound; ++k)
    for (std::size_t m = 0; m <= rel_bound; ++m) {
      std::uint64_t matrices = 1;
      for (std::size_t i = 0; i < k * m; ++i) matrices *= s;
      const std::uint64_t stride =
          m <= 1 ? 1 : std::max<std::uint64_t>(1, matrices / 64);
      for (std::uint64_t code = 0; code < matrices; code += stride) {
        PresentedModule M = presented_module_from_code(R, k, m, code);
        if (flatness_oracle(M)) out.push_back(std::move(M));
      }
    }
  return out;
}

// Flat modules of the sweep over one ring, in deterministic order.
std::vector<PresentedModule> flat_sweep(const Ring& R, std::size_t gen_bound,
                                        std::size_t rel_bound) {
  std::vector<std::pair<std::uint64_t, PresentedModule>> found;
  std::mutex mu;
  std::vector<Ring> one{R};
  sweep_modules(one, gen_bound, rel_bound,
                [&](std::uint64_t order, const PresentedModule& M) {
                  if (flatness_oracle(M)) {
                    std::lock_guard<std::mutex> lock(mu);
                    found.emplace_back(order, M);
                  }
                });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PresentedModule> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

// --- individual suites ------------------------------------------------------

SuiteResult suite_th4(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "th4";
  FailureSink sink;
  std::atomic<std::uint64_t> count{0};
  sweep_modules(cfg.rings, cfg.gen_bound, cfg.rel_bound,
                [&](std::uint64_t order, const PresentedModule& M) {
                  count.fetch_add(1);
                  bool flat = flatness_oracle(M);
                  if (cfg.corrupt_oracle) flat = !flat;
                  const auto verdict = is_projective(M);
                  bool locally_free = true;
                  for (const auto& site : prime_sites(M.ring()))
                    locally_free = locally_free &&
                                   is_free_local(localize_module(M, site)).free;
                  if (flat != verdict.projective || flat != locally_free) {
                    json f;
                    f["module"] = instance_json(M);
                    f["flatness_oracle"] = flat;
                    f["projective"] = verdict.projective;
                    f["locally_free"] = locally_free;
                    sink.report(order, std::move(f));
                  }
                });
  res.instances = count.load();
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_lemma2(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "lemma2";
  FailureSink sink;
  std::atomic<std::uint64_t> count{0};
  sweep_modules(cfg.rings, cfg.gen_bound, cfg.rel_bound,
                [&](std::uint64_t order, const PresentedModule& M) {
                  const auto& sites = prime_sites(M.ring());
                  for (std::size_t i = 0; i < sites.size(); ++i) {
                    count.fetch_add(1);
                    if (!localized_annihilator_check(M, sites[i])) {
                      json f;
                      f["module"] = instance_json(M);
                      f["site"] = prime_site_to_json(sites[i]);
                      sink.report(order * 16 + i, std::move(f));
                    }
                  }
                });
  res.instances = count.load();
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_lemma3(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "lemma3";
  FailureSink sink;
  std::uint64_t count = 0;
  std::uint64_t order = 0;
  for (const auto& R : cfg.rings) {
    for (const auto& M : flat_sweep(R, cfg.gen_bound, cfg.rel_bound)) {
      ++order;
      for (std::size_t n = 0; n <= M.generators(); ++n) {
        ++count;
        const Ideal in = invariant_factor(M, n);
        const bool idem = is_idempotent_ideal(R, in);
        const bool generated = try_idempotent_generator(in).has_value();
        if (!idem || !generated) {
          json f;
          f["module"] = instance_json(M);
          f["n"] = n;
          f["idempotent"] = idem;
          f["idempotent_generator_found"] = generated;
          sink.report(order, std::move(f));
        }
      }
    }
  }
  // The designated non-flat contrast: Z/4 with M = R/(2) has annihilator (2),
  // which is not idempotent.
  {
    const Ring z4 = Ring::zmod(4);
    const PresentedModule M(z4, 1, {{z4.from_int(2)}});
    ++count;
    const Ideal ann = annihilator(M);
    if (is_idempotent_ideal(z4, ann)) {
      json f;
      f["module"] = instance_json(M);
      f["expected"] = "non-idempotent annihilator";
      sink.report(order + 1, std::move(f));
    }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_lemma7(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "lemma7";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& R : cfg.rings) {
    const auto flats = flat_sweep(R, cfg.gen_bound, cfg.rel_bound);
    const auto& ideals = enumerate_ideals(R);
    for (const auto& M : flats)
      for (const auto& J : ideals) {
        ++count;
        ++order;
        if (!quotient_annihilator_check(M, J)) {
          json f;
          f["module"] = instance_json(M);
          f["ideal"] = ideal_to_json(J);
          sink.report(order, std::move(f));
        }
      }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_remark040(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "remark040";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& R : cfg.rings)
    for (const auto& M : flat_sweep(R, cfg.gen_bound, cfg.rel_bound))
      for (std::size_t n = 0; n <= M.generators(); ++n) {
        ++count;
        ++order;
        if (!support_formula_check(M, n)) {
          json f;
          f["module"] = instance_json(M);
          f["n"] = n;
          sink.report(order, std::move(f));
        }
      }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_th6(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "th6";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& A : cfg.rings) {
    const RingMap embed = diagonal_embedding(A);
    const Ring B = embed.target();
    for (const auto& M : flat_descent_sample(A, cfg.gen_bound, cfg.rel_bound)) {
      ++count;
      ++order;
      if (!extension_descent_check(A, B, embed, M)) {
        json f;
        f["module"] = instance_json(M);
        f["extension"] = ring_to_json(B);
        sink.report(order, std::move(f));
      }
    }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_th3(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "th3";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& R : cfg.rings) {
    const Ideal jac = jacobson_radical(R);
    std::vector<Ideal> radical_ideals{Ideal::zero(R), jac};
    for (auto idx : ideal_elements(jac)) {
      if (idx == 0) continue;
      radical_ideals.push_back(Ideal::span(R, {R.element_at(idx)}));
    }
    const auto flats = flat_descent_sample(R, cfg.gen_bound, cfg.rel_bound);
    for (const auto& M : flats) {
      for (const auto& J : radical_ideals) {
        ++count;
        ++order;
        if (!radical_descent_check(R, J, M)) {
          json f;
          f["module"] = instance_json(M);
          f["ideal"] = ideal_to_json(J);
          f["check"] = "radical_descent";
          sink.report(order, std::move(f));
        }
      }
      // Composite descent along maps with kernel inside the radical:
      // the quotient map itself and the quotient followed by a diagonal.
      {
        const QuotientRing qr = quotient_ring(R, jac);
        ++count;
        ++order;
        if (!kernel_radical_descent_check(qr.map, M)) {
          json f;
          f["module"] = instance_json(M);
          f["check"] = "kernel_radical_descent(quotient)";
          sink.report(order, std::move(f));
        }
        const RingMap diag = diagonal_embedding(qr.ring);
        const RingMap composite = RingMap::compose(diag, qr.map);
        ++count;
        ++order;
        if (!kernel_radical_descent_check(composite, M)) {
          json f;
          f["module"] = instance_json(M);
          f["check"] = "kernel_radical_descent(quotient + diagonal)";
          sink.report(order, std::move(f));
        }
      }
    }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_prop030(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "prop030";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& R : cfg.rings)
    for (const auto& I : enumerate_ideals(R)) {
      ++count;
      ++order;
      const auto crit = flat_quotient_criterion(R, I);
      std::vector<ModVec> rels;
      for (const auto& g : I.gens) rels.push_back({g});
      const PresentedModule quotient(R, 1, std::move(rels));
      const bool oracle = flatness_oracle(quotient);
      if (crit.flat != oracle) {
        json f;
        f["ring"] = ring_to_json(R);
        f["ideal"] = ideal_to_json(I);
        f["criterion"] = crit.flat;
        f["oracle"] = oracle;
        sink.report(order, std::move(f));
      }
    }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_pointwise(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "pointwise";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  const auto targets = small_target_rings();
  for (const auto& R : cfg.rings) {
    // Ring maps out of R, per target, reused across subset choices.
    std::vector<std::vector<RingMap>> maps_from_R;
    for (const auto& T : targets) maps_from_R.push_back(enumerate_ring_maps(R, T));

    for (std::uint64_t si = 0; si < R.size(); ++si) {
      const Elem s = R.element_at(si);
      ++count;
      ++order;
      PointwiseLocalization pl = pointwise_localization(R, {s});
      // Construction already verified the defining relations and the
      // nilradical bound; the universal property remains.
      bool ok = true;
      json detail;
      for (std::size_t ti = 0; ti < targets.size() && ok; ++ti) {
        const Ring& T = targets[ti];
        const auto psi_candidates = enumerate_ring_maps(pl.result, T);
        for (const auto& phi : maps_from_R[ti]) {
          // phi is admissible if some c in T satisfies both relations.
          const Elem fs = phi.apply(s);
          bool admissible = false;
          for (std::uint64_t ci = 0; ci < T.size() && !admissible; ++ci) {
            const Elem c = T.element_at(ci);
            admissible = fs == T.mul(T.mul(fs, fs), c) &&
                         c == T.mul(fs, T.mul(c, c));
          }
          if (!admissible) continue;
          std::size_t factorizations = 0;
          for (const auto& psi : psi_candidates)
            if (RingMap::compose(psi, pl.eta) == phi) ++factorizations;
          if (factorizations != 1) {
            ok = false;
            detail["target"] = ring_to_json(T);
            detail["factorizations"] = factorizations;
            break;
          }
        }
      }
      if (!ok) {
        json f;
        f["ring"] = ring_to_json(R);
        f["s"] = elem_to_json(R, s);
        f["universal_property"] = detail;
        sink.report(order, std::move(f));
      }
    }

    // Pairs: defining relations via construction plus order independence.
    for (std::uint64_t ai = 0; ai < R.size(); ++ai)
      for (std::uint64_t bi = ai + 1; bi < R.size(); ++bi) {
        ++count;
        ++order;
        const Elem a = R.element_at(ai), b = R.element_at(bi);
        const auto forward = pointwise_localization(R, {a, b});
        const auto backward = pointwise_localization(R, {b, a});
        bool same = forward.result == backward.result;
        if (same)
          for (std::uint64_t x = 0; x < R.size() && same; ++x)
            same = forward.eta.apply_idx(static_cast<std::uint32_t>(x)) ==
                   backward.eta.apply_idx(static_cast<std::uint32_t>(x));
        if (!same) {
          json f;
          f["ring"] = ring_to_json(R);
          f["subset"] = json::array({elem_to_json(R, a), elem_to_json(R, b)});
          f["issue"] = "order dependence";
          sink.report(order, std::move(f));
        }
      }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_theorem1(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "theorem1";
  FailureSink sink;
  std::atomic<std::uint64_t> count{0};
  std::uint64_t order_base = 0;
  for (const auto& R : cfg.rings) {
    if (!is_local_ring(R)) continue;
    for (std::size_t rank = 1; rank <= 2; ++rank) {
      const PresentedModule M = free_module(R, rank);
      const std::uint64_t msize = M.size();
      // Subsets of size 1 and 2, by element indices.
      std::vector<std::pair<std::uint64_t, std::uint64_t>> subsets;
      for (std::uint64_t i = 0; i < msize; ++i) subsets.emplace_back(i, msize);
      for (std::uint64_t i = 0; i < msize; ++i)
        for (std::uint64_t j = i + 1; j < msize; ++j) subsets.emplace_back(i, j);
      detail::parallel_for(subsets.size(), [&](std::uint64_t si) {
        const auto [i, j] = subsets[si];
        std::vector<ModVec> S{M.element_at(i)};
        if (j < msize) S.push_back(M.element_at(j));
        bool ok = true;
        bool applicable = true;
        try {
          ok = independence_lift_check(M, S);
        } catch (const PreconditionError&) {
          applicable = false;  // dependent residue images: outside the scope
        }
        if (!applicable) return;
        count.fetch_add(1);
        if (!ok) {
          json f;
          f["ring"] = ring_to_json(R);
          f["rank"] = rank;
          json set = json::array();
          for (const auto& v : S) {
            json vec = json::array();
            for (const auto& e : v) vec.push_back(elem_to_json(R, e));
            set.push_back(std::move(vec));
          }
          f["subset"] = std::move(set);
          sink.report(order_base + si, std::move(f));
        }
      });
      order_base += subsets.size();
    }
  }
  res.instances = count.load();
  res.failures = sink.drain();
  return res;
}

SuiteResult suite_ringlaws(const SuiteConfig& cfg) {
  SuiteResult res;
  res.suite = "ringlaws";
  FailureSink sink;
  std::uint64_t count = 0, order = 0;
  for (const auto& R : cfg.rings) {
    const std::uint64_t s = R.size();
    bool ok = true;
    std::string law;
    for (std::uint64_t ai = 0; ai < s && ok; ++ai)
      for (std::uint64_t bi = 0; bi < s && ok; ++bi) {
        const Elem a = R.element_at(ai), b = R.element_at(bi);
        if (!(R.add(a, b) == R.add(b, a))) ok = (law = "add commutativity", false);
        if (ok && !(R.mul(a, b) == R.mul(b, a))) ok = (law = "mul commutativity", false);
        if (ok && !(R.add(a, R.neg(a)) == R.zero())) ok = (law = "additive inverse", false);
        if (ok && !(R.mul(a, R.one()) == a)) ok = (law = "multiplicative identity", false);
        for (std::uint64_t ci = 0; ci < s && ok; ++ci) {
          const Elem c = R.element_at(ci);
          if (!(R.add(R.add(a, b), c) == R.add(a, R.add(b, c))))
            ok = (law = "add associativity", false);
          if (ok && !(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))))
            ok = (law = "mul associativity", false);
          if (ok && !(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))))
            ok = (law = "distributivity", false);
        }
      }
    ++count;
    ++order;
    if (!ok) {
      json f;
      f["ring"] = ring_to_json(R);
      f["law"] = law;
      sink.report(order, std::move(f));
    }

    // Seeded random triples in the seq ring over this base, plus
    // canonicalization stability.
    if (R.is_finite()) {
      const Ring S = Ring::seq(R);
      std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ull + order));
      auto random_elem = [&] {
        const std::size_t len = static_cast<std::size_t>(rng() % 9);
        std::vector<Elem> prefix;
        prefix.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
          prefix.push_back(R.element_at(rng() % s));
        return Elem::seq(std::move(prefix), R.element_at(rng() % s));
      };
      bool seq_ok = true;
      std::string seq_law;
      const std::size_t trials = std::max<std::size_t>(cfg.samples, 1000);
      for (std::size_t t = 0; t < trials && seq_ok; ++t) {
        const Elem a = random_elem(), b = random_elem(), c = random_elem();
        if (!(S.add(S.add(a, b), c) == S.add(a, S.add(b, c))))
          seq_ok = (seq_law = "seq add associativity", false);
        if (seq_ok && !(S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))))
          seq_ok = (seq_law = "seq mul associativity", false);
        if (seq_ok &&
            !(S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c))))
          seq_ok = (seq_law = "seq distributivity", false);
        if (seq_ok) {
          // Canonicalization is idempotent: rebuilding from the canonical
          // parts changes nothing.
          const Elem again = Elem::seq(a.seq_prefix(), a.seq_tail());
          if (!(again == a)) seq_ok = (seq_law = "seq canonical stability", false);
          if (seq_ok && !S.is_canonical(a))
            seq_ok = (seq_law = "seq canonical form", false);
        }
      }
      ++count;
      ++order;
      if (!seq_ok) {
        json f;
        f["ring"] = ring_to_json(S);
        f["law"] = seq_law;
        sink.report(order, std::move(f));
      }
    }
  }
  res.instances = count;
  res.failures = sink.drain();
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  SuiteConfig cfg = config;
  if (cfg.rings.empty()) cfg.rings = default_ring_family();
  if (name == "th4") return suite_th4(cfg);
  if (name == "th6") return suite_th6(cfg);
  if (name == "th3") return suite_th3(cfg);
  if (name == "lemma2") return suite_lemma2(cfg);
  if (name == "lemma3") return suite_lemma3(cfg);
  if (name == "lemma7") return suite_lemma7(cfg);
  if (name == "remark040") return suite_remark040(cfg);
  if (name == "prop030") return suite_prop030(cfg);
  if (name == "pointwise") return suite_pointwise(cfg);
  if (name == "theorem1") return suite_theorem1(cfg);
  if (name == "ringlaws") return suite_ringlaws(cfg);
  throw InputError("unknown suite '" + name + "'");
}

json suite_result_to_json(const SuiteResult& result) {
  json j;
  j["schema"] = kSchemaTag;
  j["suite"] = result.suite;
  j["instances"] = result.instances;
  j["pass"] = result.pass();
  j["failures"] = result.failures;
  return j;
}

SuiteConfig suite_config_from_json(const json& j) {
  SuiteConfig cfg;
  if (j.contains("rings")) {
    if (!j["rings"].is_array())
      throw InputError("field 'rings': expected an array of ring descriptors");
    for (const auto& r : j["rings"]) cfg.rings.push_back(ring_from_json(r));
  }
  if (j.contains("gen_bound")) cfg.gen_bound = j["gen_bound"].get<std::size_t>();
  if (j.contains("rel_bound")) cfg.rel_bound = j["rel_bound"].get<std::size_t>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("samples")) cfg.samples = j["samples"].get<std::size_t>();
  if (j.contains("corrupt_oracle")) cfg.corrupt_oracle = j["corrupt_oracle"].get<bool>();
  return cfg;
}

}  // namespace flatcheck
