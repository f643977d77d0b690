#include "flatcheck/decide.hpp"

#include <algorithm>

namespace flatcheck {

ProjectivityVerdict is_projective(const PresentedModule& M) {
  const Ring& R = M.ring();
  ProjectivityVerdict v;

  const auto& flat = flatness_report(M);
  {
    ConditionRecord c{"flatness_oracle", flat.flat, ""};
    if (!flat.flat && flat.failing_ideal) {
      std::string gens = "(";
      for (std::size_t i = 0; i < flat.failing_ideal->gens.size(); ++i)
        gens += (i ? "," : "") + std::to_string(R.index_of(flat.failing_ideal->gens[i]));
      gens += ")";
      c.detail = "tensor injectivity fails at ideal with generator indices " +
                 gens + ": |J(x)M| = " + std::to_string(flat.tensor_count) +
                 ", |JM| = " + std::to_string(flat.image_count);
    }
    v.evidence.push_back(std::move(c));
  }
  if (!flat.flat) {
    v.projective = false;
    v.reason = "not flat: " + v.evidence.back().detail;
    return v;
  }

  // Invariant factors I_n, n = 1..k, each must be generated by an
  // idempotent (the sharp form of finite generation over these rings).
  bool factors_ok = true;
  std::string factor_detail;
  for (std::size_t n = 1; n <= M.generators(); ++n) {
    const Ideal in = invariant_factor(M, n);
    if (!try_idempotent_generator(in)) {
      factors_ok = false;
      factor_detail = "invariant factor I_" + std::to_string(n) +
                      " has no idempotent generator";
      break;
    }
  }
  v.evidence.push_back(
      {"invariant_factors_idempotent_generated", factors_ok, factor_detail});

  // Rank map exists for flat modules and must be locally constant.
  RankMap rm = rank_map(M);
  const bool rank_ok = is_locally_constant(rm);
  v.evidence.push_back({"rank_map_locally_constant", rank_ok, ""});

  // Direct cross-check: every localization free.
  bool locally_free = true;
  for (const auto& site : prime_sites(R))
    locally_free = locally_free && is_free_local(localize_module(M, site)).free;
  v.evidence.push_back({"locally_free", locally_free, ""});

  v.projective = factors_ok && rank_ok && locally_free;
  if (v.projective) {
    v.rank_map = std::move(rm);
  } else {
    v.reason = !factors_ok ? factor_detail : "localization is not free";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Descent checks

bool extension_descent_check(const Ring& A, const Ring& B, const RingMap& embed,
                             const PresentedModule& M) {
  if (!(embed.source() == A) || !(embed.target() == B))
    throw InputError("embedding endpoints do not match the given rings");
  if (!embed.verify_homomorphism())
    throw PreconditionError("embedding is not a ring map");
  if (!embed.is_injective())
    throw PreconditionError("extension descent needs an injective embedding");
  if (!(M.ring() == A)) throw InputError("module is not an A-module");
  if (!flatness_oracle(M))
    throw PreconditionError("extension descent is stated for flat modules");
  const PresentedModule MB = base_change(M, embed);
  if (!is_projective(MB).projective) return true;  // vacuous
  return is_projective(M).projective;
}

QuotientRing quotient_ring(const Ring& R, const Ideal& J) {
  if (!(J.ring == R)) throw InputError("ideal over a different ring");
  const auto& dec = local_decomposition(R);
  const auto j_elems = ideal_elements(J);

  std::vector<Ring> quotients;
  std::vector<RingMap> maps;  // factor -> quotient factor
  for (const auto& f : dec.factors) {
    std::vector<Elem> image_gens;
    for (const auto& g : J.gens) image_gens.push_back(f.projection.apply(g));
    auto fq = quotient_local_factor(f.ring, image_gens);
    quotients.push_back(fq.ring);
    maps.push_back(std::move(fq.map));
  }
  (void)j_elems;

  if (quotients.size() == 1) {
    RingMap m = RingMap::compose(maps[0], dec.factors[0].projection);
    return {maps[0].target(), std::move(m)};
  }
  Ring Q = Ring::product(quotients);
  std::vector<Elem> images;
  images.reserve(R.size());
  for (std::uint64_t x = 0; x < R.size(); ++x) {
    std::vector<Elem> parts;
    parts.reserve(dec.factors.size());
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
      parts.push_back(maps[i].apply(dec.factors[i].projection.apply(
          R.element_at(x))));
    images.push_back(Elem::tuple(std::move(parts)));
  }
  RingMap m(R, Q, std::move(images));
  return {std::move(Q), std::move(m)};
}

bool radical_descent_check(const Ring& R, const Ideal& J,
                           const PresentedModule& M) {
  if (!ideal_subset(J, jacobson_radical(R)))
    throw PreconditionError("ideal is not inside the Jacobson radical");
  if (!(M.ring() == R)) throw InputError("module over a different ring");
  if (!flatness_oracle(M))
    throw PreconditionError("radical descent is stated for flat modules");
  const QuotientRing qr = quotient_ring(R, J);
  const PresentedModule MQ = base_change(M, qr.map);
  if (!is_projective(MQ).projective) return true;  // vacuous
  return is_projective(M).projective;
}

bool kernel_radical_descent_check(const RingMap& phi, const PresentedModule& M) {
  const Ring& A = phi.source();
  if (!phi.verify_homomorphism())
    throw PreconditionError("phi is not a ring map");
  if (!(M.ring() == A)) throw InputError("module over a different ring");
  // Kernel of phi, as an ideal of A.
  std::vector<std::uint32_t> kernel;
  const std::uint32_t zero_t =
      static_cast<std::uint32_t>(phi.target().index_of(phi.target().zero()));
  for (std::uint64_t x = 0; x < A.size(); ++x)
    if (phi.apply_idx(static_cast<std::uint32_t>(x)) == zero_t)
      kernel.push_back(static_cast<std::uint32_t>(x));
  const Ideal K = ideal_from_indices(A, kernel);
  if (!ideal_subset(K, jacobson_radical(A)))
    throw PreconditionError("kernel is not inside the Jacobson radical");
  if (!flatness_oracle(M))
    throw PreconditionError("descent is stated for flat modules");
  const PresentedModule MB = base_change(M, phi);
  if (!is_projective(MB).projective) return true;  // vacuous
  return is_projective(M).projective;
}

// ---------------------------------------------------------------------------
// Pointwise localization

PointwiseLocalization pointwise_localization(const Ring& R,
                                             const std::vector<Elem>& S) {
  if (!R.is_finite()) throw InputError("pointwise localization needs a finite ring");
  for (const auto& s : S)
    if (!R.is_canonical(s)) throw InputError("subset entry is not canonical");
  const auto& dec = local_decomposition(R);

  // Per factor: run the chain of quotients demanded by the non-unit images.
  std::vector<Ring> final_rings;
  std::vector<RingMap> chain;  // factor -> final factor
  for (const auto& f : dec.factors) {
    Ring current = f.ring;
    RingMap acc = RingMap::identity(f.ring);
    for (const auto& s : S) {
      const Elem image = acc.apply(f.projection.apply(s));
      if (current.is_unit(image)) continue;
      // In a finite local ring a non-unit is nilpotent; the relations force
      // its image to zero.
      auto fq = quotient_local_factor(current, {image});
      acc = RingMap::compose(fq.map, acc);
      current = fq.ring;
    }
    final_rings.push_back(current);
    chain.push_back(std::move(acc));
  }

  const bool single = final_rings.size() == 1;
  Ring result = single ? final_rings[0] : Ring::product(final_rings);

  // eta: project, run the chain, reassemble.
  std::vector<Elem> images;
  images.reserve(R.size());
  for (std::uint64_t x = 0; x < R.size(); ++x) {
    std::vector<Elem> parts;
    parts.reserve(dec.factors.size());
    for (std::size_t i = 0; i < dec.factors.size(); ++i)
      parts.push_back(
          chain[i].apply(dec.factors[i].projection.apply(R.element_at(x))));
    images.push_back(single ? parts[0] : Elem::tuple(std::move(parts)));
  }
  RingMap eta(R, result, std::move(images));

  // x_s images: the inverse where s stays a unit, zero where it was killed.
  std::vector<Elem> inverses;
  for (const auto& s : S) {
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < final_rings.size(); ++i) {
      const Ring& F = final_rings[i];
      const Elem image = chain[i].apply(dec.factors[i].projection.apply(s));
      Elem inv = F.zero();
      if (F.is_unit(image)) {
        for (std::uint64_t y = 0; y < F.size(); ++y)
          if (F.is_one(F.mul(image, F.element_at(y)))) {
            inv = F.element_at(y);
            break;
          }
      }
      parts.push_back(std::move(inv));
    }
    inverses.push_back(single ? parts[0] : Elem::tuple(std::move(parts)));
  }

  PointwiseLocalization out{R, S, std::move(result), std::move(eta),
                            std::move(inverses)};

  // Defining relations and the nilradical bound on the kernel.
  for (std::size_t i = 0; i < S.size(); ++i) {
    const Elem es = out.eta.apply(S[i]);
    const Elem& xs = out.inverses[i];
    if (!(es == out.result.mul(out.result.mul(es, es), xs)))
      throw Error("pointwise localization violates s = s^2 x_s");
    if (!(xs == out.result.mul(es, out.result.mul(xs, xs))))
      throw Error("pointwise localization violates x_s = s x_s^2");
  }
  const Ideal nil = nilradical(R);
  for (std::uint64_t x = 0; x < R.size(); ++x)
    if (out.result.is_zero(out.eta.apply(R.element_at(x))) &&
        !ideal_contains(nil, R.element_at(x)))
      throw Error("kernel of eta escapes the nilradical");
  return out;
}

bool pointwise_descent_check(const Ring& R, const std::vector<Elem>& S,
                             const PresentedModule& M) {
  if (!(M.ring() == R)) throw InputError("module over a different ring");
  if (!flatness_oracle(M))
    throw PreconditionError("pointwise descent is stated for flat modules");
  const PointwiseLocalization pl = pointwise_localization(R, S);
  const PresentedModule ML = base_change(M, pl.eta);
  if (!is_projective(ML).projective) return true;  // vacuous
  return is_projective(M).projective;
}

// ---------------------------------------------------------------------------
// Flat quotient criterion

FlatQuotientReport flat_quotient_criterion(const Ring& R, const Ideal& I) {
  if (!(I.ring == R)) throw InputError("ideal over a different ring");
  FlatQuotientReport report;
  report.flat = true;
  const auto i_elems = ideal_elements(I);
  for (auto fi : i_elems) {
    const Elem f = R.element_at(fi);
    FlatQuotientWitness w;
    w.f = f;
    // Search b in Ann(f) with 1 - b in I.
    bool found = false;
    for (std::uint64_t b = 0; b < R.size() && !found; ++b) {
      const Elem be = R.element_at(b);
      if (!R.is_zero(R.mul(be, f))) continue;
      const Elem ce = R.sub(R.one(), be);
      if (std::binary_search(i_elems.begin(), i_elems.end(),
                             static_cast<std::uint32_t>(R.index_of(ce)))) {
        w.decomposition = std::make_pair(be, ce);
        found = true;
      }
    }
    if (!found) {
      report.flat = false;
      report.failing = f;
      report.witnesses.push_back(std::move(w));
      break;
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

// ---------------------------------------------------------------------------
// S-ring probe

SRingVerdict is_s_ring(const Ring& R, std::size_t gen_bound,
                       std::size_t rel_bound) {
  SRingVerdict v;
  if (R.kind() == RingKind::Seq) {
    v.s_ring = false;
    v.certificate = example1_certificate(R.seq_base(), 200, 7);
    return v;
  }
  v.s_ring = true;
  for_each_presented_module(R, gen_bound, rel_bound,
                            [&](const PresentedModule& M) {
                              if (!v.s_ring) return;
                              ++v.instances_checked;
                              if (!flatness_oracle(M)) return;
                              if (!is_projective(M).projective) {
                                v.s_ring = false;
                                v.counterexample = M;
                              }
                            });
  return v;
}

RingMap diagonal_embedding(const Ring& A) {
  Ring B = Ring::product({A, A});
  std::vector<Elem> images;
  images.reserve(A.size());
  for (std::uint64_t x = 0; x < A.size(); ++x) {
    const Elem a = A.element_at(x);
    images.push_back(Elem::tuple({a, a}));
  }
  return RingMap(A, B, std::move(images));
}

}  // namespace flatcheck
