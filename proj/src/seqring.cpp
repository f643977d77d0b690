#include "flatcheck/seqring.hpp"

#include <algorithm>
#include <random>

namespace flatcheck {

namespace {

void require_seq(const Ring& R, const char* op) {
  if (R.kind() != RingKind::Seq)
    throw InputError(std::string(op) + " needs a seq ring");
}

}  // namespace

Elem seq_element(const Ring& seq_ring, std::vector<Elem> prefix, Elem tail) {
  require_seq(seq_ring, "seq_element");
  const Ring& base = seq_ring.seq_base();
  for (const auto& e : prefix)
    if (!base.is_canonical(e))
      throw InputError("seq prefix entry not canonical in the base ring");
  if (!base.is_canonical(tail))
    throw InputError("seq tail not canonical in the base ring");
  return Elem::seq(std::move(prefix), std::move(tail));
}

bool in_finite_support_ideal(const Ring& seq_ring, const Elem& x) {
  require_seq(seq_ring, "in_finite_support_ideal");
  return seq_ring.seq_base().is_zero(x.seq_tail());
}

FlatTriple example1_flat_witness(const Ring& seq_ring, const Elem& f) {
  require_seq(seq_ring, "example1_flat_witness");
  const Ring& base = seq_ring.seq_base();
  if (!seq_ring.is_canonical(f)) throw InputError("f is not canonical");
  if (!in_finite_support_ideal(seq_ring, f))
    throw InputError("f is outside the finite-support ideal");
  const std::size_t len = f.seq_prefix_len();
  std::vector<Elem> g_prefix, h_prefix;
  g_prefix.reserve(len);
  h_prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const bool in_support = !base.is_zero(f.seq_coordinate(i));
    g_prefix.push_back(in_support ? base.zero() : base.one());
    h_prefix.push_back(in_support ? base.one() : base.zero());
  }
  FlatTriple t{f, Elem::seq(std::move(g_prefix), base.one()),
               Elem::seq(std::move(h_prefix), base.zero())};
  if (!verify_flat_triple(seq_ring, t))
    throw Error("flat witness triple failed re-verification");
  return t;
}

bool verify_flat_triple(const Ring& seq_ring, const FlatTriple& t) {
  return seq_ring.is_zero(seq_ring.mul(t.g, t.f)) &&
         in_finite_support_ideal(seq_ring, t.h) &&
         seq_ring.is_one(seq_ring.add(t.g, t.h));
}

QuotientFlatnessReport quotient_flatness_suite(const Ring& base,
                                               std::size_t samples,
                                               std::uint64_t seed) {
  if (!base.is_finite()) throw InputError("base of a seq ring must be finite");
  const Ring R = Ring::seq(base);
  std::mt19937_64 rng(seed);
  QuotientFlatnessReport report;
  report.seq_ring = R;
  report.seed = seed;
  report.all_verified = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t len = static_cast<std::size_t>(rng() % 17);
    std::vector<Elem> prefix;
    prefix.reserve(len);
    for (std::size_t j = 0; j < len; ++j)
      prefix.push_back(base.element_at(rng() % base.size()));
    const Elem f = Elem::seq(std::move(prefix), base.zero());
    FlatTriple t = example1_flat_witness(R, f);
    report.all_verified = report.all_verified && verify_flat_triple(R, t);
    report.triples.push_back(std::move(t));
  }
  return report;
}

Refutation refute_idempotent_generator(const Ring& seq_ring, const Elem& e) {
  require_seq(seq_ring, "refute_idempotent_generator");
  const Ring& base = seq_ring.seq_base();
  if (!seq_ring.is_canonical(e)) throw InputError("candidate is not canonical");
  if (!seq_ring.is_idempotent(e))
    throw InputError("candidate is not idempotent");
  Refutation r;
  r.candidate = e;
  if (!base.is_zero(e.seq_tail())) {
    // e itself lies in Re but outside I, so Re = I is impossible.
    r.kind = RefutationKind::NotInIdeal;
    if (!verify_refutation(seq_ring, r))
      throw Error("refutation failed structural re-verification");
    return r;
  }
  // Finite support: the delta just past the prefix is in I, yet (re)_k =
  // r_k * 0 = 0 for every r, so it is outside Re.
  const std::size_t k = e.seq_prefix_len();
  std::vector<Elem> prefix(k, base.zero());
  prefix.push_back(base.one());
  r.kind = RefutationKind::TooSmall;
  r.witness = Elem::seq(std::move(prefix), base.zero());
  r.coordinate = k;
  if (!verify_refutation(seq_ring, r))
    throw Error("refutation failed structural re-verification");
  return r;
}

bool verify_refutation(const Ring& seq_ring, const Refutation& r) {
  const Ring& base = seq_ring.seq_base();
  if (!seq_ring.is_idempotent(r.candidate)) return false;
  switch (r.kind) {
    case RefutationKind::NotInIdeal:
      // The candidate generates an ideal containing itself, which is not
      // inside I.
      return !in_finite_support_ideal(seq_ring, r.candidate);
    case RefutationKind::TooSmall: {
      if (!r.witness || !r.coordinate) return false;
      if (!in_finite_support_ideal(seq_ring, *r.witness)) return false;
      const std::size_t k = *r.coordinate;
      // At coordinate k the candidate vanishes while the witness does not,
      // so no multiple of the candidate matches the witness there.
      return base.is_zero(r.candidate.seq_coordinate(k)) &&
             !base.is_zero(r.witness->seq_coordinate(k));
    }
  }
  return false;
}

Elem finite_support_generation_witness(const Ring& seq_ring,
                                       const std::vector<Elem>& gens) {
  require_seq(seq_ring, "finite_support_generation_witness");
  const Ring& base = seq_ring.seq_base();
  std::size_t longest = 0;
  for (const auto& g : gens) {
    if (!in_finite_support_ideal(seq_ring, g))
      throw InputError("generator is outside the finite-support ideal");
    longest = std::max(longest, g.seq_prefix_len());
  }
  std::vector<Elem> prefix(longest, base.zero());
  prefix.push_back(base.one());
  return Elem::seq(std::move(prefix), base.zero());
}

Example1Certificate example1_certificate(const Ring& base, std::size_t samples,
                                         std::uint64_t seed) {
  if (!base.is_finite()) throw InputError("certificate base must be finite");
  if (base.size() < 2) throw InputError("certificate base must be a nonzero ring");
  const Ring R = Ring::seq(base);

  Example1Certificate cert;
  cert.base = base;
  cert.seq_ring = R;
  cert.adaptation = "eventually-constant subring";

  auto flat_report = quotient_flatness_suite(base, samples, seed);
  cert.flat_samples = std::move(flat_report.triples);
  bool ok = flat_report.all_verified;

  // Idempotents of the base ring.
  std::vector<Elem> base_idems;
  for (std::uint64_t i = 0; i < base.size(); ++i) {
    const Elem e = base.element_at(i);
    if (base.is_idempotent(e)) base_idems.push_back(e);
  }

  // Structured family: every idempotent tail crossed with every prefix
  // pattern of idempotent entries up to length 4.
  std::vector<Elem> candidates;
  const std::size_t b = base_idems.size();
  for (std::size_t len = 0; len <= 4; ++len) {
    std::uint64_t patterns = 1;
    for (std::size_t i = 0; i < len; ++i) patterns *= b;
    for (std::uint64_t code = 0; code < patterns; ++code) {
      std::uint64_t x = code;
      std::vector<Elem> prefix;
      prefix.reserve(len);
      for (std::size_t i = 0; i < len; ++i) {
        prefix.push_back(base_idems[x % b]);
        x /= b;
      }
      for (const auto& tail : base_idems)
        candidates.push_back(Elem::seq(prefix, tail));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const Elem& a, const Elem& c) {
              const std::size_t la = a.seq_prefix_len(), lc = c.seq_prefix_len();
              if (la != lc) return la < lc;
              for (std::size_t i = 0; i <= la; ++i) {
                const auto ia = base.index_of(a.seq_coordinate(i));
                const auto ic = base.index_of(c.seq_coordinate(i));
                if (ia != ic) return ia < ic;
              }
              return false;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Plus seeded random idempotents (prefix length <= 16).
  std::mt19937_64 rng(seed + 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t len = static_cast<std::size_t>(rng() % 17);
    std::vector<Elem> prefix;
    prefix.reserve(len);
    for (std::size_t j = 0; j < len; ++j)
      prefix.push_back(base_idems[rng() % b]);
    candidates.push_back(Elem::seq(std::move(prefix), base_idems[rng() % b]));
  }

  std::uint64_t tail_nonzero = 0, tail_zero = 0;
  for (const auto& e : candidates) {
    Refutation r = refute_idempotent_generator(R, e);
    ok = ok && verify_refutation(R, r);
    (r.kind == RefutationKind::NotInIdeal ? tail_nonzero : tail_zero) += 1;
    cert.refutations.push_back(std::move(r));
  }

  cert.tail_nonzero_case = StructuralCase{
      "idempotents with nonzero tail have infinite support, so they lie in "
      "Re but outside I",
      tail_nonzero, tail_nonzero > 0};
  cert.tail_zero_case = StructuralCase{
      "idempotents with zero tail have support inside their prefix; the "
      "delta sequence just past the prefix is in I but not in Re",
      tail_zero, tail_zero > 0};

  cert.valid = ok && !cert.flat_samples.empty() && !cert.refutations.empty() &&
               cert.tail_nonzero_case.verified && cert.tail_zero_case.verified;
  return cert;
}

}  // namespace flatcheck
