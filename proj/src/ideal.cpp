#include "flatcheck/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "packed.hpp"

namespace flatcheck {

namespace {

void require_generators(const Ideal& I, const char* op) {
  if (I.body != IdealBody::Generators)
    throw UnsupportedIdealError(std::string(op) +
                                " does not support finite-support ideals");
  if (!I.ring.is_finite())
    throw Error(std::string(op) + " requires a finite ring");
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (!(I.ring == J.ring)) throw InputError("ideal operands over different rings");
}

std::vector<std::uint32_t> span_indices(const Ring& R,
                                        const std::vector<Elem>& gens) {
  detail::PackedSpace space(R, 1);
  std::vector<std::uint64_t> packed;
  packed.reserve(gens.size());
  for (const auto& g : gens) packed.push_back(R.index_of(g));
  auto elems = space.span(packed);
  return std::vector<std::uint32_t>(elems.begin(), elems.end());
}

}  // namespace

Ideal Ideal::span(Ring R, std::vector<Elem> generators) {
  for (const auto& g : generators)
    if (!R.is_canonical(g)) throw InputError("ideal generator not canonical in ring");
  Ideal I;
  I.ring = std::move(R);
  I.body = IdealBody::Generators;
  I.gens = std::move(generators);
  return I;
}

Ideal Ideal::unit(Ring R) {
  Elem e = R.one();
  return span(std::move(R), {std::move(e)});
}

Ideal Ideal::finite_support(Ring seq_ring) {
  if (seq_ring.kind() != RingKind::Seq)
    throw ConstructionError("finite-support ideals exist only in seq rings");
  Ideal I;
  I.ring = std::move(seq_ring);
  I.body = IdealBody::FiniteSupport;
  return I;
}

std::vector<std::uint32_t> ideal_elements(const Ideal& I) {
  require_generators(I, "ideal_elements");
  return span_indices(I.ring, I.gens);
}

bool ideal_contains(const Ideal& I, const Elem& x) {
  if (I.body == IdealBody::FiniteSupport) {
    if (!I.ring.is_canonical(x)) throw InputError("membership query on a non-canonical element");
    return I.ring.seq_base().is_zero(x.seq_tail());
  }
  require_generators(I, "ideal_contains");
  const auto elems = ideal_elements(I);
  const std::uint32_t idx = static_cast<std::uint32_t>(I.ring.index_of(x));
  return std::binary_search(elems.begin(), elems.end(), idx);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  require_generators(I, "ideal_sum");
  require_generators(J, "ideal_sum");
  std::vector<Elem> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return Ideal::span(I.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  require_generators(I, "ideal_product");
  require_generators(J, "ideal_product");
  std::vector<Elem> gens;
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) gens.push_back(I.ring.mul(a, b));
  return Ideal::span(I.ring, std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const auto ei = ideal_elements(I);
  const auto ej = ideal_elements(J);
  std::vector<std::uint32_t> common;
  std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(),
                        std::back_inserter(common));
  return ideal_from_indices(I.ring, common);
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return ideal_elements(I) == ideal_elements(J);
}

bool ideal_subset(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const auto ei = ideal_elements(I);
  const auto ej = ideal_elements(J);
  return std::includes(ej.begin(), ej.end(), ei.begin(), ei.end());
}

bool ideal_is_unit(const Ideal& I) {
  return ideal_contains(I, I.ring.one());
}

bool ideal_is_zero(const Ideal& I) {
  require_generators(I, "ideal_is_zero");
  for (const auto& g : I.gens)
    if (!I.ring.is_zero(g)) return ideal_elements(I).size() == 1;
  return true;
}

bool is_idempotent_ideal(const Ring& R, const Ideal& I) {
  if (!(R == I.ring)) throw InputError("ideal does not belong to the given ring");
  return ideal_equal(I, ideal_product(I, I));
}

std::optional<Elem> try_idempotent_generator(const Ideal& I) {
  require_generators(I, "idempotent_generator");
  const Ring& R = I.ring;
  const auto elems = ideal_elements(I);
  for (auto idx : elems) {
    const Elem e = R.element_at(idx);
    if (!R.is_idempotent(e)) continue;
    if (span_indices(R, {e}) == elems) return e;
  }
  return std::nullopt;
}

Elem idempotent_generator(const Ring& R, const Ideal& I) {
  if (!(R == I.ring)) throw InputError("ideal does not belong to the given ring");
  auto e = try_idempotent_generator(I);
  if (!e)
    throw NoIdempotentGeneratorError("ideal of " + R.describe() +
                                     " has no idempotent generator");
  return *e;
}

std::vector<std::vector<Elem>> reduce_span_generators(
    const Ring& R, std::size_t k, const std::vector<std::vector<Elem>>& vectors) {
  detail::PackedSpace space(R, k);
  std::vector<std::uint64_t> packed;
  packed.reserve(vectors.size());
  for (const auto& v : vectors) packed.push_back(space.pack(v));
  const auto full = space.span(packed);
  if (full.size() == 1) return {};

  // Principal spans first: a single generator keeps every downstream
  // presentation space small.
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (packed[i] == 0) continue;
    if (space.span({packed[i]}) == full) return {vectors[i]};
  }

  std::vector<std::vector<Elem>> kept;
  std::vector<std::uint64_t> kept_packed;
  std::vector<std::uint64_t> current{0};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (std::binary_search(current.begin(), current.end(), packed[i])) continue;
    kept.push_back(vectors[i]);
    kept_packed.push_back(packed[i]);
    current = space.span(kept_packed);
    if (current == full) break;
  }
  return kept;
}

std::vector<Elem> minimal_generators(const Ideal& I) {
  require_generators(I, "minimal_generators");
  std::vector<std::vector<Elem>> as_vectors;
  for (auto idx : ideal_elements(I)) as_vectors.push_back({I.ring.element_at(idx)});
  const auto reduced = reduce_span_generators(I.ring, 1, as_vectors);
  std::vector<Elem> gens;
  for (const auto& v : reduced) gens.push_back(v[0]);
  return gens;
}

Ideal ideal_from_indices(const Ring& R, const std::vector<std::uint32_t>& elems) {
  std::vector<std::vector<Elem>> as_vectors;
  for (auto idx : elems) as_vectors.push_back({R.element_at(idx)});
  const auto reduced = reduce_span_generators(R, 1, as_vectors);
  std::vector<Elem> gens;
  for (const auto& v : reduced) gens.push_back(v[0]);
  return Ideal::span(R, std::move(gens));
}

const std::vector<Ideal>& enumerate_ideals(const Ring& R) {
  if (!R.is_finite()) throw Error("ideal enumeration requires a finite ring");
  static std::mutex mu;
  static std::map<const Ring::Rep*, std::pair<Ring, std::vector<Ideal>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(R.rep_key());
    if (it != cache.end()) return it->second.second;
  }

  // Breadth-first closure of the ideal lattice: grow each known ideal by one
  // ring element at a time.
  std::vector<std::vector<std::uint32_t>> seen;
  std::vector<Ideal> ideals;
  const Ideal z = Ideal::zero(R);
  seen.push_back(ideal_elements(z));
  ideals.push_back(z);
  for (std::size_t head = 0; head < ideals.size(); ++head) {
    const Ideal base = ideals[head];
    const std::vector<std::uint32_t> base_elems = seen[head];
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      if (std::binary_search(base_elems.begin(), base_elems.end(),
                             static_cast<std::uint32_t>(x)))
        continue;
      std::vector<Elem> gens = base.gens;
      gens.push_back(R.element_at(x));
      Ideal bigger = Ideal::span(R, std::move(gens));
      auto elems = ideal_elements(bigger);
      bool known = false;
      for (const auto& s : seen)
        if (s == elems) {
          known = true;
          break;
        }
      if (!known) {
        seen.push_back(std::move(elems));
        ideals.push_back(ideal_from_indices(R, seen.back()));
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(R.rep_key(), std::make_pair(R, std::move(ideals)));
  return it->second.second;
}

}  // namespace flatcheck
