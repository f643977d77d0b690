#include "flatcheck/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "packed.hpp"

namespace flatcheck {

struct PresentedModule::Rep {
  Ring ring;
  std::size_t k = 0;
  std::vector<ModVec> relations;
  std::unique_ptr<detail::PackedSpace> space;
  std::vector<std::uint64_t> rel_span;    // sorted packed relation submodule
  std::vector<std::uint32_t> rep_table;   // packed -> packed canonical rep
  std::vector<std::uint64_t> cosets;      // sorted canonical reps
  std::vector<std::uint32_t> coset_index; // packed canonical rep -> position

  mutable std::once_flag flat_once;
  mutable std::unique_ptr<FlatnessReport> flat;
};

PresentedModule::PresentedModule(Ring ring, std::size_t generators,
                                 std::vector<ModVec> relations) {
  if (!ring.is_finite())
    throw InputError("presented modules require a finite ring");
  for (const auto& rel : relations) {
    if (rel.size() != generators)
      throw InputError("relation vector length does not match generator count");
    for (const auto& e : rel)
      if (!ring.is_canonical(e))
        throw InputError("relation entry is not canonical in the ring");
  }
  auto rep = std::make_shared<Rep>();
  rep->ring = std::move(ring);
  rep->k = generators;
  rep->relations = std::move(relations);
  rep->space = std::make_unique<detail::PackedSpace>(rep->ring, rep->k);
  const auto& space = *rep->space;

  std::vector<std::uint64_t> packed_rels;
  packed_rels.reserve(rep->relations.size());
  for (const auto& rel : rep->relations) packed_rels.push_back(space.pack(rel));
  rep->rel_span = space.span(packed_rels);

  // Stamp every coset with its least member.
  const std::uint64_t total = space.total();
  rep->rep_table.assign(total, 0);
  std::vector<std::uint8_t> assigned(total, 0);
  for (std::uint64_t v = 0; v < total; ++v) {
    if (assigned[v]) continue;
    rep->cosets.push_back(v);
    for (auto n : rep->rel_span) {
      const std::uint64_t w = space.add(v, n);
      assigned[w] = 1;
      rep->rep_table[w] = static_cast<std::uint32_t>(v);
    }
  }
  rep->coset_index.assign(total, 0);
  for (std::size_t i = 0; i < rep->cosets.size(); ++i)
    rep->coset_index[rep->cosets[i]] = static_cast<std::uint32_t>(i);

  rep_ = std::move(rep);
}

const Ring& PresentedModule::ring() const { return rep_->ring; }
std::size_t PresentedModule::generators() const { return rep_->k; }
const std::vector<ModVec>& PresentedModule::relations() const {
  return rep_->relations;
}
std::uint64_t PresentedModule::size() const { return rep_->cosets.size(); }

ModVec PresentedModule::zero_element() const {
  return rep_->space->unpack(0);
}

ModVec PresentedModule::generator(std::size_t i) const {
  return unpack(generator_packed(i));
}

std::uint64_t PresentedModule::generator_packed(std::size_t i) const {
  return reduce_packed(rep_->space->unit_vector(i, rep_->ring.one_idx()));
}

ModVec PresentedModule::reduce(const ModVec& ambient) const {
  if (ambient.size() != rep_->k)
    throw InputError("ambient vector length does not match generator count");
  return unpack(reduce_packed(pack(ambient)));
}

ModVec PresentedModule::add(const ModVec& a, const ModVec& b) const {
  return unpack(reduce_packed(rep_->space->add(pack(a), pack(b))));
}

ModVec PresentedModule::scale(const Elem& r, const ModVec& a) const {
  const auto ri = static_cast<std::uint32_t>(rep_->ring.index_of(r));
  return unpack(reduce_packed(rep_->space->scale(ri, pack(a))));
}

bool PresentedModule::is_zero_element(const ModVec& a) const {
  return reduce_packed(pack(a)) == 0;
}

ModVec PresentedModule::element_at(std::uint64_t i) const {
  return unpack(rep_->cosets[i]);
}

std::uint64_t PresentedModule::element_index(const ModVec& canonical) const {
  return rep_->coset_index[reduce_packed(pack(canonical))];
}

std::uint64_t PresentedModule::ambient_count() const {
  return rep_->space->total();
}
std::uint64_t PresentedModule::pack(const ModVec& v) const {
  return rep_->space->pack(v);
}
ModVec PresentedModule::unpack(std::uint64_t x) const {
  return rep_->space->unpack(x);
}
std::uint64_t PresentedModule::reduce_packed(std::uint64_t x) const {
  return rep_->rep_table[x];
}
std::uint64_t PresentedModule::add_packed(std::uint64_t a, std::uint64_t b) const {
  return rep_->rep_table[rep_->space->add(a, b)];
}
std::uint64_t PresentedModule::scale_packed(std::uint32_t r, std::uint64_t a) const {
  return rep_->rep_table[rep_->space->scale(r, a)];
}
const std::vector<std::uint64_t>& PresentedModule::relation_span() const {
  return rep_->rel_span;
}
const std::vector<std::uint64_t>& PresentedModule::coset_list() const {
  return rep_->cosets;
}
std::uint64_t PresentedModule::coset_index(std::uint64_t canonical_packed) const {
  return rep_->coset_index[canonical_packed];
}

bool PresentedModule::operator==(const PresentedModule& other) const {
  return rep_->ring == other.rep_->ring && rep_->k == other.rep_->k &&
         rep_->relations == other.rep_->relations;
}

PresentedModule free_module(const Ring& R, std::size_t rank) {
  return PresentedModule(R, rank, {});
}

// ---------------------------------------------------------------------------
// Constructions

PresentedModule direct_sum(const PresentedModule& M, const PresentedModule& N) {
  if (!(M.ring() == N.ring())) throw InputError("direct sum needs a common ring");
  const Ring& R = M.ring();
  const std::size_t k = M.generators() + N.generators();
  std::vector<ModVec> rels;
  for (const auto& a : M.relations()) {
    ModVec v = a;
    v.resize(k, R.zero());
    rels.push_back(std::move(v));
  }
  for (const auto& b : N.relations()) {
    ModVec v(M.generators(), R.zero());
    v.insert(v.end(), b.begin(), b.end());
    rels.push_back(std::move(v));
  }
  return PresentedModule(R, k, std::move(rels));
}

PresentedModule tensor(const PresentedModule& M, const PresentedModule& N) {
  if (!(M.ring() == N.ring())) throw InputError("tensor needs a common ring");
  const Ring& R = M.ring();
  const std::size_t k1 = M.generators(), k2 = N.generators();
  std::vector<ModVec> rels;
  for (const auto& a : M.relations())
    for (std::size_t j = 0; j < k2; ++j) {
      ModVec v(k1 * k2, R.zero());
      for (std::size_t i = 0; i < k1; ++i) v[i * k2 + j] = a[i];
      rels.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < k1; ++i)
    for (const auto& b : N.relations()) {
      ModVec v(k1 * k2, R.zero());
      for (std::size_t j = 0; j < k2; ++j) v[i * k2 + j] = b[j];
      rels.push_back(std::move(v));
    }
  return PresentedModule(R, k1 * k2, std::move(rels));
}

PresentedModule quotient_by_ideal(const PresentedModule& M, const Ideal& J) {
  if (!(M.ring() == J.ring)) throw InputError("quotient ideal over a different ring");
  const Ring& R = M.ring();
  std::vector<ModVec> rels = M.relations();
  for (const auto& g : minimal_generators(J))
    for (std::size_t i = 0; i < M.generators(); ++i) {
      ModVec v(M.generators(), R.zero());
      v[i] = g;
      rels.push_back(std::move(v));
    }
  return PresentedModule(R, M.generators(), std::move(rels));
}

PresentedModule base_change(const PresentedModule& M, const RingMap& phi) {
  if (!(phi.source() == M.ring()))
    throw InputError("base change map does not start at the module ring");
  std::vector<ModVec> rels;
  rels.reserve(M.relations().size());
  for (const auto& a : M.relations()) {
    ModVec v;
    v.reserve(a.size());
    for (const auto& e : a) v.push_back(phi.apply(e));
    rels.push_back(std::move(v));
  }
  return PresentedModule(phi.target(), M.generators(), std::move(rels));
}

IdealModule ideal_as_module(const Ideal& J) {
  const Ring& R = J.ring;
  const std::vector<Elem> gens = minimal_generators(J);
  const std::size_t t = gens.size();
  // Relations = the full syzygy module of the generators, reduced.
  detail::PackedSpace space(R, t);
  std::vector<std::uint32_t> gen_idx;
  for (const auto& g : gens)
    gen_idx.push_back(static_cast<std::uint32_t>(R.index_of(g)));
  std::vector<std::vector<Elem>> syzygies;
  for (std::uint64_t v = 0; v < space.total(); ++v) {
    std::uint64_t x = v;
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < t; ++i) {
      acc = R.add_idx(acc, R.mul_idx(static_cast<std::uint32_t>(x % R.size()),
                                     gen_idx[i]));
      x /= R.size();
    }
    if (acc == 0) syzygies.push_back(space.unpack(v));
  }
  auto reduced = reduce_span_generators(R, t, syzygies);
  return IdealModule{PresentedModule(R, t, std::move(reduced)), gens};
}

// ---------------------------------------------------------------------------
// Invariants

Ideal annihilator(const PresentedModule& M) {
  const Ring& R = M.ring();
  const std::uint32_t s = static_cast<std::uint32_t>(R.size());
  std::vector<std::uint32_t> elems;
  std::vector<std::uint64_t> gens;
  for (std::size_t i = 0; i < M.generators(); ++i)
    gens.push_back(M.generator_packed(i));
  for (std::uint32_t r = 0; r < s; ++r) {
    bool kills = true;
    for (auto g : gens)
      if (M.scale_packed(r, g) != 0) {
        kills = false;
        break;
      }
    if (kills) elems.push_back(r);
  }
  return ideal_from_indices(R, elems);
}

namespace {

// For a local ring the maximal ideal is exactly the set of non-units.
std::vector<std::uint32_t> nonunit_indices(const Ring& R) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t x = 0; x < R.size(); ++x)
    if (!R.unit_idx(static_cast<std::uint32_t>(x)))
      out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

}  // namespace

std::size_t minimal_generators_local(const PresentedModule& M) {
  const Ring& R = M.ring();
  if (!is_local_ring(R))
    throw NonLocalError("minimal generator count needs a local ring; decompose first");
  const Ideal m = ideal_from_indices(R, nonunit_indices(R));
  const std::uint64_t residue_size = R.size() / ideal_elements(m).size();
  const std::uint64_t quotient_size = M.size() / ideal_multiple_count(M, m);
  std::size_t dim = 0;
  std::uint64_t power = 1;
  while (power < quotient_size) {
    power *= residue_size;
    ++dim;
  }
  if (power != quotient_size)
    throw Error("M/mM is not a residue-field power");
  return dim;
}

FreeLocalResult is_free_local(const PresentedModule& M) {
  const std::size_t g = minimal_generators_local(M);
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < g; ++i) expect *= M.ring().size();
  FreeLocalResult out;
  out.free = M.size() == expect;
  out.rank = out.free ? g : 0;
  return out;
}

namespace {

// Additive closure of the seed cosets inside M, coset by coset; linear in
// the size of the result. Returns the membership bitset (by canonical
// packed representative) and the member count.
std::pair<std::vector<std::uint8_t>, std::uint64_t> coset_closure(
    const PresentedModule& M, std::vector<std::uint64_t> seeds) {
  std::vector<std::uint8_t> in(M.ambient_count(), 0);
  std::vector<std::uint64_t> members{0};
  in[0] = 1;
  for (auto m : seeds) {
    if (in[m]) continue;
    const std::size_t group_size = members.size();
    std::uint64_t cur = m;
    while (!in[cur]) {
      for (std::size_t i = 0; i < group_size; ++i) {
        const std::uint64_t y = M.add_packed(members[i], cur);
        in[y] = 1;
        members.push_back(y);
      }
      cur = M.add_packed(cur, m);
    }
  }
  return {std::move(in), members.size()};
}

}  // namespace

std::uint64_t ideal_multiple_count(const PresentedModule& M, const Ideal& J) {
  if (!(M.ring() == J.ring)) throw InputError("ideal over a different ring");
  // JM = additive closure of { j * e_i } over j in J, as canonical cosets.
  std::vector<std::uint64_t> seeds;
  for (auto j : ideal_elements(J))
    for (std::size_t i = 0; i < M.generators(); ++i)
      seeds.push_back(M.scale_packed(j, M.generator_packed(i)));
  return coset_closure(M, std::move(seeds)).second;
}

namespace {

// Per-ring data for the flatness oracle: every ideal with its minimal
// generators, element list, and reduced syzygy presentation.
struct IdealOracleEntry {
  Ideal ideal;
  std::vector<std::uint32_t> gens;              // minimal generator indices
  std::vector<std::uint32_t> elements;          // sorted element indices
  std::vector<std::vector<std::uint32_t>> syz;  // reduced syzygies over R^t
};

const std::vector<IdealOracleEntry>& ideal_oracle_data(const Ring& R) {
  static std::mutex mu;
  static std::map<const Ring::Rep*,
                  std::pair<Ring, std::vector<IdealOracleEntry>>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(R.rep_key());
    if (it != cache.end()) return it->second.second;
  }
  std::vector<IdealOracleEntry> data;
  for (const Ideal& J : enumerate_ideals(R)) {
    IdealOracleEntry entry;
    entry.ideal = J;
    const auto jm = ideal_as_module(J);
    for (const auto& g : jm.gens)
      entry.gens.push_back(static_cast<std::uint32_t>(R.index_of(g)));
    entry.elements = ideal_elements(J);
    for (const auto& rel : jm.module.relations()) {
      std::vector<std::uint32_t> v;
      v.reserve(rel.size());
      for (const auto& e : rel)
        v.push_back(static_cast<std::uint32_t>(R.index_of(e)));
      entry.syz.push_back(std::move(v));
    }
    data.push_back(std::move(entry));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] =
      cache.emplace(R.rep_key(), std::make_pair(R, std::move(data)));
  return it->second.second;
}

}  // namespace

FlatnessReport flatness_report(const PresentedModule& M) {
  const auto* rep = M.rep_key();
  std::call_once(rep->flat_once, [&] {
    auto out = std::make_unique<FlatnessReport>();
    const Ring& R = M.ring();
    const std::size_t k = M.generators();
    const auto& data = ideal_oracle_data(R);
    out->flat = true;
    out->ideals_checked = data.size();
    for (const auto& entry : data) {
      const std::size_t t = entry.gens.size();
      // |J (x) M| from the tensor presentation span; no coset tables needed.
      detail::PackedSpace space(R, t * k);
      std::vector<std::uint64_t> rels;
      for (const auto& s : entry.syz)
        for (std::size_t j = 0; j < k; ++j) {
          // s (x) e_j
          std::uint64_t packed = 0;
          for (std::size_t i = 0; i < t; ++i) {
            std::uint64_t w = 1;
            for (std::size_t d = 0; d < i * k + j; ++d) w *= R.size();
            packed += std::uint64_t{s[i]} * w;
          }
          rels.push_back(packed);
        }
      for (std::size_t i = 0; i < t; ++i)
        for (const auto& rel : M.relations()) {
          // e_i (x) rel
          std::uint64_t packed = 0;
          for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t w = 1;
            for (std::size_t d = 0; d < i * k + j; ++d) w *= R.size();
            packed += R.index_of(rel[j]) * w;
          }
          rels.push_back(packed);
        }
      const std::uint64_t span_size = space.span(rels).size();
      const std::uint64_t tensor_count = space.total() / span_size;

      // |JM| inside M.
      std::vector<std::uint64_t> seeds;
      for (auto j : entry.elements)
        for (std::size_t i = 0; i < k; ++i)
          seeds.push_back(M.scale_packed(j, M.generator_packed(i)));
      const std::uint64_t image_count =
          coset_closure(M, std::move(seeds)).second;

      if (tensor_count != image_count) {
        out->flat = false;
        out->failing_ideal = entry.ideal;
        out->tensor_count = tensor_count;
        out->image_count = image_count;
        break;
      }
    }
    rep->flat = std::move(out);
  });
  return *rep->flat;
}

bool flatness_oracle(const PresentedModule& M) { return flatness_report(M).flat; }

// ---------------------------------------------------------------------------
// Flatness witnesses

bool verify_flatness_witness(const PresentedModule& M, const FlatnessWitness& w) {
  const Ring& R = M.ring();
  const std::size_t n = w.relation.size();
  const std::size_t m = w.ys.size();
  if (w.xs.size() != n || w.coeffs.size() != n) return false;
  for (const auto& row : w.coeffs)
    if (row.size() != m) return false;
  // x_i = sum_j r_ij y_j
  for (std::size_t i = 0; i < n; ++i) {
    ModVec acc = M.zero_element();
    for (std::size_t j = 0; j < m; ++j)
      acc = M.add(acc, M.scale(w.coeffs[i][j], w.ys[j]));
    if (!(acc == M.reduce(w.xs[i]))) return false;
  }
  // sum_i r_ij a_i = 0
  for (std::size_t j = 0; j < m; ++j) {
    Elem acc = R.zero();
    for (std::size_t i = 0; i < n; ++i)
      acc = R.add(acc, R.mul(w.coeffs[i][j], w.relation[i]));
    if (!R.is_zero(acc)) return false;
  }
  return true;
}

namespace {

// Greedy free basis of a free module over a local ring: the first subset of
// the standard generators whose residue images are independent. Returns
// generator indices.
std::vector<std::size_t> local_free_basis(const PresentedModule& M,
                                          std::size_t rank) {
  const Ring& R = M.ring();
  const auto m_elems = nonunit_indices(R);
  const auto in_m = [&](std::uint32_t r) {
    return std::binary_search(m_elems.begin(), m_elems.end(), r);
  };
  // mM as a set of cosets, for residue-independence tests.
  std::vector<std::uint64_t> seeds;
  for (auto j : m_elems)
    for (std::size_t i = 0; i < M.generators(); ++i)
      seeds.push_back(M.scale_packed(j, M.generator_packed(i)));
  const std::vector<std::uint8_t> in_mM = coset_closure(M, std::move(seeds)).first;

  std::vector<std::size_t> basis;
  const std::uint32_t s = static_cast<std::uint32_t>(R.size());
  for (std::size_t cand = 0; cand < M.generators() && basis.size() < rank;
       ++cand) {
    // Candidate joins if no combination sum c_b * e_b + c * e_cand with some
    // coefficient a unit lands in mM.
    std::vector<std::size_t> trial = basis;
    trial.push_back(cand);
    bool independent = true;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < trial.size(); ++i) combos *= s;
    for (std::uint64_t c = 0; c < combos && independent; ++c) {
      std::uint64_t x = c;
      bool some_unit = false;
      std::uint64_t acc = 0;
      for (auto gi : trial) {
        const std::uint32_t coeff = static_cast<std::uint32_t>(x % s);
        x /= s;
        if (!in_m(coeff)) some_unit = true;
        acc = M.add_packed(acc, M.scale_packed(coeff, M.generator_packed(gi)));
      }
      if (some_unit && in_mM[acc]) independent = false;
    }
    if (independent) basis = std::move(trial);
  }
  if (basis.size() != rank) throw Error("free basis extraction failed");
  return basis;
}

// Coordinates of x over the basis, unique since the basis is free.
std::vector<std::uint32_t> coordinates_over_basis(
    const PresentedModule& M, const std::vector<std::size_t>& basis,
    std::uint64_t x_packed) {
  const std::uint32_t s = static_cast<std::uint32_t>(M.ring().size());
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) combos *= s;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t x = c;
    std::uint64_t acc = 0;
    std::vector<std::uint32_t> coords(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      coords[i] = static_cast<std::uint32_t>(x % s);
      x /= s;
      acc = M.add_packed(acc, M.scale_packed(coords[i], M.generator_packed(basis[i])));
    }
    if (acc == x_packed) return coords;
  }
  throw Error("element is outside the span of the free basis");
}

}  // namespace

FlatnessWitness flatness_witness(const PresentedModule& M,
                                 const std::vector<Elem>& a,
                                 const std::vector<ModVec>& xs) {
  const Ring& R = M.ring();
  const std::size_t n = a.size();
  if (xs.size() != n) throw InputError("relation and vector counts differ");
  for (const auto& c : a)
    if (!R.is_canonical(c)) throw InputError("relation scalar not canonical");
  std::vector<ModVec> xr;
  xr.reserve(n);
  for (const auto& x : xs) xr.push_back(M.reduce(x));
  {
    ModVec acc = M.zero_element();
    for (std::size_t i = 0; i < n; ++i) acc = M.add(acc, M.scale(a[i], xr[i]));
    if (!M.is_zero_element(acc))
      throw InputError("the linear relation does not hold in the module");
  }

  FlatnessWitness w;
  w.relation = a;
  w.xs = xr;

  bool all_zero = true;
  for (const auto& c : a) all_zero = all_zero && R.is_zero(c);
  if (all_zero) {
    // Trivial relation: x_i = sum_j delta_ij x_j.
    w.ys = xr;
    w.coeffs.assign(n, std::vector<Elem>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i) w.coeffs[i][i] = R.one();
    if (!verify_flatness_witness(M, w)) throw Error("witness verification failed");
    return w;
  }

  if (!flatness_oracle(M))
    throw NotFlatError("flatness witness requested for a non-flat module");

  const auto& dec = local_decomposition(R);
  std::vector<std::vector<Elem>> column_r;  // per column: entries over R
  std::vector<ModVec> ys;
  for (const auto& factor : dec.factors) {
    const PresentedModule Ml = base_change(M, factor.projection);
    const auto fl = is_free_local(Ml);
    if (!fl.free) throw Error("flat module is not locally free");
    if (fl.rank == 0) continue;
    const auto basis = local_free_basis(Ml, fl.rank);
    // Coordinates of every x_i in this factor.
    std::vector<std::vector<std::uint32_t>> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
      ModVec xi;
      xi.reserve(M.generators());
      for (const auto& e : xr[i]) xi.push_back(factor.projection.apply(e));
      coords[i] = coordinates_over_basis(Ml, basis, Ml.reduce_packed(Ml.pack(xi)));
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // Global column: y = section(1) at the basis generator, r entries the
      // section images of the local coordinates.
      ModVec y(M.generators(), R.zero());
      y[basis[j]] = factor.idempotent;
      ys.push_back(M.reduce(y));
      std::vector<Elem> col(n);
      for (std::size_t i = 0; i < n; ++i)
        col[i] = factor.section.apply(Ml.ring().element_at(coords[i][j]));
      column_r.push_back(std::move(col));
    }
  }

  const std::size_t m = ys.size();
  w.ys = std::move(ys);
  w.coeffs.assign(n, std::vector<Elem>(m, R.zero()));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) w.coeffs[i][j] = column_r[j][i];
  if (m == 0) {
    // Zero module (or all ranks zero): every x_i is zero and any empty
    // expansion works.
    for (const auto& x : w.xs)
      if (!M.is_zero_element(x)) throw Error("empty witness on nonzero vectors");
  }
  if (!verify_flatness_witness(M, w)) throw Error("witness verification failed");
  return w;
}

std::optional<FlatnessWitness> flatness_witness_bruteforce(
    const PresentedModule& M, const std::vector<Elem>& a,
    const std::vector<ModVec>& xs, std::size_t max_cols) {
  const Ring& R = M.ring();
  const std::size_t n = a.size();
  std::vector<ModVec> xr;
  for (const auto& x : xs) xr.push_back(M.reduce(x));
  const std::uint64_t s = R.size();
  const std::uint64_t msize = M.size();
  for (std::size_t m = 1; m <= max_cols; ++m) {
    // r is n x m over R, y is m module elements.
    std::uint64_t r_combos = 1, y_combos = 1;
    for (std::size_t i = 0; i < n * m; ++i) {
      if (r_combos > (std::uint64_t{1} << 28)) throw Error("witness search too large");
      r_combos *= s;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (y_combos > (std::uint64_t{1} << 28)) throw Error("witness search too large");
      y_combos *= msize;
    }
    for (std::uint64_t rc = 0; rc < r_combos; ++rc) {
      std::vector<std::vector<Elem>> coeffs(n, std::vector<Elem>(m));
      std::uint64_t x = rc;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          coeffs[i][j] = R.element_at(x % s);
          x /= s;
        }
      bool cols_ok = true;
      for (std::size_t j = 0; j < m && cols_ok; ++j) {
        Elem acc = R.zero();
        for (std::size_t i = 0; i < n; ++i)
          acc = R.add(acc, R.mul(coeffs[i][j], a[i]));
        cols_ok = R.is_zero(acc);
      }
      if (!cols_ok) continue;
      for (std::uint64_t yc = 0; yc < y_combos; ++yc) {
        std::vector<ModVec> ys(m);
        std::uint64_t y = yc;
        for (std::size_t j = 0; j < m; ++j) {
          ys[j] = M.element_at(y % msize);
          y /= msize;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          ModVec acc = M.zero_element();
          for (std::size_t j = 0; j < m; ++j)
            acc = M.add(acc, M.scale(coeffs[i][j], ys[j]));
          ok = acc == xr[i];
        }
        if (ok) {
          FlatnessWitness w;
          w.relation = a;
          w.xs = xr;
          w.coeffs = coeffs;
          w.ys = ys;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Independence lifting and quotient annihilators

bool independence_lift_check(const PresentedModule& M,
                             const std::vector<ModVec>& S) {
  const Ring& R = M.ring();
  if (!is_local_ring(R))
    throw NonLocalError("independence lifting is stated over local rings");
  if (!is_free_local(M).free)
    throw PreconditionError("independence lifting needs a free module");
  const auto m_elems = nonunit_indices(R);
  const auto in_m = [&](std::uint32_t r) {
    return std::binary_search(m_elems.begin(), m_elems.end(), r);
  };
  std::vector<std::uint64_t> vs;
  for (const auto& v : S) vs.push_back(M.reduce_packed(M.pack(v)));

  // mM for residue-image independence.
  std::vector<std::uint64_t> seeds;
  for (auto j : m_elems)
    for (std::size_t i = 0; i < M.generators(); ++i)
      seeds.push_back(M.scale_packed(j, M.generator_packed(i)));
  const std::vector<std::uint8_t> in_mM = coset_closure(M, std::move(seeds)).first;

  const std::uint32_t s = static_cast<std::uint32_t>(R.size());
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) combos *= s;

  // Precondition: residue images are independent.
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t x = c;
    bool some_unit_coeff = false;
    std::uint64_t acc = 0;
    for (auto v : vs) {
      const std::uint32_t coeff = static_cast<std::uint32_t>(x % s);
      x /= s;
      if (!in_m(coeff)) some_unit_coeff = true;
      acc = M.add_packed(acc, M.scale_packed(coeff, v));
    }
    if (some_unit_coeff && in_mM[acc])
      throw PreconditionError("residue images of S are linearly dependent");
  }

  // The lifted statement: independence over R itself.
  for (std::uint64_t c = 1; c < combos; ++c) {
    std::uint64_t x = c;
    std::uint64_t acc = 0;
    for (auto v : vs) {
      acc = M.add_packed(acc, M.scale_packed(static_cast<std::uint32_t>(x % s), v));
      x /= s;
    }
    if (acc == 0) return false;
  }
  return true;
}

bool quotient_annihilator_check(const PresentedModule& M, const Ideal& J) {
  const Ideal lhs = annihilator(quotient_by_ideal(M, J));
  const Ideal rhs = ideal_sum(annihilator(M), J);
  return ideal_equal(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Enumeration of presentations

PresentedModule presented_module_from_code(const Ring& R, std::size_t k,
                                           std::size_t m, std::uint64_t code) {
  const std::uint64_t s = R.size();
  std::vector<ModVec> rels(m);
  for (std::size_t c = 0; c < m; ++c) {
    ModVec v;
    v.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      v.push_back(R.element_at(code % s));
      code /= s;
    }
    rels[c] = std::move(v);
  }
  return PresentedModule(R, k, std::move(rels));
}

void for_each_presented_module(
    const Ring& R, std::size_t max_gens, std::size_t max_rels,
    const std::function<void(const PresentedModule&)>& fn) {
  const std::uint64_t s = R.size();
  for (std::size_t k = 0; k <= max_gens; ++k)
    for (std::size_t m = 0; m <= max_rels; ++m) {
      std::uint64_t matrices = 1;  // s^(k*m)
      for (std::size_t i = 0; i < k * m; ++i) matrices *= s;
      for (std::uint64_t code = 0; code < matrices; ++code)
        fn(presented_module_from_code(R, k, m, code));
    }
}

std::uint64_t count_presented_modules(const Ring& R, std::size_t max_gens,
                                      std::size_t max_rels) {
  const std::uint64_t s = R.size();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= max_gens; ++k)
    for (std::size_t m = 0; m <= max_rels; ++m) {
      std::uint64_t matrices = 1;
      for (std::size_t i = 0; i < k * m; ++i) matrices *= s;
      total += matrices;
    }
  return total;
}

}  // namespace flatcheck
