#include "flatcheck/local.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace flatcheck {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a < 0 ? -a : a;
}

// --- polynomial helpers over F_p (little-endian coefficient vectors) ------

std::vector<std::int64_t> poly_trim(std::vector<std::int64_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  std::int64_t e = p - 2;  // p prime
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
  a = poly_trim(std::move(a));
  const auto bt = poly_trim(b);
  const std::int64_t lead_inv = inv_mod(bt.back(), p);
  while (a.size() >= bt.size() && !a.empty()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - bt.size();
    for (std::size_t i = 0; i < bt.size(); ++i) {
      a[shift + i] = ((a[shift + i] - c * bt[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

std::vector<std::int64_t> poly_gcd(std::vector<std::int64_t> a,
                                   std::vector<std::int64_t> b,
                                   std::int64_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::int64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;  // monic, or empty for gcd(0,0)
}

// --- factor ring construction ---------------------------------------------

// Realize the piece R*e as a descriptor ring together with the projection
// table. For zmod the factor is Z/q with q the additive order of e; for
// poly quotients it is F_p[x]/(d) with d = gcd(f, lift(1-e)); products
// recurse into the unique component where e is nonzero.
std::pair<Ring, std::vector<std::uint32_t>> factor_for_idempotent(const Ring& R,
                                                                  const Elem& e) {
  switch (R.kind()) {
    case RingKind::Zmod: {
      const std::int64_t n = R.zmod_n();
      const std::int64_t q = n / gcd64(e.residue_value(), n);
      Ring F = Ring::zmod(q);
      std::vector<std::uint32_t> proj(R.size());
      for (std::int64_t x = 0; x < n; ++x)
        proj[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(x % q);
      return {std::move(F), std::move(proj)};
    }
    case RingKind::PolyQuotient: {
      const std::int64_t p = R.poly_p();
      const Elem complement = R.sub(R.one(), e);
      std::vector<std::int64_t> d =
          R.is_zero(complement) ? R.poly_modulus()
                                : poly_gcd(R.poly_modulus(), complement.coeff_values(), p);
      if (poly_trim(d).size() < 2)
        throw Error("degenerate idempotent factor in poly quotient");
      Ring F = Ring::poly_quotient(p, d);
      const std::size_t fdeg = F.poly_modulus().size() - 1;
      std::vector<std::uint32_t> proj(R.size());
      for (std::uint64_t i = 0; i < R.size(); ++i) {
        auto rem = poly_mod(R.element_at(i).coeff_values(), d, p);
        rem.resize(fdeg, 0);
        proj[i] = static_cast<std::uint32_t>(F.index_of(Elem::coeffs(std::move(rem))));
      }
      return {std::move(F), std::move(proj)};
    }
    case RingKind::Product: {
      const auto& parts = e.tuple_parts();
      const auto& factors = R.factors();
      std::size_t live = factors.size();
      for (std::size_t j = 0; j < factors.size(); ++j)
        if (!factors[j].is_zero(parts[j])) {
          if (live != factors.size())
            throw Error("idempotent is not primitive in the product");
          live = j;
        }
      if (live == factors.size()) throw Error("zero idempotent has no factor");
      auto [F, sub_proj] = factor_for_idempotent(factors[live], parts[live]);
      std::vector<std::uint32_t> proj(R.size());
      for (std::uint64_t i = 0; i < R.size(); ++i) {
        const Elem x = R.element_at(i);
        proj[i] = sub_proj[factors[live].index_of(x.tuple_parts()[live])];
      }
      return {std::move(F), std::move(proj)};
    }
    case RingKind::Seq:
      throw Error("seq rings have no local decomposition");
  }
  throw Error("bad ring kind");
}

LocalDecomposition build_decomposition(const Ring& R) {
  if (!R.is_finite()) throw Error("local decomposition requires a finite ring");
  const std::uint64_t s = R.size();

  // Primitive idempotents: minimal nonzero elements of the idempotent
  // Boolean algebra (f <= e iff f*e = f).
  std::vector<Elem> idems;
  for (std::uint64_t i = 0; i < s; ++i) {
    const Elem e = R.element_at(i);
    if (R.is_idempotent(e)) idems.push_back(e);
  }
  std::vector<Elem> primitive;
  for (const auto& e : idems) {
    if (R.is_zero(e)) continue;
    bool minimal = true;
    for (const auto& f : idems) {
      if (R.is_zero(f) || f == e) continue;
      if (R.mul(f, e) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) primitive.push_back(e);
  }

  // Orthogonality and partition of unity.
  Elem total = R.zero();
  for (std::size_t i = 0; i < primitive.size(); ++i) {
    total = R.add(total, primitive[i]);
    for (std::size_t j = i + 1; j < primitive.size(); ++j)
      if (!R.is_zero(R.mul(primitive[i], primitive[j])))
        throw Error("primitive idempotents are not orthogonal");
  }
  if (!R.is_one(total)) throw Error("primitive idempotents do not sum to 1");

  LocalDecomposition dec;
  dec.ring = R;
  std::uint64_t factor_size_product = 1;
  for (const auto& e : primitive) {
    auto [F, proj_tab] = factor_for_idempotent(R, e);
    RingMap proj(R, F, std::move(proj_tab));
    if (!proj.verify_homomorphism())
      throw Error("factor projection is not a ring map");
    if (!proj.is_surjective()) throw Error("factor projection is not onto");

    // Section table: sigma(y) = x*e for the first x with proj(x) = y.
    std::vector<std::int64_t> sec(F.size(), -1);
    for (std::uint64_t x = 0; x < s; ++x) {
      const std::uint32_t y = proj.apply_idx(static_cast<std::uint32_t>(x));
      if (sec[y] < 0)
        sec[y] = static_cast<std::int64_t>(R.index_of(R.mul(R.element_at(x), e)));
    }
    std::vector<std::uint32_t> sec_tab(sec.begin(), sec.end());
    RingMap section(F, R, std::move(sec_tab));  // not unital; a module section

    // The maximal ideal: the non-units, which must be additively closed.
    std::vector<std::uint32_t> nonunits;
    for (std::uint64_t y = 0; y < F.size(); ++y)
      if (!F.unit_idx(static_cast<std::uint32_t>(y)))
        nonunits.push_back(static_cast<std::uint32_t>(y));
    for (auto a : nonunits)
      for (auto b : nonunits)
        if (F.unit_idx(F.add_idx(a, b)))
          throw Error("factor is not local: non-units not closed under +");
    Ideal m = ideal_from_indices(F, nonunits);

    factor_size_product *= F.size();
    dec.factors.push_back(LocalFactor{std::move(F), std::move(proj),
                                      std::move(section), e, std::move(m)});
  }

  if (factor_size_product != s)
    throw Error("local factors do not multiply out to the ring");
  // CRT round trip.
  for (std::uint64_t x = 0; x < s; ++x) {
    std::vector<Elem> parts;
    parts.reserve(dec.factors.size());
    for (const auto& f : dec.factors)
      parts.push_back(f.ring.element_at(f.projection.apply_idx(static_cast<std::uint32_t>(x))));
    if (!(dec.recombine(parts) == R.element_at(x)))
      throw Error("CRT recombination failed");
  }
  return dec;
}

}  // namespace

Elem LocalDecomposition::recombine(const std::vector<Elem>& parts) const {
  if (parts.size() != factors.size())
    throw InputError("recombine needs one part per local factor");
  Elem x = ring.zero();
  for (std::size_t i = 0; i < factors.size(); ++i)
    x = ring.add(x, factors[i].section.apply(parts[i]));
  return x;
}

const LocalDecomposition& local_decomposition(const Ring& R) {
  static std::mutex mu;
  static std::map<const Ring::Rep*, std::pair<Ring, LocalDecomposition>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(R.rep_key());
    if (it != cache.end()) return it->second.second;
  }
  LocalDecomposition dec = build_decomposition(R);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] =
      cache.emplace(R.rep_key(), std::make_pair(R, std::move(dec)));
  return it->second.second;
}

bool is_local_ring(const Ring& R) {
  return local_decomposition(R).factors.size() == 1;
}

Ideal jacobson_radical(const Ring& R) {
  const auto& dec = local_decomposition(R);
  std::vector<std::uint32_t> elems;
  for (std::uint64_t x = 0; x < R.size(); ++x) {
    bool in_all = true;
    for (const auto& f : dec.factors) {
      if (f.ring.unit_idx(f.projection.apply_idx(static_cast<std::uint32_t>(x)))) {
        in_all = false;
        break;
      }
    }
    if (in_all) elems.push_back(static_cast<std::uint32_t>(x));
  }
  return ideal_from_indices(R, elems);
}

Ideal nilradical(const Ring& R) {
  if (!R.is_finite()) throw Error("nilradical enumeration requires a finite ring");
  std::vector<std::uint32_t> elems;
  for (std::uint64_t x = 0; x < R.size(); ++x)
    if (R.is_nilpotent(R.element_at(x)))
      elems.push_back(static_cast<std::uint32_t>(x));
  return ideal_from_indices(R, elems);
}

FactorQuotient quotient_local_factor(const Ring& factor,
                                     const std::vector<Elem>& ideal_gens) {
  switch (factor.kind()) {
    case RingKind::Zmod: {
      const std::int64_t q = factor.zmod_n();
      std::int64_t g = q;
      for (const auto& e : ideal_gens) g = gcd64(g, e.residue_value());
      if (g < 2) throw Error("quotient by the unit ideal is the zero ring");
      Ring Q = Ring::zmod(g);
      std::vector<std::uint32_t> tab(factor.size());
      for (std::int64_t x = 0; x < q; ++x)
        tab[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(x % g);
      RingMap m(factor, Q, std::move(tab));
      return {std::move(Q), std::move(m)};
    }
    case RingKind::PolyQuotient: {
      const std::int64_t p = factor.poly_p();
      std::vector<std::int64_t> d = factor.poly_modulus();
      for (const auto& e : ideal_gens) d = poly_gcd(d, e.coeff_values(), p);
      if (poly_trim(d).size() < 2)
        throw Error("quotient by the unit ideal is the zero ring");
      Ring Q = Ring::poly_quotient(p, d);
      const std::size_t deg = Q.poly_modulus().size() - 1;
      std::vector<std::uint32_t> tab(factor.size());
      for (std::uint64_t i = 0; i < factor.size(); ++i) {
        auto rem = poly_mod(factor.element_at(i).coeff_values(), d, p);
        rem.resize(deg, 0);
        tab[i] = static_cast<std::uint32_t>(Q.index_of(Elem::coeffs(std::move(rem))));
      }
      RingMap m(factor, Q, std::move(tab));
      return {std::move(Q), std::move(m)};
    }
    default:
      throw Error("quotient_local_factor expects a zmod or poly factor");
  }
}

}  // namespace flatcheck
