#include "flatcheck/spectrum.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace flatcheck {

namespace {

Ring residue_field_of_factor(const Ring& factor, const Ideal& max_ideal) {
  const auto m_elems = ideal_elements(max_ideal);
  if (m_elems.size() == 1) return factor;  // already a field
  std::vector<Elem> gens;
  gens.reserve(m_elems.size());
  for (auto i : m_elems) gens.push_back(factor.element_at(i));
  return quotient_local_factor(factor, gens).ring;
}

std::vector<PrimeSite> build_sites(const Ring& R) {
  const auto& dec = local_decomposition(R);
  std::vector<PrimeSite> sites;
  for (std::size_t fi = 0; fi < dec.factors.size(); ++fi) {
    const auto& f = dec.factors[fi];
    const auto m_elems = ideal_elements(f.max_ideal);
    std::vector<std::uint32_t> pullback;
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      const std::uint32_t y = f.projection.apply_idx(static_cast<std::uint32_t>(x));
      if (std::binary_search(m_elems.begin(), m_elems.end(), y))
        pullback.push_back(static_cast<std::uint32_t>(x));
    }
    Ideal prime = ideal_from_indices(R, pullback);
    // Primality: the complement must be closed under multiplication.
    const auto p_elems = ideal_elements(prime);
    std::vector<std::uint32_t> complement;
    for (std::uint64_t x = 0; x < R.size(); ++x)
      if (!std::binary_search(p_elems.begin(), p_elems.end(),
                              static_cast<std::uint32_t>(x)))
        complement.push_back(static_cast<std::uint32_t>(x));
    for (auto a : complement)
      for (auto b : complement)
        if (std::binary_search(p_elems.begin(), p_elems.end(), R.mul_idx(a, b)))
          throw Error("pullback of a maximal ideal failed the primality check");
    // The projection is the localization at this prime: the complement maps
    // to units, and the kernel is exactly the elements killed by some
    // element outside the prime.
    for (auto s : complement)
      if (!f.ring.unit_idx(f.projection.apply_idx(s)))
        throw Error("localization check: complement element not inverted");
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      const bool in_kernel =
          f.projection.apply_idx(static_cast<std::uint32_t>(x)) == 0;
      bool killed = false;
      for (auto s : complement)
        if (R.mul_idx(s, static_cast<std::uint32_t>(x)) == 0) {
          killed = true;
          break;
        }
      if (in_kernel != killed)
        throw Error("localization check: kernel mismatch at the prime");
    }
    PrimeSite site;
    site.ring = R;
    site.factor_index = fi;
    site.prime = std::move(prime);
    site.residue_field = residue_field_of_factor(f.ring, f.max_ideal);
    sites.push_back(std::move(site));
  }
  return sites;
}

}  // namespace

const std::vector<PrimeSite>& prime_sites(const Ring& R) {
  if (!R.is_finite()) throw Error("prime sites are computed for finite rings");
  static std::mutex mu;
  static std::map<const Ring::Rep*, std::pair<Ring, std::vector<PrimeSite>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(R.rep_key());
    if (it != cache.end()) return it->second.second;
  }
  auto sites = build_sites(R);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] =
      cache.emplace(R.rep_key(), std::make_pair(R, std::move(sites)));
  return it->second.second;
}

PresentedModule localize_module(const PresentedModule& M, const PrimeSite& p) {
  if (!(M.ring() == p.ring))
    throw InputError("prime site belongs to a different ring");
  const auto& dec = local_decomposition(M.ring());
  return base_change(M, dec.factors[p.factor_index].projection);
}

Ideal localize_ideal(const Ideal& I, const PrimeSite& p) {
  if (!(I.ring == p.ring))
    throw InputError("prime site belongs to a different ring");
  const auto& f = local_decomposition(I.ring).factors[p.factor_index];
  std::vector<Elem> gens;
  gens.reserve(I.gens.size());
  for (const auto& g : I.gens) gens.push_back(f.projection.apply(g));
  return Ideal::span(f.ring, std::move(gens));
}

bool localized_annihilator_check(const PresentedModule& M, const PrimeSite& p) {
  const Ideal localized_ann = localize_ideal(annihilator(M), p);
  const Ideal ann_localized = annihilator(localize_module(M, p));
  return ideal_equal(localized_ann, ann_localized);
}

std::vector<std::size_t> support_indices(const PresentedModule& M) {
  std::vector<std::size_t> out;
  const auto& sites = prime_sites(M.ring());
  for (std::size_t i = 0; i < sites.size(); ++i)
    if (!localize_module(M, sites[i]).is_zero_module()) out.push_back(i);
  return out;
}

std::vector<PrimeSite> support(const PresentedModule& M) {
  std::vector<PrimeSite> out;
  const auto& sites = prime_sites(M.ring());
  for (auto i : support_indices(M)) out.push_back(sites[i]);
  return out;
}

bool is_locally_constant(const RankMap& rm) {
  const auto& sites = prime_sites(rm.ring);
  if (rm.ranks.size() != sites.size())
    throw InputError("rank map is not total over the prime sites");
  // Each site of a finite ring is clopen (its factor idempotent cuts it
  // out), so the connected components are singletons.
  return true;
}

}  // namespace flatcheck
