#include "flatcheck/exterior.hpp"

#include <algorithm>
#include <map>

namespace flatcheck {

namespace {

void collect_subsets(std::size_t k, std::size_t n, std::size_t start,
                     std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < k; ++i) {
    cur.push_back(i);
    collect_subsets(k, n, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  collect_subsets(k, n, 0, cur, out);
  return out;
}

Elem det(const Ring& R, const std::vector<std::vector<Elem>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return R.one();
  if (n == 1) return a[0][0];
  Elem acc = R.zero();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Elem>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Elem> row;
      row.reserve(n - 1);
      for (std::size_t c = 1; c < n; ++c) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const Elem term = R.mul(a[i][0], det(R, minor));
    acc = i % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

}  // namespace

ExteriorPresentation exterior_presentation(const PresentedModule& M,
                                           std::size_t n) {
  const Ring& R = M.ring();
  const std::size_t k = M.generators();
  auto gens = subsets_lex(k, n);
  std::map<std::vector<std::size_t>, std::size_t> index_of;
  for (std::size_t i = 0; i < gens.size(); ++i) index_of[gens[i]] = i;

  std::vector<ModVec> rels;
  if (n >= 1) {
    const auto smalls = subsets_lex(k, n - 1);
    for (const auto& a : M.relations()) {
      for (const auto& T : smalls) {
        ModVec v(gens.size(), R.zero());
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
          if (std::binary_search(T.begin(), T.end(), i)) continue;
          std::vector<std::size_t> joined = T;
          joined.insert(std::lower_bound(joined.begin(), joined.end(), i), i);
          const std::size_t below =
              static_cast<std::size_t>(std::lower_bound(T.begin(), T.end(), i) -
                                       T.begin());
          const Elem signed_coeff = below % 2 == 0 ? a[i] : R.neg(a[i]);
          const std::size_t pos = index_of.at(joined);
          v[pos] = R.add(v[pos], signed_coeff);
          nonzero = nonzero || !R.is_zero(v[pos]);
        }
        if (nonzero) rels.push_back(std::move(v));
      }
    }
  }

  ExteriorPresentation out{M, n, PresentedModule(R, gens.size(), std::move(rels)),
                           std::move(gens)};
  return out;
}

PresentedModule exterior_power(const PresentedModule& M, std::size_t n) {
  return exterior_presentation(M, n).result;
}

Ideal invariant_factor(const PresentedModule& M, std::size_t n) {
  return annihilator(exterior_power(M, n));
}

Ideal fitting_ideal(const PresentedModule& M, std::size_t n) {
  const Ring& R = M.ring();
  const std::size_t k = M.generators();
  const std::size_t m = M.relations().size();
  if (n >= k) return Ideal::unit(R);
  const std::size_t d = k - n;  // minor size
  if (d > k || d > m) return Ideal::zero(R);
  const auto row_sets = subsets_lex(k, d);
  const auto col_sets = subsets_lex(m, d);
  std::vector<Elem> gens;
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) {
      std::vector<std::vector<Elem>> minor(d, std::vector<Elem>(d));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          minor[r][c] = M.relations()[cols[c]][rows[r]];
      gens.push_back(det(R, minor));
    }
  return Ideal::span(R, std::move(gens));
}

RankMap rank_map(const PresentedModule& M) {
  if (!flatness_oracle(M)) {
    const auto& report = flatness_report(M);
    std::string detail = "rank map undefined: module is not flat";
    if (report.failing_ideal)
      detail += " (tensor injectivity fails at an ideal of " +
                M.ring().describe() + ")";
    throw NotFlatError(detail);
  }
  RankMap rm;
  rm.ring = M.ring();
  for (const auto& site : prime_sites(M.ring())) {
    const auto fl = is_free_local(localize_module(M, site));
    if (!fl.free) throw Error("flat module with a non-free localization");
    rm.ranks.push_back(fl.rank);
  }
  return rm;
}

bool support_formula_check(const PresentedModule& M, std::size_t n) {
  const RankMap rm = rank_map(M);
  const auto supp = support_indices(exterior_power(M, n));
  std::vector<std::size_t> predicted;
  for (std::size_t i = 0; i < rm.ranks.size(); ++i)
    if (rm.ranks[i] >= n) predicted.push_back(i);
  return supp == predicted;
}

}  // namespace flatcheck
