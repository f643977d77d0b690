#pragma once

#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/local.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/ring.hpp"

namespace flatcheck {

// A point of Spec R for a finite ring R: the prime pulled back from the
// maximal ideal of one local factor, together with its residue field. For
// finite rings every prime arises this way and each point is clopen.
struct PrimeSite {
  Ring ring;
  std::size_t factor_index = 0;
  Ideal prime;         // pullback of the factor maximal ideal, reduced gens
  Ring residue_field;
};

// One site per local factor, in decomposition order. Primality of each
// pullback (complement closed under multiplication) is verified once.
const std::vector<PrimeSite>& prime_sites(const Ring& R);

// Localization at a prime of a finite ring is projection onto the matching
// local factor; the presentation maps through entrywise.
PresentedModule localize_module(const PresentedModule& M, const PrimeSite& p);

// Localize a finitely generated ideal: the ideal of the factor spanned by
// the projected generators.
Ideal localize_ideal(const Ideal& I, const PrimeSite& p);

// Ann(M) localized vs Ann(M localized); equality is a theorem, so a false
// return flags a defect in one of the two routes.
bool localized_annihilator_check(const PresentedModule& M, const PrimeSite& p);

// Sites where the localization is nonzero.
std::vector<PrimeSite> support(const PresentedModule& M);
std::vector<std::size_t> support_indices(const PresentedModule& M);

// Free rank of the localization at every site, in site order.
struct RankMap {
  Ring ring;
  std::vector<std::size_t> ranks;
};

// Locally constant means constant on connected components of Spec R. For a
// finite ring every local factor carries its own idempotent, so every point
// is clopen and any total rank map is locally constant; the check validates
// totality and records where a non-discrete spectrum would diverge.
bool is_locally_constant(const RankMap& rm);

}  // namespace flatcheck
