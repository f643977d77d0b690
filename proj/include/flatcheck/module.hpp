#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "flatcheck/ideal.hpp"
#include "flatcheck/local.hpp"
#include "flatcheck/ring.hpp"

namespace flatcheck {

// Ambient vector in R^k. Module elements are canonical coset representatives:
// the least vector of the coset in the ambient enumeration order.
using ModVec = std::vector<Elem>;

// Finitely presented module over a finite ring: coker(R^m -> R^k) with the
// relation vectors as the columns of the presentation matrix. The relation
// submodule, coset representative table and coset list are computed once at
// construction, so all later reads are pure and safely concurrent.
class PresentedModule {
 public:
  PresentedModule(Ring ring, std::size_t generators,
                  std::vector<ModVec> relations);

  const Ring& ring() const;
  std::size_t generators() const;
  const std::vector<ModVec>& relations() const;

  std::uint64_t size() const;  // |M|
  bool is_zero_module() const { return size() == 1; }

  ModVec zero_element() const;
  ModVec generator(std::size_t i) const;  // coset of e_i
  ModVec reduce(const ModVec& ambient) const;
  ModVec add(const ModVec& a, const ModVec& b) const;
  ModVec scale(const Elem& r, const ModVec& a) const;
  bool is_zero_element(const ModVec& a) const;

  std::uint64_t element_count() const { return size(); }
  ModVec element_at(std::uint64_t i) const;
  std::uint64_t element_index(const ModVec& canonical) const;

  // Packed interface for exhaustive kernels.
  std::uint64_t ambient_count() const;  // |R|^k
  std::uint64_t pack(const ModVec& v) const;
  ModVec unpack(std::uint64_t x) const;
  std::uint64_t reduce_packed(std::uint64_t x) const;
  std::uint64_t add_packed(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t scale_packed(std::uint32_t r, std::uint64_t a) const;
  std::uint64_t generator_packed(std::size_t i) const;
  const std::vector<std::uint64_t>& relation_span() const;  // sorted
  const std::vector<std::uint64_t>& coset_list() const;     // sorted reps
  std::uint64_t coset_index(std::uint64_t canonical_packed) const;

  bool operator==(const PresentedModule& other) const;

  struct Rep;
  const Rep* rep_key() const { return rep_.get(); }

 private:
  std::shared_ptr<const Rep> rep_;
};

PresentedModule free_module(const Ring& R, std::size_t rank);

// --- constructions ---------------------------------------------------------

PresentedModule direct_sum(const PresentedModule& M, const PresentedModule& N);

// Tensor product of presentations; generator (i, j) of M (x) N has index
// i * N.generators() + j.
PresentedModule tensor(const PresentedModule& M, const PresentedModule& N);

PresentedModule quotient_by_ideal(const PresentedModule& M, const Ideal& J);

// M (x)_R T along phi : R -> T (entrywise image of the presentation).
PresentedModule base_change(const PresentedModule& M, const RingMap& phi);

// The ideal J as a presented module on its minimal generators, relations the
// full syzygy module (reduced). Second member: the generators used.
struct IdealModule {
  PresentedModule module;
  std::vector<Elem> gens;
};
IdealModule ideal_as_module(const Ideal& J);

// --- invariants ------------------------------------------------------------

Ideal annihilator(const PresentedModule& M);

// Nakayama generator count dim_k(M / mM) over a local ring.
std::size_t minimal_generators_local(const PresentedModule& M);

struct FreeLocalResult {
  bool free = false;
  std::size_t rank = 0;
};
FreeLocalResult is_free_local(const PresentedModule& M);

// Flatness via the finitely generated ideal criterion: M is flat iff
// J (x) M -> M is injective for every ideal J, i.e. |J (x) M| = |JM|.
// Independent of the projectivity machinery by construction. Cached.
struct FlatnessReport {
  bool flat = false;
  std::size_t ideals_checked = 0;
  std::optional<Ideal> failing_ideal;
  std::uint64_t tensor_count = 0;  // |J (x) M| at the failure
  std::uint64_t image_count = 0;   // |JM| at the failure
};
FlatnessReport flatness_report(const PresentedModule& M);
bool flatness_oracle(const PresentedModule& M);

// |JM| as a subset of M.
std::uint64_t ideal_multiple_count(const PresentedModule& M, const Ideal& J);

// --- linear relation witnesses ---------------------------------------------

// Data certifying how a linear relation sum a_i x_i = 0 untangles in a flat
// module: x_i = sum_j r_ij y_j with sum_i r_ij a_i = 0 for every j.
struct FlatnessWitness {
  std::vector<Elem> relation;            // a, length n
  std::vector<ModVec> xs;                // length n
  std::vector<std::vector<Elem>> coeffs; // r, n rows, m columns
  std::vector<ModVec> ys;                // length m
};

bool verify_flatness_witness(const PresentedModule& M, const FlatnessWitness& w);

// Constructive route: per local factor, expand each x_i over a free basis
// and recombine by CRT.
FlatnessWitness flatness_witness(const PresentedModule& M,
                                 const std::vector<Elem>& a,
                                 const std::vector<ModVec>& xs);

// Bounded brute-force route for cross-validation on tiny modules: first
// witness with m columns, m <= max_cols, in enumeration order.
std::optional<FlatnessWitness> flatness_witness_bruteforce(
    const PresentedModule& M, const std::vector<Elem>& a,
    const std::vector<ModVec>& xs, std::size_t max_cols);

// --- local independence and quotient annihilators ---------------------------

// Over a local ring with M free: S has linearly independent images in M/mM
// (precondition, else PreconditionError) and the check returns whether S is
// linearly independent over R itself.
bool independence_lift_check(const PresentedModule& M,
                             const std::vector<ModVec>& S);

// Ann(M/JM) = Ann(M) + J, computed on both sides.
bool quotient_annihilator_check(const PresentedModule& M, const Ideal& J);

// --- enumeration ------------------------------------------------------------

// Every presented module over R with at most max_gens generators and
// max_rels relations, in a fixed deterministic order.
void for_each_presented_module(
    const Ring& R, std::size_t max_gens, std::size_t max_rels,
    const std::function<void(const PresentedModule&)>& fn);

// The module with k generators and m relations whose presentation matrix is
// the mixed-radix decode of `code` (column by column, digit = element index).
PresentedModule presented_module_from_code(const Ring& R, std::size_t k,
                                           std::size_t m, std::uint64_t code);

std::uint64_t count_presented_modules(const Ring& R, std::size_t max_gens,
                                      std::size_t max_rels);

}  // namespace flatcheck
