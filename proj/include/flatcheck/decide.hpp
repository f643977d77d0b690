#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatcheck/exterior.hpp"
#include "flatcheck/module.hpp"
#include "flatcheck/ring.hpp"
#include "flatcheck/seqring.hpp"
#include "flatcheck/spectrum.hpp"

namespace flatcheck {

struct ConditionRecord {
  std::string name;
  bool holds = false;
  std::string detail;
};

// Projectivity verdict with the audit trail of the three equivalent
// conditions: flatness (oracle), idempotent-generated invariant factors,
// and a locally constant rank map; plus the direct local-freeness check.
struct ProjectivityVerdict {
  bool projective = false;
  std::optional<RankMap> rank_map;
  std::string reason;  // nonempty when not projective
  std::vector<ConditionRecord> evidence;
};

ProjectivityVerdict is_projective(const PresentedModule& M);

// Descent along an injective ring extension A -> B: if M (x)_A B is
// B-projective then M is A-projective. Returns whether the implication held
// on this instance (it always should).
bool extension_descent_check(const Ring& A, const Ring& B, const RingMap& embed,
                             const PresentedModule& M);

// R/J realized by quotienting every local factor and reassembling a product.
struct QuotientRing {
  Ring ring;
  RingMap map;  // R -> R/J
};
QuotientRing quotient_ring(const Ring& R, const Ideal& J);

// Descent modulo an ideal inside the Jacobson radical: if M/JM is
// R/J-projective then M is R-projective.
bool radical_descent_check(const Ring& R, const Ideal& J,
                           const PresentedModule& M);

// Descent along a ring map whose kernel lies inside the Jacobson radical.
bool kernel_radical_descent_check(const RingMap& phi, const PresentedModule& M);

// Universal ring adjoining, for each s in S, an element x_s with
// s x_s^2 = x_s and s^2 x_s = s. For finite rings this inverts s where it is
// a unit in a local factor and kills it where it is nilpotent.
struct PointwiseLocalization {
  Ring source;
  std::vector<Elem> subset;
  Ring result;
  RingMap eta;
  std::vector<Elem> inverses;  // image of x_s per subset entry
};

PointwiseLocalization pointwise_localization(const Ring& R,
                                             const std::vector<Elem>& S);

// If M (x) S^(-1)R is projective over S^(-1)R then M is projective over R.
bool pointwise_descent_check(const Ring& R, const std::vector<Elem>& S,
                             const PresentedModule& M);

// Flatness of the cyclic quotient R/I via the annihilator criterion:
// Ann(f) + I = R for every f in I, with the 1 = b + c decomposition as a
// per-element witness.
struct FlatQuotientWitness {
  Elem f;
  std::optional<std::pair<Elem, Elem>> decomposition;  // b in Ann(f), c in I
};
struct FlatQuotientReport {
  bool flat = false;
  std::vector<FlatQuotientWitness> witnesses;
  std::optional<Elem> failing;
};
FlatQuotientReport flat_quotient_criterion(const Ring& R, const Ideal& I);

// Does every finitely generated flat module (within the presentation bounds)
// turn out projective? True for every finite ring; a seq ring returns false
// together with the counterexample certificate.
struct SRingVerdict {
  bool s_ring = false;
  std::uint64_t instances_checked = 0;
  std::optional<PresentedModule> counterexample;
  std::optional<Example1Certificate> certificate;
};
SRingVerdict is_s_ring(const Ring& R, std::size_t gen_bound,
                       std::size_t rel_bound);

// The diagonal a -> (a, a) into A x A, the standard extension instance.
RingMap diagonal_embedding(const Ring& A);

}  // namespace flatcheck
