#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "flatcheck/errors.hpp"

namespace flatcheck {

class Ring;

// Ring element in canonical form. The active alternative matches the ring
// descriptor:
//   zmod          -> residue in [0, n)
//   poly_quotient -> coefficient vector, little-endian, length deg(f),
//                    entries in [0, p)
//   product       -> one entry per factor
//   seq           -> prefix entries followed by the eventual tail; the
//                    prefix never ends with an entry equal to the tail
class Elem {
 public:
  Elem() : v_(std::int64_t{0}) {}

  static Elem residue(std::int64_t r);
  static Elem coeffs(std::vector<std::int64_t> c);
  static Elem tuple(std::vector<Elem> parts);
  static Elem seq(std::vector<Elem> prefix, Elem tail);

  bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_coeffs() const {
    return std::holds_alternative<std::vector<std::int64_t>>(v_);
  }
  bool is_tuple() const { return std::holds_alternative<std::vector<Elem>>(v_); }
  bool is_seq() const { return std::holds_alternative<SeqBody>(v_); }

  std::int64_t residue_value() const { return std::get<std::int64_t>(v_); }
  const std::vector<std::int64_t>& coeff_values() const {
    return std::get<std::vector<std::int64_t>>(v_);
  }
  const std::vector<Elem>& tuple_parts() const {
    return std::get<std::vector<Elem>>(v_);
  }

  std::size_t seq_prefix_len() const { return seq_body().cells.size() - 1; }
  const Elem& seq_tail() const { return seq_body().cells.back(); }
  // Coordinate i of an eventually constant sequence (the tail beyond the
  // prefix).
  const Elem& seq_coordinate(std::size_t i) const {
    const auto& cells = seq_body().cells;
    return i + 1 < cells.size() ? cells[i] : cells.back();
  }
  std::vector<Elem> seq_prefix() const {
    const auto& cells = seq_body().cells;
    return std::vector<Elem>(cells.begin(), cells.end() - 1);
  }

  bool operator==(const Elem&) const = default;

 private:
  struct SeqBody {
    std::vector<Elem> cells;  // prefix entries, then the tail
    bool operator==(const SeqBody&) const = default;
  };
  const SeqBody& seq_body() const { return std::get<SeqBody>(v_); }

  std::variant<std::int64_t, std::vector<std::int64_t>, std::vector<Elem>,
               SeqBody>
      v_;
};

enum class RingKind { Zmod, PolyQuotient, Product, Seq };

// A computable commutative ring. Immutable after construction; copies share
// the representation, so per-ring caches (operation tables) are built once.
class Ring {
 public:
  Ring() = default;

  static Ring zmod(std::int64_t n);
  // modulus is little-endian including the leading coefficient, which must
  // be 1; degree >= 1; p prime.
  static Ring poly_quotient(std::int64_t p, std::vector<std::int64_t> modulus);
  static Ring product(std::vector<Ring> factors);
  static Ring seq(Ring base);

  bool valid() const { return rep_ != nullptr; }
  RingKind kind() const;
  bool is_finite() const;
  std::uint64_t size() const;  // element count; throws on seq rings

  // Structural descriptor equality.
  bool operator==(const Ring& other) const;

  // Descriptor accessors.
  std::int64_t zmod_n() const;
  std::int64_t poly_p() const;
  const std::vector<std::int64_t>& poly_modulus() const;
  const std::vector<Ring>& factors() const;
  const Ring& seq_base() const;

  // Arithmetic on canonical elements.
  Elem zero() const;
  Elem one() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;
  bool is_zero(const Elem& a) const { return a == zero(); }
  bool is_one(const Elem& a) const { return a == one(); }

  // Structural canonical-form validation (used when ingesting documents).
  bool is_canonical(const Elem& a) const;

  // Deterministic enumeration of finite rings: zmod ascending residues,
  // poly_quotient lexicographic on coefficient vectors, product
  // lexicographic on factors. Index 0 is always the zero element.
  Elem element_at(std::uint64_t idx) const;
  std::uint64_t index_of(const Elem& a) const;

  // Index-level operations for exhaustive kernels (finite rings only;
  // backed by tables for small rings).
  std::uint32_t add_idx(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t mul_idx(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t neg_idx(std::uint32_t i) const;
  std::uint32_t one_idx() const;
  bool unit_idx(std::uint32_t i) const;

  // Element classification. Exact on finite rings; on seq rings decided
  // coordinatewise (the tail settles cofinitely many coordinates).
  bool is_unit(const Elem& a) const;
  bool is_idempotent(const Elem& a) const;
  bool is_nilpotent(const Elem& a) const;

  // Short descriptor text for diagnostics, e.g. "Z/6", "F_2[x]/(x^2+x+1)".
  std::string describe() const;

  struct Rep;
  const Rep* rep_key() const { return rep_.get(); }

 private:
  explicit Ring(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct ElementClass {
  bool is_unit = false;
  bool is_idempotent = false;
  bool is_nilpotent = false;
};

ElementClass classify_element(const Ring& R, const Elem& x);

// Total map between rings with a finite source, stored as an image table
// indexed by source element index.
class RingMap {
 public:
  RingMap(Ring source, Ring target, std::vector<Elem> images);
  RingMap(Ring source, Ring target, std::vector<std::uint32_t> image_indices);

  static RingMap identity(const Ring& R);
  // g after f; requires f.target == g.source.
  static RingMap compose(const RingMap& g, const RingMap& f);

  const Ring& source() const { return src_; }
  const Ring& target() const { return tgt_; }

  Elem apply(const Elem& a) const;
  std::uint32_t apply_idx(std::uint32_t i) const { return img_[i]; }

  bool verify_homomorphism() const;  // exhaustive on the finite source
  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const RingMap& other) const;

 private:
  Ring src_, tgt_;
  std::vector<std::uint32_t> img_;
};

// A ring-generating set of a finite ring (zmod: empty; poly_quotient: the
// class of x; product: factor idempotents plus embedded factor generators).
std::vector<Elem> ring_generators(const Ring& R);

// All unital ring homomorphisms between two finite rings, found by
// assigning generator images and closing under + and *.
std::vector<RingMap> enumerate_ring_maps(const Ring& source, const Ring& target);

}  // namespace flatcheck
