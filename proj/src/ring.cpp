#include "flatcheck/ring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace flatcheck {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Index tables are only built for rings this small; larger rings fall back
// to per-call arithmetic.
constexpr std::uint64_t kTableLimit = 512;

}  // namespace

struct Ring::Rep {
  RingKind kind;
  std::int64_t n = 0;               // zmod modulus
  std::int64_t p = 0;               // poly characteristic
  std::vector<std::int64_t> f;      // poly modulus, little-endian, monic
  std::vector<Ring> sub;            // product factors, or seq base
  std::uint64_t size = 0;           // 0 marks an infinite (seq) ring
  std::vector<std::uint64_t> weights;  // mixed-radix weights for element_at

  mutable std::once_flag tables_once;
  mutable bool has_tables = false;
  mutable std::vector<std::uint32_t> add_tab, mul_tab, neg_tab;
  mutable std::vector<std::uint8_t> unit_tab;
  mutable std::uint32_t one_index = 0;
  mutable bool one_index_set = false;

  void ensure_tables(const Ring& self) const;
};

// ---------------------------------------------------------------------------
// Elem constructors

Elem Elem::residue(std::int64_t r) {
  Elem e;
  e.v_ = r;
  return e;
}

Elem Elem::coeffs(std::vector<std::int64_t> c) {
  Elem e;
  e.v_ = std::move(c);
  return e;
}

Elem Elem::tuple(std::vector<Elem> parts) {
  Elem e;
  e.v_ = std::move(parts);
  return e;
}

Elem Elem::seq(std::vector<Elem> prefix, Elem tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  SeqBody b;
  b.cells = std::move(prefix);
  b.cells.push_back(std::move(tail));
  Elem e;
  e.v_ = std::move(b);
  return e;
}

// ---------------------------------------------------------------------------
// Ring construction

Ring Ring::zmod(std::int64_t n) {
  if (n < 2) throw ConstructionError("zmod modulus must be >= 2");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::Zmod;
  rep->n = n;
  rep->size = static_cast<std::uint64_t>(n);
  return Ring(std::move(rep));
}

Ring Ring::poly_quotient(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw ConstructionError("poly_quotient characteristic must be prime");
  if (modulus.size() < 2)
    throw ConstructionError("poly_quotient modulus must have degree >= 1");
  for (auto& c : modulus) {
    c %= p;
    if (c < 0) c += p;
  }
  if (modulus.back() != 1)
    throw ConstructionError("poly_quotient modulus must be monic");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::PolyQuotient;
  rep->p = p;
  rep->f = std::move(modulus);
  const std::size_t deg = rep->f.size() - 1;
  std::uint64_t sz = 1;
  rep->weights.assign(deg, 1);
  for (std::size_t i = 0; i < deg; ++i) sz *= static_cast<std::uint64_t>(p);
  // c[0] is the most significant digit so that ascending index order is
  // lexicographic on coefficient vectors.
  for (std::size_t i = 0; i < deg; ++i) {
    std::uint64_t w = 1;
    for (std::size_t j = i + 1; j < deg; ++j) w *= static_cast<std::uint64_t>(p);
    rep->weights[i] = w;
  }
  rep->size = sz;
  return Ring(std::move(rep));
}

Ring Ring::product(std::vector<Ring> factors) {
  if (factors.empty()) throw ConstructionError("product needs at least one factor");
  for (const auto& f : factors)
    if (!f.valid()) throw ConstructionError("product factor is not a ring");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::Product;
  rep->sub = std::move(factors);
  bool finite = true;
  for (const auto& f : rep->sub) finite = finite && f.is_finite();
  if (finite) {
    std::uint64_t sz = 1;
    for (const auto& f : rep->sub) sz *= f.size();
    rep->size = sz;
    rep->weights.assign(rep->sub.size(), 1);
    for (std::size_t i = 0; i < rep->sub.size(); ++i) {
      std::uint64_t w = 1;
      for (std::size_t j = i + 1; j < rep->sub.size(); ++j) w *= rep->sub[j].size();
      rep->weights[i] = w;
    }
  } else {
    throw ConstructionError("product factors must be finite rings");
  }
  return Ring(std::move(rep));
}

Ring Ring::seq(Ring base) {
  if (!base.valid()) throw ConstructionError("seq base is not a ring");
  if (!base.is_finite())
    throw ConstructionError("seq base must be a finite ring");
  auto rep = std::make_shared<Rep>();
  rep->kind = RingKind::Seq;
  rep->sub.push_back(std::move(base));
  rep->size = 0;
  return Ring(std::move(rep));
}

RingKind Ring::kind() const { return rep_->kind; }

bool Ring::is_finite() const { return rep_->kind != RingKind::Seq; }

std::uint64_t Ring::size() const {
  if (!is_finite()) throw Error("seq rings have no element enumeration");
  return rep_->size;
}

bool Ring::operator==(const Ring& other) const {
  if (rep_ == other.rep_) return true;
  if (!rep_ || !other.rep_) return false;
  if (rep_->kind != other.rep_->kind) return false;
  switch (rep_->kind) {
    case RingKind::Zmod:
      return rep_->n == other.rep_->n;
    case RingKind::PolyQuotient:
      return rep_->p == other.rep_->p && rep_->f == other.rep_->f;
    case RingKind::Product:
    case RingKind::Seq:
      return rep_->sub == other.rep_->sub;
  }
  return false;
}

std::int64_t Ring::zmod_n() const { return rep_->n; }
std::int64_t Ring::poly_p() const { return rep_->p; }
const std::vector<std::int64_t>& Ring::poly_modulus() const { return rep_->f; }
const std::vector<Ring>& Ring::factors() const { return rep_->sub; }
const Ring& Ring::seq_base() const { return rep_->sub[0]; }

// ---------------------------------------------------------------------------
// Arithmetic

Elem Ring::zero() const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return Elem::residue(0);
    case RingKind::PolyQuotient:
      return Elem::coeffs(std::vector<std::int64_t>(rep_->f.size() - 1, 0));
    case RingKind::Product: {
      std::vector<Elem> parts;
      parts.reserve(rep_->sub.size());
      for (const auto& f : rep_->sub) parts.push_back(f.zero());
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq:
      return Elem::seq({}, seq_base().zero());
  }
  throw Error("bad ring kind");
}

Elem Ring::one() const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return Elem::residue(rep_->n == 1 ? 0 : 1);
    case RingKind::PolyQuotient: {
      std::vector<std::int64_t> c(rep_->f.size() - 1, 0);
      c[0] = 1 % rep_->p;
      return Elem::coeffs(std::move(c));
    }
    case RingKind::Product: {
      std::vector<Elem> parts;
      parts.reserve(rep_->sub.size());
      for (const auto& f : rep_->sub) parts.push_back(f.one());
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq:
      return Elem::seq({}, seq_base().one());
  }
  throw Error("bad ring kind");
}

namespace {

// Reduce a little-endian polynomial modulo the monic modulus f over F_p,
// returning exactly deg(f) coefficients.
std::vector<std::int64_t> poly_reduce(std::vector<std::int64_t> c,
                                      const std::vector<std::int64_t>& f,
                                      std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (auto& x : c) {
    x %= p;
    if (x < 0) x += p;
  }
  for (std::size_t i = c.size(); i-- > deg;) {
    const std::int64_t lead = c[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      std::int64_t v = c[i - deg + j] - mulmod(lead, f[j], p);
      v %= p;
      if (v < 0) v += p;
      c[i - deg + j] = v;
    }
  }
  c.resize(deg);
  return c;
}

}  // namespace

Elem Ring::add(const Elem& a, const Elem& b) const {
  switch (rep_->kind) {
    case RingKind::Zmod: {
      std::int64_t v = a.residue_value() + b.residue_value();
      if (v >= rep_->n) v -= rep_->n;
      return Elem::residue(v);
    }
    case RingKind::PolyQuotient: {
      const auto& ca = a.coeff_values();
      const auto& cb = b.coeff_values();
      std::vector<std::int64_t> c(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) {
        c[i] = ca[i] + cb[i];
        if (c[i] >= rep_->p) c[i] -= rep_->p;
      }
      return Elem::coeffs(std::move(c));
    }
    case RingKind::Product: {
      const auto& pa = a.tuple_parts();
      const auto& pb = b.tuple_parts();
      std::vector<Elem> parts;
      parts.reserve(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i)
        parts.push_back(rep_->sub[i].add(pa[i], pb[i]));
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq: {
      const Ring& base = seq_base();
      const std::size_t len = std::max(a.seq_prefix_len(), b.seq_prefix_len());
      std::vector<Elem> prefix;
      prefix.reserve(len);
      for (std::size_t i = 0; i < len; ++i)
        prefix.push_back(base.add(a.seq_coordinate(i), b.seq_coordinate(i)));
      return Elem::seq(std::move(prefix), base.add(a.seq_tail(), b.seq_tail()));
    }
  }
  throw Error("bad ring kind");
}

Elem Ring::neg(const Elem& a) const {
  switch (rep_->kind) {
    case RingKind::Zmod: {
      std::int64_t v = a.residue_value();
      return Elem::residue(v == 0 ? 0 : rep_->n - v);
    }
    case RingKind::PolyQuotient: {
      std::vector<std::int64_t> c = a.coeff_values();
      for (auto& x : c) x = x == 0 ? 0 : rep_->p - x;
      return Elem::coeffs(std::move(c));
    }
    case RingKind::Product: {
      std::vector<Elem> parts;
      parts.reserve(rep_->sub.size());
      for (std::size_t i = 0; i < rep_->sub.size(); ++i)
        parts.push_back(rep_->sub[i].neg(a.tuple_parts()[i]));
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq: {
      const Ring& base = seq_base();
      std::vector<Elem> prefix;
      prefix.reserve(a.seq_prefix_len());
      for (std::size_t i = 0; i < a.seq_prefix_len(); ++i)
        prefix.push_back(base.neg(a.seq_coordinate(i)));
      return Elem::seq(std::move(prefix), base.neg(a.seq_tail()));
    }
  }
  throw Error("bad ring kind");
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return Elem::residue(mulmod(a.residue_value(), b.residue_value(), rep_->n));
    case RingKind::PolyQuotient: {
      const auto& ca = a.coeff_values();
      const auto& cb = b.coeff_values();
      std::vector<std::int64_t> prod(ca.size() + cb.size() - 1, 0);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) {
          prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], rep_->p)) % rep_->p;
        }
      }
      return Elem::coeffs(poly_reduce(std::move(prod), rep_->f, rep_->p));
    }
    case RingKind::Product: {
      const auto& pa = a.tuple_parts();
      const auto& pb = b.tuple_parts();
      std::vector<Elem> parts;
      parts.reserve(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i)
        parts.push_back(rep_->sub[i].mul(pa[i], pb[i]));
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq: {
      const Ring& base = seq_base();
      const std::size_t len = std::max(a.seq_prefix_len(), b.seq_prefix_len());
      std::vector<Elem> prefix;
      prefix.reserve(len);
      for (std::size_t i = 0; i < len; ++i)
        prefix.push_back(base.mul(a.seq_coordinate(i), b.seq_coordinate(i)));
      return Elem::seq(std::move(prefix), base.mul(a.seq_tail(), b.seq_tail()));
    }
  }
  throw Error("bad ring kind");
}

Elem Ring::pow(const Elem& a, std::uint64_t e) const {
  Elem acc = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

Elem Ring::from_int(std::int64_t v) const {
  switch (rep_->kind) {
    case RingKind::Zmod: {
      std::int64_t r = v % rep_->n;
      if (r < 0) r += rep_->n;
      return Elem::residue(r);
    }
    case RingKind::PolyQuotient: {
      std::vector<std::int64_t> c(rep_->f.size() - 1, 0);
      std::int64_t r = v % rep_->p;
      if (r < 0) r += rep_->p;
      c[0] = r;
      return Elem::coeffs(std::move(c));
    }
    case RingKind::Product: {
      std::vector<Elem> parts;
      parts.reserve(rep_->sub.size());
      for (const auto& f : rep_->sub) parts.push_back(f.from_int(v));
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq:
      return Elem::seq({}, seq_base().from_int(v));
  }
  throw Error("bad ring kind");
}

bool Ring::is_canonical(const Elem& a) const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return a.is_residue() && a.residue_value() >= 0 &&
             a.residue_value() < rep_->n;
    case RingKind::PolyQuotient: {
      if (!a.is_coeffs()) return false;
      const auto& c = a.coeff_values();
      if (c.size() != rep_->f.size() - 1) return false;
      for (auto x : c)
        if (x < 0 || x >= rep_->p) return false;
      return true;
    }
    case RingKind::Product: {
      if (!a.is_tuple()) return false;
      const auto& parts = a.tuple_parts();
      if (parts.size() != rep_->sub.size()) return false;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!rep_->sub[i].is_canonical(parts[i])) return false;
      return true;
    }
    case RingKind::Seq: {
      if (!a.is_seq()) return false;
      const Ring& base = seq_base();
      if (!base.is_canonical(a.seq_tail())) return false;
      const std::size_t len = a.seq_prefix_len();
      for (std::size_t i = 0; i < len; ++i)
        if (!base.is_canonical(a.seq_coordinate(i))) return false;
      return len == 0 || !(a.seq_coordinate(len - 1) == a.seq_tail());
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

Elem Ring::element_at(std::uint64_t idx) const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return Elem::residue(static_cast<std::int64_t>(idx));
    case RingKind::PolyQuotient: {
      const std::size_t deg = rep_->f.size() - 1;
      std::vector<std::int64_t> c(deg);
      for (std::size_t i = 0; i < deg; ++i)
        c[i] = static_cast<std::int64_t>((idx / rep_->weights[i]) %
                                         static_cast<std::uint64_t>(rep_->p));
      return Elem::coeffs(std::move(c));
    }
    case RingKind::Product: {
      std::vector<Elem> parts;
      parts.reserve(rep_->sub.size());
      for (std::size_t i = 0; i < rep_->sub.size(); ++i)
        parts.push_back(
            rep_->sub[i].element_at((idx / rep_->weights[i]) % rep_->sub[i].size()));
      return Elem::tuple(std::move(parts));
    }
    case RingKind::Seq:
      throw Error("seq rings are not enumerable");
  }
  throw Error("bad ring kind");
}

std::uint64_t Ring::index_of(const Elem& a) const {
  switch (rep_->kind) {
    case RingKind::Zmod:
      return static_cast<std::uint64_t>(a.residue_value());
    case RingKind::PolyQuotient: {
      const auto& c = a.coeff_values();
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        idx += static_cast<std::uint64_t>(c[i]) * rep_->weights[i];
      return idx;
    }
    case RingKind::Product: {
      const auto& parts = a.tuple_parts();
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < parts.size(); ++i)
        idx += rep_->sub[i].index_of(parts[i]) * rep_->weights[i];
      return idx;
    }
    case RingKind::Seq:
      throw Error("seq rings are not enumerable");
  }
  throw Error("bad ring kind");
}

// ---------------------------------------------------------------------------
// Index tables

void Ring::Rep::ensure_tables(const Ring& self) const {
  std::call_once(tables_once, [&] {
    one_index = static_cast<std::uint32_t>(self.index_of(self.one()));
    one_index_set = true;
    if (size == 0 || size > kTableLimit) return;
    const std::uint32_t s = static_cast<std::uint32_t>(size);
    std::vector<Elem> elems(s);
    for (std::uint32_t i = 0; i < s; ++i) elems[i] = self.element_at(i);
    add_tab.resize(std::size_t{s} * s);
    mul_tab.resize(std::size_t{s} * s);
    neg_tab.resize(s);
    unit_tab.assign(s, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
      neg_tab[i] = static_cast<std::uint32_t>(self.index_of(self.neg(elems[i])));
      for (std::uint32_t j = 0; j < s; ++j) {
        add_tab[std::size_t{i} * s + j] =
            static_cast<std::uint32_t>(self.index_of(self.add(elems[i], elems[j])));
        const std::uint32_t m =
            static_cast<std::uint32_t>(self.index_of(self.mul(elems[i], elems[j])));
        mul_tab[std::size_t{i} * s + j] = m;
        if (m == one_index) {
          unit_tab[i] = 1;
          unit_tab[j] = 1;
        }
      }
    }
    has_tables = true;
  });
}

std::uint32_t Ring::add_idx(std::uint32_t i, std::uint32_t j) const {
  rep_->ensure_tables(*this);
  if (rep_->has_tables) return rep_->add_tab[std::size_t{i} * rep_->size + j];
  return static_cast<std::uint32_t>(index_of(add(element_at(i), element_at(j))));
}

std::uint32_t Ring::mul_idx(std::uint32_t i, std::uint32_t j) const {
  rep_->ensure_tables(*this);
  if (rep_->has_tables) return rep_->mul_tab[std::size_t{i} * rep_->size + j];
  return static_cast<std::uint32_t>(index_of(mul(element_at(i), element_at(j))));
}

std::uint32_t Ring::neg_idx(std::uint32_t i) const {
  rep_->ensure_tables(*this);
  if (rep_->has_tables) return rep_->neg_tab[i];
  return static_cast<std::uint32_t>(index_of(neg(element_at(i))));
}

std::uint32_t Ring::one_idx() const {
  rep_->ensure_tables(*this);
  return rep_->one_index;
}

bool Ring::unit_idx(std::uint32_t i) const {
  rep_->ensure_tables(*this);
  if (rep_->has_tables) return rep_->unit_tab[i] != 0;
  return is_unit(element_at(i));
}

// ---------------------------------------------------------------------------
// Classification

bool Ring::is_unit(const Elem& a) const {
  if (rep_->kind == RingKind::Seq) {
    const Ring& base = seq_base();
    for (std::size_t i = 0; i < a.seq_prefix_len(); ++i)
      if (!base.is_unit(a.seq_coordinate(i))) return false;
    return base.is_unit(a.seq_tail());
  }
  if (rep_->size <= kTableLimit) {
    rep_->ensure_tables(*this);
    if (rep_->has_tables)
      return rep_->unit_tab[index_of(a)] != 0;
  }
  const Elem id = one();
  for (std::uint64_t j = 0; j < rep_->size; ++j)
    if (mul(a, element_at(j)) == id) return true;
  return false;
}

bool Ring::is_idempotent(const Elem& a) const { return mul(a, a) == a; }

bool Ring::is_nilpotent(const Elem& a) const {
  if (rep_->kind == RingKind::Seq) {
    const Ring& base = seq_base();
    for (std::size_t i = 0; i < a.seq_prefix_len(); ++i)
      if (!base.is_nilpotent(a.seq_coordinate(i))) return false;
    return base.is_nilpotent(a.seq_tail());
  }
  // In a finite commutative ring a nilpotent element dies within |R| steps.
  return is_zero(pow(a, rep_->size));
}

ElementClass classify_element(const Ring& R, const Elem& x) {
  ElementClass c;
  c.is_unit = R.is_unit(x);
  c.is_idempotent = R.is_idempotent(x);
  c.is_nilpotent = R.is_nilpotent(x);
  return c;
}

std::string Ring::describe() const {
  std::ostringstream os;
  switch (rep_->kind) {
    case RingKind::Zmod:
      os << "Z/" << rep_->n;
      break;
    case RingKind::PolyQuotient: {
      os << "F_" << rep_->p << "[x]/(";
      bool first = true;
      for (std::size_t i = rep_->f.size(); i-- > 0;) {
        if (rep_->f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || rep_->f[i] != 1) os << rep_->f[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
      }
      os << ")";
      break;
    }
    case RingKind::Product: {
      bool first = true;
      for (const auto& f : rep_->sub) {
        if (!first) os << " x ";
        first = false;
        os << f.describe();
      }
      break;
    }
    case RingKind::Seq:
      os << "seq(" << seq_base().describe() << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RingMap

RingMap::RingMap(Ring source, Ring target, std::vector<Elem> images)
    : src_(std::move(source)), tgt_(std::move(target)) {
  if (!src_.is_finite()) throw InputError("RingMap source must be finite");
  if (images.size() != src_.size())
    throw InputError("RingMap image table has wrong length");
  img_.reserve(images.size());
  for (const auto& e : images) {
    if (!tgt_.is_canonical(e))
      throw InputError("RingMap image is not canonical in the target");
    img_.push_back(static_cast<std::uint32_t>(tgt_.index_of(e)));
  }
}

RingMap::RingMap(Ring source, Ring target, std::vector<std::uint32_t> image_indices)
    : src_(std::move(source)), tgt_(std::move(target)), img_(std::move(image_indices)) {
  if (!src_.is_finite()) throw InputError("RingMap source must be finite");
  if (img_.size() != src_.size())
    throw InputError("RingMap image table has wrong length");
}

RingMap RingMap::identity(const Ring& R) {
  std::vector<std::uint32_t> img(R.size());
  std::iota(img.begin(), img.end(), 0u);
  return RingMap(R, R, std::move(img));
}

RingMap RingMap::compose(const RingMap& g, const RingMap& f) {
  if (!(f.tgt_ == g.src_)) throw InputError("RingMap composition mismatch");
  std::vector<std::uint32_t> img(f.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.img_[f.img_[i]];
  return RingMap(f.src_, g.tgt_, std::move(img));
}

Elem RingMap::apply(const Elem& a) const {
  return tgt_.element_at(img_[src_.index_of(a)]);
}

bool RingMap::verify_homomorphism() const {
  const std::uint32_t s = static_cast<std::uint32_t>(src_.size());
  if (img_[src_.index_of(src_.one())] != tgt_.index_of(tgt_.one())) return false;
  for (std::uint32_t i = 0; i < s; ++i)
    for (std::uint32_t j = 0; j < s; ++j) {
      if (img_[src_.add_idx(i, j)] != tgt_.add_idx(img_[i], img_[j])) return false;
      if (img_[src_.mul_idx(i, j)] != tgt_.mul_idx(img_[i], img_[j])) return false;
    }
  return true;
}

bool RingMap::is_injective() const {
  std::vector<std::uint8_t> seen(tgt_.size(), 0);
  for (auto i : img_) {
    if (seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

bool RingMap::is_surjective() const {
  std::vector<std::uint8_t> seen(tgt_.size(), 0);
  std::uint64_t count = 0;
  for (auto i : img_)
    if (!seen[i]) {
      seen[i] = 1;
      ++count;
    }
  return count == tgt_.size();
}

bool RingMap::operator==(const RingMap& other) const {
  return src_ == other.src_ && tgt_ == other.tgt_ && img_ == other.img_;
}

// ---------------------------------------------------------------------------
// Ring map enumeration

std::vector<Elem> ring_generators(const Ring& R) {
  switch (R.kind()) {
    case RingKind::Zmod:
      return {};
    case RingKind::PolyQuotient: {
      std::vector<std::int64_t> c(R.poly_modulus().size() - 1, 0);
      if (c.size() >= 2) {
        c[1] = 1;
        return {Elem::coeffs(std::move(c))};
      }
      // degree 1: the quotient is generated by 1 already
      return {};
    }
    case RingKind::Product: {
      std::vector<Elem> gens;
      const auto& factors = R.factors();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        std::vector<Elem> parts;
        for (std::size_t j = 0; j < factors.size(); ++j)
          parts.push_back(i == j ? factors[j].one() : factors[j].zero());
        gens.push_back(Elem::tuple(std::move(parts)));
        for (const auto& g : ring_generators(factors[i])) {
          std::vector<Elem> embed;
          for (std::size_t j = 0; j < factors.size(); ++j)
            embed.push_back(i == j ? g : factors[j].zero());
          gens.push_back(Elem::tuple(std::move(embed)));
        }
      }
      return gens;
    }
    case RingKind::Seq:
      throw Error("seq rings have no finite generator enumeration");
  }
  throw Error("bad ring kind");
}

namespace {

// Try to extend a generator assignment to a full homomorphism table by
// closing {0, 1, generators} under + and *. Returns false on conflict or if
// the generators fail to generate the source.
bool close_to_homomorphism(const Ring& src, const Ring& tgt,
                           std::vector<std::int64_t>& img) {
  const std::uint32_t s = static_cast<std::uint32_t>(src.size());
  std::vector<std::uint32_t> defined;
  for (std::uint32_t i = 0; i < s; ++i)
    if (img[i] >= 0) defined.push_back(i);
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t cur = defined.size();
    for (std::size_t a = 0; a < cur; ++a)
      for (std::size_t b = 0; b < cur; ++b) {
        const std::uint32_t i = defined[a], j = defined[b];
        const std::uint32_t sums[2] = {src.add_idx(i, j), src.mul_idx(i, j)};
        const std::uint32_t vals[2] = {
            tgt.add_idx(static_cast<std::uint32_t>(img[i]),
                        static_cast<std::uint32_t>(img[j])),
            tgt.mul_idx(static_cast<std::uint32_t>(img[i]),
                        static_cast<std::uint32_t>(img[j]))};
        for (int t = 0; t < 2; ++t) {
          if (img[sums[t]] < 0) {
            img[sums[t]] = vals[t];
            defined.push_back(sums[t]);
            progress = true;
          } else if (img[sums[t]] != vals[t]) {
            return false;
          }
        }
      }
  }
  return defined.size() == s;
}

}  // namespace

std::vector<RingMap> enumerate_ring_maps(const Ring& source, const Ring& target) {
  if (!source.is_finite() || !target.is_finite())
    throw Error("ring map enumeration needs finite rings");
  const std::vector<Elem> gens = ring_generators(source);
  const std::uint64_t t = target.size();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (combos > 2'000'000 / t) throw Error("ring map enumeration too large");
    combos *= t;
  }
  std::vector<RingMap> maps;
  for (std::uint64_t choice = 0; choice < combos; ++choice) {
    std::vector<std::int64_t> img(source.size(), -1);
    img[source.index_of(source.zero())] = static_cast<std::int64_t>(target.index_of(target.zero()));
    img[source.index_of(source.one())] = static_cast<std::int64_t>(target.index_of(target.one()));
    std::uint64_t c = choice;
    bool ok = true;
    for (const auto& g : gens) {
      const std::uint32_t gi = static_cast<std::uint32_t>(source.index_of(g));
      const std::int64_t v = static_cast<std::int64_t>(c % t);
      c /= t;
      if (img[gi] >= 0 && img[gi] != v) {
        ok = false;
        break;
      }
      img[gi] = v;
    }
    if (!ok) continue;
    if (!close_to_homomorphism(source, target, img)) continue;
    std::vector<std::uint32_t> table(img.begin(), img.end());
    RingMap m(source, target, std::move(table));
    if (m.verify_homomorphism()) maps.push_back(std::move(m));
  }
  return maps;
}

}  // namespace flatcheck
