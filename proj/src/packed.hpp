#pragma once

// Internal index-level arithmetic for vectors over a finite ring. A vector
// in R^k is packed into a single integer in mixed radix |R|, digit 0 least
// significant; digit values are ring element indices. All exhaustive
// kernels (relation spans, coset tables, annihilators) work on packed
// vectors so that element objects never enter hot loops.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "flatcheck/errors.hpp"
#include "flatcheck/ring.hpp"

namespace flatcheck::detail {

constexpr std::uint64_t kAmbientLimit = std::uint64_t{1} << 24;

class PackedSpace {
 public:
  PackedSpace(Ring ring, std::size_t k)
      : ring_(std::move(ring)), k_(k), s_(ring_.size()) {
    total_ = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (total_ > kAmbientLimit / (s_ ? s_ : 1))
        throw Error("ambient module too large for exhaustive representation");
      total_ *= s_;
    }
  }

  const Ring& ring() const { return ring_; }
  std::size_t k() const { return k_; }
  std::uint64_t ring_size() const { return s_; }
  std::uint64_t total() const { return total_; }

  std::uint64_t pack(const std::vector<Elem>& v) const {
    std::uint64_t x = 0, w = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      x += ring_.index_of(v[i]) * w;
      w *= s_;
    }
    return x;
  }

  std::vector<Elem> unpack(std::uint64_t x) const {
    std::vector<Elem> v;
    v.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      v.push_back(ring_.element_at(x % s_));
      x /= s_;
    }
    return v;
  }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r = 0, w = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += std::uint64_t{ring_.add_idx(static_cast<std::uint32_t>(x % s_),
                                       static_cast<std::uint32_t>(y % s_))} *
           w;
      x /= s_;
      y /= s_;
      w *= s_;
    }
    return r;
  }

  std::uint64_t scale(std::uint32_t r, std::uint64_t x) const {
    std::uint64_t out = 0, w = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      out += std::uint64_t{ring_.mul_idx(r, static_cast<std::uint32_t>(x % s_))} * w;
      x /= s_;
      w *= s_;
    }
    return out;
  }

  // Packed standard generator e_i scaled by the ring element of index r.
  std::uint64_t unit_vector(std::size_t i, std::uint32_t r) const {
    std::uint64_t w = 1;
    for (std::size_t j = 0; j < i; ++j) w *= s_;
    return std::uint64_t{r} * w;
  }

  // Sorted element list of the R-span of the given packed vectors. Each new
  // seed extends the current additive group by whole cosets, so every
  // element is visited exactly once.
  std::vector<std::uint64_t> span(const std::vector<std::uint64_t>& gens) const {
    std::vector<std::uint8_t> in(total_, 0);
    std::vector<std::uint64_t> members{0};
    in[0] = 1;
    for (auto g : gens)
      for (std::uint32_t r = 0; r < s_; ++r) {
        const std::uint64_t m = scale(r, g);
        if (in[m]) continue;
        const std::size_t group_size = members.size();
        std::uint64_t cur = m;
        while (!in[cur]) {
          for (std::size_t i = 0; i < group_size; ++i) {
            const std::uint64_t y = add(members[i], cur);
            in[y] = 1;
            members.push_back(y);
          }
          cur = add(cur, m);
        }
      }
    std::sort(members.begin(), members.end());
    return members;
  }

 private:
  Ring ring_;
  std::size_t k_;
  std::uint64_t s_;
  std::uint64_t total_;
};

}  // namespace flatcheck::detail
