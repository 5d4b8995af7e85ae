#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tutte3/error.hpp"

namespace tutte3 {

/// Elements are 1-based integer labels.
using Element = int;

/// Subsets live in one machine word; every algorithm here is exponential in n.
inline constexpr int kMaxElements = 30;

/// A set of element labels stored as a bitset (bit e-1 for element e).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  Subset(std::initializer_list<Element> members) {
    for (Element e : members) *this = with(e);
  }

  explicit Subset(const std::vector<Element>& members) {
    for (Element e : members) *this = with(e);
  }

  /// {1, ..., n}
  static constexpr Subset first(int n) {
    return Subset(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(Element e) const {
    return e >= 1 && e <= kMaxElements && ((bits_ >> (e - 1)) & 1U) != 0;
  }
  /// True iff `other` is a subset of *this.
  constexpr bool includes(Subset other) const { return (other.bits_ & ~bits_) == 0; }

  Subset with(Element e) const {
    check_label(e);
    return Subset(bits_ | (std::uint32_t{1} << (e - 1)));
  }
  Subset without(Element e) const {
    check_label(e);
    return Subset(bits_ & ~(std::uint32_t{1} << (e - 1)));
  }

  /// Members in ascending label order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  static void check_label(Element e) {
    if (e < 1 || e > kMaxElements) {
      throw DomainError("element label " + std::to_string(e) + " outside 1.." +
                        std::to_string(kMaxElements));
    }
  }

  std::uint32_t bits_ = 0;
};

/// Renders `{a,b,c}` with ascending labels, `{}` when empty.
inline std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

/// Calls f(S) for every S ⊆ ground, in increasing bitset value.
template <typename F>
void for_each_subset(Subset ground, F&& f) {
  const std::uint32_t mask = ground.bits();
  std::uint32_t sub = 0;
  do {
    f(Subset(sub));
    sub = (sub - mask) & mask;
  } while (sub != 0);
}

/// Spreads the low bits of `index` onto the members of `ground` (a software pdep).
inline Subset deposit_bits(std::uint64_t index, Subset ground) {
  std::uint32_t out = 0;
  for (std::uint32_t b = ground.bits(); b != 0 && index != 0; b &= b - 1, index >>= 1) {
    if (index & 1U) out |= b & (~b + 1);
  }
  return Subset(out);
}

/// Calls f(S) for every S ⊆ ground with |S| = k, in increasing bitset value.
template <typename F>
void for_each_subset_of_size(Subset ground, int k, F&& f) {
  const int m = ground.size();
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(Subset());
    return;
  }
  // Gosper's hack over compressed indices, then spread onto ground.
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (v < limit) {
    f(deposit_bits(v, ground));
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

/// A finite ground set {1..n} together with the total order `<` on it.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(int n) : GroundSet(n, natural_order(n)) {}

  /// `order` lists the elements from least to greatest.
  GroundSet(int n, std::vector<Element> order) : n_(n), order_(std::move(order)) {
    if (n < 0 || n > kMaxElements) {
      throw DomainError("ground set size " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxElements));
    }
    if (static_cast<int>(order_.size()) != n) {
      throw DomainError("order has " + std::to_string(order_.size()) + " entries, expected " +
                        std::to_string(n));
    }
    position_.assign(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
      const Element e = order_[static_cast<std::size_t>(i)];
      if (e < 1 || e > n || position_[static_cast<std::size_t>(e)] != -1) {
        throw DomainError("order is not a permutation of 1.." + std::to_string(n));
      }
      position_[static_cast<std::size_t>(e)] = i;
    }
  }

  int size() const { return n_; }
  const std::vector<Element>& order() const { return order_; }
  Subset all() const { return Subset::first(n_); }

  /// Rank of e in the order, 0 for the least element.
  int position(Element e) const {
    require_member(e);
    return position_[static_cast<std::size_t>(e)];
  }

  bool less(Element a, Element b) const { return position(a) < position(b); }

  void require_subset(Subset x) const {
    if (!all().includes(x)) {
      throw DomainError("set " + to_string(x) + " is not contained in the ground set {1.." +
                        std::to_string(n_) + "}");
    }
  }

  void require_member(Element e) const {
    if (e < 1 || e > n_) {
      throw DomainError("element " + std::to_string(e) + " is not in the ground set {1.." +
                        std::to_string(n_) + "}");
    }
  }

  Subset complement(Subset x) const {
    require_subset(x);
    return all() - x;
  }

  Element min_element(Subset x) const {
    require_subset(x);
    if (x.empty()) throw PreconditionError("min_element of the empty set");
    for (Element e : order_) {
      if (x.contains(e)) return e;
    }
    return 0;  // unreachable
  }

  /// Members of x listed in `<` order.
  std::vector<Element> sorted(Subset x) const {
    require_subset(x);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(x.size()));
    for (Element e : order_) {
      if (x.contains(e)) out.push_back(e);
    }
    return out;
  }

  /// Lexicographic comparison of the `<`-sorted sequences of two equal-size sets.
  std::strong_ordering lex_compare(Subset a, Subset b) const {
    if (a.size() != b.size()) {
      throw PreconditionError("lex_compare on sets of different sizes: " + to_string(a) +
                              " and " + to_string(b));
    }
    require_subset(a);
    require_subset(b);
    // The first element (in `<`) of the symmetric difference decides.
    const Subset diff = a ^ b;
    if (diff.empty()) return std::strong_ordering::equal;
    return a.contains(min_element(diff)) ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
  }

  bool is_natural_order() const { return order_ == natural_order(n_); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.n_ == b.n_ && a.order_ == b.order_;
  }

  static std::vector<Element> natural_order(int n) {
    std::vector<Element> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
  }

 private:
  int n_ = 0;
  std::vector<Element> order_;
  std::vector<int> position_{-1};
};

inline Subset complement(Subset x, const GroundSet& ground) { return ground.complement(x); }

inline Element min_element(Subset x, const GroundSet& ground) { return ground.min_element(x); }

inline std::strong_ordering lex_compare(Subset a, Subset b, const GroundSet& ground) {
  return ground.lex_compare(a, b);
}

}  // namespace tutte3
