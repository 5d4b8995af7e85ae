#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace tutte3 {

/// Exponents of x, y and z in one monomial.
struct Exponents {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  friend constexpr auto operator<=>(const Exponents&, const Exponents&) = default;
  friend constexpr Exponents operator+(Exponents a, Exponents b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace detail

/// Sparse polynomial in x, y, z with 64-bit integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality. Terms are kept in descending lexicographic order of
/// (x, y, z) exponents, which is also the printing order. Arithmetic throws
/// std::overflow_error rather than wrapping.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, std::int64_t, std::greater<>>;

  Polynomial() = default;

  static Polynomial constant(std::int64_t c) { return monomial({0, 0, 0}, c); }
  static Polynomial monomial(Exponents e, std::int64_t c = 1) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }
  static Polynomial x() { return monomial({1, 0, 0}); }
  static Polynomial y() { return monomial({0, 1, 0}); }
  static Polynomial z() { return monomial({0, 0, 1}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coefficient(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * x^a y^b z^c in place.
  void add_term(Exponents e, std::int64_t c = 1) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(const Polynomial& p) { return Polynomial() - p; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) out.add_term(ep + eq, detail::checked_mul(cp, cq));
    }
    return out;
  }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  /// Largest z exponent among stored terms, 0 for the zero polynomial.
  unsigned z_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.z);
    return d;
  }

  std::int64_t evaluate(std::int64_t xv, std::int64_t yv, std::int64_t zv) const {
    std::int64_t sum = 0;
    for (const auto& [e, c] : terms_) {
      std::int64_t t = c;
      t = detail::checked_mul(t, detail::checked_pow(xv, e.x));
      t = detail::checked_mul(t, detail::checked_pow(yv, e.y));
      t = detail::checked_mul(t, detail::checked_pow(zv, e.z));
      sum = detail::checked_add(sum, t);
    }
    return sum;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

inline Polynomial add_monomial(const Polynomial& p, unsigned a, unsigned b, unsigned c) {
  Polynomial out = p;
  out.add_term({a, b, c});
  return out;
}

/// Replaces x, y, z by the given polynomials and expands.
inline Polynomial substitute(const Polynomial& p, const Polynomial& x_sub, const Polynomial& y_sub,
                             const Polynomial& z_sub) {
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    out += Polynomial::constant(c) * x_sub.pow(e.x) * y_sub.pow(e.y) * z_sub.pow(e.z);
  }
  return out;
}

/// `x^2*y*z` style rendering of a single monomial; "1" for the constant.
inline std::string monomial_string(Exponents e) {
  std::string out;
  auto factor = [&out](char var, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (k > 1) out += '^' + std::to_string(k);
  };
  factor('x', e.x);
  factor('y', e.y);
  factor('z', e.z);
  return out.empty() ? "1" : out;
}

/// Canonical text form, e.g. "x^2*z + 2*x - y + 1"; the zero polynomial is "0".
inline std::string to_canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    // Magnitude as unsigned so INT64_MIN renders correctly.
    const std::uint64_t mag =
        negative ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool is_constant = e == Exponents{};
    if (is_constant) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += monomial_string(e);
    } else {
      out += std::to_string(mag) + '*' + monomial_string(e);
    }
  }
  return out;
}

}  // namespace tutte3
