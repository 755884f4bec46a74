#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adorn/ints.hpp"

namespace adorn {

/// Laurent polynomial over Z in one variable t. Zero coefficients are never
/// stored; the empty map is the zero polynomial.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly constant(Int v) { return monomial(0, std::move(v)); }

  static LaurentPoly one() { return constant(1); }

  static LaurentPoly monomial(long long exp, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

  const std::map<long long, Int>& coefficients() const { return c_; }

  long long min_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    return c_.begin()->first;
  }
  long long max_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: zero polynomial has no exponents");
    return c_.rbegin()->first;
  }

  /// Spread max_exp - min_exp; 0 for the zero polynomial.
  long long span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

  void add_term(long long exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = coeff;
      return;
    }
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }

  LaurentPoly operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, v] : rhs.c_) out.add_term(e, v);
    return out;
  }

  LaurentPoly operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, v] : rhs.c_) out.add_term(e, -v);
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [e, v] : c_) out.c_[e] = -v;
    return out;
  }

  LaurentPoly operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, v1] : c_)
      for (const auto& [e2, v2] : rhs.c_) out.add_term(e1 + e2, v1 * v2);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Unit-normalized representative: minimum exponent shifted to 0 and the
  /// leading (highest-degree) coefficient made positive. Zero stays zero.
  LaurentPoly normalized() const {
    if (is_zero()) return *this;
    LaurentPoly out;
    long long shift = min_exp();
    bool negate = c_.rbegin()->second < 0;
    for (const auto& [e, v] : c_) out.c_[e - shift] = negate ? Int(-v) : v;
    return out;
  }

  /// Evaluation at an integer; requires min_exp >= 0 (normalize first).
  Int evaluate(const Int& t) const {
    if (is_zero()) return 0;
    if (min_exp() < 0)
      throw std::domain_error("LaurentPoly: evaluate requires nonnegative exponents");
    Int sum = 0;
    for (const auto& [e, v] : c_) {
      Int power = 1;
      for (long long i = 0; i < e; ++i) power *= t;
      sum += v * power;
    }
    return sum;
  }

  /// Descending-exponent rendering, e.g. "t^2 - t + 1"; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, v] = *it;
      Int av = v < 0 ? Int(-v) : v;
      if (s.empty())
        s += v < 0 ? "-" : "";
      else
        s += v < 0 ? " - " : " + ";
      bool unit = av == 1;
      if (e == 0) {
        s += av.str();
      } else {
        if (!unit) s += av.str() + "*";
        s += e == 1 ? "t" : "t^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  std::map<long long, Int> c_;
};

namespace detail {

// Dense integer polynomials, low degree first, no trailing zeros.
using ZPoly = std::vector<Int>;

inline void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int zp_content(const ZPoly& p) {
  Int g = 0;
  for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline ZPoly zp_divide_exact(const ZPoly& p, const Int& d) {
  ZPoly out = p;
  for (Int& c : out) c /= d;
  return out;
}

// Pseudo-remainder of a by b (b nonzero): repeatedly scale a by lc(b) and
// subtract a shifted multiple of b until deg a < deg b.
inline ZPoly zp_pseudo_rem(ZPoly a, const ZPoly& b) {
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int la = a.back();
    std::size_t shift = a.size() - b.size();
    for (Int& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    zp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

// gcd over Z[t] via content extraction and a primitive Euclidean remainder
// sequence; leading coefficient of the result is positive.
inline ZPoly zp_gcd(ZPoly a, ZPoly b) {
  zp_trim(a);
  zp_trim(b);
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && a.back() < 0)
      for (Int& c : a) c = -c;
    return a;
  }
  Int ca = zp_content(a), cb = zp_content(b);
  Int content = boost::multiprecision::gcd(ca, cb);
  a = zp_divide_exact(a, ca);
  b = zp_divide_exact(b, cb);
  while (!b.empty()) {
    ZPoly r = zp_pseudo_rem(a, b);
    if (!r.empty()) r = zp_divide_exact(r, zp_content(r));
    a = std::move(b);
    b = std::move(r);
  }
  for (Int& c : a) c *= content;
  if (a.back() < 0)
    for (Int& c : a) c = -c;
  return a;
}

inline ZPoly to_zpoly(const LaurentPoly& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  long long shift = p.min_exp();
  out.assign(static_cast<std::size_t>(p.span()) + 1, Int(0));
  for (const auto& [e, v] : p.coefficients()) out[static_cast<std::size_t>(e - shift)] = v;
  return out;
}

inline LaurentPoly from_zpoly(const ZPoly& p) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.size(); ++i)
    out.add_term(static_cast<long long>(i), p[i]);
  return out;
}

}  // namespace detail

/// gcd up to units, returned normalized (min exponent 0, positive leading
/// coefficient). gcd(0, p) is the normalization of p.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  detail::ZPoly g = detail::zp_gcd(detail::to_zpoly(a), detail::to_zpoly(b));
  return detail::from_zpoly(g).normalized();
}

/// Determinant of a square matrix of Laurent polynomials, by cofactor
/// expansion; the matrices here are knot-presentation sized.
inline LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return m[0][0];
  LaurentPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub[i - 1].push_back(m[i][c]);
    LaurentPoly term = m[0][j] * laurent_det(sub);
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

}  // namespace adorn
