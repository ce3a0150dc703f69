#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/ring.hpp"
#include "dnacyclic/word.hpp"

// Dense polynomial arithmetic over F2, R1 and R.  Coefficient index i holds
// the coefficient of x^i; vectors are kept normalized (no trailing zeros),
// so the zero polynomial is the empty vector.

namespace dnacyclic {

/// The binary field, with the same coefficient API as R1Element/RElement.
struct F2 {
  bool value = false;

  constexpr bool is_zero() const { return !value; }
  constexpr bool is_unit() const { return value; }
  static constexpr F2 zero() { return {false}; }
  static constexpr F2 one() { return {true}; }
  constexpr F2 inverse() const {
    if (!value) throw std::domain_error("F2: zero has no inverse");
    return *this;
  }
  friend constexpr F2 operator+(F2 x, F2 y) { return {x.value != y.value}; }
  friend constexpr F2 operator*(F2 x, F2 y) { return {x.value && y.value}; }
  constexpr F2& operator+=(F2 y) { return *this = *this + y; }
  friend constexpr bool operator==(F2, F2) = default;
  friend constexpr auto operator<=>(F2 x, F2 y) {
    return static_cast<int>(x.value) <=> static_cast<int>(y.value);
  }
};

inline std::string to_string(F2 x) { return x.value ? "1" : "0"; }

namespace detail {

template <class C>
C parse_coeff(std::string_view s);
template <>
inline F2 parse_coeff<F2>(std::string_view s) {
  if (s == "1") return F2::one();
  if (s == "0") return F2::zero();
  throw std::invalid_argument("bad F2 coefficient: '" + std::string(s) + "'");
}
template <>
inline R1Element parse_coeff<R1Element>(std::string_view s) {
  return parse_r1element(s);
}
template <>
inline RElement parse_coeff<RElement>(std::string_view s) {
  return parse_relement(s);
}

}  // namespace detail

/// Degree of the zero polynomial ("negative infinity" marker).
inline constexpr int kZeroPolyDegree = -1;

template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly({C::one()}); }
  /// x^k with coefficient c.
  static Poly monomial(C c, size_t k) {
    std::vector<C> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  /// x^n - 1 (= x^n + 1 in characteristic 2).
  static Poly xn_minus_1(size_t n) {
    std::vector<C> v(n + 1);
    v[0] = C::one();
    v[n] = C::one();
    return Poly(std::move(v));
  }

  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  C coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }
  C leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  C constant() const { return coeff(0); }

  /// Value at x = 1, i.e. the coefficient sum.
  C eval_at_one() const {
    C s{};
    for (auto c : coeffs_) s += c;
    return s;
  }

  friend Poly operator+(const Poly& x, const Poly& y) {
    std::vector<C> out(std::max(x.coeffs_.size(), y.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = x.coeff(i) + y.coeff(i);
    return Poly(std::move(out));
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<C> out(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (size_t j = 0; j < y.coeffs_.size(); ++j)
        out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator+=(const Poly& y) { return *this = *this + y; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Multiply by x^k.
  Poly shifted(size_t k) const {
    if (is_zero()) return Poly();
    std::vector<C> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return Poly(std::move(out));
  }

  Poly scaled(C r) const {
    std::vector<C> out = coeffs_;
    for (auto& c : out) c = r * c;
    return Poly(std::move(out));
  }

  /// Product in C[x]/(x^n - 1): exponents folded mod n.
  friend Poly mul_mod_xn(const Poly& x, const Poly& y, size_t n) {
    if (n < 1) throw std::invalid_argument("mul_mod_xn: n must be >= 1");
    std::vector<C> out(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i].is_zero()) continue;
      for (size_t j = 0; j < y.coeffs_.size(); ++j)
        out[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  /// Coefficient reversal over positions 0..deg(f), then normalization.
  Poly reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero undefined");
    std::vector<C> out(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(out));
  }

  bool is_self_reciprocal() const { return *this == reciprocal(); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using BinaryPoly = Poly<F2>;
using R1Poly = Poly<R1Element>;
using RPoly = Poly<RElement>;

/// Quotient and remainder; the divisor's leading coefficient must be a unit.
template <class C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& num, const Poly<C>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!den.leading().is_unit())
    throw std::domain_error("polynomial division: leading coefficient is not a unit");
  const C lead_inv = den.leading().inverse();
  std::vector<C> rem = num.coeffs();
  std::vector<C> quot;
  if (num.degree() >= den.degree())
    quot.resize(static_cast<size_t>(num.degree() - den.degree()) + 1);
  for (int d = num.degree(); d >= den.degree();) {
    if (rem[static_cast<size_t>(d)].is_zero()) {
      --d;
      continue;
    }
    const C q = rem[static_cast<size_t>(d)] * lead_inv;
    const size_t shift = static_cast<size_t>(d - den.degree());
    quot[shift] = q;
    for (size_t i = 0; i < den.coeffs().size(); ++i)
      rem[shift + i] += q * den.coeffs()[i];
    --d;
  }
  return {Poly<C>(std::move(quot)), Poly<C>(std::move(rem))};
}

template <class C>
bool divides(const Poly<C>& den, const Poly<C>& num) {
  if (den.is_zero()) return num.is_zero();
  return divmod(num, den).second.is_zero();
}

// ---- conversions between coefficient rings ----

inline R1Poly to_r1poly(const BinaryPoly& f) {
  std::vector<R1Element> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = f.coeffs()[i].value ? R1Element::one() : R1Element::zero();
  return R1Poly(std::move(out));
}

inline RPoly to_rpoly(const R1Poly& f) {
  std::vector<RElement> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = RElement(f.coeffs()[i], R1Element::zero());
  return RPoly(std::move(out));
}

inline RPoly to_rpoly(const BinaryPoly& f) { return to_rpoly(to_r1poly(f)); }

/// Split an R1 polynomial as w0 + u*w1 with binary w0, w1.
inline std::pair<BinaryPoly, BinaryPoly> binary_parts(const R1Poly& f) {
  std::vector<F2> c0(f.coeffs().size()), c1(f.coeffs().size());
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    c0[i] = F2{f.coeffs()[i].c0()};
    c1[i] = F2{f.coeffs()[i].c1()};
  }
  return {BinaryPoly(std::move(c0)), BinaryPoly(std::move(c1))};
}

// ---- words as coefficient vectors of fixed length n ----

inline RWord rpoly_to_word(const RPoly& f, size_t n) {
  if (f.degree() >= static_cast<int>(n))
    throw std::invalid_argument("polynomial degree exceeds word length");
  RWord w(n);
  for (size_t i = 0; i < f.coeffs().size(); ++i) w[i] = f.coeffs()[i];
  return w;
}

inline R1Word r1poly_to_word(const R1Poly& f, size_t n) {
  if (f.degree() >= static_cast<int>(n))
    throw std::invalid_argument("polynomial degree exceeds word length");
  R1Word w(n);
  for (size_t i = 0; i < f.coeffs().size(); ++i) w[i] = f.coeffs()[i];
  return w;
}

inline RPoly word_to_rpoly(const RWord& w) {
  return RPoly(std::vector<RElement>(w.begin(), w.end()));
}

inline R1Poly word_to_r1poly(const R1Word& w) {
  return R1Poly(std::vector<R1Element>(w.begin(), w.end()));
}

// ---- text form ----
// Terms highest degree first, joined by "+".  A coefficient other than 1 is
// parenthesized in canonical element notation: "(1+v)x^3", "(u)x", "(1+u)".

namespace detail {

template <class C>
std::string coeff_string(C c) {
  using dnacyclic::to_string;
  return to_string(c);
}

}  // namespace detail

template <class C>
std::string to_string(const Poly<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const C c = f.coeff(static_cast<size_t>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string coeff;
    if (!(c == C::one())) coeff = "(" + detail::coeff_string(c) + ")";
    if (i == 0) {
      out += coeff.empty() ? "1" : coeff;
    } else {
      out += coeff + "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

template <class C>
Poly<C> parse_poly(std::string_view s) {
  // strip spaces
  std::string buf;
  for (char ch : s)
    if (ch != ' ') buf += ch;
  if (buf.empty()) throw std::invalid_argument("empty polynomial");
  if (buf == "0") return Poly<C>::zero();

  Poly<C> acc;
  size_t pos = 0;
  int depth = 0;
  size_t start = 0;
  auto take_term = [&](std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("bad polynomial: '" + buf + "'");
    C coeff = C::one();
    size_t xpos = std::string_view::npos;
    if (tok.front() == '(') {
      const size_t close = tok.find(')');
      if (close == std::string_view::npos)
        throw std::invalid_argument("unbalanced parentheses in '" + buf + "'");
      coeff = detail::parse_coeff<C>(tok.substr(1, close - 1));
      tok.remove_prefix(close + 1);
      xpos = 0;
      if (tok.empty()) {  // pure constant "(c)"
        acc += Poly<C>::monomial(coeff, 0);
        return;
      }
    } else {
      xpos = tok.find('x');
      if (xpos == std::string_view::npos) {
        // bare constant, e.g. "1" over F2 or "u" over R1/R
        acc += Poly<C>::monomial(detail::parse_coeff<C>(tok), 0);
        return;
      }
      if (xpos != 0)
        throw std::invalid_argument("bad term '" + std::string(tok) + "' (coefficients need parentheses)");
    }
    if (tok.front() != 'x')
      throw std::invalid_argument("bad term in '" + buf + "'");
    tok.remove_prefix(1);
    size_t exp = 1;
    if (!tok.empty()) {
      if (tok.front() != '^')
        throw std::invalid_argument("bad exponent in '" + buf + "'");
      tok.remove_prefix(1);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("bad exponent in '" + buf + "'");
      exp = std::stoul(std::string(tok));
    }
    acc += Poly<C>::monomial(coeff, exp);
  };
  for (pos = 0; pos <= buf.size(); ++pos) {
    if (pos < buf.size() && buf[pos] == '(') ++depth;
    if (pos < buf.size() && buf[pos] == ')') --depth;
    if (pos == buf.size() || (buf[pos] == '+' && depth == 0)) {
      take_term(std::string_view(buf).substr(start, pos - start));
      start = pos + 1;
    }
  }
  return acc;
}

inline BinaryPoly parse_binary_poly(std::string_view s) { return parse_poly<F2>(s); }
inline R1Poly parse_r1_poly(std::string_view s) { return parse_poly<R1Element>(s); }
inline RPoly parse_r_poly(std::string_view s) { return parse_poly<RElement>(s); }

}  // namespace dnacyclic
