#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

// Exact arithmetic for the chain ring R1 = F2 + u*F2 (u^2 = 0) and the
// 16-element non-chain ring R = F2 + u*F2 + v*F2 + uv*F2 (u^2 = 0, v^2 = v,
// uv = vu, characteristic 2).  Every element of R is written uniquely as
// a + v*b with a, b in R1.

namespace dnacyclic {

/// Element of F2 + u*F2, stored as two bits: bit1 = coefficient of 1,
/// bit0 = coefficient of u.  Addition is XOR; the units are 1 and 1+u.
class R1Element {
 public:
  constexpr R1Element() = default;
  constexpr explicit R1Element(uint8_t bits) : bits_(bits & 3u) {}
  static constexpr R1Element from_parts(bool c0, bool c1) {
    return R1Element(static_cast<uint8_t>((c0 ? 2u : 0u) | (c1 ? 1u : 0u)));
  }

  constexpr bool c0() const { return (bits_ & 2u) != 0; }  // coefficient of 1
  constexpr bool c1() const { return (bits_ & 1u) != 0; }  // coefficient of u
  constexpr uint8_t bits() const { return bits_; }

  constexpr bool is_zero() const { return bits_ == 0; }
  constexpr bool is_unit() const { return c0(); }

  friend constexpr R1Element operator+(R1Element x, R1Element y) {
    return R1Element(static_cast<uint8_t>(x.bits_ ^ y.bits_));
  }
  friend constexpr R1Element operator*(R1Element x, R1Element y) {
    const bool c0 = x.c0() && y.c0();
    const bool c1 = (x.c0() && y.c1()) ^ (x.c1() && y.c0());
    return from_parts(c0, c1);
  }
  constexpr R1Element& operator+=(R1Element y) { return *this = *this + y; }
  friend constexpr bool operator==(R1Element, R1Element) = default;
  friend constexpr auto operator<=>(R1Element x, R1Element y) {
    return x.bits_ <=> y.bits_;
  }

  /// Inverse of a unit; 1 and 1+u are both self-inverse.
  constexpr R1Element inverse() const {
    if (!is_unit()) throw std::domain_error("R1Element: not a unit");
    return *this;
  }

  static constexpr R1Element zero() { return R1Element(0); }
  static constexpr R1Element one() { return R1Element(2); }
  static constexpr R1Element u() { return R1Element(1); }
  static constexpr R1Element one_plus_u() { return R1Element(3); }

  static constexpr std::array<R1Element, 4> all() {
    return {R1Element(0), R1Element(1), R1Element(2), R1Element(3)};
  }

 private:
  uint8_t bits_ = 0;
};

inline std::string to_string(R1Element x) {
  static constexpr std::string_view kNames[4] = {"0", "u", "1", "1+u"};
  return std::string(kNames[x.bits()]);
}

/// Element of R written a + v*b, stored as one nibble: bits 3..2 = a,
/// bits 1..0 = b.  The nibble value doubles as the canonical total order
/// (lexicographic on (a.c0, a.c1, b.c0, b.c1)).
class RElement {
 public:
  constexpr RElement() = default;
  constexpr explicit RElement(uint8_t bits) : bits_(bits & 15u) {}
  constexpr RElement(R1Element a, R1Element b)
      : bits_(static_cast<uint8_t>((a.bits() << 2) | b.bits())) {}

  constexpr R1Element a() const { return R1Element(static_cast<uint8_t>(bits_ >> 2)); }
  constexpr R1Element b() const { return R1Element(bits_); }
  constexpr uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr RElement operator+(RElement x, RElement y) {
    return RElement(static_cast<uint8_t>(x.bits_ ^ y.bits_));
  }
  constexpr RElement& operator+=(RElement y) { return *this = *this + y; }
  friend constexpr RElement operator*(RElement x, RElement y);
  friend constexpr bool operator==(RElement, RElement) = default;
  friend constexpr auto operator<=>(RElement x, RElement y) {
    return x.bits_ <=> y.bits_;
  }

  static constexpr RElement zero() { return RElement(0); }
  static constexpr RElement one() { return RElement(R1Element::one(), R1Element::zero()); }
  static constexpr RElement u() { return RElement(R1Element::u(), R1Element::zero()); }
  static constexpr RElement v() { return RElement(R1Element::zero(), R1Element::one()); }
  static constexpr RElement uv() { return RElement(R1Element::zero(), R1Element::u()); }
  static constexpr RElement one_plus_v() { return RElement(R1Element::one(), R1Element::one()); }

  /// All 16 elements in canonical order (ascending nibble value).
  static constexpr std::array<RElement, 16> all() {
    std::array<RElement, 16> out{};
    for (uint8_t i = 0; i < 16; ++i) out[i] = RElement(i);
    return out;
  }

 private:
  uint8_t bits_ = 0;
};

namespace detail {

// (a1 + v b1)(a2 + v b2) = a1 a2 + v (a1 b2 + a2 b1 + b1 b2), reduced by
// v^2 = v.  Tabulated once; all later products are lookups.
constexpr std::array<std::array<uint8_t, 16>, 16> make_r_mul_table() {
  std::array<std::array<uint8_t, 16>, 16> t{};
  for (uint8_t i = 0; i < 16; ++i) {
    for (uint8_t j = 0; j < 16; ++j) {
      const R1Element a1{static_cast<uint8_t>(i >> 2)}, b1{i};
      const R1Element a2{static_cast<uint8_t>(j >> 2)}, b2{j};
      const R1Element a = a1 * a2;
      const R1Element b = a1 * b2 + a2 * b1 + b1 * b2;
      t[i][j] = static_cast<uint8_t>((a.bits() << 2) | b.bits());
    }
  }
  return t;
}

inline constexpr auto kRMulTable = make_r_mul_table();

}  // namespace detail

constexpr RElement operator*(RElement x, RElement y) {
  return RElement(detail::kRMulTable[x.bits_][y.bits_]);
}

/// The automorphism a + v*b -> a + (1+v)*b, i.e. (a, b) -> (a+b, b).
/// An involution that swaps the v and 1+v idempotent components.
constexpr RElement sigma(RElement x) {
  return RElement(x.a() + x.b(), x.b());
}

/// Gray map R -> R1 x R1: a + v*b -> (a, a+b).  Additive bijection.
constexpr std::pair<R1Element, R1Element> gray_map(RElement x) {
  return {x.a(), x.a() + x.b()};
}

constexpr RElement gray_inverse(std::pair<R1Element, R1Element> p) {
  return RElement(p.first, p.first + p.second);
}

/// Watson-Crick complement lifted to R: x -> x + u (so x + complement(x) = u).
constexpr RElement complement(RElement x) {
  return x + RElement::u();
}

/// CRT split along R = vR1 (+) (1+v)R1: x = v*c1 + (1+v)*c2 with
/// c1 = a+b, c2 = a.
constexpr std::pair<R1Element, R1Element> crt_split(RElement x) {
  return {x.a() + x.b(), x.a()};
}

constexpr RElement crt_join(R1Element c1, R1Element c2) {
  return RElement(c2, c1 + c2);
}

/// Canonical text form: monomials from {1, u, v, uv} in that order,
/// "+"-separated, no spaces; zero prints "0".
inline std::string to_string(RElement x) {
  std::string out;
  const bool coeff[4] = {x.a().c0(), x.a().c1(), x.b().c0(), x.b().c1()};
  static constexpr std::string_view kMono[4] = {"1", "u", "v", "uv"};
  for (int i = 0; i < 4; ++i) {
    if (!coeff[i]) continue;
    if (!out.empty()) out += '+';
    out += kMono[i];
  }
  return out.empty() ? "0" : out;
}

inline RElement parse_relement(std::string_view s) {
  if (s == "0") return RElement::zero();
  RElement x;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = s.find('+', pos);
    const std::string_view tok = s.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok == "1") x += RElement::one();
    else if (tok == "u") x += RElement::u();
    else if (tok == "v") x += RElement::v();
    else if (tok == "uv") x += RElement::uv();
    else throw std::invalid_argument("bad ring element: '" + std::string(s) + "'");
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return x;
}

inline R1Element parse_r1element(std::string_view s) {
  const RElement x = parse_relement(s);
  if (!x.b().is_zero()) throw std::invalid_argument("not in F2+uF2: '" + std::string(s) + "'");
  return x.a();
}

}  // namespace dnacyclic
