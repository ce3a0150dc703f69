#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "dnacyclic/poly.hpp"

// Factorization of x^n - 1 over F2 and enumeration of its monic divisors.
// Writing n = 2^s * m with m odd, x^n - 1 = (x^m - 1)^(2^s) and x^m - 1 is
// squarefree with one irreducible factor per 2-cyclotomic coset mod m, of
// degree equal to the coset size.  Small factors are found by trial division
// against a sieve of irreducibles; the few large cosets (n <= 64 only
// produces them for m in {47, 55, 59, 61, ...}) are separated by
// distinct-degree gcds and split with randomized trace maps.

namespace dnacyclic {

inline constexpr size_t kDefaultFactorBound = 64;

struct FactorMultiplicity {
  BinaryPoly factor;
  size_t multiplicity;
  friend bool operator==(const FactorMultiplicity&, const FactorMultiplicity&) = default;
};

namespace detail {

using poly128 = unsigned __int128;

inline int deg128(poly128 x) {
  int d = -1;
  while (x) {
    x >>= 1;
    ++d;
  }
  return d;
}

inline poly128 polmul128(poly128 a, poly128 b) {
  poly128 r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline poly128 polmod128(poly128 a, poly128 m) {
  const int dm = deg128(m);
  for (int d = deg128(a); d >= dm; --d)
    if ((a >> d) & 1) a ^= m << (d - dm);
  return a;
}

inline poly128 poldiv128(poly128 a, poly128 m) {
  const int dm = deg128(m);
  poly128 q = 0;
  for (int d = deg128(a); d >= dm; --d)
    if ((a >> d) & 1) {
      a ^= m << (d - dm);
      q |= poly128(1) << (d - dm);
    }
  return q;
}

inline poly128 polgcd128(poly128 a, poly128 b) {
  while (b) {
    a = polmod128(a, b);
    std::swap(a, b);
  }
  return a;
}

inline poly128 polmulmod128(poly128 a, poly128 b, poly128 m) {
  return polmod128(polmul128(a, b), m);
}

// x^(2^k) mod m, by k squarings.
inline poly128 pol_x_pow_pow2_mod(size_t k, poly128 m) {
  poly128 x = polmod128(poly128(2), m);
  for (size_t i = 0; i < k; ++i) x = polmulmod128(x, x, m);
  return x;
}

inline BinaryPoly mask_to_poly(poly128 mask) {
  std::vector<F2> c;
  for (poly128 x = mask; x; x >>= 1) c.push_back(F2{(x & 1) != 0});
  return BinaryPoly(std::move(c));
}

inline poly128 poly_to_mask(const BinaryPoly& f) {
  if (f.degree() > 126) throw std::length_error("polynomial too large for 128-bit mask");
  poly128 m = 0;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(static_cast<size_t>(i)).value) m |= poly128(1) << i;
  return m;
}

/// All irreducible binary polynomials of degree 1..max_deg as masks,
/// ascending.  Built once by trial division against the smaller entries.
inline const std::vector<uint64_t>& irreducible_sieve(int max_deg) {
  static constexpr int kSieveCap = 14;
  if (max_deg > kSieveCap) throw std::length_error("irreducible sieve capped at degree 14");
  static const std::vector<uint64_t> sieve = [] {
    std::vector<uint64_t> irr;
    for (int d = 1; d <= kSieveCap; ++d) {
      // monic candidates with nonzero constant term (x itself never divides
      // x^n - 1), except x at degree 1 which we skip for the same reason
      for (uint64_t low = 1; low < (1ull << d); low += 2) {
        const uint64_t cand = (1ull << d) | low;
        bool ok = true;
        for (uint64_t q : irr) {
          if (2 * deg128(q) > d) break;
          if (polmod128(cand, q) == 0) {
            ok = false;
            break;
          }
        }
        if (ok) irr.push_back(cand);
      }
    }
    return irr;
  }();
  return sieve;
}

// Sizes of the 2-cyclotomic cosets mod m (m odd): degree -> count.
inline std::map<size_t, size_t> coset_degree_counts(size_t m) {
  std::map<size_t, size_t> counts;
  std::vector<bool> seen(m, false);
  for (size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    size_t len = 0, j = s;
    do {
      seen[j] = true;
      ++len;
      j = (2 * j) % m;
    } while (j != s);
    ++counts[len];
  }
  return counts;
}

}  // namespace detail

/// Distinct irreducible factors of x^n - 1 over F2, each with multiplicity
/// 2^s where n = 2^s * m, sorted by (degree, coefficient bits).
inline std::vector<FactorMultiplicity> factor_xn_minus_1(size_t n,
                                                         size_t bound = kDefaultFactorBound) {
  using namespace detail;
  if (n < 1 || n > bound)
    throw std::invalid_argument("factor_xn_minus_1: n out of bounds [1, " +
                                std::to_string(bound) + "]");
  size_t m = n, mult = 1;
  while (m % 2 == 0) {
    m /= 2;
    mult *= 2;
  }

  auto expected = coset_degree_counts(m);
  poly128 rem = (poly128(1) << m) | 1;  // x^m + 1
  std::vector<poly128> factors;

  // small degrees by sieve trial division
  for (auto& [deg, count] : expected) {
    if (deg > 14) break;
    size_t found = 0;
    for (uint64_t q : irreducible_sieve(14)) {
      if (static_cast<size_t>(deg128(q)) != deg) continue;
      if (polmod128(rem, q) == 0) {
        rem = poldiv128(rem, q);
        factors.push_back(q);
        if (++found == count) break;
      }
    }
    if (found != count)
      throw std::logic_error("factor_xn_minus_1: sieve missed a factor");
    count = 0;
  }

  // large degrees: distinct-degree separation, then trace-map splitting
  std::mt19937_64 rng(0x5eed1dull);
  for (auto& [deg, count] : expected) {
    if (count == 0) continue;
    poly128 part = polgcd128(rem, pol_x_pow_pow2_mod(deg, rem) ^ polmod128(poly128(2), rem));
    rem = poldiv128(rem, part);
    std::vector<poly128> work{part};
    while (!work.empty()) {
      poly128 p = work.back();
      work.pop_back();
      if (static_cast<size_t>(deg128(p)) == deg) {
        factors.push_back(p);
        continue;
      }
      poly128 g = 0;
      do {
        poly128 r = 0;
        for (int i = 0; i < deg128(p); ++i)
          if (rng() & 1) r |= poly128(1) << i;
        poly128 t = 0, ri = polmod128(r, p);
        for (size_t i = 0; i < deg; ++i) {
          t ^= ri;
          ri = polmulmod128(ri, ri, p);
        }
        g = polgcd128(p, t);
      } while (g == 0 || deg128(g) == 0 || g == p);
      work.push_back(g);
      work.push_back(poldiv128(p, g));
    }
  }
  if (rem != 1) throw std::logic_error("factor_xn_minus_1: incomplete factorization");

  std::sort(factors.begin(), factors.end());
  std::vector<FactorMultiplicity> out;
  out.reserve(factors.size());
  for (poly128 f : factors) out.push_back({mask_to_poly(f), mult});
  return out;
}

/// All monic divisors of x^n - 1 over F2, sorted by (degree, coefficient
/// bits); includes 1 and x^n - 1 itself.
inline std::vector<BinaryPoly> divisors_xn_minus_1(size_t n,
                                                   size_t bound = kDefaultFactorBound) {
  const auto factors = factor_xn_minus_1(n, bound);
  std::vector<detail::poly128> divs{1};
  for (const auto& [f, mult] : factors) {
    const detail::poly128 fm = detail::poly_to_mask(f);
    const size_t base = divs.size();
    detail::poly128 power = 1;
    for (size_t e = 1; e <= mult; ++e) {
      power = detail::polmul128(power, fm);
      for (size_t i = 0; i < base; ++i) divs.push_back(detail::polmul128(divs[i], power));
    }
  }
  std::sort(divs.begin(), divs.end());
  std::vector<BinaryPoly> out;
  out.reserve(divs.size());
  for (auto d : divs) out.push_back(detail::mask_to_poly(d));
  return out;
}

/// (x^n - 1) / f over F2.
inline BinaryPoly cofactor_xn_minus_1(const BinaryPoly& f, size_t n) {
  const auto [q, r] = divmod(BinaryPoly::xn_minus_1(n), f);
  if (!r.is_zero())
    throw std::invalid_argument("cofactor_xn_minus_1: polynomial does not divide x^n-1");
  return q;
}

}  // namespace dnacyclic
