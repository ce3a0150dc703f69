#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacyclic/cyclic_code.hpp"
#include "dnacyclic/dna.hpp"
#include "dnacyclic/poly.hpp"
#include "dnacyclic/word.hpp"

// The sigma-set construction: given f1, f2 dividing x^n - 1 over R1 with
// degrees t1, t2 and m = min(n-t1, n-t2), the generator set
// L(f) = {x^i f, x^i sigma(h) : 0 <= i < m} with f = v f1 + (1+v) f2 and
// h the degree-aligned blend (the lower-degree part shifted up).  sigma acts
// coefficientwise.  The span is the R-module generated by these rows.

namespace dnacyclic {

struct SigmaSetSpec {
  size_t n = 0;
  R1Poly f1, f2;
  bool augment_complement = false;  // append the all-u row
  friend bool operator==(const SigmaSetSpec&, const SigmaSetSpec&) = default;
};

struct SigmaSet {
  SigmaSetSpec spec;
  size_t m = 0;
  RPoly f, h, sigma_h;
  std::vector<RWord> generators;  // E_0..E_{m-1}, F_0..F_{m-1} [, all-u]
};

inline RPoly rpoly_sigma(const RPoly& f) {
  std::vector<RElement> out(f.coeffs());
  for (auto& c : out) c = sigma(c);
  return RPoly(std::move(out));
}

inline SigmaSet build_sigma_set(const SigmaSetSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("sigma set: n must be >= 1");
  const R1Poly xn1 = to_r1poly(BinaryPoly::xn_minus_1(spec.n));
  for (const auto* f : {&spec.f1, &spec.f2}) {
    if (f->is_zero()) throw std::invalid_argument("sigma set: f1, f2 must be nonzero");
    if (!f->leading().is_unit() || !divides(*f, xn1))
      throw std::invalid_argument("sigma set: " + to_string(*f) +
                                  " does not divide x^n-1 over R1");
  }
  SigmaSet out;
  out.spec = spec;
  const size_t t1 = static_cast<size_t>(spec.f1.degree());
  const size_t t2 = static_cast<size_t>(spec.f2.degree());
  out.m = std::min(spec.n - t1, spec.n - t2);
  const RPoly vf1 = to_rpoly(spec.f1).scaled(RElement::v());
  const RPoly wf2 = to_rpoly(spec.f2).scaled(RElement::one_plus_v());
  out.f = vf1 + wf2;
  out.h = t2 >= t1 ? vf1.shifted(t2 - t1) + wf2
                   : vf1 + wf2.shifted(t1 - t2);
  out.sigma_h = rpoly_sigma(out.h);
  for (size_t i = 0; i < out.m; ++i)
    out.generators.push_back(rpoly_to_word(out.f.shifted(i), spec.n));
  for (size_t i = 0; i < out.m; ++i)
    out.generators.push_back(rpoly_to_word(out.sigma_h.shifted(i), spec.n));
  if (spec.augment_complement)
    out.generators.push_back(RWord(spec.n, RElement::u()));
  return out;
}

/// Rows interleaved E_0, F_0, E_1, F_1, ..., with the all-u row last when
/// present.
inline std::vector<RWord> generator_matrix(const SigmaSet& s) {
  std::vector<RWord> rows;
  for (size_t i = 0; i < s.m; ++i) {
    rows.push_back(s.generators[i]);
    rows.push_back(s.generators[s.m + i]);
  }
  if (s.spec.augment_complement) rows.push_back(s.generators.back());
  return rows;
}

inline std::string format_matrix(const std::vector<RWord>& rows) {
  if (rows.empty()) return "";
  const size_t n = rows[0].size();
  std::vector<size_t> width(n, 1);
  for (const auto& r : rows)
    for (size_t j = 0; j < n; ++j) width[j] = std::max(width[j], to_string(r[j]).size());
  std::string out;
  for (const auto& r : rows) {
    out += "[ ";
    for (size_t j = 0; j < n; ++j) {
      std::string cell = to_string(r[j]);
      cell.resize(width[j], ' ');
      out += cell + (j + 1 < n ? "  " : " ");
    }
    out += "]\n";
  }
  return out;
}

/// F2-span of all R-scalar multiples of the generator words, kept as an
/// echelon basis of 4n-bit vectors.  This is exactly the R-module span.
class RSpan {
 public:
  RSpan(size_t n, const std::vector<RWord>& generators) : n_(n), blocks_((4 * n + 63) / 64) {
    for (const auto& g : generators) {
      if (g.size() != n) throw std::invalid_argument("RSpan: ragged generator");
      for (RElement r : {RElement::one(), RElement::u(), RElement::v(), RElement::uv()})
        insert(to_bits(word_scale(r, g)));
    }
  }

  size_t rank() const { return basis_.size(); }
  size_t n() const { return n_; }

  bool contains(const RWord& w) const {
    auto bits = to_bits(w);
    reduce(bits);
    return top_bit(bits) < 0;
  }

  uint64_t cardinality() const {
    if (basis_.size() >= 63) throw std::length_error("RSpan: cardinality exceeds 2^62");
    return uint64_t{1} << basis_.size();
  }

  /// All span elements, sorted lexicographically by coordinate.
  std::vector<RWord> enumerate(uint64_t bound = kDefaultEnumerationBound) const {
    detail::check_enumeration_bound(basis_.size(), bound);
    std::vector<RWord> words{RWord(n_)};
    words.reserve(cardinality());
    for (const auto& bv : basis_) {
      const RWord bw = from_bits(bv);
      const size_t sz = words.size();
      for (size_t i = 0; i < sz; ++i) {
        RWord w = words[i];
        for (size_t j = 0; j < n_; ++j) w[j] += bw[j];
        words.push_back(std::move(w));
      }
    }
    std::sort(words.begin(), words.end());
    return words;
  }

 private:
  using Bits = std::vector<uint64_t>;

  Bits to_bits(const RWord& w) const {
    Bits bits(blocks_, 0);
    for (size_t j = 0; j < n_; ++j) {
      const size_t pos = 4 * j;
      bits[pos / 64] |= static_cast<uint64_t>(w[j].bits()) << (pos % 64);
    }
    return bits;
  }

  RWord from_bits(const Bits& bits) const {
    RWord w(n_);
    for (size_t j = 0; j < n_; ++j) {
      const size_t pos = 4 * j;
      w[j] = RElement(static_cast<uint8_t>((bits[pos / 64] >> (pos % 64)) & 15u));
    }
    return w;
  }

  static int top_bit_of(const Bits& v) {
    for (size_t b = v.size(); b-- > 0;)
      if (v[b]) return static_cast<int>(b) * 64 + 63 - std::countl_zero(v[b]);
    return -1;
  }
  int top_bit(const Bits& v) const { return top_bit_of(v); }

  void reduce(Bits& v) const {
    for (const auto& bv : basis_) {
      const int tb = top_bit_of(v);
      if (tb < 0) return;
      if (top_bit_of(bv) == tb)
        for (size_t b = 0; b < v.size(); ++b) v[b] ^= bv[b];
    }
  }

  void insert(Bits v) {
    reduce(v);
    if (top_bit_of(v) < 0) return;
    basis_.push_back(std::move(v));
    std::sort(basis_.begin(), basis_.end(), [](const Bits& x, const Bits& y) {
      return top_bit_of(x) > top_bit_of(y);
    });
  }

  size_t n_;
  size_t blocks_;
  std::vector<Bits> basis_;  // echelon, strictly descending leading bits
};

struct SpanReport {
  size_t rank = 0;                  // log2 of the span cardinality
  size_t generator_count = 0;       // rows of L(f) (plus the all-u row)
  bool generators_independent = false;  // true iff cardinality = 16^rows
  size_t m = 0;
  bool cardinality_is_16_pow_m = false;
};

inline SpanReport span_report(const SigmaSet& s, const RSpan& span) {
  SpanReport rep;
  rep.rank = span.rank();
  rep.generator_count = s.generators.size();
  rep.generators_independent = span.rank() == 4 * s.generators.size();
  rep.m = s.m;
  rep.cardinality_is_16_pow_m = span.rank() == 4 * s.m;
  return rep;
}

inline std::vector<RWord> span_enumerate(const SigmaSet& s,
                                         uint64_t bound = kDefaultEnumerationBound) {
  return RSpan(s.spec.n, s.generators).enumerate(bound);
}

/// Checks the reversal identity for one coefficient vector: the DNA reverse
/// of phi(sum alpha_i E_i + sum beta_i F_i) equals
/// phi(sum sigma(alpha_i) F_{m-1-i} + sum sigma(beta_i) E_{m-1-i}).
inline bool reversibility_identity_check(const SigmaSet& s,
                                         const std::vector<RElement>& alpha,
                                         const std::vector<RElement>& beta) {
  if (alpha.size() != s.m || beta.size() != s.m)
    throw std::invalid_argument("reversibility_identity_check: coefficient count != m");
  RWord lhs(s.spec.n), rhs(s.spec.n);
  for (size_t i = 0; i < s.m; ++i) {
    const RWord& e_i = s.generators[i];
    const RWord& f_i = s.generators[s.m + i];
    const RWord& e_rev = s.generators[s.m - 1 - i];
    const RWord& f_rev = s.generators[2 * s.m - 1 - i];
    for (size_t j = 0; j < s.spec.n; ++j) {
      lhs[j] += alpha[i] * e_i[j] + beta[i] * f_i[j];
      rhs[j] += sigma(alpha[i]) * f_rev[j] + sigma(beta[i]) * e_rev[j];
    }
  }
  return reverse_dna(phi(lhs)) == phi(rhs);
}

/// Linear combination sum alpha_i E_i + sum beta_i F_i as a word.
inline RWord sigma_set_combine(const SigmaSet& s, const std::vector<RElement>& alpha,
                               const std::vector<RElement>& beta) {
  if (alpha.size() != s.m || beta.size() != s.m)
    throw std::invalid_argument("sigma_set_combine: coefficient count != m");
  RWord out(s.spec.n);
  for (size_t i = 0; i < s.m; ++i)
    for (size_t j = 0; j < s.spec.n; ++j)
      out[j] += alpha[i] * s.generators[i][j] + beta[i] * s.generators[s.m + i][j];
  return out;
}

struct CyclicFromSelfReciprocal {
  RCodeSpec spec;                 // c1 = c2 = (f1) with p = 0
  bool f1_self_reciprocal = false;
  bool x_minus_1_divides_f = false;
  bool reversible = false;        // both components reversible via f1 = f1*
  bool reversible_complement_claim = false;  // reversible and x-1 does not divide f
};

/// The cyclic code (f) with f = v f1 + (1+v) f1 = f1; over the CRT both
/// components are (f1).  When x-1 does not divide f the code contains the
/// all-ones word, hence the all-u word, and the DNA image is
/// reversible-complement.
inline CyclicFromSelfReciprocal cyclic_code_from_binary(const BinaryPoly& f1, size_t n) {
  if (f1.is_zero()) throw std::invalid_argument("cyclic_code_from_binary: f1 is zero");
  if (!divides(f1, BinaryPoly::xn_minus_1(n)))
    throw std::invalid_argument("cyclic_code_from_binary: f1 does not divide x^n-1");
  CyclicFromSelfReciprocal out;
  out.spec = RCodeSpec{n, {n, f1, BinaryPoly::zero(), f1}, {n, f1, BinaryPoly::zero(), f1}};
  out.f1_self_reciprocal = f1.is_self_reciprocal();
  out.x_minus_1_divides_f = f1.eval_at_one().is_zero();
  out.reversible = out.f1_self_reciprocal;
  out.reversible_complement_claim = out.reversible && !out.x_minus_1_divides_f;
  return out;
}

}  // namespace dnacyclic
