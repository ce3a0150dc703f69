#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacyclic/factor.hpp"
#include "dnacyclic/poly.hpp"
#include "dnacyclic/ring.hpp"
#include "dnacyclic/word.hpp"

// Cyclic codes over R1 in the canonical (g + up, ua) presentation and their
// CRT pairs over R.  An odd-length code (g, ua) is stored with p = 0; for a
// free component a = g.

namespace dnacyclic {

inline constexpr uint64_t kDefaultEnumerationBound = uint64_t{1} << 20;

struct R1CodeSpec {
  size_t n = 0;
  BinaryPoly g, p, a;
  friend bool operator==(const R1CodeSpec&, const R1CodeSpec&) = default;
};

struct RCodeSpec {
  size_t n = 0;
  R1CodeSpec c1, c2;
  friend bool operator==(const RCodeSpec&, const RCodeSpec&) = default;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  bool warning = false;
  std::string detail;
};

struct ValidationReport {
  std::string form;  // "(g,ua)" odd, "(g+up)" even free, "(g+up,ua)" even
  std::vector<ValidationCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.pass; });
  }
  bool has_warning() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.warning; });
  }
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      if (c.pass && !c.warning) continue;
      if (!out.empty()) out += "; ";
      out += c.name + (c.pass ? " [warning]" : " [fail]");
      if (!c.detail.empty()) out += ": " + c.detail;
    }
    return out.empty() ? "ok" : out;
  }
};

inline ValidationReport validate_r1_spec(const R1CodeSpec& spec) {
  ValidationReport rep;
  auto check = [&](std::string name, bool pass, std::string detail = "",
                   bool warning = false) {
    rep.checks.push_back({std::move(name), pass, warning, std::move(detail)});
  };
  if (spec.n < 1) {
    check("length", false, "n must be >= 1");
    return rep;
  }
  if (spec.g.is_zero() || spec.a.is_zero()) {
    check("generators nonzero", false, "g and a must be nonzero divisors of x^n-1");
    return rep;
  }
  const bool odd = spec.n % 2 == 1;
  rep.form = odd ? "(g,ua)" : (spec.a == spec.g ? "(g+up)" : "(g+up,ua)");

  const BinaryPoly xn1 = BinaryPoly::xn_minus_1(spec.n);
  check("g | x^n-1", divides(spec.g, xn1));
  check("a | g", divides(spec.a, spec.g));
  if (odd) {
    check("odd form has p = 0", spec.p.is_zero(),
          spec.p.is_zero() ? "" : "odd length uses the (g, ua) form");
    return rep;
  }
  if (spec.p.is_zero()) {
    check("a | p*(x^n-1)/g", true);
    return rep;
  }
  if (spec.p.degree() < spec.a.degree()) {
    check("deg p < deg a", true);
  } else if (spec.p.degree() == spec.a.degree()) {
    check("deg p < deg a", true,
          "deg p = deg a accepted; the canonical form uses deg p < deg a", true);
  } else {
    check("deg p < deg a", false,
          "deg p = " + std::to_string(spec.p.degree()) +
              " exceeds deg a = " + std::to_string(spec.a.degree()));
    return rep;
  }
  if (!divides(spec.g, xn1)) return rep;
  const BinaryPoly ghat = divmod(xn1, spec.g).first;
  check("a | p*(x^n-1)/g", divides(spec.a, spec.p * ghat));
  if (spec.a == spec.g) {
    // one-generator even form also needs (g+up) | x^n-1 over R1
    const R1Poly gen = to_r1poly(spec.g) + to_r1poly(spec.p).scaled(R1Element::u());
    if (!gen.leading().is_unit()) {
      check("(g+up) | x^n-1 over R1", false,
            "leading coefficient of g+up is not a unit");
    } else {
      check("(g+up) | x^n-1 over R1",
            divides(gen, to_r1poly(xn1)));
    }
  }
  return rep;
}

struct RValidationReport {
  ValidationReport c1, c2;
  bool length_match = false;
  bool ok() const { return length_match && c1.ok() && c2.ok(); }
};

inline RValidationReport validate_r_spec(const RCodeSpec& spec) {
  RValidationReport rep;
  rep.length_match = spec.c1.n == spec.n && spec.c2.n == spec.n;
  rep.c1 = validate_r1_spec(spec.c1);
  rep.c2 = validate_r1_spec(spec.c2);
  return rep;
}

namespace detail {

inline void require_valid(const R1CodeSpec& spec) {
  const auto rep = validate_r1_spec(spec);
  if (!rep.ok()) throw std::invalid_argument("invalid R1 code spec: " + rep.summary());
}

inline void require_valid(const RCodeSpec& spec) {
  const auto rep = validate_r_spec(spec);
  if (!rep.length_match)
    throw std::invalid_argument("invalid R code spec: component length mismatch");
  if (!rep.c1.ok())
    throw std::invalid_argument("invalid R code spec (c1): " + rep.c1.summary());
  if (!rep.c2.ok())
    throw std::invalid_argument("invalid R code spec (c2): " + rep.c2.summary());
}

}  // namespace detail

struct R1GeneratingSet {
  size_t n = 0;
  std::vector<R1Poly> elements;  // F2-basis; |C| = 2^elements.size()
};

struct RGeneratingSet {
  size_t n = 0;
  std::vector<RPoly> elements;
};

/// F2-basis per the minimal-generating-set structure: shifts of g+up, then
/// shifts of ug, then shifts of ua when a != g.
inline R1GeneratingSet r1_basis(const R1CodeSpec& spec) {
  detail::require_valid(spec);
  R1GeneratingSet out{spec.n, {}};
  const size_t free_rank = spec.n - static_cast<size_t>(spec.g.degree());
  const R1Poly gup = to_r1poly(spec.g) + to_r1poly(spec.p).scaled(R1Element::u());
  const R1Poly ug = to_r1poly(spec.g).scaled(R1Element::u());
  for (size_t i = 0; i < free_rank; ++i) out.elements.push_back(gup.shifted(i));
  for (size_t i = 0; i < free_rank; ++i) out.elements.push_back(ug.shifted(i));
  if (!(spec.a == spec.g)) {
    const R1Poly ua = to_r1poly(spec.a).scaled(R1Element::u());
    const size_t extra = static_cast<size_t>(spec.g.degree() - spec.a.degree());
    for (size_t i = 0; i < extra; ++i) out.elements.push_back(ua.shifted(i));
  }
  return out;
}

inline size_t r1_code_log2_size(const R1CodeSpec& spec) {
  detail::require_valid(spec);
  return 2 * (spec.n - static_cast<size_t>(spec.g.degree())) +
         static_cast<size_t>(spec.g.degree() - spec.a.degree());
}

inline size_t r_code_log2_size(const RCodeSpec& spec) {
  return r1_code_log2_size(spec.c1) + r1_code_log2_size(spec.c2);
}

/// Module rank per the generating-set structure: n - deg g when free
/// (a = g), n - deg a otherwise.
inline size_t r1_code_rank(const R1CodeSpec& spec) {
  detail::require_valid(spec);
  return spec.n - static_cast<size_t>(spec.a == spec.g ? spec.g.degree() : spec.a.degree());
}

namespace detail {

inline void check_enumeration_bound(size_t log2_size, uint64_t bound) {
  if (log2_size >= 63 || (uint64_t{1} << log2_size) > bound)
    throw std::length_error("enumeration bound " + std::to_string(bound) +
                            " exceeded (|C| = 2^" + std::to_string(log2_size) + ")");
}

}  // namespace detail

/// All codewords, sorted lexicographically by coordinate.
inline std::vector<R1Word> enumerate_r1_code(const R1CodeSpec& spec,
                                             uint64_t bound = kDefaultEnumerationBound) {
  const auto basis = r1_basis(spec);
  detail::check_enumeration_bound(basis.elements.size(), bound);
  std::vector<R1Word> words{R1Word(spec.n)};
  words.reserve(uint64_t{1} << basis.elements.size());
  for (const auto& b : basis.elements) {
    const R1Word bw = r1poly_to_word(b, spec.n);
    const size_t sz = words.size();
    for (size_t i = 0; i < sz; ++i) {
      R1Word w = words[i];
      for (size_t j = 0; j < spec.n; ++j) w[j] += bw[j];
      words.push_back(std::move(w));
    }
  }
  std::sort(words.begin(), words.end());
  return words;
}

inline std::vector<RWord> enumerate_r_code(const RCodeSpec& spec,
                                           uint64_t bound = kDefaultEnumerationBound) {
  detail::require_valid(spec);
  detail::check_enumeration_bound(r_code_log2_size(spec), bound);
  const auto words1 = enumerate_r1_code(spec.c1, bound);
  const auto words2 = enumerate_r1_code(spec.c2, bound);
  std::vector<RWord> out;
  out.reserve(words1.size() * words2.size());
  for (const auto& w1 : words1)
    for (const auto& w2 : words2) {
      RWord w(spec.n);
      for (size_t j = 0; j < spec.n; ++j) w[j] = crt_join(w1[j], w2[j]);
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Membership without enumeration.  Writing the word as w0 + u*w1 with
/// binary parts, w is in (g+up, ua) iff g | w0 and a | (w1 + (w0/g)*p).
inline bool contains(const R1CodeSpec& spec, const R1Word& word) {
  detail::require_valid(spec);
  if (word.size() != spec.n)
    throw std::invalid_argument("contains: word length mismatch");
  const auto [w0, w1] = binary_parts(word_to_r1poly(word));
  if (!divides(spec.g, w0)) return false;
  const BinaryPoly s0 = divmod(w0, spec.g).first;
  const BinaryPoly residue =
      divmod(w1 + s0 * spec.p, BinaryPoly::xn_minus_1(spec.n)).second;
  return divides(spec.a, residue);
}

inline bool contains(const RCodeSpec& spec, const RWord& word) {
  if (word.size() != spec.n)
    throw std::invalid_argument("contains: word length mismatch");
  R1Word w1(spec.n), w2(spec.n);
  for (size_t j = 0; j < spec.n; ++j) {
    const auto [x1, x2] = crt_split(word[j]);
    w1[j] = x1;
    w2[j] = x2;
  }
  return contains(spec.c1, w1) && contains(spec.c2, w2);
}

/// Minimal generating set of C = vC1 (+) (1+v)C2: v times a basis of C1
/// followed by (1+v) times a basis of C2.
inline RGeneratingSet minimal_generating_set_r(const RCodeSpec& spec) {
  detail::require_valid(spec);
  RGeneratingSet out{spec.n, {}};
  for (const auto& pi : r1_basis(spec.c1).elements)
    out.elements.push_back(to_rpoly(pi).scaled(RElement::v()));
  for (const auto& om : r1_basis(spec.c2).elements)
    out.elements.push_back(to_rpoly(om).scaled(RElement::one_plus_v()));
  return out;
}

/// True iff the word set is closed under the cyclic shift and under
/// addition.  Addition closure for a finite set S containing its own span
/// reduces to |S| = 2^rank(S).
inline bool cyclic_closure_check(const std::vector<RWord>& words) {
  if (words.empty()) return true;
  const size_t n = words[0].size();
  for (const auto& w : words)
    if (w.size() != n) throw std::invalid_argument("cyclic_closure_check: ragged word set");

  std::vector<RWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (const auto& w : sorted)
    if (!std::binary_search(sorted.begin(), sorted.end(), word_cyclic_shift(w)))
      return false;

  // rank over F2 of the words as 4n-bit vectors
  const size_t blocks = (4 * n + 63) / 64;
  std::vector<std::vector<uint64_t>> basis;
  auto to_bits = [&](const RWord& w) {
    std::vector<uint64_t> bits(blocks, 0);
    for (size_t j = 0; j < n; ++j) {
      const size_t pos = 4 * j;
      bits[pos / 64] |= static_cast<uint64_t>(w[j].bits()) << (pos % 64);
    }
    return bits;
  };
  auto top_bit = [&](const std::vector<uint64_t>& v) -> int {
    for (size_t b = blocks; b-- > 0;)
      if (v[b]) return static_cast<int>(b) * 64 + 63 - std::countl_zero(v[b]);
    return -1;
  };
  for (const auto& w : sorted) {
    auto bits = to_bits(w);
    for (const auto& bv : basis) {
      const int tb = top_bit(bits);
      if (tb < 0) break;
      if (top_bit(bv) == tb)
        for (size_t b = 0; b < blocks; ++b) bits[b] ^= bv[b];
    }
    if (top_bit(bits) >= 0) {
      basis.push_back(bits);
      std::sort(basis.begin(), basis.end(),
                [&](const auto& x, const auto& y) { return top_bit(x) > top_bit(y); });
    }
  }
  return basis.size() < 63 && sorted.size() == (uint64_t{1} << basis.size());
}

}  // namespace dnacyclic
