#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacyclic/cyclic_code.hpp"
#include "dnacyclic/dna.hpp"
#include "dnacyclic/poly.hpp"
#include "dnacyclic/word.hpp"

// Reverse / reverse-complement / distance / GC checks, both structural
// (through the generator-polynomial conditions) and by brute force over an
// enumerated word set, plus the Griesmer-type bound.

namespace dnacyclic {

struct LemmaCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ComponentReversibility {
  bool reversible = false;
  std::string branch;  // which structural case applied
  std::vector<LemmaCheck> checks;
};

/// Structural reversibility of one R1 component.
/// Odd n: g and a self-reciprocal.  Even n, one generator (a = g):
/// g self-reciprocal and (x^i p* = p or g = x^i p* + p), i = deg g - deg p.
/// Even n, two generators: g, a self-reciprocal and a | (x^i p* + p).
inline ComponentReversibility component_reversible_structural(const R1CodeSpec& spec) {
  detail::require_valid(spec);
  ComponentReversibility out;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    out.checks.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  };
  const bool odd = spec.n % 2 == 1;
  const bool one_generator = spec.a == spec.g;
  const bool g_self = spec.g.is_self_reciprocal();

  if (odd) {
    out.branch = "odd (g,ua)";
    const bool ok_g = add("g self-reciprocal", g_self);
    const bool ok_a = add("a self-reciprocal", spec.a.is_self_reciprocal());
    out.reversible = ok_g && ok_a;
    return out;
  }

  BinaryPoly shifted_pstar;  // x^i p*, i = deg g - deg p (zero when p = 0)
  if (!spec.p.is_zero()) {
    const size_t i = static_cast<size_t>(spec.g.degree() - spec.p.degree());
    shifted_pstar = spec.p.reciprocal().shifted(i);
  }

  if (one_generator) {
    out.branch = "even (g+up)";
    const bool ok_g = add("g self-reciprocal", g_self);
    const bool cond_a = spec.p.is_zero() || shifted_pstar == spec.p;
    const bool cond_b = !spec.p.is_zero() && spec.g == shifted_pstar + spec.p;
    add("x^i p* = p", cond_a);
    add("g = x^i p* + p", cond_b);
    out.reversible = ok_g && (cond_a || cond_b);
    return out;
  }

  out.branch = "even (g+up,ua)";
  const bool ok_g = add("g self-reciprocal", g_self);
  const bool ok_a = add("a self-reciprocal", spec.a.is_self_reciprocal());
  const bool ok_p = add("a | (x^i p* + p)",
                        spec.p.is_zero() || divides(spec.a, shifted_pstar + spec.p));
  out.reversible = ok_g && ok_a && ok_p;
  return out;
}

struct StructuralVerdict {
  bool value = false;
  ComponentReversibility c1, c2;
};

/// C = vC1 (+) (1+v)C2 is reversible iff both components are.
inline StructuralVerdict is_reversible_structural(const RCodeSpec& spec) {
  StructuralVerdict out;
  out.c1 = component_reversible_structural(spec.c1);
  out.c2 = component_reversible_structural(spec.c2);
  out.value = out.c1.reversible && out.c2.reversible;
  return out;
}

struct BruteVerdict {
  bool value = false;
  std::optional<RWord> witness;  // lexicographically least failing word
};

namespace detail {

template <class Transform>
BruteVerdict closure_check(const std::vector<RWord>& words, Transform&& t) {
  std::vector<RWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& w : sorted)
    if (!std::binary_search(sorted.begin(), sorted.end(), t(w)))
      return {false, w};
  return {true, std::nullopt};
}

}  // namespace detail

/// Word-level reversal closure: x^r in C for all x in C.
inline BruteVerdict is_reversible_bruteforce(const std::vector<RWord>& words) {
  return detail::closure_check(words, [](const RWord& w) { return word_reverse(w); });
}

/// Word-level reverse-complement closure: x^rc in C for all x in C.
inline BruteVerdict is_reverse_complement_bruteforce(const std::vector<RWord>& words) {
  return detail::closure_check(words,
                               [](const RWord& w) { return word_reverse_complement(w); });
}

struct RcStructuralVerdict {
  bool value = false;
  StructuralVerdict reversible;
  bool contains_all_u = false;
};

/// Reversible-complement iff reversible and the all-u word (the complement
/// of zero) lies in the code.
inline RcStructuralVerdict is_reverse_complement_structural(const RCodeSpec& spec) {
  RcStructuralVerdict out;
  out.reversible = is_reversible_structural(spec);
  out.contains_all_u = contains(spec, RWord(spec.n, RElement::u()));
  out.value = out.reversible.value && out.contains_all_u;
  return out;
}

// DNA-string-level closures of the phi image; these are the relevant checks
// for sigma-set codes, whose images reverse through sigma rather than by
// coordinate reversal alone.

inline BruteVerdict dna_image_reverse_closed(const std::vector<RWord>& words) {
  std::set<std::string> image;
  for (const auto& w : words) image.insert(phi(w));
  std::vector<RWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : sorted)
    if (!image.count(reverse_dna(phi(w)))) return {false, w};
  return {true, std::nullopt};
}

inline BruteVerdict dna_image_rc_closed(const std::vector<RWord>& words) {
  std::set<std::string> image;
  for (const auto& w : words) image.insert(phi(w));
  std::vector<RWord> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : sorted)
    if (!image.count(reverse_complement_dna(phi(w)))) return {false, w};
  return {true, std::nullopt};
}

/// Minimum Hamming distance of a linear word set: least weight over the
/// nonzero words.
inline size_t min_hamming_distance(const std::vector<RWord>& words) {
  if (words.size() < 2)
    throw std::invalid_argument("min_hamming_distance: need at least 2 words");
  size_t best = SIZE_MAX;
  for (const auto& w : words) {
    const size_t wt = word_weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  if (best == SIZE_MAX)
    throw std::invalid_argument("min_hamming_distance: no nonzero word");
  return best;
}

inline size_t min_hamming_distance_r1(const std::vector<R1Word>& words) {
  if (words.size() < 2)
    throw std::invalid_argument("min_hamming_distance: need at least 2 words");
  size_t best = SIZE_MAX;
  for (const auto& w : words) {
    size_t wt = 0;
    for (auto c : w) wt += !c.is_zero();
    if (wt > 0) best = std::min(best, wt);
  }
  if (best == SIZE_MAX)
    throw std::invalid_argument("min_hamming_distance: no nonzero word");
  return best;
}

struct GriesmerResult {
  uint64_t bound = 0;
  bool satisfied = false;
};

/// bound = sum_{i=0}^{k-1} ceil(d / q^i); satisfied iff n >= bound.
inline GriesmerResult griesmer_check(uint64_t n, uint64_t k, uint64_t d, uint64_t q = 2) {
  if (k < 1 || d < 1 || q < 2)
    throw std::invalid_argument("griesmer_check: need k >= 1, d >= 1, q >= 2");
  uint64_t bound = 0, qi = 1;
  for (uint64_t i = 0; i < k; ++i) {
    bound += (d + qi - 1) / qi;
    if (qi >= d)
      qi = d;  // ceil stays 1 from here on; avoids overflow of q^i
    else
      qi *= q;
  }
  return {bound, n >= bound};
}

/// k(C) as the larger of the two component module ranks.
inline size_t rank_of_code(const RCodeSpec& spec) {
  return std::max(r1_code_rank(spec.c1), r1_code_rank(spec.c2));
}

struct GcReport {
  std::map<size_t, size_t> histogram;  // |G|+|C| value -> codeword count
  bool uniform_nonzero_gc = false;     // all nonzero words share one |G|+|C|
  bool balanced_every_word = false;    // every word has #G = #C
};

inline GcReport fixed_gc_report(const std::vector<RWord>& words) {
  GcReport rep;
  rep.uniform_nonzero_gc = true;
  rep.balanced_every_word = true;
  std::optional<size_t> nonzero_gc;
  for (const auto& w : words) {
    const std::string s = phi(w);
    size_t g = 0, c = 0;
    for (char ch : s) {
      g += ch == 'G';
      c += ch == 'C';
    }
    ++rep.histogram[g + c];
    if (g != c) rep.balanced_every_word = false;
    if (word_weight(w) > 0) {
      if (nonzero_gc && *nonzero_gc != g + c) rep.uniform_nonzero_gc = false;
      nonzero_gc = g + c;
    }
  }
  return rep;
}

struct ConstraintReport {
  RValidationReport validation;
  StructuralVerdict structural_reversible;
  BruteVerdict brute_reversible;
  RcStructuralVerdict structural_rc;
  BruteVerdict brute_rc;
  size_t min_distance = 0;
  size_t component_distance_1 = 0;  // printed alongside; the code distance is
  size_t component_distance_2 = 0;  // always the brute-force value
  size_t rank = 0;
  GriesmerResult griesmer;
  GcReport gc;
  uint64_t code_size = 0;
};

inline ConstraintReport build_constraint_report(const RCodeSpec& spec,
                                                uint64_t bound = kDefaultEnumerationBound) {
  ConstraintReport rep;
  rep.validation = validate_r_spec(spec);
  if (!rep.validation.ok()) return rep;
  rep.structural_reversible = is_reversible_structural(spec);
  rep.structural_rc = is_reverse_complement_structural(spec);
  const auto words = enumerate_r_code(spec, bound);
  rep.code_size = words.size();
  rep.brute_reversible = is_reversible_bruteforce(words);
  rep.brute_rc = is_reverse_complement_bruteforce(words);
  rep.rank = rank_of_code(spec);
  rep.gc = fixed_gc_report(words);
  if (words.size() >= 2) {
    rep.min_distance = min_hamming_distance(words);
    const auto comp1 = enumerate_r1_code(spec.c1, bound);
    const auto comp2 = enumerate_r1_code(spec.c2, bound);
    if (comp1.size() >= 2) rep.component_distance_1 = min_hamming_distance_r1(comp1);
    if (comp2.size() >= 2) rep.component_distance_2 = min_hamming_distance_r1(comp2);
    if (rep.rank >= 1)
      rep.griesmer = griesmer_check(spec.n, rep.rank, rep.min_distance);
  }
  return rep;
}

}  // namespace dnacyclic
