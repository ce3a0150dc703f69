#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/ring.hpp"
#include "dnacyclic/word.hpp"

// The element-to-DNA correspondence: R1 elements map to single bases by
// 0 -> A, 1 -> G, u -> T, 1+u -> C; an R element maps to the base pair of
// its Gray coordinates (zeta); a length-n word over R maps to a length-2n
// DNA string (phi) holding all first Gray coordinates, then all second.

namespace dnacyclic {

/// Enumerator values double as quaternary digits (A=0, T=1, G=2, C=3).
enum class DnaBase : uint8_t { A = 0, T = 1, G = 2, C = 3 };

inline char base_char(DnaBase b) { return "ATGC"[static_cast<uint8_t>(b)]; }

inline DnaBase base_from_char(char c) {
  switch (c) {
    case 'A': return DnaBase::A;
    case 'T': return DnaBase::T;
    case 'G': return DnaBase::G;
    case 'C': return DnaBase::C;
    default: throw std::invalid_argument(std::string("bad DNA base '") + c + "'");
  }
}

inline DnaBase base_of_r1(R1Element x) {
  // 0 -> A, 1 -> G, u -> T, 1+u -> C
  static constexpr DnaBase kMap[4] = {DnaBase::A, DnaBase::T, DnaBase::G, DnaBase::C};
  return kMap[x.bits()];
}

inline R1Element r1_of_base(DnaBase b) {
  static constexpr uint8_t kMap[4] = {0, 1, 2, 3};  // A->0, T->u, G->1, C->1+u
  return R1Element(kMap[static_cast<uint8_t>(b)]);
}

/// Watson-Crick pairing A<->T, G<->C; equals base_of_r1(x + u).
inline DnaBase wcc(DnaBase b) {
  static constexpr DnaBase kMap[4] = {DnaBase::T, DnaBase::A, DnaBase::C, DnaBase::G};
  return kMap[static_cast<uint8_t>(b)];
}

/// The per-element double-pair view: zeta(x) = (base(a), base(a+b)).
inline std::pair<DnaBase, DnaBase> zeta(RElement x) {
  const auto [first, second] = gray_map(x);
  return {base_of_r1(first), base_of_r1(second)};
}

inline std::string zeta_string(RElement x) {
  const auto [b1, b2] = zeta(x);
  return {base_char(b1), base_char(b2)};
}

/// phi(c): first the n bases of the a-coordinates, then the n bases of the
/// a+b coordinates, so positions i and n+i together form zeta(c_i).
inline std::string phi(const RWord& c) {
  const size_t n = c.size();
  std::string out(2 * n, 'A');
  for (size_t i = 0; i < n; ++i) {
    const auto [first, second] = gray_map(c[i]);
    out[i] = base_char(base_of_r1(first));
    out[n + i] = base_char(base_of_r1(second));
  }
  return out;
}

inline RWord phi_inverse(std::string_view s) {
  if (s.size() % 2 != 0)
    throw std::invalid_argument("phi_inverse: DNA string length must be even");
  const size_t n = s.size() / 2;
  RWord out(n);
  for (size_t i = 0; i < n; ++i) {
    const R1Element first = r1_of_base(base_from_char(s[i]));
    const R1Element second = r1_of_base(base_from_char(s[n + i]));
    out[i] = gray_inverse({first, second});
  }
  return out;
}

inline std::string reverse_dna(std::string_view s) {
  return std::string(s.rbegin(), s.rend());
}

inline std::string complement_dna(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = base_char(wcc(base_from_char(c)));
  return out;
}

inline std::string reverse_complement_dna(std::string_view s) {
  return complement_dna(reverse_dna(s));
}

/// Number of G/C positions in phi(c); equals the Hamming weight of
/// u * (Gray image of c).
inline size_t gc_weight(const RWord& c) {
  size_t w = 0;
  for (auto x : c) {
    const auto [first, second] = gray_map(x);
    w += first.c0();   // base is G or C iff the unit part is set
    w += second.c0();
  }
  return w;
}

inline size_t gc_weight_of_string(std::string_view s) {
  return static_cast<size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return c == 'G' || c == 'C'; }));
}

inline constexpr size_t kMaxQuaternaryLen = 31;

/// Most-significant-digit-first quaternary value with A=0, T=1, G=2, C=3.
inline uint64_t quaternary_decimal(std::string_view s) {
  if (s.size() > kMaxQuaternaryLen)
    throw std::length_error("quaternary_decimal: length > 31 overflows 64 bits");
  uint64_t v = 0;
  for (char c : s) v = v * 4 + static_cast<uint64_t>(base_from_char(c));
  return v;
}

inline std::string dna_from_decimal(uint64_t value, size_t length) {
  if (length > kMaxQuaternaryLen)
    throw std::length_error("dna_from_decimal: length > 31");
  if (length < 32 && value >> (2 * length))
    throw std::invalid_argument("dna_from_decimal: value does not fit length");
  std::string out(length, 'A');
  for (size_t i = length; i-- > 0;) {
    out[i] = base_char(static_cast<DnaBase>(value & 3));
    value >>= 2;
  }
  return out;
}

// ---- exports ----

/// One record per codeword: ">cw<index> gc=<weight>" then the sequence.
inline std::string fasta_export(const std::vector<RWord>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    out += ">cw" + std::to_string(i) + " gc=" + std::to_string(gc_weight(words[i])) + "\n";
    out += phi(words[i]) + "\n";
  }
  return out;
}

/// One quaternary-decimal integer per line.
inline std::string decimal_export(const std::vector<RWord>& words) {
  std::string out;
  for (const auto& w : words) {
    out += std::to_string(quaternary_decimal(phi(w)));
    out += '\n';
  }
  return out;
}

}  // namespace dnacyclic
