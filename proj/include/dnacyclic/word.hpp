#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dnacyclic/ring.hpp"

// Length-n coordinate words over R and R1, plus packed integer codecs used
// by the exhaustive checkers (4 bits per R coordinate, 2 bits per R1
// coordinate, coordinate 0 in the most significant in-use slot so that
// integer order equals lexicographic coordinate order).

namespace dnacyclic {

using RWord = std::vector<RElement>;
using R1Word = std::vector<R1Element>;

inline RWord word_add(const RWord& x, const RWord& y) {
  if (x.size() != y.size()) throw std::invalid_argument("word_add: length mismatch");
  RWord out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

inline RWord word_scale(RElement r, const RWord& x) {
  RWord out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = r * x[i];
  return out;
}

inline RWord word_reverse(RWord x) {
  std::reverse(x.begin(), x.end());
  return x;
}

/// Coordinatewise Watson-Crick complement (adds u in every coordinate).
inline RWord word_complement(RWord x) {
  for (auto& c : x) c = complement(c);
  return x;
}

inline RWord word_reverse_complement(RWord x) {
  return word_complement(word_reverse(std::move(x)));
}

inline RWord word_sigma(RWord x) {
  for (auto& c : x) c = sigma(c);
  return x;
}

/// Cyclic shift (c0,...,c_{n-1}) -> (c_{n-1},c0,...,c_{n-2}).
inline RWord word_cyclic_shift(const RWord& x) {
  if (x.empty()) return x;
  RWord out(x.size());
  out[0] = x.back();
  std::copy(x.begin(), x.end() - 1, out.begin() + 1);
  return out;
}

inline size_t word_weight(const RWord& x) {
  size_t w = 0;
  for (auto c : x) w += !c.is_zero();
  return w;
}

inline std::string to_string(const RWord& x) {
  std::string out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += to_string(x[i]);
  }
  return out;
}

inline RWord parse_rword(std::string_view s) {
  RWord out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(',', pos);
    out.push_back(parse_relement(s.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// ---- packed codecs ----

inline constexpr size_t kMaxPackedLen = 16;

inline uint64_t pack_rword(const RWord& x) {
  if (x.size() > kMaxPackedLen) throw std::length_error("pack_rword: length > 16");
  uint64_t out = 0;
  for (auto c : x) out = (out << 4) | c.bits();
  return out;
}

inline RWord unpack_rword(uint64_t bits, size_t n) {
  RWord out(n);
  for (size_t j = 0; j < n; ++j)
    out[j] = RElement(static_cast<uint8_t>(bits >> (4 * (n - 1 - j))));
  return out;
}

inline uint64_t packed_reverse(uint64_t w, size_t n) {
  uint64_t out = 0;
  for (size_t j = 0; j < n; ++j) {
    out = (out << 4) | (w & 15u);
    w >>= 4;
  }
  return out;
}

inline uint64_t packed_all(RElement c, size_t n) {
  uint64_t out = 0;
  for (size_t j = 0; j < n; ++j) out = (out << 4) | c.bits();
  return out;
}

/// sigma applied to every coordinate: a += b in each nibble, bit-parallel.
inline uint64_t packed_sigma(uint64_t w) {
  return w ^ ((w & 0x3333333333333333ull) << 2);
}

inline uint64_t packed_complement(uint64_t w, size_t n) {
  return w ^ packed_all(RElement::u(), n);
}

inline size_t packed_weight(uint64_t w) {
  size_t wt = 0;
  for (; w; w >>= 4) wt += (w & 15u) != 0;
  return wt;
}

// R1 words: 2 bits per coordinate, same conventions.

inline uint32_t pack_r1word(const R1Word& x) {
  if (x.size() > kMaxPackedLen) throw std::length_error("pack_r1word: length > 16");
  uint32_t out = 0;
  for (auto c : x) out = (out << 2) | c.bits();
  return out;
}

inline R1Word unpack_r1word(uint32_t bits, size_t n) {
  R1Word out(n);
  for (size_t j = 0; j < n; ++j)
    out[j] = R1Element(static_cast<uint8_t>(bits >> (2 * (n - 1 - j))));
  return out;
}

inline uint32_t packed_r1_reverse(uint32_t w, size_t n) {
  uint32_t out = 0;
  for (size_t j = 0; j < n; ++j) {
    out = (out << 2) | (w & 3u);
    w >>= 2;
  }
  return out;
}

inline uint32_t packed_r1_all(R1Element c, size_t n) {
  uint32_t out = 0;
  for (size_t j = 0; j < n; ++j) out = (out << 2) | c.bits();
  return out;
}

/// CRT per coordinate: w = v*w1 + (1+v)*w2 with c1 = a+b, c2 = a per nibble.
inline std::pair<uint32_t, uint32_t> packed_crt_split(uint64_t w, size_t n) {
  uint32_t w1 = 0, w2 = 0;
  for (size_t j = 0; j < n; ++j) {
    const RElement c(static_cast<uint8_t>(w >> (4 * (n - 1 - j))));
    const auto [c1, c2] = crt_split(c);
    w1 = (w1 << 2) | c1.bits();
    w2 = (w2 << 2) | c2.bits();
  }
  return {w1, w2};
}

inline uint64_t packed_crt_join(uint32_t w1, uint32_t w2, size_t n) {
  uint64_t out = 0;
  for (size_t j = 0; j < n; ++j) {
    const R1Element c1(static_cast<uint8_t>(w1 >> (2 * (n - 1 - j))));
    const R1Element c2(static_cast<uint8_t>(w2 >> (2 * (n - 1 - j))));
    out = (out << 4) | crt_join(c1, c2).bits();
  }
  return out;
}

}  // namespace dnacyclic
