#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dnacyclic/constraints.hpp"
#include "dnacyclic/fixtures.hpp"
#include "dnacyclic/sigma_set.hpp"

using namespace dnacyclic;

namespace {

SigmaSetSpec ex43() {
  return {fixtures::kEx43N, parse_r1_poly(std::string(fixtures::kEx43F1)),
          parse_r1_poly(std::string(fixtures::kEx43F2)), false};
}

SigmaSetSpec ex45() {
  return {fixtures::kEx45N, parse_r1_poly(std::string(fixtures::kEx45F1)),
          parse_r1_poly(std::string(fixtures::kEx45F2)), false};
}

SigmaSetSpec ex57() {
  return {fixtures::kEx57N, parse_r1_poly(std::string(fixtures::kEx57F1)),
          parse_r1_poly(std::string(fixtures::kEx57F1)), false};
}

std::vector<RElement> parse_coeffs(std::string_view s) {
  return parse_rword(s);
}

}  // namespace

TEST_CASE("sigma set of the n=9 worked example") {
  const SigmaSet s = build_sigma_set(ex43());
  CHECK(s.m == 3);
  CHECK(s.f == parse_r_poly("(1+v)x^6+(1+v)x^3+(v)x+1"));
  CHECK(s.sigma_h == parse_r_poly("x^6+(1+v)x^5+(v)x^3+(v)"));
  CHECK(to_string(s.sigma_h) == fixtures::kEx43SigmaH);
}

TEST_CASE("generator matrix matches the reference entry for entry") {
  const SigmaSet s = build_sigma_set(ex43());
  const auto rows = generator_matrix(s);
  REQUIRE(rows.size() == 6);
  for (size_t i = 0; i < rows.size(); ++i)
    CHECK(to_string(rows[i]) == fixtures::kEx43Matrix[i]);
}

TEST_CASE("degenerate and equal-degree sigma sets") {
  // f1 = f2 of full degree: m = 0, span is the zero code
  const SigmaSetSpec zero{4, to_r1poly(parse_binary_poly("x^4+1")),
                          to_r1poly(parse_binary_poly("x^4+1")), false};
  const SigmaSet s0 = build_sigma_set(zero);
  CHECK(s0.m == 0);
  CHECK(s0.generators.empty());
  const auto words = span_enumerate(s0);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == RWord(4));

  // f1 = f2 = f: h = f and sigma(h) swaps v with 1+v coefficientwise
  const SigmaSetSpec same{6, parse_r1_poly("x^2+x+1"), parse_r1_poly("x^2+x+1"), false};
  const SigmaSet s1 = build_sigma_set(same);
  CHECK(s1.h == s1.f);
  CHECK(s1.sigma_h == rpoly_sigma(s1.f));
  CHECK(s1.sigma_h == s1.f);  // binary f is fixed by sigma

  // m for the n=8 worked example
  CHECK(build_sigma_set(ex57()).m == 2);
}

TEST_CASE("sigma set rejects non-divisors") {
  CHECK_THROWS_AS(build_sigma_set({5, parse_r1_poly("x^2+x+1"),
                                   parse_r1_poly("x+1"), false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_sigma_set({4, R1Poly::zero(), parse_r1_poly("x+1"), false}),
                  std::invalid_argument);
}

TEST_CASE("reference coefficient combination yields the printed codewords") {
  const SigmaSet s = build_sigma_set(ex43());
  const auto alpha = parse_coeffs(fixtures::kEx43Alpha);
  const auto beta = parse_coeffs(fixtures::kEx43Beta);

  const RWord c1 = sigma_set_combine(s, alpha, beta);
  CHECK(to_string(c1) == fixtures::kEx43C1);
  CHECK(phi(c1) == fixtures::kEx43PhiC1);

  // sigma-transformed combination: sum sigma(alpha_i) F_{m-1-i} + sigma(beta_i) E_{m-1-i}
  RWord c2(s.spec.n);
  for (size_t i = 0; i < s.m; ++i) {
    const RWord& e = s.generators[s.m - 1 - i];
    const RWord& f = s.generators[2 * s.m - 1 - i];
    for (size_t j = 0; j < s.spec.n; ++j)
      c2[j] += sigma(alpha[i]) * f[j] + sigma(beta[i]) * e[j];
  }
  CHECK(to_string(c2) == fixtures::kEx43C2);
  CHECK(phi(c2) == fixtures::kEx43PhiC2);
  CHECK(reverse_dna(phi(c1)) == phi(c2));
}

TEST_CASE("reversal identity for the printed coefficients and at random") {
  const SigmaSet s43 = build_sigma_set(ex43());
  CHECK(reversibility_identity_check(s43, parse_coeffs(fixtures::kEx43Alpha),
                                     parse_coeffs(fixtures::kEx43Beta)));
  CHECK(reversibility_identity_check(s43, std::vector<RElement>(3),
                                     std::vector<RElement>(3)));
  CHECK_THROWS_AS(reversibility_identity_check(s43, std::vector<RElement>(2),
                                               std::vector<RElement>(3)),
                  std::invalid_argument);

  std::mt19937 rng(7);
  for (const SigmaSetSpec& spec : {ex43(), ex45(), ex57()}) {
    const SigmaSet s = build_sigma_set(spec);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<RElement> alpha(s.m), beta(s.m);
      for (auto& c : alpha) c = RElement(static_cast<uint8_t>(rng() & 15));
      for (auto& c : beta) c = RElement(static_cast<uint8_t>(rng() & 15));
      CHECK(reversibility_identity_check(s, alpha, beta));
    }
  }
}

TEST_CASE("span sizes") {
  const SigmaSet s57 = build_sigma_set(ex57());
  const RSpan span57(8, s57.generators);
  CHECK(span57.cardinality() == 256);  // 16^m with m = 2 (f1 = f2)
  const auto rep57 = span_report(s57, span57);
  CHECK(rep57.cardinality_is_16_pow_m);
  CHECK_FALSE(rep57.generators_independent);  // F_i duplicate E_i here

  const SigmaSet s45 = build_sigma_set(ex45());
  const RSpan span45(7, s45.generators);
  CHECK(span45.cardinality() == 256);  // 16^{2m} with m = 1, independent rows
  CHECK(span_report(s45, span45).generators_independent);

  // with f1 != f2 the 2m rows of the n=9 example are independent: 16^6
  const SigmaSet s43 = build_sigma_set(ex43());
  const RSpan span43(9, s43.generators);
  CHECK(span43.rank() == 24);
  CHECK(span43.cardinality() == uint64_t{1} << 24);
  CHECK(span_report(s43, span43).generators_independent);
  CHECK_FALSE(span_report(s43, span43).cardinality_is_16_pow_m);
}

TEST_CASE("span enumeration agrees with a direct coefficient sweep") {
  const SigmaSet s = build_sigma_set(ex57());
  // all 16^(2m) coefficient tuples, deduplicated
  std::set<RWord> direct;
  const size_t n = s.spec.n;
  for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
    std::vector<RElement> alpha(2), beta(2);
    alpha[0] = RElement(static_cast<uint8_t>(mask & 15));
    alpha[1] = RElement(static_cast<uint8_t>((mask >> 4) & 15));
    beta[0] = RElement(static_cast<uint8_t>((mask >> 8) & 15));
    beta[1] = RElement(static_cast<uint8_t>((mask >> 12) & 15));
    direct.insert(sigma_set_combine(s, alpha, beta));
  }
  const auto words = span_enumerate(s);
  CHECK(words.size() == direct.size());
  CHECK(std::equal(words.begin(), words.end(), direct.begin()));
  (void)n;
}

TEST_CASE("span membership matches enumeration") {
  const SigmaSet s = build_sigma_set(ex45());
  const RSpan span(7, s.generators);
  const auto words = span_enumerate(s);
  const std::set<RWord> set(words.begin(), words.end());
  std::mt19937 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    RWord w(7);
    for (auto& c : w) c = RElement(static_cast<uint8_t>(rng() & 15));
    CHECK(span.contains(w) == (set.count(w) != 0));
  }
  for (const auto& w : words) CHECK(span.contains(w));
}

TEST_CASE("phi image of a self-reciprocal span is reverse closed") {
  for (const SigmaSetSpec& spec : {ex45(), ex57()}) {
    const auto words = span_enumerate(build_sigma_set(spec));
    REQUIRE(words.size() <= 4096);
    CHECK(dna_image_reverse_closed(words).value);
  }
}

TEST_CASE("augmenting with the all-u row gives reverse-complement closure") {
  // n = 6, f1 = f2 = (x+1)^2: self-reciprocal, and the all-u word is not in
  // the base span, so its image is reverse closed but not rc closed
  SigmaSetSpec spec{6, parse_r1_poly("x^2+1"), parse_r1_poly("x^2+1"), false};
  {
    const auto words = span_enumerate(build_sigma_set(spec));
    CHECK(words.size() == 65536);  // 16^m, m = 4
    CHECK(dna_image_reverse_closed(words).value);
    CHECK_FALSE(dna_image_rc_closed(words).value);
  }
  spec.augment_complement = true;
  const SigmaSet s = build_sigma_set(spec);
  REQUIRE(s.generators.size() == 9);
  CHECK(s.generators.back() == RWord(6, RElement::u()));
  const auto words = span_enumerate(s, uint64_t{1} << 20);
  // the new row spans R*(all-u) = {0, all-u, all-uv, all-(u+uv)}
  CHECK(words.size() == 262144);
  CHECK(dna_image_reverse_closed(words).value);
  CHECK(dna_image_rc_closed(words).value);
}

TEST_CASE("augmentation is a no-op when the all-u word is already spanned") {
  // in the n=8 f1=f2 example the all-u word lies in the base span (its
  // image, all T, appears in the reference decimals), so the one-directional
  // x-1 criterion under-reports: the image is in fact rc closed
  SigmaSetSpec spec = ex57();
  const auto base = span_enumerate(build_sigma_set(spec));
  CHECK(std::binary_search(base.begin(), base.end(), RWord(8, RElement::u())));
  CHECK(dna_image_rc_closed(base).value);
  spec.augment_complement = true;
  CHECK(span_enumerate(build_sigma_set(spec)).size() == base.size());
}

TEST_CASE("cyclic code from a binary self-reciprocal polynomial") {
  // n = 7, f1 the all-ones polynomial: x-1 does not divide it
  const auto r1 = cyclic_code_from_binary(
      parse_binary_poly("x^6+x^5+x^4+x^3+x^2+x+1"), 7);
  CHECK(r1.f1_self_reciprocal);
  CHECK_FALSE(r1.x_minus_1_divides_f);
  CHECK(r1.reversible);
  CHECK(r1.reversible_complement_claim);
  CHECK(validate_r_spec(r1.spec).ok());
  // the claim holds: the enumerated code is reverse-complement closed
  const auto words = enumerate_r_code(r1.spec);
  CHECK(is_reverse_complement_bruteforce(words).value);
  CHECK(contains(r1.spec, RWord(7, RElement::u())));

  // n = 8, f1 = (x+1)^6: reversible, and the x-1 criterion withholds the
  // reverse-complement claim (the criterion is one-directional; for this
  // code the all-u word happens to lie inside anyway)
  const auto r2 = cyclic_code_from_binary(parse_binary_poly("x^6+x^4+x^2+1"), 8);
  CHECK(r2.f1_self_reciprocal);
  CHECK(r2.x_minus_1_divides_f);
  CHECK_FALSE(r2.reversible_complement_claim);
  CHECK(contains(r2.spec, RWord(8, RElement::u())));

  // the zero code: f1 = x^n-1
  const auto r3 = cyclic_code_from_binary(parse_binary_poly("x^4+1"), 4);
  CHECK(enumerate_r_code(r3.spec).size() == 1);

  CHECK_THROWS_AS(cyclic_code_from_binary(parse_binary_poly("x^2+x+1"), 4),
                  std::invalid_argument);
}

TEST_CASE("theorem 4.7 reversal identity over the cyclic generator rows") {
  // rows f, xf, ..., x^{k-1} f with f = f1 binary self-reciprocal
  const BinaryPoly f1 = parse_binary_poly("x^6+x^4+x^2+1");
  const size_t n = 8, k = 2;  // rank of (f1) over R
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RElement> alpha(k);
    for (auto& c : alpha) c = RElement(static_cast<uint8_t>(rng() & 15));
    RWord lhs(n), rhs(n);
    for (size_t i = 0; i < k; ++i) {
      const RWord fi = rpoly_to_word(to_rpoly(f1).shifted(i), n);
      const RWord frev = rpoly_to_word(to_rpoly(f1).shifted(k - 1 - i), n);
      for (size_t j = 0; j < n; ++j) {
        lhs[j] += alpha[i] * fi[j];
        rhs[j] += sigma(alpha[i]) * frev[j];
      }
    }
    CHECK(reverse_dna(phi(lhs)) == phi(rhs));
  }
}

TEST_CASE("matrix formatting lines up rows") {
  const SigmaSet s = build_sigma_set(ex57());
  const std::string text = format_matrix(generator_matrix(s));
  CHECK(text.find("[ 1") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
