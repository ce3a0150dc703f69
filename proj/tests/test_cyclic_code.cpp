#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "dnacyclic/cyclic_code.hpp"
#include "dnacyclic/factor.hpp"

using namespace dnacyclic;

namespace {

R1CodeSpec ex39_c1() {
  return {8, parse_binary_poly("x^6+x^4+x^2+1"), parse_binary_poly("x^5+x"),
          parse_binary_poly("x^6+x^4+x^2+1")};
}
R1CodeSpec ex39_c2() {
  return {8, parse_binary_poly("x^4+1"), parse_binary_poly("x^3+x"),
          parse_binary_poly("x^4+1")};
}
RCodeSpec ex39() { return {8, ex39_c1(), ex39_c2()}; }

R1CodeSpec ex56_component() {
  return {3, parse_binary_poly("x^2+x+1"), BinaryPoly::zero(),
          parse_binary_poly("x^2+x+1")};
}
RCodeSpec ex56() { return {3, ex56_component(), ex56_component()}; }

// All valid component specs for a given length, drawn from the divisor
// lattice; for even n every residue p with deg p < deg a and a | p*ghat.
std::vector<R1CodeSpec> all_component_specs(size_t n) {
  std::vector<R1CodeSpec> out;
  const auto divisors = divisors_xn_minus_1(n);
  const BinaryPoly xn1 = BinaryPoly::xn_minus_1(n);
  for (const auto& g : divisors) {
    const BinaryPoly ghat = divmod(xn1, g).first;
    for (const auto& a : divisors) {
      if (!divides(a, g)) continue;
      out.push_back({n, g, BinaryPoly::zero(), a});
      if (n % 2 == 1) continue;
      const int da = a.degree();
      for (uint64_t mask = 1; da > 0 && mask < (uint64_t{1} << da); ++mask) {
        std::vector<F2> c;
        for (uint64_t x = mask; x; x >>= 1) c.push_back(F2{(x & 1) != 0});
        BinaryPoly p(std::move(c));
        if (!divides(a, p * ghat)) continue;
        out.push_back({n, g, p, a});
      }
    }
  }
  return out;
}

std::set<R1Word> span_of_r1(const std::vector<R1Poly>& gens, size_t n) {
  std::set<R1Word> span{R1Word(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<R1Word> next = span;
    for (const auto& gpoly : gens) {
      const R1Word gw = r1poly_to_word(divmod(gpoly, to_r1poly(BinaryPoly::xn_minus_1(n))).second, n);
      for (const auto& w : span) {
        R1Word sum = w;
        for (size_t j = 0; j < n; ++j) sum[j] += gw[j];
        next.insert(sum);
      }
    }
    if (next.size() != span.size()) {
      span = std::move(next);
      grew = true;
    }
  }
  return span;
}

}  // namespace

TEST_CASE("validation of the worked examples") {
  CHECK(validate_r1_spec(ex39_c1()).ok());
  CHECK(validate_r1_spec(ex39_c1()).form == "(g+up)");
  CHECK(validate_r1_spec(ex39_c2()).ok());
  CHECK(validate_r1_spec(ex56_component()).ok());
  CHECK(validate_r1_spec(ex56_component()).form == "(g,ua)");
  CHECK(validate_r_spec(ex39()).ok());
}

TEST_CASE("validation failures") {
  // a does not divide g
  const R1CodeSpec bad{4, parse_binary_poly("x+1"), BinaryPoly::zero(),
                       parse_binary_poly("x^2+1")};
  CHECK_FALSE(validate_r1_spec(bad).ok());

  // odd length with p != 0
  const R1CodeSpec odd_p{3, parse_binary_poly("x+1"), BinaryPoly::one(),
                         parse_binary_poly("x+1")};
  CHECK_FALSE(validate_r1_spec(odd_p).ok());

  // g does not divide x^n-1
  const R1CodeSpec nondiv{4, parse_binary_poly("x^2+x+1"), BinaryPoly::zero(),
                          parse_binary_poly("x^2+x+1")};
  CHECK_FALSE(validate_r1_spec(nondiv).ok());

  // zero generator
  CHECK_FALSE(
      validate_r1_spec({4, BinaryPoly::zero(), BinaryPoly::zero(), BinaryPoly::one()})
          .ok());

  // deg p = deg a passes with a warning, deg p > deg a fails
  const BinaryPoly g4 = parse_binary_poly("x^4+1");
  const auto warn = validate_r1_spec({8, g4, parse_binary_poly("x^4+x"), g4});
  CHECK(warn.ok());
  CHECK(warn.has_warning());
  CHECK_FALSE(validate_r1_spec({8, g4, parse_binary_poly("x^5+x"), g4}).ok());
}

TEST_CASE("basis structure for the odd worked example") {
  const auto basis = r1_basis(ex56_component());
  REQUIRE(basis.elements.size() == 2);  // {g, ug}
  CHECK(basis.elements[0] == to_r1poly(parse_binary_poly("x^2+x+1")));
  CHECK(basis.elements[1] ==
        to_r1poly(parse_binary_poly("x^2+x+1")).scaled(R1Element::u()));
  CHECK(enumerate_r1_code(ex56_component()).size() == 4);
}

TEST_CASE("basis structure for the even worked example") {
  const auto basis = r1_basis(ex39_c1());
  REQUIRE(basis.elements.size() == 4);  // g+up, x(g+up), ug, uxg
  const R1Poly gup = to_r1poly(parse_binary_poly("x^6+x^4+x^2+1")) +
                     to_r1poly(parse_binary_poly("x^5+x")).scaled(R1Element::u());
  CHECK(basis.elements[0] == gup);
  CHECK(basis.elements[1] == gup.shifted(1));
  CHECK(enumerate_r1_code(ex39_c1()).size() == 16);
  CHECK(enumerate_r1_code(ex39_c2()).size() == 256);
  CHECK(r_code_log2_size(ex39()) == 12);  // 4096 codewords
}

TEST_CASE("zero code has an empty basis") {
  const R1CodeSpec zero{4, parse_binary_poly("x^4+1"), BinaryPoly::zero(),
                        parse_binary_poly("x^4+1")};
  CHECK(r1_basis(zero).elements.empty());
  const auto words = enumerate_r1_code(zero);
  REQUIRE(words.size() == 1);
  CHECK(words[0] == R1Word(4));
}

TEST_CASE("two-generator basis includes the ua shifts") {
  // n = 4, g = (x+1)^2, a = x+1
  const R1CodeSpec spec{4, parse_binary_poly("x^2+1"), BinaryPoly::one(),
                        parse_binary_poly("x+1")};
  REQUIRE(validate_r1_spec(spec).ok());
  const auto basis = r1_basis(spec);
  CHECK(basis.elements.size() == 5);  // 2 + 2 + 1
  CHECK(enumerate_r1_code(spec).size() == 32);
  CHECK(r1_code_rank(spec) == 3);  // n - deg a
}

TEST_CASE("enumeration bound is enforced and named") {
  const R1CodeSpec full{8, BinaryPoly::one(), BinaryPoly::zero(), BinaryPoly::one()};
  CHECK_THROWS_WITH(enumerate_r1_code(full, 1024),
                    Catch::Matchers::ContainsSubstring("1024"));
}

TEST_CASE("r enumeration is the crt combination of the components") {
  const auto words = enumerate_r_code(ex56());
  REQUIRE(words.size() == 16);
  // every codeword of this code is a constant word
  for (const auto& w : words) {
    CHECK(w[0] == w[1]);
    CHECK(w[1] == w[2]);
  }
  // deterministic order: sorted lexicographically
  for (size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
}

TEST_CASE("odd-length principal equivalence (g, ua) = (g + ua)") {
  for (size_t n : {size_t{3}, size_t{5}, size_t{7}}) {
    for (const auto& spec : all_component_specs(n)) {
      if (r1_code_log2_size(spec) > 12) continue;
      const R1Poly gen = to_r1poly(spec.g) + to_r1poly(spec.a).scaled(R1Element::u());
      std::vector<R1Poly> gens;
      for (size_t i = 0; i < n; ++i) gens.push_back(gen.shifted(i));
      for (size_t i = 0; i < n; ++i)
        gens.push_back(gen.scaled(R1Element::u()).shifted(i));
      const auto span = span_of_r1(gens, n);
      const auto direct = enumerate_r1_code(spec);
      CHECK(span.size() == direct.size());
      CHECK(std::equal(direct.begin(), direct.end(), span.begin()));
    }
  }
}

TEST_CASE("membership agrees with enumeration exhaustively for n <= 4") {
  for (size_t n : {size_t{2}, size_t{3}, size_t{4}}) {
    for (const auto& c1 : all_component_specs(n)) {
      if (r1_code_log2_size(c1) > 8) continue;
      const auto words = enumerate_r1_code(c1);
      const std::set<R1Word> in_code(words.begin(), words.end());
      R1Word w(n);
      const uint64_t total = uint64_t{1} << (2 * n);
      for (uint64_t mask = 0; mask < total; ++mask) {
        for (size_t j = 0; j < n; ++j)
          w[j] = R1Element(static_cast<uint8_t>((mask >> (2 * j)) & 3));
        CHECK(contains(c1, w) == (in_code.count(w) != 0));
      }
    }
  }
}

TEST_CASE("membership agrees with enumeration on every word of R^n, n <= 4") {
  for (size_t n : {size_t{3}, size_t{4}}) {
    const auto divisors = divisors_xn_minus_1(n);
    const R1CodeSpec c1{n, divisors[1], BinaryPoly::zero(), divisors[1]};
    const R1CodeSpec c2{n, divisors[divisors.size() - 2], BinaryPoly::zero(),
                        divisors[divisors.size() - 2]};
    const RCodeSpec spec{n, c1, c2};
    const auto words = enumerate_r_code(spec);
    const std::set<RWord> in_code(words.begin(), words.end());
    RWord w(n);
    const uint64_t total = uint64_t{1} << (4 * n);
    size_t members = 0;
    for (uint64_t mask = 0; mask < total; ++mask) {
      for (size_t j = 0; j < n; ++j)
        w[j] = RElement(static_cast<uint8_t>((mask >> (4 * j)) & 15));
      const bool got = contains(spec, w);
      REQUIRE(got == (in_code.count(w) != 0));
      members += got;
    }
    CHECK(members == words.size());
  }
}

TEST_CASE("a crt product with a non-cyclic factor fails the closure oracle") {
  // component enumerations are cyclic; breaking one factor must break the
  // product
  const auto c_words = enumerate_r1_code(ex56_component());
  REQUIRE(c_words.size() == 4);
  std::vector<R1Word> broken(c_words.begin(), c_words.end() - 1);  // drop one word
  std::vector<RWord> product;
  for (const auto& w1 : c_words)
    for (const auto& w2 : broken) {
      RWord w(3);
      for (size_t j = 0; j < 3; ++j) w[j] = crt_join(w1[j], w2[j]);
      product.push_back(w);
    }
  CHECK_FALSE(cyclic_closure_check(product));
}

TEST_CASE("membership agrees with enumeration on random words for n = 8") {
  std::mt19937 rng(77);
  const RCodeSpec spec = ex39();
  const auto words = enumerate_r_code(spec);
  const std::set<RWord> in_code(words.begin(), words.end());
  CHECK(contains(spec, parse_rword("1,u,v,u+uv,1,uv,v,0")));  // f itself
  CHECK(contains(spec, parse_rword("0,v,uv,1,u+uv,v,u,1")));  // its reversal
  CHECK(contains(spec, RWord(8)));
  for (int trial = 0; trial < 1000; ++trial) {
    RWord w(8);
    for (auto& c : w) c = RElement(static_cast<uint8_t>(rng() & 15));
    CHECK(contains(spec, w) == (in_code.count(w) != 0));
  }
  for (const auto& w : words) CHECK(contains(spec, w));
  CHECK_THROWS_AS(contains(spec, RWord(7)), std::invalid_argument);
}

TEST_CASE("minimal generating set spans the code") {
  for (const RCodeSpec& spec :
       {ex56(), RCodeSpec{4,
                          {4, parse_binary_poly("x^2+1"), BinaryPoly::one(),
                           parse_binary_poly("x+1")},
                          {4, parse_binary_poly("x+1"), BinaryPoly::zero(),
                           parse_binary_poly("x+1")}}}) {
    const auto gamma = minimal_generating_set_r(spec);
    CHECK(gamma.elements.size() ==
          r1_basis(spec.c1).elements.size() + r1_basis(spec.c2).elements.size());
    std::set<RWord> span{RWord(spec.n)};
    for (const auto& gen : gamma.elements) {
      const RWord gw = rpoly_to_word(gen, spec.n);
      std::set<RWord> next;
      for (const auto& w : span) {
        next.insert(w);
        next.insert(word_add(w, gw));
      }
      span = next;
    }
    const auto words = enumerate_r_code(spec);
    CHECK(span.size() == words.size());
    CHECK(std::equal(words.begin(), words.end(), span.begin()));
  }
}

TEST_CASE("minimal generating set of the length-3 worked example") {
  const auto gamma = minimal_generating_set_r(ex56());
  REQUIRE(gamma.elements.size() == 4);
  const R1Poly g = to_r1poly(parse_binary_poly("x^2+x+1"));
  CHECK(gamma.elements[0] == to_rpoly(g).scaled(RElement::v()));
  CHECK(gamma.elements[1] == to_rpoly(g.scaled(R1Element::u())).scaled(RElement::v()));
  CHECK(gamma.elements[2] == to_rpoly(g).scaled(RElement::one_plus_v()));
  CHECK(gamma.elements[3] ==
        to_rpoly(g.scaled(R1Element::u())).scaled(RElement::one_plus_v()));
}

TEST_CASE("length-8 worked example has 12 generators") {
  CHECK(minimal_generating_set_r(ex39()).elements.size() == 12);
}

TEST_CASE("cyclic closure oracle") {
  CHECK(cyclic_closure_check({RWord(3)}));
  CHECK_FALSE(cyclic_closure_check({RWord(3), parse_rword("1,0,0")}));
  CHECK(cyclic_closure_check(enumerate_r_code(ex56())));
  CHECK(cyclic_closure_check(enumerate_r_code(ex39())));

  std::mt19937 rng(123);
  for (size_t n : {size_t{3}, size_t{4}, size_t{6}}) {
    const auto comps = all_component_specs(n);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& c1 = comps[rng() % comps.size()];
      const auto& c2 = comps[rng() % comps.size()];
      const RCodeSpec spec{n, c1, c2};
      if (r_code_log2_size(spec) > 12) continue;
      CHECK(cyclic_closure_check(enumerate_r_code(spec)));
    }
  }
}

TEST_CASE("code size from the basis equals the enumerated size") {
  for (size_t n : {size_t{3}, size_t{4}, size_t{5}, size_t{6}}) {
    for (const auto& c1 : all_component_specs(n)) {
      const size_t k = r1_code_log2_size(c1);
      if (k > 10) continue;
      CHECK(enumerate_r1_code(c1).size() == (uint64_t{1} << k));
    }
  }
}
