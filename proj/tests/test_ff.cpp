//
// Project mtss - Copyright 2026 the mtss authors.
// SPDX-License-Identifier: Apache-2.0
//
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mtss/ff.hpp"

using namespace mtss;

namespace {

// Independent evaluation: plain power sums instead of Horner.
FieldElem naive_eval(const Field& f, const std::vector<FieldElem>& coeffs, FieldElem x) {
  FieldElem acc = f.zero();
  FieldElem xp = f.one();
  for (const FieldElem& c : coeffs) {
    acc = f.add(acc, f.mul(c, xp));
    xp = f.mul(xp, x);
  }
  return acc;
}

}  // namespace

TEST_CASE("field construction picks the expected parameters") {
  const Field f25 = Field::make(5, 2);
  CHECK(f25.q() == 25);
  CHECK(f25.p() == 5);
  CHECK(f25.e() == 2);

  const Field f3 = Field::make(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.reduction() == std::vector<std::uint32_t>{0, 1});  // reduction x for prime fields

  const Field f16 = Field::make(2, 4);
  CHECK(f16.q() == 16);
  CHECK(f16.reduction() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});  // x^4 + x + 1
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(Field::make(1, 1), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(Field::make(0, 2), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(Field::make(2, 17), doctest::Contains("FieldTooLarge"), Error);
  CHECK_THROWS_AS(Field::make(2, 0), Error);
}

TEST_CASE("chosen reduction polynomials are irreducible (trial products)") {
  // any factorization would be a product of monic polys of degree a and e-a
  const Field f16 = Field::make(2, 4);
  const auto& red = f16.reduction();
  const auto mul_gf2 = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
    return out;
  };
  for (std::uint32_t da = 1; da <= 2; ++da) {
    const std::uint32_t db = 4 - da;
    for (std::uint32_t ca = 0; ca < (1u << da); ++ca) {
      for (std::uint32_t cb = 0; cb < (1u << db); ++cb) {
        std::vector<std::uint32_t> a(da + 1), b(db + 1);
        for (std::uint32_t i = 0; i < da; ++i) a[i] = (ca >> i) & 1;
        a[da] = 1;
        for (std::uint32_t i = 0; i < db; ++i) b[i] = (cb >> i) & 1;
        b[db] = 1;
        CHECK(mul_gf2(a, b) != red);
      }
    }
  }
}

TEST_CASE("identities and inverses hold across whole small fields") {
  for (auto [p, e] : {std::pair{5u, 2u}, {2u, 4u}, {3u, 3u}, {7u, 1u}}) {
    const Field f = Field::make(p, e);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      CHECK(f.add(f.elem(a), f.zero()) == f.elem(a));
      CHECK(f.mul(f.elem(a), f.one()) == f.elem(a));
      CHECK(f.add(f.elem(a), f.neg(f.elem(a))) == f.zero());
      if (a != 0) CHECK(f.mul(f.elem(a), f.inv(f.elem(a))) == f.one());
    }
    CHECK_THROWS_WITH_AS(f.inv(f.zero()), doctest::Contains("DivisionByZero"), Error);
  }
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_upto(std::uint32_t limit) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    std::uint32_t rest = q, p = 0, e = 0;
    for (std::uint32_t f = 2; f <= rest; ++f) {
      if (rest % f == 0) {
        p = f;
        while (rest % f == 0) {
          rest /= f;
          ++e;
        }
        break;
      }
    }
    if (rest == 1) out.emplace_back(p, e);
  }
  return out;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for every q <= 2^8") {
  for (auto [p, e] : prime_powers_upto(256)) {
    const Field f = Field::make(p, e);
    const std::uint32_t q = f.q();
    CAPTURE(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const FieldElem ea = f.elem(a);
      ok = ok && f.add(ea, f.zero()) == ea && f.mul(ea, f.one()) == ea;
      ok = ok && f.add(ea, f.neg(ea)) == f.zero();
      if (a != 0) ok = ok && f.mul(ea, f.inv(ea)) == f.one();
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const FieldElem eb = f.elem(b);
        ok = ok && f.add(ea, eb) == f.add(eb, ea) && f.mul(ea, eb) == f.mul(eb, ea);
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          const FieldElem ec = f.elem(c);
          ok = ok && f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec));
          ok = ok && f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec));
          ok = ok && f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("some element generates the whole multiplicative group, every q <= 2^8") {
  for (auto [p, e] : prime_powers_upto(256)) {
    const Field f = Field::make(p, e);
    CAPTURE(f.q());
    bool found = false;
    for (std::uint32_t g = 1; g < f.q() && !found; ++g) {
      std::uint32_t order = 1;
      FieldElem x = f.elem(g);
      while (x != f.one()) {
        x = f.mul(x, f.elem(g));
        ++order;
      }
      found = order == f.q() - 1;
    }
    CHECK(found);
  }
}

TEST_CASE("GF(16) product with reduction x^4+x+1") {
  const Field f = Field::make(2, 4);
  // x * (x^3 + 1) = x^4 + x = (x + 1) + x = 1
  CHECK(f.mul(f.elem(2), f.elem(9)) == f.one());
}

TEST_CASE("coefficient round trip") {
  const Field f = Field::make(5, 2);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    const auto c = f.coeffs(f.elem(a));
    REQUIRE(c.size() == 2);
    CHECK(f.from_coeffs(c) == f.elem(a));
    CHECK(c[0] + 5 * c[1] == a);
  }
}

TEST_CASE("poly_eval basics") {
  const Field f5 = Field::make(5, 1);
  const std::vector<FieldElem> constant{f5.elem(4)};
  CHECK(f5.poly_eval(constant, f5.elem(3)) == f5.elem(4));
  CHECK(f5.poly_eval({}, f5.elem(3)) == f5.zero());
  // 1 + 2x + 3x^2 at x = 2: 1 + 4 + 12 = 17 = 2 (mod 5)
  const std::vector<FieldElem> poly{f5.elem(1), f5.elem(2), f5.elem(3)};
  CHECK(f5.poly_eval(poly, f5.elem(2)) == f5.elem(2));
}

TEST_CASE("poly_eval agrees with the naive power-sum evaluation") {
  for (auto [p, e] : {std::pair{5u, 2u}, {3u, 2u}, {2u, 4u}, {23u, 1u}}) {
    const Field f = Field::make(p, e);
    std::uint64_t state = 42;
    const auto next = [&state] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<std::uint32_t>(state >> 33);
    };
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<FieldElem> coeffs(1 + next() % 6);
      for (auto& c : coeffs) c = f.elem(next() % f.q());
      const FieldElem x = f.elem(next() % f.q());
      CHECK(f.poly_eval(coeffs, x) == naive_eval(f, coeffs, x));
    }
  }
}
