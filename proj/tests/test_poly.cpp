// Copyright 2026 The polymatch developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//      http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymatch/poly.hpp"
#include "polymatch/rng.hpp"
#include "support/oracles.hpp"

using namespace polymatch;
using namespace polymatch::testing;

namespace {

TruncatedPoly poly_of(const std::vector<int>& degrees, std::size_t wth) {
  TruncatedPoly p(wth);
  for (int d : degrees) p.set_bit(static_cast<std::size_t>(d));
  return p;
}

}  // namespace

TEST_CASE("monomial construction and truncation rule") {
  const auto one = TruncatedPoly::monomial(0, 4);
  CHECK(one.to_hex() == "1");
  CHECK(one.bit(0));
  CHECK(one.min_degree() == 0u);

  CHECK(TruncatedPoly::monomial(5, 4).is_zero());  // X^w = 0 for w >= w_th
  const auto x3 = TruncatedPoly::monomial(3, 512);
  CHECK(x3.min_degree() == 3u);
  CHECK(x3.as_monomial() == 3u);
}

TEST_CASE("addition is coefficient-wise XOR") {
  // (X+1) + X = 1
  CHECK(poly_of({0, 1}, 8) + poly_of({1}, 8) == poly_of({0}, 8));
  // a + a = 0
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(96, rng);
    CHECK((a + a).is_zero());
  }
  // (X^2+1) + (X^3+X^2) = X^3+1 at w_th = 8, against the byte oracle
  const auto a = poly_of({0, 2}, 8), b = poly_of({2, 3}, 8);
  CHECK(a + b == from_bits(schoolbook_add(to_bits(a), to_bits(b))));
  CHECK(a + b == poly_of({0, 3}, 8));
}

TEST_CASE("mismatched w_th is rejected") {
  const auto a = poly_of({1}, 8), b = poly_of({1}, 16);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("multiplication examples") {
  // (X+1)^2 = X^2+1 in characteristic 2
  CHECK(poly_of({0, 1}, 8) * poly_of({0, 1}, 8) == poly_of({0, 2}, 8));
  // X^3 * X^2 = 0 at w_th = 4
  CHECK((TruncatedPoly::monomial(3, 4) * TruncatedPoly::monomial(2, 4)).is_zero());
  // (X^2+X+1)(X+1) = X^3+1
  const auto a = poly_of({0, 1, 2}, 8), b = poly_of({0, 1}, 8);
  CHECK(a * b == from_bits(schoolbook_mul(to_bits(a), to_bits(b))));
  CHECK(a * b == poly_of({0, 3}, 8));
}

TEST_CASE("min_degree") {
  CHECK(poly_of({4, 7}, 16).min_degree() == 4u);
  CHECK(!TruncatedPoly(16).min_degree().has_value());
  CHECK(poly_of({0, 2}, 16).min_degree() == 0u);
}

TEST_CASE("randomized multiply matches the schoolbook oracle") {
  for (std::size_t wth : {4u, 64u, 96u, 512u}) {
    Rng rng(1000 + wth);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_poly(wth, rng);
      const auto b = random_poly(wth, rng);
      CHECK(a * b == from_bits(schoolbook_mul(to_bits(a), to_bits(b))));
    }
  }
}

TEST_CASE("kernel fast path agrees with the serial reference") {
  if (!clmul_available()) return;
  Rng rng(77);
  for (std::size_t wth : {64u, 100u, 512u, 2000u}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = random_poly(wth, rng);
      const auto b = random_poly(wth, rng);
      const std::size_t n = a.num_words();
      std::vector<std::uint64_t> ref(n, 0), fast(n, 0);
      detail::mul_words_ref(ref.data(), a.words().data(), b.words().data(), n,
                            wth);
      detail::mul_words_clmul(fast.data(), a.words().data(), b.words().data(),
                              n);
      // reference masks nothing above w_th either way; compare low words and
      // the masked top word
      const std::size_t rem = wth % 64;
      if (rem != 0) {
        const std::uint64_t mask = ~std::uint64_t{0} >> (64 - rem);
        ref[n - 1] &= mask;
        fast[n - 1] &= mask;
      }
      CHECK(ref == fast);
    }
  }
}

TEST_CASE("ring axioms on random samples") {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t wth = 4 + static_cast<std::size_t>(rng.uniform_int(0, 508));
    const auto a = random_poly(wth, rng);
    const auto b = random_poly(wth, rng);
    const auto c = random_poly(wth, rng);
    const auto one = TruncatedPoly::one(wth);
    const auto zero = TruncatedPoly(wth);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one == a);
    CHECK((a * zero).is_zero());
  }
}

TEST_CASE("truncation homomorphism: low bits of a wide product") {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_poly(1024, rng);
    const auto b = random_poly(1024, rng);
    const auto wide = (a * b).truncated(512);
    const auto narrow = a.truncated(512) * b.truncated(512);
    CHECK(wide == narrow);
  }
}

TEST_CASE("monomial degrees add under multiplication") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const std::size_t wth = 8 + static_cast<std::size_t>(rng.uniform_int(0, 504));
    const auto da = static_cast<std::uint64_t>(rng.uniform_int(0, 600));
    const auto db = static_cast<std::uint64_t>(rng.uniform_int(0, 600));
    const auto prod = TruncatedPoly::monomial(da, wth) *
                      TruncatedPoly::monomial(db, wth);
    if (da < wth && db < wth && da + db < wth) {
      CHECK(prod.min_degree() == da + db);
    } else {
      CHECK(prod.is_zero());
    }
  }
}

TEST_CASE("hex serialization round trip and goldens") {
  // lowest coefficient = least significant hex digit
  CHECK(poly_of({0}, 4).to_hex() == "1");
  CHECK(poly_of({0, 1}, 8).to_hex() == "03");
  CHECK(poly_of({3}, 8).to_hex() == "08");
  CHECK(poly_of({8}, 9).to_hex() == "100");
  CHECK(poly_of({0, 4, 7, 8}, 12).to_hex() == "191");

  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t wth = 1 + static_cast<std::size_t>(rng.uniform_int(0, 700));
    const auto a = random_poly(wth, rng);
    CHECK(TruncatedPoly::from_hex(a.to_hex(), wth) == a);
  }
  CHECK_THROWS(TruncatedPoly::from_hex("z", 8));
  CHECK_THROWS(TruncatedPoly::from_hex("ff", 4));  // bit past w_th
}
