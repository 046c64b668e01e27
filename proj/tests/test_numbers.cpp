// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>

#include "doctest.h"
#include "whitney/numbers.hpp"

using whitney::Int;
using whitney::Rat;

TEST_CASE("binomial values and edge cases") {
  CHECK(whitney::binomial(0, 0) == 1);
  CHECK(whitney::binomial(5, 2) == 10);
  CHECK(whitney::binomial(6, 3) == 20);
  CHECK(whitney::binomial(5, -1) == 0);
  CHECK(whitney::binomial(5, 6) == 0);
  // Pascal identity on a block.
  for (long n = 1; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(whitney::binomial(n, k) ==
            whitney::binomial(n - 1, k - 1) + whitney::binomial(n - 1, k));
    }
  }
}

TEST_CASE("factorial") {
  CHECK(whitney::factorial(0) == 1);
  CHECK(whitney::factorial(1) == 1);
  CHECK(whitney::factorial(6) == 720);
  CHECK(whitney::factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("rational parsing and printing") {
  CHECK(whitney::parse_rational("3") == Rat(3));
  CHECK(whitney::parse_rational("-3") == Rat(-3));
  CHECK(whitney::parse_rational("6/4") == Rat(3, 2));
  CHECK(whitney::parse_rational("-6 / 4") == Rat(-3, 2));
  CHECK(whitney::rational_string(Rat(3, 2)) == "3/2");
  CHECK(whitney::rational_string(Rat(-4, 2)) == "-2");
  CHECK(whitney::rational_string(Rat(0)) == "0");
  CHECK_THROWS_AS(whitney::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(whitney::parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(whitney::parse_rational(""), std::invalid_argument);
  // Round trip on a sweep.
  for (int p = -9; p <= 9; ++p) {
    for (int q = 1; q <= 9; ++q) {
      const Rat value(p, q);
      CHECK(whitney::parse_rational(whitney::rational_string(value)) == value);
    }
  }
}

TEST_CASE("rational_to_int accepts integers only") {
  CHECK(whitney::rational_to_int(Rat(8, 2)) == 4);
  CHECK_THROWS_AS(whitney::rational_to_int(Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("seeded generator is deterministic and well spread") {
  std::uint64_t a = 42, b = 42;
  for (int i = 0; i < 100; ++i) {
    CHECK(whitney::next_random(a) == whitney::next_random(b));
  }
  std::uint64_t c = 43;
  CHECK(whitney::next_random(a) != whitney::next_random(c));

  std::uint64_t state = 7;
  for (int i = 0; i < 50; ++i) {
    const Rat r = whitney::random_rational(state, 1000);
    CHECK(r > 0);
    CHECK(boost::multiprecision::numerator(r) <= 1000);
    CHECK(boost::multiprecision::denominator(r) <= 1000);
  }
}
