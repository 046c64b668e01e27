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

#ifndef WHITNEY_NUMBERS_HPP_
#define WHITNEY_NUMBERS_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace whitney {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonicalized rationals. No floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// C(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

Int factorial(long n);

// Accepts "p", "-p/q", "p / q" (spaces around the slash are tolerated).
// Throws std::invalid_argument on anything else, including q == 0.
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_string(const Rat& value);

// Exact conversion; throws std::invalid_argument if value is not integral.
Int rational_to_int(const Rat& value);

// Deterministic 64-bit generator (splitmix64); advances state per call.
std::uint64_t next_random(std::uint64_t& state);

// Rational with numerator and denominator drawn uniformly from [1, bound].
Rat random_rational(std::uint64_t& state, std::uint64_t bound = 1000000);

}  // namespace whitney

#endif  // WHITNEY_NUMBERS_HPP_
