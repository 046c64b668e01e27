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

#include "whitney/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace whitney {

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step: result is C(n-k+i, i)
  }
  return result;
}

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Rat parse_rational(const std::string& text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw std::invalid_argument("empty rational literal");

  auto is_integer_literal = [](const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };

  const auto slash = compact.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_integer_literal(compact)) {
        throw std::invalid_argument("bad rational literal: " + text);
      }
      return Rat(Int(compact));
    }
    const std::string num = compact.substr(0, slash);
    const std::string den = compact.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(Int(num), d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rational_string(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Int rational_to_int(const Rat& value) {
  if (denominator(value) != 1) {
    throw std::invalid_argument("rational " + rational_string(value) +
                                " is not an integer");
  }
  return numerator(value);
}

std::uint64_t next_random(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t x = state;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rat random_rational(std::uint64_t& state, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty random range");
  const Int num(static_cast<unsigned long>(next_random(state) % bound + 1));
  const Int den(static_cast<unsigned long>(next_random(state) % bound + 1));
  return Rat(num, den);
}

}  // namespace whitney
