// Copyright 2026 The m3cover Authors.
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

#ifndef M3COVER_RATIONAL_H_
#define M3COVER_RATIONAL_H_

#include <cstdint>
#include <numeric>
#include <string>

#include "fmt/core.h"

namespace m3cover {

// Exact non-negative fraction. Kept unreduced; equality compares values.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational Reduced() const {
    const int64_t g = std::gcd(num, den);
    return g == 0 ? *this : Rational{num / g, den / g};
  }
  std::string ToString() const { return fmt::format("{}/{}", num, den); }
  // "27/30 = 9/10", or just "4/5" when already reduced.
  std::string ToDisplayString() const {
    const Rational r = Reduced();
    if (r.num == num && r.den == den) return ToString();
    return fmt::format("{} = {}", ToString(), r.ToString());
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
};

}  // namespace m3cover

#endif  // M3COVER_RATIONAL_H_
