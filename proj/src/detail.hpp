/**
 * Copyright 2026 The noonsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef NOON_SRC_DETAIL_HPP
#define NOON_SRC_DETAIL_HPP

#include <array>
#include <cmath>

namespace noon::detail {

inline constexpr int kMaxFactorialArg = 170; // largest n with n! finite in double

inline const std::array<double, kMaxFactorialArg + 1>& factorials() {
    static const auto table = [] {
        std::array<double, kMaxFactorialArg + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFactorialArg; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

inline double factorial(int n) { return factorials()[n]; }

inline double sqrt_factorial_ratio(int num, int den) {
    // sqrt(num!/den!) via log-gamma, safe far beyond the table
    return std::exp(0.5 * (std::lgamma(num + 1.0) - std::lgamma(den + 1.0)));
}

} // namespace noon::detail

#endif
