/*
 * Copyright 2026 The graphcake authors
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

#pragma once

#include <cmath>
#include <cstdint>

namespace graphcake {

// All logarithms in the complexity bounds are natural: the round-bound
// argument rests on (1 - 1/k)^(k ln k) <= 1/k, which holds for ln and
// fails for log2 at small k.

/// Rounds of the domination while-loop at a level with d tracked
/// bundles: ceil(d (1 + ln d)) + 1, the +1 absorbing the final Equal
/// round and boundary ties.
inline std::int64_t level_round_bound(int d) {
    if (d <= 1) return 2;
    long double x = static_cast<long double>(d) * (1.0L + std::log(static_cast<long double>(d)));
    return static_cast<std::int64_t>(std::ceil(x)) + 1;
}

/// Lag after which the residue provably drops below a round's maximum
/// trimmed value: ceil(d ln d).
inline std::int64_t delayed_decay_lag(int d) {
    if (d <= 1) return 0;
    long double x = static_cast<long double>(d) * std::log(static_cast<long double>(d));
    return static_cast<std::int64_t>(std::ceil(x));
}

/// Total charged-query bound for Domination([0,1],1) on n agents:
/// ceil(2n * 3^n * n! * (ln n)^n).  Exact for the small n the harness
/// sweeps; meaningful only as an upper bound beyond that.
inline std::uint64_t query_bound(int n) {
    long double v = 2.0L * n;
    for (int i = 0; i < n; ++i) v *= 3.0L;
    for (int i = 2; i <= n; ++i) v *= static_cast<long double>(i);
    long double ln_n = std::log(static_cast<long double>(n));
    for (int i = 0; i < n; ++i) v *= ln_n;
    return static_cast<std::uint64_t>(std::ceil(v));
}

/// Alg2 round ceiling used by the acceptance checks: 10 n^2 ceil(ln n + 1).
inline std::int64_t alg2_round_bound(int n) {
    long double c = std::ceil(std::log(static_cast<long double>(n)) + 1.0L);
    return static_cast<std::int64_t>(10.0L * n * n * c);
}

}  // namespace graphcake
