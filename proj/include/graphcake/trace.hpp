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

#include <cstdint>
#include <vector>

#include "graphcake/piece.hpp"

namespace graphcake {

enum class Phase { Trim, Equal };

/// Telemetry for one round of a Domination while-loop.  The recorded
/// values are computed directly from the instance valuations, outside
/// the query ledger, so tracing never changes the charged counts.
struct DominationRound {
    int level = 0;        // k of Domination(R, k)
    int invocation = 0;   // distinct id per recursive call
    int round = 0;        // t, 1-based within the invocation
    int observer = 0;     // the agent whose domination ends the loop
    Phase phase = Phase::Trim;
    int counter_c = 0;    // cycling counter at round start
    Piece residue_start;  // R^t
    Rational observer_residue_value;       // v_obs(R^t)
    Rational max_trim_value;               // c_t, Trim rounds only
    std::vector<int> tracked;              // bundle indices the level fills (D_k)
    std::vector<Rational> handed_values;   // v_obs of the pieces handed out this round
    Rational observer_own_end;             // v_obs(A_obs) at round end
    std::vector<Rational> gaps_end;        // v_obs(A_obs) - v_obs(A_i), end of round
    std::uint64_t physical_cuts = 0;       // scissor cuts during the round
};

struct DominationTrace {
    std::vector<DominationRound> rounds;
};

/// Telemetry for one round of Alg2.
struct Alg2Round {
    int round = 0;                  // 1-based
    std::vector<int> trimmers;      // Tr at round start
    Rational root_residue_value;    // v_r(R^t) at round start
    std::uint64_t physical_cuts = 0;
};

struct Alg2Trace {
    int root = 0;
    std::vector<int> neighbor_set;  // D, the root's children
    std::vector<Alg2Round> rounds;
};

}  // namespace graphcake
