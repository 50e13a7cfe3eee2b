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
#include <utility>
#include <vector>

#include "graphcake/errors.hpp"
#include "graphcake/instance.hpp"
#include "graphcake/piece.hpp"

namespace graphcake {

/// Robertson-Webb query accounting.  `cut` and `eval` are the charged
/// counters the complexity theorems speak about; `raw_eval` separately
/// tracks uncharged lookups of values an agent already learned (e.g.
/// domination-condition comparisons on her accumulated bundles), so a
/// trace audit can see every value the engine consulted.
struct QueryLedger {
    std::vector<std::uint64_t> cut_per_agent;
    std::vector<std::uint64_t> eval_per_agent;
    std::uint64_t cut_total = 0;
    std::uint64_t eval_total = 0;
    std::uint64_t raw_eval_total = 0;

    explicit QueryLedger(int n = 0) : cut_per_agent(n, 0), eval_per_agent(n, 0) {}

    void charge_cut(int agent) {
        cut_per_agent.at(agent - 1) += 1;
        cut_total += 1;
    }
    void charge_eval(int agent) {
        eval_per_agent.at(agent - 1) += 1;
        eval_total += 1;
    }

    std::uint64_t total_queries() const { return cut_total + eval_total; }

    friend bool operator==(const QueryLedger& a, const QueryLedger& b) {
        return a.cut_per_agent == b.cut_per_agent && a.eval_per_agent == b.eval_per_agent &&
               a.cut_total == b.cut_total && a.eval_total == b.eval_total &&
               a.raw_eval_total == b.raw_eval_total;
    }
};

/// The query interface protocols use to access agent valuations.  Every
/// charged query goes through here; physical scissor cuts are counted
/// separately so per-round cut audits do not depend on the charging
/// conventions.
class RwOracle {
public:
    explicit RwOracle(const Instance& inst)
        : inst_(&inst), ledger_(inst.n()) {}

    const Instance& instance() const { return *inst_; }
    const QueryLedger& ledger() const { return ledger_; }
    std::uint64_t physical_cuts() const { return physical_cuts_; }

    /// eval_i(x, y): agent reports v_i([x,y]).  Charges one eval.
    Rational eval_query(int agent, const Rational& x, const Rational& y) {
        if (!(Rational(0) <= x && x < y && y <= Rational(1)))
            throw BadRange("eval: need 0 <= x < y <= 1, got x=" + x.str() + " y=" + y.str());
        ledger_.charge_eval(agent);
        return inst_->valuation(agent).value(x, y);
    }

    /// Value of a whole piece reported by the agent, charged as one eval.
    /// This is the unit the Select/Trim/Equal accounting is stated in.
    Rational eval_piece_query(int agent, const Piece& p) {
        ledger_.charge_eval(agent);
        return inst_->valuation(agent).value(p);
    }

    /// cut_i(x, tau): smallest y with v_i(x, y) = tau.  Charges one cut.
    /// Raises Unsatisfiable when not enough value remains to the right;
    /// the protocols here never issue such a cut, so it flags a bug.
    Rational cut_query(int agent, const Rational& x, const Rational& tau) {
        if (x.is_negative() || x > Rational(1) || tau.is_negative())
            throw BadRange("cut: need x in [0,1], tau >= 0");
        ledger_.charge_cut(agent);
        const Valuation& v = inst_->valuation(agent);
        Rational available = v.value(x, Rational(1));
        if (tau > available)
            throw Unsatisfiable("cut: v(x,1)=" + available.str() + " < tau=" + tau.str());
        Rational y = tau.is_zero() ? x : v.leftmost_reach(x, tau);
        if (x < y && y < Rational(1)) physical_cuts_ += 1;
        return y;
    }

    /// cut over a collection: splits p into (prefix, suffix) with
    /// v_i(prefix) = tau, left prefix kept.  One charged cut; the scan
    /// over sub-piece values uses knowledge the agent already has.
    std::pair<Piece, Piece> cut_piece_query(int agent, const Piece& p, const Rational& tau) {
        ledger_.charge_cut(agent);
        auto out = inst_->valuation(agent).inverse_cut(p, tau);
        record_physical_cut(out.first, p);
        return out;
    }

    /// Uncharged lookup of a value the agent already learned.  Tracked in
    /// raw_eval so runs remain auditable.
    Rational cached_value(int agent, const Piece& p) {
        ledger_.raw_eval_total += 1;
        return inst_->valuation(agent).value(p);
    }

private:
    // A physical cut happened iff the split point is interior.
    void record_physical_cut(const Piece& prefix, const Piece& whole) {
        if (!prefix.is_empty() && prefix != whole) physical_cuts_ += 1;
    }

    const Instance* inst_;
    QueryLedger ledger_;
    std::uint64_t physical_cuts_ = 0;
};

}  // namespace graphcake
