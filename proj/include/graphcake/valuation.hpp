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

#include <utility>
#include <vector>

#include "graphcake/errors.hpp"
#include "graphcake/piece.hpp"
#include "graphcake/rational.hpp"

namespace graphcake {

/// Normalized piecewise-constant density on [0,1].
///
/// breakpoints: 0 = b_0 < b_1 < ... < b_S = 1
/// densities:   d_0 ... d_{S-1}, all >= 0, with sum d_j (b_{j+1}-b_j) = 1.
///
/// The measure is additive and non-atomic by construction, and every
/// value / inverse computation below is an exact rational.
class Valuation {
public:
    Valuation(std::vector<Rational> breakpoints, std::vector<Rational> densities)
        : bps_(std::move(breakpoints)), dens_(std::move(densities)) {
        if (bps_.size() < 2 || dens_.size() + 1 != bps_.size())
            throw BadValuation("Valuation: need S+1 breakpoints for S densities");
        if (bps_.front() != Rational(0) || bps_.back() != Rational(1))
            throw BadValuation("Valuation: breakpoints must start at 0 and end at 1");
        for (std::size_t i = 0; i + 1 < bps_.size(); ++i)
            if (!(bps_[i] < bps_[i + 1]))
                throw BadValuation("Valuation: breakpoints must be strictly increasing");
        cum_.reserve(bps_.size());
        cum_.push_back(Rational(0));
        for (std::size_t i = 0; i < dens_.size(); ++i) {
            if (dens_[i].is_negative())
                throw BadValuation("Valuation: densities must be non-negative");
            cum_.push_back(cum_.back() + dens_[i] * (bps_[i + 1] - bps_[i]));
        }
        if (cum_.back() != Rational(1))
            throw BadValuation("Valuation: total measure must be exactly 1");
    }

    static Valuation uniform() {
        return Valuation({Rational(0), Rational(1)}, {Rational(1)});
    }

    const std::vector<Rational>& breakpoints() const { return bps_; }
    const std::vector<Rational>& densities() const { return dens_; }

    /// Cumulative measure of [0, x].
    Rational cumulative(const Rational& x) const {
        if (x <= Rational(0)) return Rational(0);
        if (x >= Rational(1)) return Rational(1);
        std::size_t j = segment_of(x);
        return cum_[j] + dens_[j] * (x - bps_[j]);
    }

    Rational value(const Rational& x, const Rational& y) const {
        if (y <= x) return Rational(0);
        return cumulative(y) - cumulative(x);
    }

    Rational value(const Interval& iv) const { return value(iv.lo, iv.hi); }

    Rational value(const Piece& p) const {
        Rational v(0);
        for (const auto& iv : p.intervals()) v += value(iv);
        return v;
    }

    /// Splits p into (prefix, suffix) where prefix is the left-to-right
    /// smallest sub-piece worth exactly tau.  On zero-density plateaus the
    /// cut point is the leftmost point reaching tau, except that tau equal
    /// to the full value returns p itself (so a full-value cut is a no-op).
    std::pair<Piece, Piece> inverse_cut(const Piece& p, const Rational& tau) const {
        Rational total = value(p);
        if (tau.is_negative() || tau > total)
            throw TauOutOfRange("inverse_cut: tau=" + tau.str() + " outside [0, " +
                                total.str() + "]");
        if (tau.is_zero()) return {Piece::empty(), p};
        if (tau == total) return {p, Piece::empty()};

        std::vector<Interval> prefix;
        Rational rem = tau;
        for (std::size_t i = 0; i < p.intervals().size(); ++i) {
            const Interval& iv = p.intervals()[i];
            Rational iv_val = value(iv);
            if (rem > iv_val) {
                prefix.push_back(iv);
                rem -= iv_val;
                continue;
            }
            // the cut point lies inside this interval (or at a point where
            // the cumulative first reaches tau)
            Rational y = point_at(iv, rem);
            if (iv.lo < y) prefix.emplace_back(iv.lo, y);
            std::vector<Interval> suffix;
            if (y < iv.hi) suffix.emplace_back(y, iv.hi);
            suffix.insert(suffix.end(), p.intervals().begin() + i + 1, p.intervals().end());
            return {Piece(std::move(prefix)), Piece(std::move(suffix))};
        }
        // unreachable: tau < total guarantees the loop cuts
        throw Error("inverse_cut: internal accounting error");
    }

    /// Smallest y >= x with value(x, y) == tau; requires tau <= value(x, 1).
    /// Unlike inverse_cut, a full-value tau still lands on the leftmost
    /// point, so a trailing zero-density plateau stays to the right.
    Rational leftmost_reach(const Rational& x, const Rational& tau) const {
        if (tau.is_zero()) return x;
        std::size_t j = segment_of(x);
        Rational pos = x;
        Rational rem = tau;
        while (j < dens_.size()) {
            Rational gain = dens_[j] * (bps_[j + 1] - pos);
            if (rem <= gain && dens_[j].is_positive()) return pos + rem / dens_[j];
            rem -= gain;
            pos = bps_[j + 1];
            ++j;
        }
        throw TauOutOfRange("leftmost_reach: tau exceeds the value right of x");
    }

private:
    // Index j with bps_[j] <= x < bps_[j+1], for x in [0,1).
    std::size_t segment_of(const Rational& x) const {
        std::size_t lo = 0, hi = bps_.size() - 1;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (bps_[mid] <= x) lo = mid; else hi = mid;
        }
        return lo;
    }

    // Leftmost y in (iv.lo, iv.hi] with value(iv.lo, y) == rem, 0 < rem <= value(iv).
    Rational point_at(const Interval& iv, Rational rem) const {
        std::size_t j = segment_of(iv.lo);
        Rational pos = iv.lo;
        while (true) {
            Rational seg_end = min(bps_[j + 1], iv.hi);
            Rational gain = dens_[j] * (seg_end - pos);
            if (rem <= gain && dens_[j].is_positive())
                return pos + rem / dens_[j];
            rem -= gain;
            pos = seg_end;
            if (pos == iv.hi)
                throw Error("inverse_cut: target value not reached inside interval");
            ++j;
        }
    }

    std::vector<Rational> bps_;
    std::vector<Rational> dens_;
    std::vector<Rational> cum_;  // cum_[j] = measure of [0, bps_[j]]
};

}  // namespace graphcake
