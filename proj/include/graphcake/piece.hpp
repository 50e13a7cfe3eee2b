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

#include <algorithm>
#include <string>
#include <vector>

#include "graphcake/errors.hpp"
#include "graphcake/rational.hpp"

namespace graphcake {

/// Closed interval [lo, hi] of the cake with lo < hi.  Zero-width
/// intervals are never stored; the empty set is the empty Piece.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi)) throw Error("Interval: requires lo < hi");
    }

    Rational width() const { return hi - lo; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// A finite union of disjoint, non-adjacent intervals, kept sorted by lo.
/// All set algebra returns canonical pieces, so equality is structural.
class Piece {
public:
    Piece() = default;

    explicit Piece(std::vector<Interval> ivs) : ivs_(canonicalize(std::move(ivs))) {}

    Piece(const Rational& lo, const Rational& hi) {
        if (lo < hi) ivs_.emplace_back(lo, hi);
    }

    static Piece empty() { return Piece(); }
    static Piece whole_cake() { return Piece(Rational(0), Rational(1)); }

    bool is_empty() const { return ivs_.empty(); }
    const std::vector<Interval>& intervals() const { return ivs_; }
    std::size_t interval_count() const { return ivs_.size(); }

    Rational width() const {
        Rational w(0);
        for (const auto& iv : ivs_) w += iv.width();
        return w;
    }

    bool contains_point(const Rational& x) const {
        for (const auto& iv : ivs_) {
            if (iv.lo <= x && x <= iv.hi) return true;
            if (iv.lo > x) break;
        }
        return false;
    }

    friend bool operator==(const Piece& a, const Piece& b) { return a.ivs_ == b.ivs_; }
    friend bool operator!=(const Piece& a, const Piece& b) { return !(a.ivs_ == b.ivs_); }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < ivs_.size(); ++i) {
            if (i) s += ", ";
            s += "[" + ivs_[i].lo.str() + ", " + ivs_[i].hi.str() + "]";
        }
        return s + "}";
    }

    /// Merges overlapping or touching intervals; drops nothing else.
    static std::vector<Interval> canonicalize(std::vector<Interval> ivs) {
        if (ivs.empty()) return ivs;
        std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        std::vector<Interval> out;
        out.reserve(ivs.size());
        out.push_back(ivs[0]);
        for (std::size_t i = 1; i < ivs.size(); ++i) {
            if (ivs[i].lo <= out.back().hi) {
                if (out.back().hi < ivs[i].hi) out.back().hi = ivs[i].hi;
            } else {
                out.push_back(ivs[i]);
            }
        }
        return out;
    }

private:
    std::vector<Interval> ivs_;
};

/// Set union of two pieces.
inline Piece unite(const Piece& a, const Piece& b) {
    std::vector<Interval> ivs;
    ivs.reserve(a.intervals().size() + b.intervals().size());
    ivs.insert(ivs.end(), a.intervals().begin(), a.intervals().end());
    ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
    return Piece(std::move(ivs));
}

/// Set difference a \ b.
inline Piece subtract(const Piece& a, const Piece& b) {
    if (a.is_empty() || b.is_empty()) return a;
    std::vector<Interval> out;
    auto bit = b.intervals().begin();
    const auto bend = b.intervals().end();
    for (const auto& iv : a.intervals()) {
        Rational lo = iv.lo;
        const Rational& hi = iv.hi;
        while (bit != bend && bit->hi <= lo) ++bit;
        auto cut = bit;  // b intervals that may overlap [lo, hi]
        while (cut != bend && cut->lo < hi) {
            if (lo < cut->lo) out.emplace_back(lo, cut->lo);
            if (lo < cut->hi) lo = cut->hi;
            ++cut;
        }
        if (lo < hi) out.emplace_back(lo, hi);
    }
    return Piece(std::move(out));
}

/// Set intersection.
inline Piece intersect(const Piece& a, const Piece& b) {
    std::vector<Interval> out;
    auto ai = a.intervals().begin();
    auto bi = b.intervals().begin();
    while (ai != a.intervals().end() && bi != b.intervals().end()) {
        Rational lo = max(ai->lo, bi->lo);
        Rational hi = min(ai->hi, bi->hi);
        if (lo < hi) out.emplace_back(lo, hi);
        if (ai->hi < bi->hi) ++ai; else ++bi;
    }
    return Piece(std::move(out));
}

inline bool disjoint(const Piece& a, const Piece& b) {
    return intersect(a, b).is_empty();
}

/// a subset-of b, as sets of points up to measure-irrelevant boundaries
/// (intervals are closed, but adjacency is merged, so structural subset
/// on canonical pieces is exactly set containment of the open interiors).
inline bool is_subset(const Piece& a, const Piece& b) {
    return subtract(a, b).is_empty();
}

}  // namespace graphcake
