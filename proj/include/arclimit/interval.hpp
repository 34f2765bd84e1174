#pragma once

#include "arclimit/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace arclimit {

/// Closed interval [lo, hi] with exact rational endpoints, contained in [0,1].
/// Degenerate intervals (lo == hi) are first-class values.
struct IntervalQ {
    Rational lo;
    Rational hi;

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(Rational lo_, Rational hi_);

    /// Interval between two points given in either order.
    static IntervalQ hull_of(const Rational& a, const Rational& b);

    bool is_degenerate() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const IntervalQ& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_contains(const Rational& x) const { return lo < x && x < hi; }
    bool is_proper() const { return !(lo == Rational(0) && hi == Rational(1)); }

    friend bool operator==(const IntervalQ& a, const IntervalQ& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(const IntervalQ& a, const IntervalQ& b) { return !(a == b); }
    /// Order by lo, then hi; used for canonical sorting of component lists.
    friend bool operator<(const IntervalQ& a, const IntervalQ& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const IntervalQ& i);
};

bool intervals_intersect(const IntervalQ& a, const IntervalQ& b);
std::optional<IntervalQ> intersect(const IntervalQ& a, const IntervalQ& b);
IntervalQ hull(const IntervalQ& a, const IntervalQ& b);

/// |a ∩ b| <= 1: disjoint or touching in exactly one point.
bool almost_disjoint(const IntervalQ& a, const IntervalQ& b);

inline const IntervalQ& unit_interval() {
    static const IntervalQ u{Rational(0), Rational(1)};
    return u;
}

} // namespace arclimit
