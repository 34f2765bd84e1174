#include "arclimit/interval.hpp"

#include "arclimit/errors.hpp"

#include <ostream>

namespace arclimit {

IntervalQ::IntervalQ(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw DomainError("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
    if (lo < Rational(0) || hi > Rational(1))
        throw DomainError("interval outside [0,1]: [" + lo.str() + ", " + hi.str() + "]");
}

IntervalQ IntervalQ::hull_of(const Rational& a, const Rational& b) {
    return a <= b ? IntervalQ(a, b) : IntervalQ(b, a);
}

bool intervals_intersect(const IntervalQ& a, const IntervalQ& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

std::optional<IntervalQ> intersect(const IntervalQ& a, const IntervalQ& b) {
    if (!intervals_intersect(a, b)) return std::nullopt;
    return IntervalQ(max(a.lo, b.lo), min(a.hi, b.hi));
}

IntervalQ hull(const IntervalQ& a, const IntervalQ& b) {
    return IntervalQ(min(a.lo, b.lo), max(a.hi, b.hi));
}

bool almost_disjoint(const IntervalQ& a, const IntervalQ& b) {
    auto m = intersect(a, b);
    return !m || m->is_degenerate();
}

std::string IntervalQ::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

std::ostream& operator<<(std::ostream& os, const IntervalQ& i) { return os << i.str(); }

} // namespace arclimit
