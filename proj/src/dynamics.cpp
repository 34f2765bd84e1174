#include "arclimit/dynamics.hpp"

#include "arclimit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace arclimit {

namespace {

// Absorb points lying on segment boundaries, merge touching segments, sort.
FixedSet normalize(std::vector<Rational> points, std::vector<IntervalQ> segments) {
    std::sort(segments.begin(), segments.end());
    std::vector<IntervalQ> segs;
    for (const auto& s : segments) {
        if (s.is_degenerate()) { points.push_back(s.lo); continue; }
        if (!segs.empty() && s.lo <= segs.back().hi) {
            if (s.hi > segs.back().hi) segs.back() = IntervalQ(segs.back().lo, s.hi);
            continue;
        }
        segs.push_back(s);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Rational> pts;
    for (const auto& p : points) {
        bool inside = false;
        for (const auto& s : segs)
            if (s.contains(p)) { inside = true; break; }
        if (!inside) pts.push_back(p);
    }
    return FixedSet{std::move(pts), std::move(segs)};
}

} // namespace

bool FixedSet::contains(const Rational& x) const {
    for (const auto& p : points)
        if (p == x) return true;
    for (const auto& s : segments)
        if (s.contains(x)) return true;
    return false;
}

std::vector<Rational> FixedSet::skeleton() const {
    std::vector<Rational> out = points;
    for (const auto& s : segments) {
        out.push_back(s.lo);
        out.push_back(s.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Rational> FixedSet::min_point() const {
    auto sk = skeleton();
    if (sk.empty()) return std::nullopt;
    return sk.front();
}

std::optional<Rational> FixedSet::max_point() const {
    auto sk = skeleton();
    if (sk.empty()) return std::nullopt;
    return sk.back();
}

std::string FixedSet::str() const {
    std::ostringstream os;
    os << "points {";
    for (std::size_t i = 0; i < points.size(); ++i) os << (i ? ", " : "") << points[i];
    os << "} segments {";
    for (std::size_t i = 0; i < segments.size(); ++i) os << (i ? ", " : "") << segments[i];
    os << "}";
    return os.str();
}

FixedSet fixed_set(const PLMap& f) {
    const auto& pts = f.breakpoints();
    std::vector<Rational> points;
    std::vector<IntervalQ> segments;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Breakpoint& a = pts[i];
        const Breakpoint& b = pts[i + 1];
        // solve y(x) = x on the segment: (b.y-a.y)(x-a.x)/(b.x-a.x) + a.y = x
        Rational dy = b.y - a.y, dx = b.x - a.x;
        if (dy == dx) {
            if (a.y == a.x) segments.push_back(IntervalQ(a.x, b.x)); // slope 1 on the diagonal
            continue;
        }
        Rational x = (a.y * dx - a.x * dy) / (dx - dy);
        if (a.x <= x && x <= b.x) points.push_back(x);
    }
    return normalize(std::move(points), std::move(segments));
}

std::vector<TwoCycle> CycleSet::representatives(const PLMap& f) const {
    std::vector<TwoCycle> reps = isolated;
    auto add = [&](const Rational& x) {
        Rational y = eval(f, x);
        if (y == x) return;
        Rational s = min(x, y), t = max(x, y);
        for (const auto& c : reps)
            if (c.s == s && c.t == t) return;
        reps.push_back({s, t});
    };
    for (const auto& J : swapped_segments) {
        add(J.lo);
        add(J.hi);
        // interior samples catch within-segment orderings
        Rational q = J.length() / Rational(4);
        add(J.lo + q);
        add(J.lo + q + q);
        add(J.hi - q);
    }
    return reps;
}

CycleSet two_cycles(const PLMap& f, std::size_t budget) {
    FixedSet f1 = fixed_set(f);
    FixedSet f2 = fixed_set(iterate(f, 2, budget));
    CycleSet out;
    // isolated fixed points of f^2 that are not fixed by f, paired by f
    for (const auto& p : f2.points) {
        if (f1.contains(p)) continue;
        Rational q = eval(f, p);
        if (p < q) out.isolated.push_back({p, q});
    }
    // segments of Fix(f^2) on which f is not the identity
    for (const auto& J : f2.segments) {
        bool f_identity = false;
        for (const auto& S : f1.segments)
            if (S.contains(J)) { f_identity = true; break; }
        if (!f_identity) out.swapped_segments.push_back(J);
    }
    return out;
}

bool has_period_gt2(const PLMap& f, std::size_t budget) {
    PLMap f2 = iterate(f, 2, budget);
    PLMap f4 = compose(f2, f2, budget);
    return !(fixed_set(f4) == fixed_set(f2));
}

FixedPointType classify_fixed_point(const PLMap& f, const Rational& d) {
    if (eval(f, d) != d)
        throw NotIsolatedFixedPoint("not a fixed point: " + d.str());
    FixedSet fs = fixed_set(f);
    for (const auto& s : fs.segments)
        if (s.contains(d)) return {d, FixedPointKind::accumulation, IntervalQ(d, d)};

    auto sk = fs.skeleton();
    Rational c(0), e(1);
    for (const auto& p : sk) {
        if (p < d) c = max(c, p);
        if (p > d) e = min(e, p);
    }
    // sign of f - id on each side; constant and nonzero since no fixed point
    // lies strictly between d and the witness ends
    auto side_sign = [&](const Rational& lo, const Rational& hi) -> int {
        if (lo == hi) return 0;
        Rational m = (lo + hi) / Rational(2);
        return (eval(f, m) - m).sign();
    };
    int left = side_sign(c, d);
    int right = side_sign(d, e);
    FixedPointKind kind;
    if (left == 0) kind = right >= 0 ? FixedPointKind::M : FixedPointKind::W;      // d = 0
    else if (right == 0) kind = left >= 0 ? FixedPointKind::M : FixedPointKind::W; // d = 1
    else if (left > 0 && right > 0) kind = FixedPointKind::M;
    else if (left < 0 && right < 0) kind = FixedPointKind::W;
    else if (left > 0 && right < 0) kind = FixedPointKind::N;
    else kind = FixedPointKind::S;
    return {d, kind, IntervalQ(c, e)};
}

BoundaryProfile boundary_profile(const PLMap& f, std::size_t budget) {
    if (!is_surjective(f)) throw NotSurjective("boundary profile needs a surjective map");
    auto zeros = preimage_of_point(f, Rational(0));
    auto ones = preimage_of_point(f, Rational(1));
    BoundaryProfile bp;
    bp.a = zeros.back().hi;
    bp.a_min = zeros.front().lo;
    bp.b = ones.front().lo;
    bp.b_max = ones.back().hi;
    bp.boundary_case = bp.a < bp.b ? BoundaryCase::a_less_b : BoundaryCase::b_less_a;
    if (bp.boundary_case == BoundaryCase::b_less_a) {
        // r = max { x in (a', b') : f(x) in (a', b'), Per(x) <= 2 }, where the
        // window is taken between a' and b' in whichever order they fall.
        // The conditions are strict, so the supremum over a Fix(f^2) segment
        // may fail to be attained; r is reported only when the max exists.
        Rational wlo = min(bp.a_min, bp.b_max), whi = max(bp.a_min, bp.b_max);
        auto qualifies = [&](const Rational& x) {
            return wlo < x && x < whi && wlo < eval(f, x) && eval(f, x) < whi;
        };
        FixedSet per2 = fixed_set(iterate(f, 2, budget));
        std::optional<Rational> sup; // sup of the qualifying set, attained or not
        auto raise = [&](const Rational& x) {
            if (!sup || x > *sup) sup = x;
        };
        for (const auto& p : per2.points)
            if (qualifies(p)) raise(p);
        const auto& bps = f.breakpoints();
        for (const auto& s : per2.segments) {
            // per affine piece of f clipped to s, the qualifying set is an
            // open interval intersected with the closed piece
            for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
                Rational u = max(bps[i].x, s.lo), v = min(bps[i + 1].x, s.hi);
                if (u > v) continue;
                if (u == v) {
                    if (qualifies(u)) raise(u);
                    continue;
                }
                Rational fu = eval(f, u), fv = eval(f, v);
                // open constraints: x in (wlo, whi) and f(x) in (wlo, whi)
                Rational olo = wlo, ohi = whi;
                if (fu != fv) { // invert the affine piece onto the open window
                    Rational p1 = u + (wlo - fu) * (v - u) / (fv - fu);
                    Rational p2 = u + (whi - fu) * (v - u) / (fv - fu);
                    olo = max(olo, min(p1, p2));
                    ohi = min(ohi, max(p1, p2));
                } else if (fu <= wlo || fu >= whi) {
                    continue; // constant piece outside the open window
                }
                Rational lo_cl = max(u, olo), hi_cl = min(v, ohi);
                if (lo_cl >= hi_cl) {
                    continue; // at most a boundary touch, strictness kills it
                }
                raise(hi_cl); // sup over this piece (possibly unattained)
            }
        }
        if (sup && qualifies(*sup)) bp.r = *sup;
        else bp.r_undefined = true;
    }
    return bp;
}

std::optional<NestingViolation> check_2cycle_nesting(const PLMap& f, std::size_t budget) {
    CycleSet cs = two_cycles(f, budget);
    auto reps = cs.representatives(f);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const TwoCycle& A = reps[i];
            const TwoCycle& B = reps[j];
            bool nested = (A.s < B.s && B.t < A.t) || (B.s < A.s && A.t < B.t);
            if (!nested) return NestingViolation{A.s, A.t, B.s, B.t};
        }
    }
    return std::nullopt;
}

std::vector<IntervalQ> onto_components(const PLMap& f, const IntervalQ& J) {
    std::vector<IntervalQ> out;
    for (const auto& C : preimage_components(f, J))
        if (image(f, C).contains(J)) out.push_back(C);
    return out;
}

std::optional<SecondComponent> unique_onto_component(const PLMap& f, const IntervalQ& I) {
    auto onto = onto_components(f, I);
    if (onto.size() <= 1) return std::nullopt;
    return SecondComponent{onto[0], onto[1]};
}

} // namespace arclimit
