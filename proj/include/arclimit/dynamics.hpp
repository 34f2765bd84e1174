#pragma once

#include "arclimit/plmap.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arclimit {

/// Exact fixed set of a PL map: isolated points plus maximal nondegenerate
/// segments on the diagonal, pairwise disjoint, sorted left to right.
struct FixedSet {
    std::vector<Rational> points;
    std::vector<IntervalQ> segments;

    bool empty() const { return points.empty() && segments.empty(); }
    bool contains(const Rational& x) const;
    /// Isolated points and segment endpoints, sorted. The finite skeleton of
    /// the fixed set; every fixed value of the map lies in [min, max] of it.
    std::vector<Rational> skeleton() const;
    std::optional<Rational> min_point() const;
    std::optional<Rational> max_point() const;

    friend bool operator==(const FixedSet& a, const FixedSet& b) {
        return a.points == b.points && a.segments == b.segments;
    }
    std::string str() const;
};

struct TwoCycle {
    Rational s; // s < t, f(s) = t, f(t) = s
    Rational t;
    friend bool operator==(const TwoCycle& a, const TwoCycle& b) { return a.s == b.s && a.t == b.t; }
};

/// Fix(f^2) minus Fix(f): isolated 2-cycles plus segments on which f^2 is the
/// identity but f is not (each such segment is a continuum of 2-cycles).
struct CycleSet {
    std::vector<TwoCycle> isolated;
    std::vector<IntervalQ> swapped_segments;

    bool empty() const { return isolated.empty() && swapped_segments.empty(); }
    /// Finitely many concrete cycles standing in for the whole set: all
    /// isolated cycles plus endpoint/interior representatives of each swapped
    /// segment. Used by ordering checks; sufficient for PL maps.
    std::vector<TwoCycle> representatives(const PLMap& f) const;
};

enum class FixedPointKind { S, N, M, W, accumulation };

struct FixedPointType {
    Rational point;
    FixedPointKind kind;
    IntervalQ witness; // the (c,e) of the definition; [d,d] for accumulation
};

enum class BoundaryCase { a_less_b, b_less_a };

/// a = max f^{-1}(0), b = min f^{-1}(1), a_min = min f^{-1}(0),
/// b_max = max f^{-1}(1); r defined only in case b < a and only when the
/// maximum exists (reported, never guessed).
struct BoundaryProfile {
    Rational a;
    Rational b;
    Rational a_min;
    Rational b_max;
    BoundaryCase boundary_case;
    std::optional<Rational> r;
    bool r_undefined = false; // case b_less_a with no attained maximum
};

struct NestingViolation {
    Rational s, t, u, v; // {s,t}, {u,v} distinct 2-cycles, not nested
};

struct SecondComponent {
    IntervalQ first;
    IntervalQ second;
};

FixedSet fixed_set(const PLMap& f);

CycleSet two_cycles(const PLMap& f, std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// True iff Fix(f^4) != Fix(f^2) as exact sets. By Sharkovskii forcing this
/// decides existence of any period greater than two.
bool has_period_gt2(const PLMap& f, std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Classifies an isolated fixed point per the S/N/M/W sign patterns; returns
/// kind accumulation when d bounds a fixed segment. Throws
/// NotIsolatedFixedPoint when d is not a fixed point at all.
FixedPointType classify_fixed_point(const PLMap& f, const Rational& d);

/// Requires is_surjective(f); throws NotSurjective otherwise.
BoundaryProfile boundary_profile(const PLMap& f,
                                 std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// ok (nullopt) iff every pair of distinct 2-cycles is nested.
std::optional<NestingViolation> check_2cycle_nesting(
    const PLMap& f, std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// ok (nullopt) iff exactly one component of f^{-1}(I) maps onto I.
/// Otherwise two such components, left to right.
std::optional<SecondComponent> unique_onto_component(const PLMap& f, const IntervalQ& I);

/// Components of f^{-1}(J) whose image under f covers J, sorted.
std::vector<IntervalQ> onto_components(const PLMap& f, const IntervalQ& J);

} // namespace arclimit
