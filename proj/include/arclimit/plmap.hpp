#pragma once

#include "arclimit/interval.hpp"
#include "arclimit/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace arclimit {

struct Breakpoint {
    Rational x;
    Rational y;
    friend bool operator==(const Breakpoint& a, const Breakpoint& b) { return a.x == b.x && a.y == b.y; }
};

enum class Direction { increasing, decreasing, constant };

/// Maximal monotone piece of a map.
struct Lap {
    IntervalQ domain;
    Direction direction;
};

/// Continuous piecewise-linear map [0,1] -> [0,1], held as its breakpoint
/// list. Canonical form: x strictly increasing, first x = 0, last x = 1,
/// collinear consecutive segments merged. Immutable after construction.
class PLMap {
public:
    static constexpr std::size_t kDefaultBreakpointBudget = 1'000'000;

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    std::size_t size() const { return pts_.size(); }

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }
    friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

    std::string str() const;

private:
    friend PLMap make_plmap(std::vector<std::pair<Rational, Rational>> points);
    explicit PLMap(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {}
    std::vector<Breakpoint> pts_;
};

/// Validates and canonicalizes a breakpoint list.
/// Throws NotAnchored, NotSorted, OutOfRange.
PLMap make_plmap(std::vector<std::pair<Rational, Rational>> points);

/// Exact value of the interpolant at x. Throws DomainError if x outside [0,1].
Rational eval(const PLMap& f, const Rational& x);

/// Symbolic composition outer(inner(x)), subdividing at preimages of the
/// outer map's breakpoints. Throws BudgetExceeded past the breakpoint cap.
PLMap compose(const PLMap& outer, const PLMap& inner,
              std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// k-fold composition f^k, k >= 1.
PLMap iterate(const PLMap& f, unsigned k,
              std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Exact image f(I), a closed interval.
IntervalQ image(const PLMap& f, const IntervalQ& I);

/// Connected components of f^{-1}(I), sorted left to right; components may be
/// degenerate. Empty iff I misses the image of f.
std::vector<IntervalQ> preimage_components(const PLMap& f, const IntervalQ& I);

/// Maximal monotone pieces, left to right.
std::vector<Lap> laps(const PLMap& f);

bool is_surjective(const PLMap& f);

/// All solutions of f(x) = y, as maximal points/segments sorted left to right.
/// (Convenience wrapper over preimage_components of a degenerate interval.)
std::vector<IntervalQ> preimage_of_point(const PLMap& f, const Rational& y);

// --- "plmap v1" text format ------------------------------------------------
// First non-comment line: `plmap v1`. Each following non-comment line:
// `<num>/<den> <num>/<den>` (x then y), lowest terms, canonical breakpoints.
// '#' starts a comment. Round-trips bit-exactly modulo comments/whitespace.

PLMap read_plmap(std::istream& in);
PLMap read_plmap_file(const std::string& path);
void write_plmap(std::ostream& out, const PLMap& f);
std::string plmap_to_string(const PLMap& f);

} // namespace arclimit
