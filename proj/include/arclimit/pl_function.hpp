#pragma once

#include "arclimit/rational.hpp"

#include <optional>
#include <vector>

namespace arclimit {

/// One affine piece value(t) = c0 + c1*t on [lo, hi] (endpoints inclusive).
struct AffinePiece {
    Rational lo, hi;
    Rational c0, c1;
    Rational at(const Rational& t) const { return c0 + c1 * t; }
};

/// Piecewise-affine partial function of one rational variable: disjoint,
/// sorted pieces; undefined gaps count as +infinity for min-envelopes.
/// Workhorse for exact lower/upper envelopes of line families.
class PLFunction {
public:
    PLFunction() = default;
    explicit PLFunction(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {}

    static PLFunction affine(const Rational& lo, const Rational& hi, const Rational& c0,
                             const Rational& c1);
    /// Upper envelope max_j (c0_j + c1_j t) over [lo, hi].
    static PLFunction max_of_lines(const Rational& lo, const Rational& hi,
                                   const std::vector<std::pair<Rational, Rational>>& lines);

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    /// Pointwise minimum, treating undefined regions as +infinity.
    PLFunction min_with(const PLFunction& other) const;

    /// Maximum value over the whole (partial) domain; nullopt when empty.
    std::optional<Rational> max_value() const;

private:
    std::vector<AffinePiece> pieces_;
};

} // namespace arclimit
