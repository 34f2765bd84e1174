#pragma once

#include "arclimit/dynamics.hpp"
#include "arclimit/plmap.hpp"

#include <optional>
#include <set>
#include <vector>

namespace arclimit::testing {

// True iff a is contained in the fixed structure b (as point sets).
inline bool fixed_subset(const FixedSet& a, const FixedSet& b) {
    for (const auto& p : a.points)
        if (!b.contains(p)) return false;
    for (const auto& s : a.segments) {
        bool covered = false;
        for (const auto& t : b.segments)
            if (t.contains(s)) covered = true;
        if (!covered) return false;
    }
    return true;
}

// Direct periodic-point oracle: a point of exact period m in {3,4,5,6}
// exists iff Fix(f^m) strictly exceeds the union of Fix(f^d) over proper
// divisors d of m. Exact, via symbolic iterates.
inline std::optional<bool> period_3_to_6_oracle(const PLMap& f, std::size_t budget) {
    try {
        FixedSet f1 = fixed_set(f);
        FixedSet f2 = fixed_set(iterate(f, 2, budget));
        FixedSet f3 = fixed_set(iterate(f, 3, budget));
        FixedSet f4 = fixed_set(iterate(f, 4, budget));
        FixedSet f5 = fixed_set(iterate(f, 5, budget));
        FixedSet f6 = fixed_set(iterate(f, 6, budget));
        if (!fixed_subset(f3, f1)) return true; // a period-3 point
        if (!fixed_subset(f4, f2)) return true; // a period-4 point
        if (!fixed_subset(f5, f1)) return true; // a period-5 point
        // period exactly 6: beyond Fix(f^2) u Fix(f^3)
        for (const auto& p : f6.points)
            if (!f2.contains(p) && !f3.contains(p)) return true;
        for (const auto& s : f6.segments) {
            // a segment of Fix(f^6) not covered by the union of the smaller
            // structures contains a point of exact period 6
            std::vector<Rational> cuts{s.lo, s.hi};
            auto add = [&](const FixedSet& fs) {
                for (const auto& p : fs.points)
                    if (s.contains(p)) cuts.push_back(p);
                for (const auto& t : fs.segments) {
                    if (s.contains(t.lo)) cuts.push_back(t.lo);
                    if (s.contains(t.hi)) cuts.push_back(t.hi);
                }
            };
            add(f2);
            add(f3);
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
            auto free = [&](const Rational& x) {
                return s.contains(x) && !f2.contains(x) && !f3.contains(x);
            };
            for (const auto& c : cuts)
                if (free(c)) return true;
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                if (free((cuts[i] + cuts[i + 1]) / Rational(2))) return true;
        }
        return false;
    } catch (const BudgetExceeded&) {
        return std::nullopt; // iterate blew the budget; the map is skipped
    }
}

// Independent exhaustive pair-certificate checker over the same candidate
// class as the search (lap pairs, common image interval, orders up to k_max).
// Returns whether any candidate satisfies the pair conditions directly.
inline bool pair_certificate_oracle(const PLMap& f, unsigned k_max, std::size_t budget) {
    auto L = laps(f);
    std::vector<PLMap> iterates;
    for (unsigned k = 1; k <= k_max; ++k) {
        try {
            iterates.push_back(iterate(f, k, budget));
        } catch (const BudgetExceeded&) {
            break;
        }
    }
    auto has_pullback = [&](const PLMap& fk, const IntervalQ& A) {
        for (const auto& C : preimage_components(fk, A)) {
            auto clipped = intersect(C, A);
            if (!clipped || clipped->is_degenerate()) continue;
            if (image(fk, *clipped) == A) return true;
        }
        return false;
    };
    auto pullback_in_lap = [&](const Lap& lap, const IntervalQ& V) -> std::optional<IntervalQ> {
        std::optional<IntervalQ> best;
        for (const auto& C : preimage_components(f, V)) {
            auto clipped = intersect(C, lap.domain);
            if (!clipped) continue;
            if (image(f, *clipped) == V && !clipped->is_degenerate()) {
                best = *clipped;
                break;
            }
        }
        return best;
    };
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            if (L[i].direction == Direction::constant || L[j].direction == Direction::constant)
                continue;
            auto V0 = intersect(image(f, L[i].domain), image(f, L[j].domain));
            if (!V0 || V0->is_degenerate() || !V0->is_proper()) continue;
            auto A = pullback_in_lap(L[i], *V0);
            auto B = pullback_in_lap(L[j], *V0);
            if (!A || !B || !almost_disjoint(*A, *B)) continue;
            for (const auto& fk : iterates) {
                if (has_pullback(fk, *A) || has_pullback(fk, *B)) return true;
            }
        }
    }
    return false;
}

} // namespace arclimit::testing
