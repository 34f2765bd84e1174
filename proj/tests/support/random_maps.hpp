#pragma once

#include "arclimit/plmap.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace arclimit::testing {

// Deterministic generator of random surjective PL maps with small rational
// breakpoints. x-coordinates come from a /16 grid, values from a /8 grid;
// two positions are forced to 0 and 1 so the map is always surjective.
class MapGen {
public:
    explicit MapGen(unsigned seed) : rng_(seed) {}

    PLMap surjective(std::size_t max_breakpoints = 8) {
        while (true) {
            std::size_t n = 3 + rng_() % (max_breakpoints - 2);
            std::vector<int> grid;
            for (int i = 1; i < 16; ++i) grid.push_back(i);
            std::shuffle(grid.begin(), grid.end(), rng_);
            std::vector<Rational> xs{Rational(0)};
            for (std::size_t i = 0; i + 2 < n; ++i) xs.push_back(Rational(grid[i], 16));
            xs.push_back(Rational(1));
            std::sort(xs.begin(), xs.end());

            std::vector<Rational> ys;
            for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(Rational((long)(rng_() % 9), 8));
            std::size_t i0 = rng_() % ys.size();
            std::size_t i1 = rng_() % ys.size();
            while (i1 == i0) i1 = rng_() % ys.size();
            ys[i0] = Rational(0);
            ys[i1] = Rational(1);

            std::vector<std::pair<Rational, Rational>> pts;
            for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
            PLMap f = make_plmap(std::move(pts));
            if (is_surjective(f)) return f;
        }
    }

    PLMap monotone_increasing(std::size_t max_breakpoints = 8) {
        std::size_t n = 2 + rng_() % (max_breakpoints - 1);
        std::vector<int> xg, yg;
        for (int i = 1; i < 16; ++i) { xg.push_back(i); yg.push_back(i); }
        std::shuffle(xg.begin(), xg.end(), rng_);
        std::shuffle(yg.begin(), yg.end(), rng_);
        std::vector<Rational> xs{Rational(0)}, ys{Rational(0)};
        for (std::size_t i = 0; i + 2 < n; ++i) {
            xs.push_back(Rational(xg[i], 16));
            ys.push_back(Rational(yg[i], 16));
        }
        xs.push_back(Rational(1));
        ys.push_back(Rational(1));
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
        return make_plmap(std::move(pts));
    }

    IntervalQ interval() {
        long a = rng_() % 33, b = rng_() % 33;
        if (a > b) std::swap(a, b);
        return IntervalQ(Rational(a, 32), Rational(b, 32));
    }

    Rational rational_in_unit() { return Rational((long)(rng_() % 97), 96); }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

// >= count sample points including every breakpoint of f
inline std::vector<Rational> sample_points(const PLMap& f, std::size_t count) {
    std::vector<Rational> xs;
    for (const auto& bp : f.breakpoints()) xs.push_back(bp.x);
    std::size_t grid = count;
    for (std::size_t i = 0; i <= grid; ++i) xs.push_back(Rational((long)i, (long)grid));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace arclimit::testing
