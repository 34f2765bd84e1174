#include "arclimit/pl_function.hpp"

#include <algorithm>

namespace arclimit {

PLFunction PLFunction::affine(const Rational& lo, const Rational& hi, const Rational& c0,
                              const Rational& c1) {
    return PLFunction({AffinePiece{lo, hi, c0, c1}});
}

PLFunction PLFunction::max_of_lines(const Rational& lo, const Rational& hi,
                                    const std::vector<std::pair<Rational, Rational>>& lines) {
    PLFunction acc;
    bool first = true;
    for (const auto& [c0, c1] : lines) {
        PLFunction next = affine(lo, hi, c0, c1);
        if (first) {
            acc = next;
            first = false;
            continue;
        }
        // max(f,g) = -min(-f,-g)
        std::vector<AffinePiece> pa, pb;
        for (auto p : acc.pieces_) { p.c0 = -p.c0; p.c1 = -p.c1; pa.push_back(p); }
        for (auto p : next.pieces_) { p.c0 = -p.c0; p.c1 = -p.c1; pb.push_back(p); }
        PLFunction m = PLFunction(pa).min_with(PLFunction(pb));
        std::vector<AffinePiece> out;
        for (auto p : m.pieces_) { p.c0 = -p.c0; p.c1 = -p.c1; out.push_back(p); }
        acc = PLFunction(out);
    }
    return acc;
}

namespace {

// min of two affine functions on a common cell [lo, hi]
void emit_min_on_cell(const Rational& lo, const Rational& hi, const AffinePiece& a,
                      const AffinePiece& b, std::vector<AffinePiece>& out) {
    Rational alo = a.at(lo), blo = b.at(lo);
    Rational ahi = a.at(hi), bhi = b.at(hi);
    auto push = [&](const Rational& l, const Rational& h, const AffinePiece& src) {
        out.push_back({l, h, src.c0, src.c1});
    };
    bool a_lo = alo <= blo, a_hi = ahi <= bhi;
    if (a_lo && a_hi) { push(lo, hi, a); return; }
    if (!a_lo && !a_hi) { push(lo, hi, b); return; }
    // crossing inside: c0a + c1a t = c0b + c1b t
    Rational t = (b.c0 - a.c0) / (a.c1 - b.c1);
    if (a_lo) { push(lo, t, a); push(t, hi, b); }
    else { push(lo, t, b); push(t, hi, a); }
}

} // namespace

PLFunction PLFunction::min_with(const PLFunction& other) const {
    std::vector<Rational> cuts;
    for (const auto& p : pieces_) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    for (const auto& p : other.pieces_) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto find_piece = [](const std::vector<AffinePiece>& ps, const Rational& lo,
                         const Rational& hi) -> const AffinePiece* {
        for (const auto& p : ps)
            if (p.lo <= lo && hi <= p.hi) return &p;
        return nullptr;
    };

    std::vector<AffinePiece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& lo = cuts[i];
        const Rational& hi = cuts[i + 1];
        const AffinePiece* pa = find_piece(pieces_, lo, hi);
        const AffinePiece* pb = find_piece(other.pieces_, lo, hi);
        if (pa && pb) emit_min_on_cell(lo, hi, *pa, *pb, out);
        else if (pa) out.push_back({lo, hi, pa->c0, pa->c1});
        else if (pb) out.push_back({lo, hi, pb->c0, pb->c1});
    }
    // merge adjacent pieces with identical coefficients
    std::vector<AffinePiece> merged;
    for (const auto& p : out) {
        if (p.lo == p.hi && !merged.empty() && merged.back().hi == p.hi) continue;
        if (!merged.empty() && merged.back().hi == p.lo && merged.back().c0 == p.c0 &&
            merged.back().c1 == p.c1) {
            merged.back().hi = p.hi;
            continue;
        }
        merged.push_back(p);
    }
    return PLFunction(merged);
}

std::optional<Rational> PLFunction::max_value() const {
    std::optional<Rational> best;
    for (const auto& p : pieces_) {
        for (const Rational& v : {p.at(p.lo), p.at(p.hi)}) {
            if (!best || v > *best) best = v;
        }
    }
    return best;
}

} // namespace arclimit
