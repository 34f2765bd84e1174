#include "arclimit/corpus.hpp"

#include "arclimit/errors.hpp"

namespace arclimit {

PLMap tent_map() {
    return make_plmap({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)},
                       {Rational(1), Rational(0)}});
}

PLMap fig2_map() {
    return make_plmap({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)},
                       {Rational(1), Rational(3, 4)}});
}

PLMap block_schumann_f() {
    return make_plmap({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)},
                       {Rational(1), Rational(1, 2)}});
}

PLMap block_schumann_g() {
    return make_plmap({{Rational(0), Rational(0)}, {Rational(1, 4), Rational(1)},
                       {Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(1)}});
}

PLMap identity_map() {
    return make_plmap({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

PLMap henderson_approximant(unsigned notches) {
    if (notches < 1) throw DomainError("henderson approximant needs at least one notch");
    auto sq = [](const Rational& x) { return x * x; };
    std::vector<std::pair<Rational, Rational>> pts;
    pts.emplace_back(Rational(0), Rational(0));
    // a couple of chord vertices of x^2 before the first notch
    pts.emplace_back(Rational(1, 4), Rational(1, 16));
    pts.emplace_back(Rational(1, 2), Rational(1, 4));
    // notch j sits at q_j = 1 - 2^{-(j+1)} with half-width 2^{-(j+4)};
    // the dip drops to three quarters of the left-edge chord value
    for (unsigned j = 1; j <= notches; ++j) {
        Rational q = Rational(1) - Rational(1, 1L << (j + 1));
        Rational w = Rational(1, 1L << (j + 4));
        Rational left = q - w, right = q + w;
        pts.emplace_back(left, sq(left));
        pts.emplace_back(q, sq(left) * Rational(3, 4));
        pts.emplace_back(right, sq(right));
    }
    pts.emplace_back(Rational(1), Rational(1));
    return make_plmap(std::move(pts));
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"tent", tent_map(), Verdict::NOT_ARC, "full tent map"},
        {"fig2", fig2_map(), Verdict::ARC, "unimodal map with an arc limit"},
        {"bs_f", block_schumann_f(), Verdict::NOT_ARC, "Block-Schumann map f"},
        {"bs_g", block_schumann_g(), Verdict::NOT_ARC, "Block-Schumann map g = f^2"},
        {"identity", identity_map(), Verdict::ARC, "identity map"},
    };
    return entries;
}

PLMap corpus_map(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e.map;
    if (name.rfind("henderson:", 0) == 0) {
        long n = 0;
        try {
            n = std::stol(name.substr(10));
        } catch (...) {
            throw ParseError("bad notch count in: " + name);
        }
        if (n < 1 || n > 16) throw ParseError("notch count out of range: " + name);
        return henderson_approximant(static_cast<unsigned>(n));
    }
    throw ParseError("unknown corpus map: " + name);
}

} // namespace arclimit
