#include "arclimit/splitting.hpp"

#include "arclimit/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace arclimit {

namespace {

// Components of f^{-1}(J) clipped to `within`, preserving order.
std::vector<IntervalQ> restricted_components(const PLMap& f, const IntervalQ& J,
                                             const IntervalQ& within) {
    std::vector<IntervalQ> out;
    for (const auto& C : preimage_components(f, J)) {
        auto clipped = intersect(C, within);
        if (clipped) out.push_back(*clipped);
    }
    return out;
}

} // namespace

void TightPrefix::check(const PLMap& f) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].is_proper())
            throw ReplayFailure(i, "T_" + std::to_string(i) + " is not a proper subinterval");
        if (i > degenerate_cutoff && terms[i].is_degenerate())
            throw ReplayFailure(i, "T_" + std::to_string(i) + " degenerate beyond cutoff");
        if (i + 1 < terms.size() && image(f, terms[i + 1]) != terms[i])
            throw ReplayFailure(i + 1, "f(T_" + std::to_string(i + 1) + ") != T_" + std::to_string(i));
    }
}

std::string to_string(CertKind k) {
    switch (k) {
    case CertKind::pair_order_k: return "pair_order_k";
    case CertKind::period_gt2: return "period_gt2";
    case CertKind::nesting_violation: return "nesting_violation";
    }
    return "?";
}

CertKind cert_kind_from_string(const std::string& s) {
    if (s == "pair_order_k") return CertKind::pair_order_k;
    if (s == "period_gt2") return CertKind::period_gt2;
    if (s == "nesting_violation") return CertKind::nesting_violation;
    throw ParseError("unknown certificate kind: " + s);
}

void check_certificate_invariants(const PLMap& f, const SplitCertificate& cert,
                                  std::size_t budget) {
    if (cert.k < 1) throw ReplayFailure(0, "k must be positive");
    if (cert.A.is_degenerate()) throw ReplayFailure(0, "A degenerate");
    if (cert.B.is_degenerate()) throw ReplayFailure(0, "B degenerate");
    if (cert.D.is_degenerate()) throw ReplayFailure(0, "D degenerate");
    if (image(f, cert.A) != image(f, cert.B)) throw ReplayFailure(0, "f(A) != f(B)");
    if (!almost_disjoint(cert.A, cert.B)) throw ReplayFailure(0, "|A intersect B| > 1");
    if (!cert.A.contains(cert.D)) throw ReplayFailure(0, "D not contained in A");
    if (image(iterate(f, cert.k, budget), cert.D) != cert.A)
        throw ReplayFailure(0, "f^k(D) != A");
}

ReplayTrace verify_certificate(const PLMap& f, const SplitCertificate& cert,
                               std::size_t n_terms, std::size_t budget) {
    if (n_terms < 2 * static_cast<std::size_t>(cert.k) + 1)
        throw DomainError("verify_certificate needs n_terms >= 2k + 1");
    check_certificate_invariants(f, cert, budget);

    PLMap fk = iterate(f, cert.k, budget);
    const std::size_t k = cert.k;

    // T_1 = A; each T_{jk+1} is the leftmost nondegenerate component of the
    // f^k-preimage of T_{(j-1)k+1} inside the carrier A mapping exactly onto
    // it; intermediate terms are forward images.
    std::vector<IntervalQ> terms(n_terms + 1, unit_interval());
    terms[0] = image(f, cert.A);
    terms[1] = cert.A;
    std::size_t top = 1;
    while (top + k <= n_terms) {
        const IntervalQ& target = terms[top];
        std::optional<IntervalQ> next;
        for (const auto& C : restricted_components(fk, target, cert.A)) {
            if (C.is_degenerate()) continue;
            if (image(fk, C) == target) { next = C; break; }
        }
        if (!next)
            throw ReplayFailure(top + k, "no component of f^-k(T_" + std::to_string(top) +
                                             ") in A maps onto it");
        terms[top + k] = *next;
        for (std::size_t i = k; i-- > 1;)
            terms[top + i] = image(f, terms[top + i + 1]);
        top += k;
    }

    TightPrefix prefix;
    prefix.terms.assign(terms.begin(), terms.begin() + top + 1);
    prefix.degenerate_cutoff = 0;
    prefix.check(f);

    // witnesses S_n at every index n = jk + 1: leftmost nondegenerate
    // component of the f-preimage of f(T_n) inside B mapping exactly onto it,
    // meeting T_n in at most an endpoint of T_n
    ReplayTrace trace;
    trace.tight = prefix;
    for (std::size_t n = 1; n <= top; n += k) {
        const IntervalQ target = image(f, prefix.terms[n]); // == terms[n-1]
        std::optional<IntervalQ> S;
        for (const auto& C : restricted_components(f, target, cert.B)) {
            if (C.is_degenerate()) continue;
            if (image(f, C) == target) { S = C; break; }
        }
        if (!S)
            throw ReplayFailure(n, "no witness S_" + std::to_string(n) + " in B");
        auto overlap = intersect(*S, prefix.terms[n]);
        if (overlap) {
            if (!overlap->is_degenerate())
                throw ReplayFailure(n, "S_n and T_n share more than a point");
            const Rational& p = overlap->lo;
            if (p != prefix.terms[n].lo && p != prefix.terms[n].hi)
                throw ReplayFailure(n, "S_n meets T_n away from its endpoints");
        }
        trace.witnesses.push_back({n, *S});
    }
    return trace;
}

bool certificate_valid(const PLMap& f, const SplitCertificate& cert, std::size_t n_terms,
                       std::size_t budget) {
    try {
        verify_certificate(f, cert, n_terms, budget);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// --- construction helpers -----------------------------------------------------

IntervalQ onto_subinterval(const PLMap& f, const IntervalQ& C, const IntervalQ& J) {
    if (!image(f, C).contains(J))
        throw DomainError("onto_subinterval: image does not cover target");
    if (J.is_degenerate()) {
        auto comps = restricted_components(f, J, C);
        if (comps.empty()) throw DomainError("onto_subinterval: no hit");
        return IntervalQ(comps.front().lo, comps.front().lo);
    }
    // hit positions of the two endpoint values of J inside C
    struct Hit { Rational x; bool high; };
    std::vector<Hit> hits;
    auto add_hits = [&](const Rational& value, bool high) {
        for (const auto& P : restricted_components(f, IntervalQ(value, value), C)) {
            hits.push_back({P.lo, high});
            if (!P.is_degenerate()) hits.push_back({P.hi, high});
        }
    };
    add_hits(J.lo, false);
    add_hits(J.hi, true);
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.x < b.x; });

    // leftmost [a, b] where a is the last hit of one value before b, the first
    // hit of the other; between them f touches neither endpoint value, so
    // f([a,b]) = J exactly
    std::optional<IntervalQ> best;
    std::optional<Rational> last_lo, last_hi;
    for (const auto& h : hits) {
        if (h.high) {
            if (last_lo) {
                IntervalQ cand(*last_lo, h.x);
                if (!best || cand.lo < best->lo || (cand.lo == best->lo && cand.hi < best->hi))
                    best = cand;
            }
            last_hi = h.x;
        } else {
            if (last_hi) {
                IntervalQ cand(*last_hi, h.x);
                if (!best || cand.lo < best->lo || (cand.lo == best->lo && cand.hi < best->hi))
                    best = cand;
            }
            last_lo = h.x;
        }
    }
    if (!best) throw DomainError("onto_subinterval: endpoints never bracketed");
    return *best;
}

std::optional<IntervalQ> find_pullback_in(const PLMap& f, unsigned k, const IntervalQ& A,
                                          const IntervalQ& carrier, std::size_t budget) {
    PLMap fk = iterate(f, k, budget);
    for (const auto& C : restricted_components(fk, A, carrier)) {
        if (C.is_degenerate()) continue;
        if (image(fk, C) == A) return C;
    }
    return std::nullopt;
}

// --- pair certificate search ---------------------------------------------------

namespace {

struct RoleCandidate {
    IntervalQ V; // common image; T_0 of the replayed sequence
};

// Monotone pullback of V inside a (non-constant) lap.
IntervalQ lap_pullback(const PLMap& f, const Lap& lap, const IntervalQ& V) {
    return onto_subinterval(f, lap.domain, V);
}

// Shrink candidates for the lap hosting A: proper intervals V with
// f|lap^{-1}(V) contained in V, so a one-step pullback exists inside V.
std::vector<IntervalQ> shrink_candidates(const PLMap& f, const Lap& hostLap,
                                         const IntervalQ& V0) {
    std::vector<IntervalQ> out;
    if (hostLap.direction == Direction::constant) return out;
    const IntervalQ lapImage = image(f, hostLap.domain);

    auto feasible = [&](const IntervalQ& V, const Rational& probe_hi) -> bool {
        // V inside the pair's common image, proper, nondegenerate, and the
        // pullback of V in the host lap stays inside V
        (void)probe_hi;
        if (V.is_degenerate() || !V.is_proper()) return false;
        if (!V0.contains(V)) return false;
        if (!lapImage.contains(V)) return false;
        IntervalQ A = lap_pullback(f, hostLap, V);
        return V.contains(A);
    };

    if (hostLap.direction == Direction::decreasing) {
        // family V(w) = [f(w), w] for w in the lap domain
        std::vector<Rational> grid;
        for (const auto& bp : f.breakpoints())
            if (hostLap.domain.contains(bp.x)) grid.push_back(bp.x);
        grid.push_back(hostLap.domain.lo);
        grid.push_back(hostLap.domain.hi);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (std::size_t c = 0; c + 1 < grid.size(); ++c) {
            Rational lo = grid[c], hi = grid[c + 1];
            Rational mid = (lo + hi) / Rational(2);
            for (const Rational& w :
                 {mid, (lo + mid) / Rational(2), (mid + hi) / Rational(2)}) {
                Rational v = eval(f, w);
                if (v >= w) continue;
                IntervalQ V(v, w);
                if (feasible(V, w)) { out.push_back(V); goto next_cell_dec; }
            }
        next_cell_dec:;
        }
    } else {
        // increasing lap: anchor the top at a fixed point of the lap
        FixedSet fs = fixed_set(f);
        for (const auto& p : fs.skeleton()) {
            if (!hostLap.domain.contains(p)) continue;
            Rational floor = max(V0.lo, lapImage.lo);
            if (floor >= p) continue;
            for (int denom : {2, 4, 8}) {
                Rational v = p - (p - floor) / Rational(denom);
                if (v <= floor) continue;
                IntervalQ V(v, p);
                if (feasible(V, p)) { out.push_back(V); break; }
            }
        }
    }
    return out;
}

// Pullback through an already-iterated map, leftmost nondegenerate.
std::optional<IntervalQ> pullback_via(const PLMap& fk, const IntervalQ& A,
                                      const IntervalQ& carrier) {
    for (const auto& C : restricted_components(fk, A, carrier)) {
        if (C.is_degenerate()) continue;
        if (image(fk, C) == A) return C;
    }
    return std::nullopt;
}

std::optional<SplitCertificate> try_candidate(const PLMap& f, const PLMap& fk, unsigned k,
                                              const Lap& hostLap, const Lap& otherLap,
                                              const IntervalQ& V, const SearchOptions& opt) {
    if (V.is_degenerate() || !V.is_proper()) return std::nullopt;
    if (!image(f, hostLap.domain).contains(V) || !image(f, otherLap.domain).contains(V))
        return std::nullopt;
    IntervalQ A = lap_pullback(f, hostLap, V);
    IntervalQ B = lap_pullback(f, otherLap, V);
    if (A.is_degenerate() || B.is_degenerate()) return std::nullopt;
    if (!almost_disjoint(A, B)) return std::nullopt;
    auto D = pullback_via(fk, A, A);
    if (!D) return std::nullopt;
    SplitCertificate cert{CertKind::pair_order_k, A, B, *D, k,
                          "lap pair common image " + V.str()};
    if (!certificate_valid(f, cert, opt.verify_terms, opt.budget)) return std::nullopt;
    return cert;
}

} // namespace

std::optional<SplitCertificate> pair_certificate_search(const PLMap& f, const SearchOptions& opt) {
    if (!is_surjective(f)) throw NotSurjective("pair search needs a surjective map");
    const auto L = laps(f);
    for (unsigned k = 1; k <= opt.k_max; ++k) {
        PLMap fk = f;
        try {
            fk = iterate(f, k, opt.budget);
        } catch (const BudgetExceeded&) {
            break; // higher orders only grow further
        }
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (L[i].direction == Direction::constant) continue;
            IntervalQ Ii = image(f, L[i].domain);
            for (std::size_t j = i + 1; j < L.size(); ++j) {
                if (L[j].direction == Direction::constant) continue;
                IntervalQ Ij = image(f, L[j].domain);
                auto V0 = intersect(Ii, Ij);
                if (!V0 || V0->is_degenerate()) continue;
                for (int role = 0; role < 2; ++role) {
                    const Lap& host = role == 0 ? L[i] : L[j];
                    const Lap& other = role == 0 ? L[j] : L[i];
                    if (auto c = try_candidate(f, fk, k, host, other, *V0, opt)) return c;
                    for (const auto& V : shrink_candidates(f, host, *V0))
                        if (auto c = try_candidate(f, fk, k, host, other, V, opt)) return c;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<SplitCertificate> pair_certificate_search(const PLMap& f, unsigned k_max) {
    SearchOptions opt;
    opt.k_max = k_max;
    return pair_certificate_search(f, opt);
}

// --- certificate from a period > 2 orbit ---------------------------------------

namespace {

// Some point of `s` outside the fixed structure `avoid`; exact.
std::optional<Rational> point_avoiding(const IntervalQ& s, const FixedSet& avoid) {
    std::vector<Rational> cuts{s.lo, s.hi};
    for (const auto& p : avoid.points)
        if (s.contains(p)) cuts.push_back(p);
    for (const auto& seg : avoid.segments) {
        if (s.contains(seg.lo)) cuts.push_back(seg.lo);
        if (s.contains(seg.hi)) cuts.push_back(seg.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto free_point = [&](const Rational& x) -> bool { return s.contains(x) && !avoid.contains(x); };
    for (const auto& c : cuts)
        if (free_point(c)) return c;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational m = (cuts[i] + cuts[i + 1]) / Rational(2);
        if (free_point(m)) return m;
    }
    return std::nullopt;
}

} // namespace

std::optional<SplitCertificate> certificate_from_period_gt2(const PLMap& f, std::size_t budget) {
    PLMap f2 = iterate(f, 2, budget);
    PLMap f4 = compose(f2, f2, budget);
    FixedSet fs2 = fixed_set(f2);
    FixedSet fs4 = fixed_set(f4);
    if (fs2 == fs4) return std::nullopt;

    // locate a point of exact period 4
    std::optional<Rational> seed;
    for (const auto& p : fs4.points)
        if (!fs2.contains(p)) { seed = p; break; }
    if (!seed) {
        for (const auto& s : fs4.segments) {
            seed = point_avoiding(s, fs2);
            if (seed) break;
        }
    }
    if (!seed) return std::nullopt;

    std::vector<Rational> orbit{*seed};
    for (int i = 0; i < 3; ++i) orbit.push_back(eval(f, orbit.back()));
    Rational x0 = *std::min_element(orbit.begin(), orbit.end());
    std::vector<Rational> cycle{x0};
    for (int i = 0; i < 3; ++i) cycle.push_back(eval(f, cycle.back()));

    std::vector<Rational> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());

    std::ostringstream prov;
    prov << "period-4 orbit {" << cycle[0] << ", " << cycle[1] << ", " << cycle[2] << ", "
         << cycle[3] << "}";

    // a consecutive triple whose middle point has an extreme image exists for
    // any 4-cycle; build the two almost-disjoint onto intervals from it
    for (std::size_t a = 0; a + 2 < sorted.size(); ++a) {
        const Rational &xi = sorted[a], &xj = sorted[a + 1], &xk = sorted[a + 2];
        Rational fi = eval(f, xi), fj = eval(f, xj), fk_ = eval(f, xk);
        bool high = fj > fi && fj > fk_;
        bool low = fj < fi && fj < fk_;
        if (!high && !low) continue;
        Rational near = high ? max(fi, fk_) : min(fi, fk_);
        IntervalQ W = IntervalQ::hull_of(near, fj);
        if (W.is_degenerate()) continue;
        IntervalQ P = onto_subinterval(f, IntervalQ(xi, xj), W);
        IntervalQ Q = onto_subinterval(f, IntervalQ(xj, xk), W);
        for (int role = 0; role < 2; ++role) {
            const IntervalQ& A = role == 0 ? P : Q;
            const IntervalQ& B = role == 0 ? Q : P;
            if (!almost_disjoint(A, B)) continue;
            for (unsigned k = 1; k <= 8; ++k) {
                try {
                    auto D = find_pullback_in(f, k, A, A, budget);
                    if (!D) continue;
                    SplitCertificate cert{CertKind::period_gt2, A, B, *D, k, prov.str()};
                    if (certificate_valid(f, cert, 2 * k + 13, budget)) return cert;
                } catch (const BudgetExceeded&) {
                    break;
                }
            }
        }
    }
    return std::nullopt;
}

// --- certificate from a nesting violation ---------------------------------------

SplitCertificate certificate_from_nesting_violation(const PLMap& f, const Rational& s_,
                                                    const Rational& t_, const Rational& u_,
                                                    const Rational& v_) {
    Rational s = min(s_, t_), t = max(s_, t_);
    Rational u = min(u_, v_), v = max(u_, v_);
    auto is_cycle = [&](const Rational& a, const Rational& b) {
        return a < b && eval(f, a) == b && eval(f, b) == a;
    };
    if (!is_cycle(s, t) || !is_cycle(u, v))
        throw NotAViolation("points are not two 2-cycles");
    if (s == u && t == v) throw NotAViolation("cycles are not distinct");
    if ((s < u && v < t) || (u < s && t < v)) throw NotAViolation("cycles are nested");
    if (u < s) { std::swap(s, u); std::swap(t, v); } // now s < u

    std::ostringstream prov;
    prov << "2-cycles {" << s << ", " << t << "} and {" << u << ", " << v << "} interleave";

    if (u < t) {
        // s < u < t < v: order-2 construction from the ordering lemma
        IntervalQ target(t, v);
        IntervalQ A = onto_subinterval(f, IntervalQ(s, u), target);
        IntervalQ B = onto_subinterval(f, IntervalQ(u, t), target);
        auto D = find_pullback_in(f, 2, A, A);
        if (D && almost_disjoint(A, B)) {
            SplitCertificate cert{CertKind::nesting_violation, A, B, *D, 2, prov.str()};
            if (certificate_valid(f, cert, 20)) return cert;
        }
    } else {
        // s < t <= u < v, disjoint cycles: f(u) = v tops both neighbours
        IntervalQ target(u, v);
        IntervalQ P = onto_subinterval(f, IntervalQ(u, v), target);
        IntervalQ Q = onto_subinterval(f, IntervalQ(t, u), target);
        auto D = find_pullback_in(f, 1, P, P);
        if (D && almost_disjoint(P, Q)) {
            SplitCertificate cert{CertKind::nesting_violation, P, Q, *D, 1, prov.str()};
            if (certificate_valid(f, cert, 20)) return cert;
        }
    }
    // the lemma guarantees a certificate; fall back to the generic search
    SearchOptions opt;
    opt.k_max = 8;
    if (auto c = pair_certificate_search(f, opt)) {
        SplitCertificate cert = *c;
        cert.kind = CertKind::nesting_violation;
        cert.provenance = prov.str();
        return cert;
    }
    throw ReplayFailure(0, "nesting violation certificate construction failed");
}

// --- square transfer ------------------------------------------------------------

SplitCertificate square_transfer(const PLMap& f, const SplitCertificate& cert,
                                 TransferDirection direction, std::size_t budget) {
    if (direction == TransferDirection::f_to_f2) {
        PLMap g = iterate(f, 2, budget);
        for (unsigned kg : {cert.k, 2 * cert.k}) {
            try {
                auto D = find_pullback_in(g, kg, cert.A, cert.A, budget);
                if (!D) continue;
                SplitCertificate out{cert.kind, cert.A, cert.B, *D, kg,
                                     cert.provenance + " [transferred to f^2]"};
                if (certificate_valid(g, out, 2 * kg + 13, budget)) return out;
            } catch (const BudgetExceeded&) {
                break;
            }
        }
        SearchOptions opt;
        opt.k_max = std::max(2 * cert.k, 8u);
        if (auto c = pair_certificate_search(g, opt)) {
            c->provenance = cert.provenance + " [re-searched on f^2]";
            return *c;
        }
        throw ReplayFailure(0, "no verifying transfer to f^2 found");
    }

    // f2_to_f: cert verifies for g = f^2, rebuild one for f
    if (image(f, cert.A) == image(f, cert.B)) {
        for (unsigned kf = 1; kf <= 2 * cert.k; ++kf) {
            try {
                auto D = find_pullback_in(f, kf, cert.A, cert.A, budget);
                if (!D) continue;
                SplitCertificate out{cert.kind, cert.A, cert.B, *D, kf,
                                     cert.provenance + " [transferred to f]"};
                if (certificate_valid(f, out, 2 * kf + 13, budget)) return out;
            } catch (const BudgetExceeded&) {
                break;
            }
        }
    }
    // try a sibling component of f^{-1}(f(A)) as the witness interval
    {
        IntervalQ T0 = image(f, cert.A);
        for (const auto& C : preimage_components(f, T0)) {
            if (C.is_degenerate() || !almost_disjoint(C, cert.A)) continue;
            if (image(f, C) != T0) continue;
            for (unsigned kf = 1; kf <= 2 * cert.k; ++kf) {
                try {
                    auto D = find_pullback_in(f, kf, cert.A, cert.A, budget);
                    if (!D) continue;
                    SplitCertificate out{cert.kind, cert.A, C, *D, kf,
                                         cert.provenance + " [transferred to f]"};
                    if (certificate_valid(f, out, 2 * kf + 13, budget)) return out;
                } catch (const BudgetExceeded&) {
                    break;
                }
            }
        }
    }
    SearchOptions opt;
    opt.k_max = std::max(2 * cert.k, 8u);
    if (auto c = pair_certificate_search(f, opt)) {
        c->provenance = cert.provenance + " [re-searched on f]";
        return *c;
    }
    throw ReplayFailure(0, "no verifying transfer to f found");
}

// --- generated sequences ----------------------------------------------------------

TightPrefix generated_prefix(const PLMap& f, const std::vector<Rational>& p_prefix,
                             std::size_t m, const IntervalQ& I, std::size_t depth,
                             std::size_t budget) {
    if (p_prefix.size() < depth + 1)
        throw NotAnOrbit("orbit prefix shorter than requested depth");
    for (std::size_t i = 0; i + 1 <= depth; ++i)
        if (eval(f, p_prefix[i + 1]) != p_prefix[i])
            throw NotAnOrbit("f(p_" + std::to_string(i + 1) + ") != p_" + std::to_string(i));
    if (m > depth) throw DomainError("m exceeds depth");
    if (!I.strictly_contains(p_prefix[m]))
        throw PNotInterior("p_m not interior to [a,b]");

    // component of the restricted complex, parametrized by the top coordinate
    IntervalQ K = I;
    if (depth > m) {
        PLMap g = iterate(f, static_cast<unsigned>(depth - m), budget);
        std::optional<IntervalQ> found;
        for (const auto& C : preimage_components(g, I))
            if (C.contains(p_prefix[depth])) { found = C; break; }
        if (!found) throw NotAnOrbit("orbit point escapes its own preimage complex");
        K = *found;
    }

    TightPrefix out;
    out.terms.assign(depth + 1, K);
    for (std::size_t j = depth; j-- > 0;) out.terms[j] = image(f, out.terms[j + 1]);
    out.degenerate_cutoff = 0;
    for (std::size_t j = 0; j <= depth; ++j)
        if (out.terms[j].is_degenerate()) out.degenerate_cutoff = j;
    return out;
}

// --- splitcert v1 I/O --------------------------------------------------------------

namespace {
bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
} // namespace

SplitCertificate read_certificate(std::istream& in) {
    SplitCertificate cert;
    bool header = false, have_k = false, have_a = false, have_b = false, have_d = false,
         have_kind = false;
    std::string line;
    auto read_interval = [](std::istringstream& ls, const std::string& what) {
        std::string lo, hi;
        ls >> lo >> hi;
        if (hi.empty()) throw ParseError("certificate line " + what + " needs two fractions");
        return IntervalQ(Rational::parse(lo), Rational::parse(hi));
    };
    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (!header) {
            std::string ver;
            ls >> ver;
            if (key != "splitcert" || ver != "v1") throw ParseError("expected header 'splitcert v1'");
            header = true;
            continue;
        }
        if (key == "kind") {
            std::string kind;
            ls >> kind;
            cert.kind = cert_kind_from_string(kind);
            have_kind = true;
        } else if (key == "k") {
            long k = -1;
            ls >> k;
            if (k < 1) throw ParseError("bad certificate order k");
            cert.k = static_cast<unsigned>(k);
            have_k = true;
        } else if (key == "A") {
            cert.A = read_interval(ls, "A");
            have_a = true;
        } else if (key == "B") {
            cert.B = read_interval(ls, "B");
            have_b = true;
        } else if (key == "D") {
            cert.D = read_interval(ls, "D");
            have_d = true;
        } else if (key == "provenance") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            cert.provenance = rest;
        } else {
            throw ParseError("unknown certificate line: " + line);
        }
    }
    if (!header || !have_kind || !have_k || !have_a || !have_b || !have_d)
        throw ParseError("incomplete certificate file");
    return cert;
}

SplitCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate file: " + path);
    return read_certificate(in);
}

void write_certificate(std::ostream& out, const SplitCertificate& cert) {
    out << "splitcert v1\n";
    out << "kind " << to_string(cert.kind) << "\n";
    out << "k " << cert.k << "\n";
    out << "A " << cert.A.lo.str() << " " << cert.A.hi.str() << "\n";
    out << "B " << cert.B.lo.str() << " " << cert.B.hi.str() << "\n";
    out << "D " << cert.D.lo.str() << " " << cert.D.hi.str() << "\n";
    if (!cert.provenance.empty()) out << "provenance " << cert.provenance << "\n";
}

std::string certificate_to_string(const SplitCertificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

} // namespace arclimit
