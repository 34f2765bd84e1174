#include "arclimit/invlim.hpp"

#include "arclimit/errors.hpp"
#include "arclimit/pl_function.hpp"

#include <algorithm>
#include <ostream>

namespace arclimit {

namespace {

// Orbit tuple (x_0, ..., x_n) above top coordinate x_n = t.
std::vector<Rational> orbit_tuple(const PLMap& f, std::size_t n, const Rational& t) {
    std::vector<Rational> tup(n + 1, t);
    for (std::size_t i = n; i-- > 0;) tup[i] = eval(f, tup[i + 1]);
    return tup;
}

} // namespace

OrbitComplex graph_complex(const PLMap& f, std::size_t n, std::size_t budget) {
    if (n < 1) throw DomainError("graph_complex needs n >= 1");
    PLMap fn = iterate(f, static_cast<unsigned>(n), budget);
    OrbitComplex out;
    out.depth = n;
    for (const Lap& lap : laps(fn)) {
        std::vector<std::vector<Rational>> poly;
        for (const auto& bp : fn.breakpoints()) {
            if (!lap.domain.contains(bp.x)) continue;
            poly.push_back(orbit_tuple(f, n, bp.x));
        }
        out.segments.push_back(std::move(poly));
    }
    return out;
}

std::vector<std::vector<std::vector<Rational>>> project(const PLMap& f, std::size_t n,
                                                        const std::vector<std::size_t>& axes,
                                                        std::size_t budget) {
    if (axes.size() != 2 && axes.size() != 3) throw BadAxes("need 2 or 3 axes");
    for (auto a : axes)
        if (a > n) throw BadAxes("axis index exceeds depth");
    OrbitComplex gc = graph_complex(f, n, budget);
    std::vector<std::vector<std::vector<Rational>>> out;
    for (const auto& poly : gc.segments) {
        std::vector<std::vector<Rational>> proj;
        for (const auto& tup : poly) {
            std::vector<Rational> p;
            for (auto a : axes) p.push_back(tup[a]);
            proj.push_back(std::move(p));
        }
        out.push_back(std::move(proj));
    }
    return out;
}

bool epsilon_crooked(const PLMap& f, const CrookednessQuery& q, unsigned k,
                     const IntervalQ& J_nk, std::size_t budget) {
    if (q.epsilon <= Rational(0) || !(q.epsilon < q.J_n.length() / Rational(2)))
        throw PreconditionViolated("epsilon must lie in (0, |J_n|/2)");
    if (q.p_prefix.size() < q.n + k + 1)
        throw PreconditionViolated("orbit prefix too short for n + k");
    if (!q.J_n.strictly_contains(q.p_prefix[q.n]))
        throw PreconditionViolated("p_n not interior to J_n");
    PLMap fk = iterate(f, k, budget);
    if (image(fk, J_nk) != q.J_n)
        throw PreconditionViolated("f^k(J_nk) != J_n");
    const Rational& p = q.p_prefix[q.n + k];
    if (!J_nk.contains(p)) throw PreconditionViolated("p_{n+k} not in J_nk");

    IntervalQ low_collar(q.J_n.lo, q.J_n.lo + q.epsilon);
    IntervalQ high_collar(q.J_n.hi - q.epsilon, q.J_n.hi);
    auto clip = [&](const IntervalQ& collar) {
        std::vector<IntervalQ> out;
        for (const auto& C : preimage_components(fk, collar)) {
            auto m = intersect(C, J_nk);
            if (m) out.push_back(*m);
        }
        return out;
    };
    auto X = clip(low_collar);
    auto Y = clip(high_collar);
    if (X.empty() || Y.empty()) return true; // nothing to separate

    // p separates X and Y iff they lie strictly on opposite sides of p
    bool x_left = X.back().hi < p, x_right = X.front().lo > p;
    bool y_left = Y.back().hi < p, y_right = Y.front().lo > p;
    bool separates = (x_left && y_right) || (y_left && x_right);
    return !separates;
}

EndpointTestResult endpoint_test(const PLMap& f, const std::vector<Rational>& p_prefix,
                                 std::size_t depth, const Rational& epsilon,
                                 std::size_t budget) {
    if (depth < 1) throw DomainError("endpoint_test needs depth >= 1");
    if (p_prefix.size() < 2) throw NotAnOrbit("orbit prefix too short");
    for (std::size_t i = 0; i + 1 < p_prefix.size(); ++i)
        if (eval(f, p_prefix[i + 1]) != p_prefix[i])
            throw NotAnOrbit("f(p_" + std::to_string(i + 1) + ") != p_" + std::to_string(i));

    EndpointTestResult res{true, std::nullopt, 0};
    const Rational one(1), zero(0);
    for (std::size_t n = 0; n < depth && n + 1 < p_prefix.size(); ++n) {
        const Rational& pn = p_prefix[n];
        for (int scale : {1, 2, 4}) {
            Rational radius = epsilon * Rational(scale);
            Rational lo = max(zero, pn - radius);
            Rational hi = min(one, pn + radius);
            IntervalQ J(lo, hi);
            if (!J.strictly_contains(pn)) continue;           // clipped away
            if (!(epsilon < J.length() / Rational(2))) continue; // invalid query
            res.queries_tested++;

            CrookednessQuery q{n, J, epsilon, p_prefix};
            bool found_k = false;
            std::optional<SeparationWitness> deepest;
            for (unsigned k = 1; n + k + 1 <= p_prefix.size() && k <= depth; ++k) {
                PLMap fk = iterate(f, k, budget);
                bool all_crooked = true;
                for (const auto& C : preimage_components(fk, J)) {
                    if (image(fk, C) != J) continue;
                    if (!C.contains(p_prefix[n + k])) continue;
                    if (!epsilon_crooked(f, q, k, C, budget)) {
                        all_crooked = false;
                        deepest = SeparationWitness{n, J, k, C, p_prefix[n + k]};
                        break;
                    }
                }
                if (all_crooked) { found_k = true; break; }
            }
            if (!found_k) {
                res.pass = false;
                if (deepest) res.witness = deepest;
                return res;
            }
        }
    }
    return res;
}

// --- exact weighted Hausdorff distance between polylines -----------------------

namespace {

// directed sup-inf distance from segment P (param t in [0,1]) to segment Q
// (param s in [0,1]) in the weighted l-infinity metric, as a PLFunction of t
PLFunction segment_pair_distance(const std::vector<Rational>& P0, const std::vector<Rational>& P1,
                                 const std::vector<Rational>& Q0, const std::vector<Rational>& Q1,
                                 const std::vector<Rational>& w) {
    const std::size_t d = P0.size();
    // affine forms L(t,s) = a + b t + c s; distance is max over +-L_i
    struct Form { Rational a, b, c; };
    std::vector<Form> forms;
    for (std::size_t i = 0; i < d; ++i) {
        Rational a = w[i] * (P0[i] - Q0[i]);
        Rational b = w[i] * (P1[i] - P0[i]);
        Rational c = w[i] * (Q0[i] - Q1[i]); // minus sign folded in
        forms.push_back({a, b, c});
        forms.push_back({-a, -b, -c});
    }
    const Rational zero(0), one(1);
    // candidate optimal s: boundaries and pairwise active-set crossings;
    // each candidate gives max_j L_j(t, s_c(t)) as a convex PL function of t
    // restricted to the t-range where s_c(t) lies in [0,1]
    PLFunction envelope;
    auto add_candidate = [&](const Rational& s0, const Rational& s1, const Rational& tlo,
                             const Rational& thi) {
        // s(t) = s0 + s1 t on [tlo, thi]
        if (tlo > thi) return;
        std::vector<std::pair<Rational, Rational>> lines;
        for (const auto& F : forms)
            lines.emplace_back(F.a + F.c * s0, F.b + F.c * s1);
        PLFunction cand = PLFunction::max_of_lines(tlo, thi, lines);
        envelope = envelope.empty() ? cand : envelope.min_with(cand);
    };
    add_candidate(zero, zero, zero, one);
    add_candidate(one, zero, zero, one);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            Rational dc = forms[i].c - forms[j].c;
            if (dc.is_zero()) continue;
            // s(t) = (aj - ai + (bj - bi) t) / (ci - cj)
            Rational s0 = (forms[j].a - forms[i].a) / dc;
            Rational s1 = (forms[j].b - forms[i].b) / dc;
            // feasibility 0 <= s(t) <= 1
            Rational tlo = zero, thi = one;
            if (s1.is_zero()) {
                if (s0 < zero || s0 > one) continue;
            } else {
                Rational r0 = (zero - s0) / s1, r1 = (one - s0) / s1;
                tlo = max(tlo, min(r0, r1));
                thi = min(thi, max(r0, r1));
            }
            add_candidate(s0, s1, tlo, thi);
        }
    }
    return envelope;
}

} // namespace

Rational polyline_hausdorff(const std::vector<std::vector<Rational>>& X,
                            const std::vector<std::vector<Rational>>& Y,
                            const std::vector<Rational>& weights) {
    auto directed = [&](const std::vector<std::vector<Rational>>& A,
                        const std::vector<std::vector<Rational>>& B) {
        Rational best(0);
        std::size_t segsA = A.size() <= 1 ? 1 : A.size() - 1;
        std::size_t segsB = B.size() <= 1 ? 1 : B.size() - 1;
        for (std::size_t i = 0; i < segsA; ++i) {
            const auto& P0 = A[i];
            const auto& P1 = A[std::min(i + 1, A.size() - 1)];
            PLFunction m;
            for (std::size_t j = 0; j < segsB; ++j) {
                const auto& Q0 = B[j];
                const auto& Q1 = B[std::min(j + 1, B.size() - 1)];
                PLFunction dpq = segment_pair_distance(P0, P1, Q0, Q1, weights);
                m = m.empty() ? dpq : m.min_with(dpq);
            }
            auto v = m.max_value();
            if (v && *v > best) best = *v;
        }
        return best;
    };
    Rational d1 = directed(X, Y), d2 = directed(Y, X);
    return max(d1, d2);
}

std::vector<Rational> hausdorff_witness(const PLMap& f, const SplitCertificate& cert,
                                        std::size_t n, std::size_t budget) {
    std::size_t terms = std::max<std::size_t>(n, 2 * cert.k + 1);
    ReplayTrace trace = verify_certificate(f, cert, terms, budget);

    auto curve = [&](std::size_t depth, const IntervalQ& top) {
        // vertices at breakpoints of f^depth inside the top interval
        std::vector<Rational> xs{top.lo, top.hi};
        if (depth >= 1) {
            PLMap fd = iterate(f, static_cast<unsigned>(depth), budget);
            for (const auto& bp : fd.breakpoints())
                if (top.strictly_contains(bp.x)) xs.push_back(bp.x);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::vector<std::vector<Rational>> poly;
        for (const auto& x : xs) poly.push_back(orbit_tuple(f, depth, x));
        return poly;
    };

    std::vector<Rational> out;
    for (std::size_t j = 1; j <= n; ++j) {
        const Witness* w = nullptr;
        for (const auto& cand : trace.witnesses)
            if (cand.index == j) { w = &cand; break; }
        if (!w) {
            out.push_back(Rational(0)); // shadow coincides with the sequence here
            continue;
        }
        std::vector<Rational> weights;
        for (std::size_t i = 0; i <= j; ++i) weights.push_back(Rational(1, 1L << std::min<std::size_t>(i, 62)));
        auto T_curve = curve(j, trace.tight.terms[j]);
        auto S_curve = curve(j, w->S);
        out.push_back(polyline_hausdorff(T_curve, S_curve, weights));
    }
    return out;
}

void emit_csv(std::ostream& out, const std::vector<std::vector<std::vector<Rational>>>& polylines,
              int precision) {
    bool first = true;
    for (const auto& poly : polylines) {
        if (!first) out << "\n";
        first = false;
        for (const auto& p : poly) {
            for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].decimal(precision);
            out << "\n";
        }
    }
}

void emit_svg(std::ostream& out, const std::vector<std::vector<std::vector<Rational>>>& polylines,
              int precision) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    Rational thousand(1000);
    for (const auto& poly : polylines) {
        out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        bool first = true;
        for (const auto& p : poly) {
            if (p.size() < 2) continue;
            Rational x = p[0] * thousand;
            Rational y = (Rational(1) - p[1]) * thousand;
            out << (first ? "" : " ") << x.decimal(precision) << "," << y.decimal(precision);
            first = false;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace arclimit
