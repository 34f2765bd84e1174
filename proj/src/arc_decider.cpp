#include "arclimit/arc_decider.hpp"

#include "arclimit/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace arclimit {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::ARC: return "ARC";
    case Verdict::NOT_ARC: return "NOT_ARC";
    case Verdict::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

std::string EndpointDescription::str() const {
    if (!alternating) return "(" + first.str() + ", " + first.str() + ", ...)";
    return "(" + first.str() + ", " + second.str() + ", " + first.str() + ", " + second.str() +
           ", ...)";
}

PLMap restrict_rescale(const PLMap& f, const IntervalQ& I) {
    if (I.is_degenerate()) throw DomainError("cannot rescale a degenerate interval");
    if (!I.contains(image(f, I))) throw DomainError("interval is not f-invariant");
    Rational len = I.length();
    std::vector<std::pair<Rational, Rational>> pts;
    auto push = [&](const Rational& x) {
        pts.emplace_back((x - I.lo) / len, (eval(f, x) - I.lo) / len);
    };
    push(I.lo);
    for (const auto& bp : f.breakpoints())
        if (I.strictly_contains(bp.x)) push(bp.x);
    push(I.hi);
    return make_plmap(std::move(pts));
}

namespace {

IntervalQ unscale(const IntervalQ& J, const IntervalQ& I) {
    Rational len = I.length();
    return IntervalQ(I.lo + J.lo * len, I.lo + J.hi * len);
}

SplitCertificate unscale_certificate(const SplitCertificate& c, const IntervalQ& I) {
    SplitCertificate out = c;
    out.A = unscale(c.A, I);
    out.B = unscale(c.B, I);
    out.D = unscale(c.D, I);
    out.provenance += " [on piece " + I.str() + "]";
    return out;
}

// Certificate from a second onto component of the preimage of [d,e]:
// both components map exactly onto the interval, so they form the pair, and
// a pullback exists when one of them sits inside the interval.
std::optional<SplitCertificate> cert_from_second_component(const PLMap& f, const IntervalQ& I,
                                                           const DecideOptions& opt) {
    auto onto = onto_components(f, I);
    if (onto.size() < 2) return std::nullopt;
    for (std::size_t ai = 0; ai < onto.size(); ++ai) {
        for (std::size_t bi = 0; bi < onto.size(); ++bi) {
            if (ai == bi) continue;
            const IntervalQ& A = onto[ai];
            const IntervalQ& B = onto[bi];
            for (unsigned k = 1; k <= 2; ++k) {
                auto D = find_pullback_in(f, k, A, A, opt.budget);
                if (!D) continue;
                SplitCertificate cert{CertKind::pair_order_k, A, B, *D, k,
                                      "two components map onto " + I.str()};
                if (certificate_valid(f, cert, 20, opt.budget)) return cert;
            }
        }
    }
    return std::nullopt;
}

// A pair of fixed points (or a 2-cycle) [lo,hi] together with a disjoint
// bridge interval whose image covers [lo,hi] yields an order-1 certificate.
std::optional<SplitCertificate> cert_from_pair_and_bridge(const PLMap& f, const IntervalQ& I,
                                                          const IntervalQ& bridge,
                                                          const std::string& why,
                                                          const DecideOptions& opt) {
    if (I.is_degenerate()) return std::nullopt;
    if (!image(f, I).contains(I) || !image(f, bridge).contains(I)) return std::nullopt;
    try {
        IntervalQ A = onto_subinterval(f, I, I);
        IntervalQ B = onto_subinterval(f, bridge, I);
        if (!almost_disjoint(A, B)) return std::nullopt;
        auto D = find_pullback_in(f, 1, A, A, opt.budget);
        if (!D) return std::nullopt;
        SplitCertificate cert{CertKind::pair_order_k, A, B, *D, 1, why};
        if (certificate_valid(f, cert, 20, opt.budget)) return cert;
    } catch (const Error&) {
        return std::nullopt;
    }
    return std::nullopt;
}

struct StageResult {
    bool fired = false;
    int stage = 0;
    std::string reason;
    std::optional<SplitCertificate> cert; // construction from the violated lemma
};

// Necessary-condition scan (stages 1 and 2). Detects a splitting obligation
// and tries the lemma-specific construction; the caller still prefers the
// generic search for the emitted certificate.
StageResult necessary_conditions(const PLMap& f, const StructuralReport& rep,
                                 const DecideOptions& opt) {
    StageResult r;

    // stage 1: periods beyond two
    if (has_period_gt2(f, opt.budget)) {
        r.fired = true;
        r.stage = 1;
        r.reason = "periodic point of period > 2 (Fix(f^4) != Fix(f^2))";
        try {
            r.cert = certificate_from_period_gt2(f, opt.budget);
        } catch (const Error&) {
        }
        return r;
    }

    // stage 2a: 2-cycle ordering law
    if (auto viol = check_2cycle_nesting(f, opt.budget)) {
        r.fired = true;
        r.stage = 2;
        r.reason = "2-cycles {" + viol->s.str() + "," + viol->t.str() + "} and {" +
                   viol->u.str() + "," + viol->v.str() + "} are not nested";
        try {
            r.cert = certificate_from_nesting_violation(f, viol->s, viol->t, viol->u, viol->v);
        } catch (const Error&) {
        }
        return r;
    }

    // stage 2b: unique onto component over fixed pairs, 2-cycles, and the
    // nested-cycle side intervals
    std::vector<IntervalQ> candidates;
    auto sk = rep.fixed.skeleton();
    for (std::size_t i = 0; i < sk.size() && i < 24; ++i)
        for (std::size_t j = i + 1; j < sk.size() && j < 24; ++j)
            candidates.push_back(IntervalQ(sk[i], sk[j]));
    auto reps = rep.cycles.representatives(f);
    for (const auto& c : reps) candidates.push_back(IntervalQ(c.s, c.t));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            // nested pair s < u <= v < t: the lemma's side intervals
            if (reps[i].s < reps[j].s && reps[j].t < reps[i].t) {
                candidates.push_back(IntervalQ(reps[i].s, reps[j].s));
                candidates.push_back(IntervalQ(reps[j].t, reps[i].t));
            }
        }
    }
    for (const auto& I : candidates) {
        if (I.is_degenerate()) continue;
        if (auto two = unique_onto_component(f, I)) {
            r.fired = true;
            r.stage = 2;
            r.reason = "two components of the preimage of " + I.str() + " map onto it";
            try {
                r.cert = cert_from_second_component(f, I, opt);
            } catch (const Error&) {
            }
            return r;
        }
    }

    // stage 2c: boundary-profile conditions
    if (!rep.profile) return r;
    const BoundaryProfile& bp = *rep.profile;
    if (bp.boundary_case == BoundaryCase::a_less_b) {
        IntervalQ bridge(bp.a, bp.b);
        IntervalQ right(bp.b, Rational(1));
        IntervalQ left(Rational(0), bp.a);
        auto d = rep.fixed.max_point();
        auto e = rep.fixed.min_point();
        // only the extreme fixed point may live in each boundary strip
        for (const auto& p : sk) {
            if (!right.is_degenerate() && right.contains(p) && d && p != *d) {
                r.fired = true;
                r.stage = 2;
                r.reason = "second fixed point " + p.str() + " in [b,1]";
                r.cert = cert_from_pair_and_bridge(f, IntervalQ(p, *d), bridge, r.reason, opt);
                return r;
            }
            if (!left.is_degenerate() && left.contains(p) && e && p != *e) {
                r.fired = true;
                r.stage = 2;
                r.reason = "second fixed point " + p.str() + " in [0,a]";
                r.cert = cert_from_pair_and_bridge(f, IntervalQ(*e, p), bridge, r.reason, opt);
                return r;
            }
        }
        // the strips must map strictly inward
        if (!right.is_degenerate() && image(f, right).lo <= bp.b) {
            r.fired = true;
            r.stage = 2;
            r.reason = "f([b,1]) reaches down to b";
            r.cert = cert_from_pair_and_bridge(f, right, bridge, r.reason, opt);
            return r;
        }
        if (!left.is_degenerate() && image(f, left).hi >= bp.a) {
            r.fired = true;
            r.stage = 2;
            r.reason = "f([0,a]) reaches up to a";
            r.cert = cert_from_pair_and_bridge(f, left, bridge, r.reason, opt);
            return r;
        }
        // no 2-cycle may live inside a boundary strip
        for (const auto& c : reps) {
            IntervalQ ci(c.s, c.t);
            if ((right.contains(ci) && !right.is_degenerate()) ||
                (left.contains(ci) && !left.is_degenerate())) {
                r.fired = true;
                r.stage = 2;
                r.reason = "2-cycle {" + c.s.str() + "," + c.t.str() + "} inside a boundary strip";
                r.cert = cert_from_pair_and_bridge(f, ci, bridge, r.reason, opt);
                return r;
            }
        }
    } else {
        // case b < a
        if (rep.cycles.empty()) {
            r.fired = true;
            r.stage = 2;
            r.reason = "case b < a admits no 2-cycle";
            return r; // no direct construction; the search supplies the certificate
        }
        if (bp.r) {
            const Rational& rr = *bp.r;
            Rational fr = eval(f, rr);
            IntervalQ leftStrip = IntervalQ::hull_of(Rational(0), bp.b_max);
            IntervalQ rightStrip = IntervalQ::hull_of(bp.a_min, Rational(1));
            bool left_bad = image(f, leftStrip).lo <= rr;
            bool right_bad = image(f, rightStrip).hi >= fr;
            if (left_bad || right_bad) {
                r.fired = true;
                r.stage = 2;
                r.reason = left_bad ? "f dips to r on the left boundary strip"
                                    : "f rises to f(r) on the right boundary strip";
                // order-2 construction along the proof; verified before use
                try {
                    IntervalQ target = IntervalQ::hull_of(rr, Rational(1));
                    IntervalQ host = IntervalQ::hull_of(bp.b_max, fr);
                    if (image(f, host).contains(target)) {
                        IntervalQ A = onto_subinterval(f, host, target);
                        IntervalQ guest = left_bad ? leftStrip : rightStrip;
                        if (image(f, guest).contains(target)) {
                            IntervalQ B = onto_subinterval(f, guest, target);
                            auto D = find_pullback_in(f, 2, A, A, opt.budget);
                            if (D && almost_disjoint(A, B)) {
                                SplitCertificate cert{CertKind::pair_order_k, A, B, *D, 2, r.reason};
                                if (certificate_valid(f, cert, 20, opt.budget)) r.cert = cert;
                            }
                        }
                    }
                } catch (const Error&) {
                }
                return r;
            }
        }
    }
    return r;
}

ArcVerdict not_arc(const PLMap& f, int stage, const std::string& reason,
                   std::optional<SplitCertificate> constructed, const DecideOptions& opt,
                   StructuralReport rep) {
    ArcVerdict v;
    v.stage = stage;
    rep.facts.push_back(reason);
    // prefer the generic search for the emitted certificate (smallest k,
    // deterministic); fall back to the lemma construction
    SearchOptions sopt;
    sopt.k_max = opt.k_max;
    sopt.budget = opt.budget;
    std::optional<SplitCertificate> cert;
    try {
        cert = pair_certificate_search(f, sopt);
    } catch (const Error&) {
    }
    if (!cert) cert = std::move(constructed);
    if (cert) {
        v.outcome = Verdict::NOT_ARC;
        v.certificate = cert;
    } else {
        v.outcome = Verdict::UNDECIDED;
        v.budget_report = "splitting obligation detected (" + reason +
                          ") but no certificate verified within budgets";
    }
    return v;
}

StructuralReport gather_report(const PLMap& f, const DecideOptions& opt) {
    StructuralReport rep;
    rep.fixed = fixed_set(f);
    rep.cycles = two_cycles(f, opt.budget);
    rep.profile = boundary_profile(f, opt.budget);
    for (const auto& p : rep.fixed.points) {
        try {
            rep.fixed_types.push_back(classify_fixed_point(f, p));
        } catch (const Error&) {
        }
    }
    return rep;
}

ArcVerdict decide_impl(const PLMap& f, const DecideOptions& opt, std::size_t depth_left,
                       bool allow_square_reduction);

// Sufficient ARC paths; nullopt when none applies.
std::optional<ArcVerdict> arc_paths(const PLMap& f, StructuralReport& rep,
                                    const DecideOptions& opt, std::size_t depth_left,
                                    bool allow_square_reduction) {
    auto L = laps(f);

    // monotone surjective maps are conjugate to the identity or to a flip
    if (L.size() == 1) {
        rep.facts.push_back("single monotone lap: the map is a homeomorphism");
        rep.endpoint_pair = endpoint_candidates(f);
        rep.decomposition.push_back({unit_interval(), "monotone", Verdict::ARC});
        ArcVerdict v;
        v.outcome = Verdict::ARC;
        v.proof = rep;
        return v;
    }

    // all orbits strictly monotone: fixed set {0,1} and f - id of constant
    // sign on (0,1). Tight sequences then march into the top (or bottom)
    // monotone tail where witness intervals cannot exist.
    if (rep.fixed.segments.empty()) {
        auto sk = rep.fixed.skeleton();
        bool boundary_only = !sk.empty();
        for (const auto& p : sk)
            if (p != Rational(0) && p != Rational(1)) boundary_only = false;
        if (boundary_only) {
            rep.facts.push_back("no interior fixed points: f - id keeps one sign on (0,1)");
            rep.endpoint_pair = endpoint_candidates(f);
            rep.decomposition.push_back({unit_interval(), "trivial-dynamics", Verdict::ARC});
            ArcVerdict v;
            v.outcome = Verdict::ARC;
            v.proof = rep;
            return v;
        }
    }

    if (L.size() == 2 && L[0].direction != Direction::constant &&
        L[1].direction != Direction::constant) {
        ArcVerdict v = decide_unimodal(f, opt);
        if (v.outcome == Verdict::ARC && v.proof) {
            for (const auto& fact : rep.facts) v.proof->facts.push_back(fact);
        }
        return v;
    }

    // case b < a: pass to f^2, which the endpoint analysis reduces to case (1)
    if (rep.profile && rep.profile->boundary_case == BoundaryCase::b_less_a &&
        allow_square_reduction && depth_left > 0) {
        PLMap g = iterate(f, 2, opt.budget);
        ArcVerdict sub = decide_impl(g, opt, depth_left - 1, false);
        if (sub.outcome == Verdict::ARC) {
            rep.facts.push_back("decided through f^2 (limits are homeomorphic)");
            if (sub.proof)
                for (const auto& fact : sub.proof->facts) rep.facts.push_back("f^2: " + fact);
            rep.endpoint_pair = endpoint_candidates(f);
            rep.decomposition.push_back({unit_interval(), "square-reduction", Verdict::ARC});
            ArcVerdict v;
            v.outcome = Verdict::ARC;
            v.proof = rep;
            return v;
        }
        if (sub.outcome == Verdict::NOT_ARC && sub.certificate) {
            ArcVerdict v;
            v.outcome = Verdict::NOT_ARC;
            v.stage = 3;
            try {
                v.certificate = square_transfer(f, *sub.certificate, TransferDirection::f2_to_f,
                                                opt.budget);
                return v;
            } catch (const Error&) {
                return std::nullopt; // fall through to the remaining paths
            }
        }
        return std::nullopt;
    }

    // invariant decomposition at fixed points whose both sides are invariant
    std::vector<Rational> splits;
    for (const auto& p : rep.fixed.skeleton()) {
        if (p == Rational(0) || p == Rational(1)) continue;
        if (image(f, IntervalQ(Rational(0), p)).hi <= p &&
            image(f, IntervalQ(p, Rational(1))).lo >= p)
            splits.push_back(p);
    }
    if (!splits.empty() && depth_left > 0) {
        std::vector<Rational> cuts{Rational(0)};
        for (const auto& s : splits) cuts.push_back(s);
        cuts.push_back(Rational(1));
        ArcVerdict v;
        v.outcome = Verdict::ARC;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            IntervalQ piece(cuts[i], cuts[i + 1]);
            PLMap g = restrict_rescale(f, piece);
            ArcVerdict sub = decide_impl(g, opt, depth_left - 1, true);
            rep.decomposition.push_back({piece, "restriction", sub.outcome});
            if (sub.outcome == Verdict::NOT_ARC && sub.certificate) {
                SplitCertificate lifted = unscale_certificate(*sub.certificate, piece);
                if (certificate_valid(f, lifted, 20, opt.budget)) {
                    v.outcome = Verdict::NOT_ARC;
                    v.stage = 3;
                    v.certificate = lifted;
                    return v;
                }
                v.outcome = Verdict::UNDECIDED;
                v.budget_report = "piece " + piece.str() +
                                  " is not an arc but its certificate did not lift";
                return v;
            }
            if (sub.outcome == Verdict::UNDECIDED) {
                v.outcome = Verdict::UNDECIDED;
                v.budget_report = "piece " + piece.str() + " undecided";
                return v;
            }
            // glue compatibility: interior cut points must be endpoints of
            // both neighbouring limits, i.e. constant sequences at the cut
            if (sub.proof && sub.proof->endpoint_pair) {
                const auto& ep = *sub.proof->endpoint_pair;
                bool left_ok = i == 0 || (!ep.first.alternating && ep.first.first == Rational(0)) ||
                               (!ep.second.alternating && ep.second.first == Rational(0));
                bool right_ok = i + 2 == cuts.size() ||
                                (!ep.first.alternating && ep.first.first == Rational(1)) ||
                                (!ep.second.alternating && ep.second.first == Rational(1));
                if (!left_ok || !right_ok) {
                    v.outcome = Verdict::UNDECIDED;
                    v.budget_report = "piece " + piece.str() +
                                      " does not end at its glue points";
                    return v;
                }
            }
        }
        rep.facts.push_back("decomposed at invariant fixed points; all pieces are arcs");
        rep.endpoint_pair = endpoint_candidates(f);
        v.proof = rep;
        return v;
    }

    return std::nullopt;
}

ArcVerdict decide_impl(const PLMap& f, const DecideOptions& opt, std::size_t depth_left,
                       bool allow_square_reduction) {
    if (!is_surjective(f)) throw NotSurjective("decide requires a surjective map");
    StructuralReport rep;
    try {
        rep = gather_report(f, opt);

        StageResult nc = necessary_conditions(f, rep, opt);
        if (nc.fired) return not_arc(f, nc.stage, nc.reason, nc.cert, opt, rep);

        // stage 3: certificate search
        SearchOptions sopt;
        sopt.k_max = opt.k_max;
        sopt.budget = opt.budget;
        if (auto cert = pair_certificate_search(f, sopt)) {
            ArcVerdict v;
            v.outcome = Verdict::NOT_ARC;
            v.stage = 3;
            v.certificate = cert;
            return v;
        }

        // stages 4-5: sufficient ARC paths
        if (auto v = arc_paths(f, rep, opt, depth_left, allow_square_reduction)) return *v;

        ArcVerdict v;
        v.outcome = Verdict::UNDECIDED;
        v.budget_report =
            "no certificate found with k_max = " + std::to_string(opt.k_max) +
            " and no sufficient structural path applies (laps = " +
            std::to_string(laps(f).size()) + ")";
        return v;
    } catch (const BudgetExceeded& e) {
        ArcVerdict v;
        v.outcome = Verdict::UNDECIDED;
        v.budget_report = std::string("budget exceeded: ") + e.what();
        return v;
    }
}

} // namespace

ArcVerdict decide(const PLMap& f, const DecideOptions& opt) {
    return decide_impl(f, opt, opt.depth, true);
}

ArcVerdict decide_unimodal(const PLMap& f, const DecideOptions& opt) {
    if (!is_surjective(f)) throw NotSurjective("decide_unimodal requires a surjective map");
    auto L = laps(f);
    std::size_t monotone = 0;
    for (const auto& lap : L)
        if (lap.direction != Direction::constant) monotone++;
    if (L.size() != 2 || monotone != 2) throw NotUnimodal("map does not have exactly 2 monotone laps");

    StructuralReport rep = gather_report(f, opt);
    bool many_fixed = !rep.fixed.segments.empty() || rep.fixed.points.size() > 1;
    bool one_fixed = rep.fixed.segments.empty() && rep.fixed.points.size() == 1;
    bool cycles = !rep.cycles.empty();
    bool highper = has_period_gt2(f, opt.budget);

    bool arc = !highper && ((many_fixed && !cycles) || (one_fixed && cycles));
    if (arc) {
        rep.facts.push_back(many_fixed ? "unimodal: several fixed points, no other periods"
                                       : "unimodal: one fixed point, a 2-cycle, no other periods");
        rep.endpoint_pair = endpoint_candidates(f);
        rep.decomposition.push_back({unit_interval(), "unimodal", Verdict::ARC});
        ArcVerdict v;
        v.outcome = Verdict::ARC;
        v.proof = rep;
        return v;
    }

    std::string reason = highper ? "unimodal criterion fails: period > 2"
                                 : "unimodal criterion fails: fixed points and 2-cycles mismatch";
    std::optional<SplitCertificate> constructed = certificate_from_period_gt2(f, opt.budget);
    if (!constructed) {
        // try the unique-onto construction around each 2-cycle
        for (const auto& c : rep.cycles.representatives(f)) {
            constructed = cert_from_second_component(f, IntervalQ(c.s, c.t), opt);
            if (constructed) break;
        }
    }
    return not_arc(f, highper ? 1 : 2, reason, constructed, opt, rep);
}

std::pair<EndpointDescription, EndpointDescription> endpoint_candidates(const PLMap& f) {
    BoundaryProfile bp = boundary_profile(f);
    FixedSet fs = fixed_set(f);
    if (bp.boundary_case == BoundaryCase::a_less_b) {
        auto lo = fs.min_point();
        auto hi = fs.max_point();
        if (!lo || !hi) throw NoFixedStructure("no fixed points on a surjective map");
        EndpointDescription e1{false, *lo, *lo};
        EndpointDescription e2{false, *hi, *hi};
        return {e1, e2};
    }
    CycleSet cs = two_cycles(f);
    std::optional<Rational> s;
    for (const auto& c : cs.isolated)
        if (!s || c.s < *s) s = c.s;
    for (const auto& J : cs.swapped_segments)
        if (!s || J.lo < *s) s = J.lo;
    if (!s) throw NoFixedStructure("case b < a with no 2-cycle");
    Rational t = eval(f, *s);
    EndpointDescription e1{true, *s, t};
    EndpointDescription e2{true, t, *s};
    return {e1, e2};
}

void write_arcreport(std::ostream& out, const PLMap& f, const ArcVerdict& verdict,
                     const std::optional<std::string>& certificate_path) {
    out << "arcreport v1\n";
    out << "verdict " << to_string(verdict.outcome) << "\n";
    if (certificate_path) out << "certificate " << *certificate_path << "\n";

    FixedSet fs = fixed_set(f);
    out << "fixed_points";
    for (const auto& p : fs.points) out << " " << p.str();
    for (const auto& s : fs.segments) out << " " << s.lo.str() << ".." << s.hi.str();
    out << "\n";

    CycleSet cs = two_cycles(f);
    out << "two_cycles";
    for (const auto& c : cs.isolated) out << " {" << c.s.str() << "," << c.t.str() << "}";
    for (const auto& J : cs.swapped_segments)
        out << " swapped:" << J.lo.str() << ".." << J.hi.str();
    out << "\n";

    if (is_surjective(f)) {
        BoundaryProfile bp = boundary_profile(f);
        out << "case " << (bp.boundary_case == BoundaryCase::a_less_b ? "a_less_b" : "b_less_a")
            << "\n";
    }
    if (verdict.outcome != Verdict::NOT_ARC) {
        try {
            auto ep = endpoint_candidates(f);
            out << "endpoints " << ep.first.str() << " " << ep.second.str() << "\n";
        } catch (const Error&) {
        }
    }
    if (verdict.proof) {
        out << "pieces";
        if (verdict.proof->decomposition.empty()) out << " -";
        for (const auto& piece : verdict.proof->decomposition)
            out << " " << piece.domain.lo.str() << ".." << piece.domain.hi.str() << ":"
                << piece.method;
        out << "\n";
        for (const auto& fact : verdict.proof->facts) out << "note " << fact << "\n";
    }
    if (verdict.certificate) {
        out << "certificate_kind " << to_string(verdict.certificate->kind) << "\n";
        out << "certificate_k " << verdict.certificate->k << "\n";
    }
    if (verdict.budget_report) out << "note " << *verdict.budget_report << "\n";
}

} // namespace arclimit
