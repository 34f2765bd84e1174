#pragma once

#include "arclimit/dynamics.hpp"
#include "arclimit/splitting.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arclimit {

enum class Verdict { ARC, NOT_ARC, UNDECIDED };

std::string to_string(Verdict v);

/// Eventually-periodic point of the inverse limit: a constant sequence
/// (p, p, ...) or an alternating one (s, t, s, t, ...).
struct EndpointDescription {
    bool alternating = false;
    Rational first;
    Rational second;
    std::string str() const;
    friend bool operator==(const EndpointDescription& a, const EndpointDescription& b) {
        return a.alternating == b.alternating && a.first == b.first && a.second == b.second;
    }
};

struct PieceReport {
    IntervalQ domain;
    std::string method; // which sufficient path settled this piece
    Verdict verdict;
};

struct StructuralReport {
    FixedSet fixed;
    CycleSet cycles;
    std::optional<BoundaryProfile> profile;
    std::vector<FixedPointType> fixed_types;
    std::optional<std::pair<EndpointDescription, EndpointDescription>> endpoint_pair;
    std::vector<PieceReport> decomposition;
    std::vector<std::string> facts; // checked facts backing the verdict
};

struct ArcVerdict {
    Verdict outcome = Verdict::UNDECIDED;
    std::optional<SplitCertificate> certificate; // present iff NOT_ARC
    std::optional<StructuralReport> proof;       // present iff ARC
    std::optional<std::string> budget_report;    // present iff UNDECIDED
    int stage = 0; // pipeline stage that fixed a NOT_ARC outcome (1..3)
};

struct DecideOptions {
    unsigned k_max = 8;
    std::size_t depth = 32; // decomposition recursion depth
    std::size_t budget = PLMap::kDefaultBreakpointBudget;
};

/// Full pipeline: period > 2, necessary-condition checks with certificate
/// construction, pair search, then the sufficient ARC paths (trivial
/// dynamics, monotone, unimodal, square reduction, invariant decomposition).
/// NOT_ARC always carries a replay-verified certificate; ARC carries the
/// structural facts; everything else is honestly UNDECIDED.
ArcVerdict decide(const PLMap& f, const DecideOptions& opt = {});

/// Complete criterion for surjective unimodal maps: ARC iff the map has more
/// than one fixed point and no other periods, or one fixed point, a 2-cycle,
/// and no other periods. Throws NotUnimodal / NotSurjective.
ArcVerdict decide_unimodal(const PLMap& f, const DecideOptions& opt = {});

/// The two distinguished endpoints: constants at the extreme fixed points in
/// case a < b, the extreme 2-cycle's alternating sequences in case b < a.
std::pair<EndpointDescription, EndpointDescription> endpoint_candidates(const PLMap& f);

/// Affine conjugation of f restricted to an f-invariant interval [u,v] onto
/// a map of [0,1]. Requires image(f, I) inside I.
PLMap restrict_rescale(const PLMap& f, const IntervalQ& I);

// --- "arcreport v1" ------------------------------------------------------------

void write_arcreport(std::ostream& out, const PLMap& f, const ArcVerdict& verdict,
                     const std::optional<std::string>& certificate_path);

} // namespace arclimit
