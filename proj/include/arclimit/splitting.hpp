#pragma once

#include "arclimit/dynamics.hpp"
#include "arclimit/plmap.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arclimit {

/// Finite prefix T_0 .. T_n of a tight sequence: f(T_{i+1}) = T_i exactly,
/// every term a proper subinterval, nondegenerate beyond the cutoff.
struct TightPrefix {
    std::vector<IntervalQ> terms;
    std::size_t degenerate_cutoff = 0;

    /// Checks the tight-sequence conditions on the prefix; throws
    /// ReplayFailure naming the first broken condition.
    void check(const PLMap& f) const;
};

enum class CertKind { pair_order_k, period_gt2, nesting_violation };

std::string to_string(CertKind k);
CertKind cert_kind_from_string(const std::string& s);

/// Finite, replayable witness that f admits a splitting sequence:
/// f(A) = f(B), |A ∩ B| <= 1, D ⊆ A nondegenerate with f^k(D) = A.
struct SplitCertificate {
    CertKind kind = CertKind::pair_order_k;
    IntervalQ A;
    IntervalQ B;
    IntervalQ D;
    unsigned k = 1;
    std::string provenance;
};

struct Witness {
    std::size_t index;
    IntervalQ S;
};

struct ReplayTrace {
    TightPrefix tight;
    std::vector<Witness> witnesses;
};

/// Checks the certificate invariants without replaying. Throws ReplayFailure.
void check_certificate_invariants(const PLMap& f, const SplitCertificate& cert,
                                  std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Replays the generated splitting sequence for n_terms terms and checks every
/// definition condition exactly. Throws ReplayFailure on an invalid
/// certificate. Requires n_terms >= 2k + 1.
ReplayTrace verify_certificate(const PLMap& f, const SplitCertificate& cert,
                               std::size_t n_terms,
                               std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// True iff verify_certificate succeeds.
bool certificate_valid(const PLMap& f, const SplitCertificate& cert,
                       std::size_t n_terms = 20,
                       std::size_t budget = PLMap::kDefaultBreakpointBudget);

struct SearchOptions {
    unsigned k_max = 8;
    std::size_t budget = PLMap::kDefaultBreakpointBudget;
    std::size_t verify_terms = 20;
};

/// Deterministic search for a pair certificate over lap-pair candidates.
/// Every returned certificate has been replay-verified.
std::optional<SplitCertificate> pair_certificate_search(const PLMap& f, unsigned k_max);
std::optional<SplitCertificate> pair_certificate_search(const PLMap& f, const SearchOptions& opt);

/// If f has a periodic point of period > 2, builds a verified certificate from
/// a period-4 orbit following the three-point construction; absent otherwise.
std::optional<SplitCertificate> certificate_from_period_gt2(
    const PLMap& f, std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Order-2 certificate from two 2-cycles that fail the nesting law.
/// Throws NotAViolation when the four points do not witness a violation.
SplitCertificate certificate_from_nesting_violation(const PLMap& f, const Rational& s,
                                                    const Rational& t, const Rational& u,
                                                    const Rational& v);

enum class TransferDirection { f_to_f2, f2_to_f };

/// Moves a certificate between f and f^2, replay-verifying the result against
/// the target map. Throws ReplayFailure when no verifying transfer is found.
SplitCertificate square_transfer(const PLMap& f, const SplitCertificate& cert,
                                 TransferDirection direction,
                                 std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Finite-depth approximation of the sequence generated by an orbit prefix,
/// m, and an interval I: level-n terms are images of the component of
/// (f^{depth-m})^{-1}(I) carrying the orbit. Throws NotAnOrbit, PNotInterior.
TightPrefix generated_prefix(const PLMap& f, const std::vector<Rational>& p_prefix,
                             std::size_t m, const IntervalQ& I, std::size_t depth,
                             std::size_t budget = PLMap::kDefaultBreakpointBudget);

// Construction helpers shared with the decider.

/// Leftmost closed subinterval D of C with f(D) = J exactly; requires
/// image(f, C) to cover J.
IntervalQ onto_subinterval(const PLMap& f, const IntervalQ& C, const IntervalQ& J);

/// Leftmost nondegenerate component D of (f^k)^{-1}(A) intersected with
/// carrier such that f^k(D) = A exactly; nullopt when none exists.
std::optional<IntervalQ> find_pullback_in(const PLMap& f, unsigned k, const IntervalQ& A,
                                          const IntervalQ& carrier,
                                          std::size_t budget = PLMap::kDefaultBreakpointBudget);

// --- "splitcert v1" text format ---------------------------------------------
// Lines: `splitcert v1`, `kind <kind>`, `k <int>`, `A <q> <q>`, `B <q> <q>`,
// `D <q> <q>`, optional `provenance <free text>`. Round-trips bit-exactly.

SplitCertificate read_certificate(std::istream& in);
SplitCertificate read_certificate_file(const std::string& path);
void write_certificate(std::ostream& out, const SplitCertificate& cert);
std::string certificate_to_string(const SplitCertificate& cert);

} // namespace arclimit
