#pragma once

#include "arclimit/plmap.hpp"
#include "arclimit/splitting.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace arclimit {

/// Finite graph complex G_{0,n}: all orbit tuples (x_0, ..., x_n) with
/// f(x_{i+1}) = x_i, decomposed into one polyline per lap of f^n. Vertices
/// are exact; the tuple is affine in x_n between consecutive vertices.
struct OrbitComplex {
    std::size_t depth;
    std::vector<std::vector<std::vector<Rational>>> segments; // [lap][vertex][coord]
};

OrbitComplex graph_complex(const PLMap& f, std::size_t n,
                           std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Coordinate projection of G_{0,n} onto 2 or 3 axes for plotting.
std::vector<std::vector<std::vector<Rational>>> project(
    const PLMap& f, std::size_t n, const std::vector<std::size_t>& axes,
    std::size_t budget = PLMap::kDefaultBreakpointBudget);

struct CrookednessQuery {
    std::size_t n = 0;
    IntervalQ J_n;
    Rational epsilon;
    std::vector<Rational> p_prefix; // orbit segment, f(p_{i+1}) = p_i
};

/// Exact test of the epsilon-crookedness condition for one admissible pair
/// (J_{n+k}, p_{n+k}): true iff p_{n+k} does not separate the preimages of
/// the two epsilon-collars of J_n inside J_nk.
bool epsilon_crooked(const PLMap& f, const CrookednessQuery& q, unsigned k,
                     const IntervalQ& J_nk,
                     std::size_t budget = PLMap::kDefaultBreakpointBudget);

struct SeparationWitness {
    std::size_t n;
    IntervalQ J_n;
    unsigned k;
    IntervalQ J_nk;
    Rational p_nk;
};

struct EndpointTestResult {
    bool pass;
    std::optional<SeparationWitness> witness;
    std::size_t queries_tested = 0;
};

/// Finite-depth endpoint evidence per the crookedness characterization: for
/// each n < depth and each canonical interval around p_n (radii epsilon, 2x,
/// 4x, clipped; queries with p_n not interior are skipped), searches k with
/// n + k within the orbit prefix such that every admissible component is
/// epsilon-crooked. Pass is evidence, fail is a disproof at the tested scale.
EndpointTestResult endpoint_test(const PLMap& f, const std::vector<Rational>& p_prefix,
                                 std::size_t depth, const Rational& epsilon,
                                 std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Distances d_1..d_n between the depth-j approximation of the certified
/// tight sequence's continuum and the j-th shadow continuum, in the weighted
/// max metric max_i 2^{-i} |x_i - y_i| (exact Hausdorff distance between the
/// two polyline complexes). Exactly 0 at non-witness depths, where the shadow
/// coincides with the sequence by construction.
std::vector<Rational> hausdorff_witness(const PLMap& f, const SplitCertificate& cert,
                                        std::size_t n,
                                        std::size_t budget = PLMap::kDefaultBreakpointBudget);

/// Exact Hausdorff distance between two polylines in the weighted l-infinity
/// metric given per-coordinate weights.
Rational polyline_hausdorff(const std::vector<std::vector<Rational>>& X,
                            const std::vector<std::vector<Rational>>& Y,
                            const std::vector<Rational>& weights);

// Plot emission. Decimal renderings only; never fed back into decisions.
void emit_csv(std::ostream& out, const std::vector<std::vector<std::vector<Rational>>>& polylines,
              int precision = 9);
void emit_svg(std::ostream& out, const std::vector<std::vector<std::vector<Rational>>>& polylines,
              int precision = 3);

} // namespace arclimit
