#pragma once

#include "arclimit/arc_decider.hpp"
#include "arclimit/plmap.hpp"

#include <string>
#include <vector>

namespace arclimit {

struct CorpusEntry {
    std::string name;
    PLMap map;
    Verdict expected;
    std::string source;
};

/// Built-in maps: tent, fig2, bs_f, bs_g, identity. Henderson approximants
/// are parameterized and resolved by corpus_map("henderson:<N>").
const std::vector<CorpusEntry>& corpus();

/// Resolves a corpus name, including "henderson:<N>". Throws ParseError.
PLMap corpus_map(const std::string& name);

/// Surjective PL surrogate for the Henderson construction: chords of x^2
/// notched with `notches` disjoint v-shapes accumulating toward (1,1). Lies
/// strictly below the diagonal on (0,1); fixed points exactly {0, 1}.
PLMap henderson_approximant(unsigned notches);

PLMap tent_map();
PLMap fig2_map();
PLMap block_schumann_f();
PLMap block_schumann_g();
PLMap identity_map();

} // namespace arclimit
