#pragma once

#include "catgb/dfa.hpp"
#include "catgb/rational_series.hpp"

namespace catgb {

// Generating series of the accepted language, graded by the letter norms.
// Ordered automata yield a factored denominator built from the self-loop
// letter sets along accepting paths; for other automata a cofactor formula
// produces a single expanded denominator factor.
RationalSeries dfa_series(const Dfa& d, const NormedAlphabet& norms);

}  // namespace catgb
