#pragma once

#include <utility>
#include <vector>

#include "catgb/rational_series.hpp"

namespace catgb {

// sum over terms (q_j, j) of q_j(t) * e^{j t}, univariate, ascending distinct
// j; a plain polynomial contribution lives in the j = 0 term.
struct EgfForm {
  std::vector<std::pair<Poly, unsigned>> terms;
};

// Rewrites a univariate series whose denominator factors are all of the form
// (1 - j*t), j a positive integer, as an exponential sum: partial fractions,
// then each c/(1-jt)^i becomes a polynomial multiple of e^{jt}.  Other factor
// shapes are a domain error.
EgfForm egf_convert(const RationalSeries& s);

// Taylor coefficients a_0..a_order of the exponential form as a function of t.
std::vector<Rat> egf_expand(const EgfForm& f, unsigned order);

std::string egf_to_string(const EgfForm& f);

}  // namespace catgb
