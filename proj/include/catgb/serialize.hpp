#pragma once

#include <string>

#include "catgb/dfa.hpp"
#include "catgb/module.hpp"
#include "catgb/rational_series.hpp"
#include "json.hpp"

namespace catgb {

// Insertion-ordered JSON keeps the emitted field order fixed, so structured
// output is byte-stable across runs.
using Json = nlohmann::ordered_json;

std::string order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);  // throws parse_error

// {alphabet, states, transitions: [[letter, from, to]...], initial, finals}.
Json dfa_to_json(const Dfa& d);
// Validates totality, state bounds, and final-state ordering; parse_error.
Dfa dfa_from_json(const Json& j);

// {order, d (zero-aligned orders only), alphabet, generators}.
Json ideal_to_json(const MonomialIdealGens& g);
MonomialIdealGens ideal_from_json(const Json& j);  // throws parse_error

// {vars, numerator: [[exponent-vector, rational]...], denominator:
// [[linear-form coeffs, exponent]...]} with rationals rendered as "p/q".
// A denominator factor that is not a natural linear form (possible on the
// cofactor path) falls back to {terms, exponent} with a numerator-style
// term list.
Json series_to_json(const RationalSeries& s);

}  // namespace catgb
