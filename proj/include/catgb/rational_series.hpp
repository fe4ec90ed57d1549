#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catgb/poly.hpp"

namespace catgb {

// numerator / prod (1 - lambda_i)^{e_i}, each lambda_i with zero constant
// term.  On the paths that produce factored output the lambda_i are sums of
// norm monomials of letters; the cofactor path may store a single factor
// whose lambda has mixed-sign coefficients.
struct RationalSeries {
  std::vector<std::string> variables;
  Poly numerator;
  std::vector<std::pair<Poly, unsigned>> denominator;
};

// exponent vector of the norm variables -> coefficient; zeros omitted
using CoeffTable = std::map<Exponents, Rat>;

RationalSeries series_zero(std::vector<std::string> variables);
RationalSeries series_from_poly(std::vector<std::string> variables, Poly numerator);

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul_poly(const RationalSeries& s, const Poly& p);
// Multiply by 1/(1 - lambda); lambda must have zero constant term.
RationalSeries series_div_one_minus(const RationalSeries& s, const Poly& lambda);

// Cancels numerator factors, merges equal factors, sorts deterministically.
RationalSeries series_normalize(RationalSeries s);

// Equality as formal series, by cross-multiplication.  The two series must
// use the same variable list.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

// All coefficients of total degree <= order.
CoeffTable expand(const RationalSeries& s, unsigned order);

// Dense coefficient list c_0..c_order of a one-variable table.
std::vector<Rat> univariate_coeffs(const CoeffTable& table, unsigned order);

// Reconstructs a series in t from a coefficient window given the factored
// denominator.  The numerator degree is bounded by max_numerator_degree
// (default: denominator degree - 1); a window term violating the bound is a
// fit failure.
RationalSeries fit_rational(const std::vector<Rat>& coeffs,
                            std::vector<std::pair<Poly, unsigned>> denominator,
                            int max_numerator_degree = -1);

std::string series_to_string(const RationalSeries& s);

}  // namespace catgb
