#include "catgb/rational_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "catgb/errors.hpp"

namespace catgb {

namespace {

void check_factor(const Poly& lambda, std::size_t nvars) {
  if (lambda.nvars != nvars) throw std::invalid_argument("denominator factor variable count mismatch");
  if (lambda.coeff(Exponents(nvars, 0)) != 0) {
    throw std::domain_error("denominator factor with nonzero constant term");
  }
}

Poly one_minus(const Poly& lambda) {
  return Poly::constant(lambda.nvars, 1) - lambda;
}

Poly denominator_product(const RationalSeries& s) {
  Poly d = Poly::constant(s.variables.size(), 1);
  for (const auto& [lambda, e] : s.denominator) {
    Poly f = one_minus(lambda);
    for (unsigned i = 0; i < e; ++i) d = d * f;
  }
  return d;
}

unsigned factor_exponent(const RationalSeries& s, const Poly& lambda) {
  for (const auto& [l, e] : s.denominator) {
    if (l == lambda) return e;
  }
  return 0;
}

}  // namespace

RationalSeries series_zero(std::vector<std::string> variables) {
  RationalSeries s;
  s.numerator = Poly::zero(variables.size());
  s.variables = std::move(variables);
  return s;
}

RationalSeries series_from_poly(std::vector<std::string> variables, Poly numerator) {
  if (numerator.nvars != variables.size()) {
    throw std::invalid_argument("numerator variable count mismatch");
  }
  RationalSeries s;
  s.variables = std::move(variables);
  s.numerator = std::move(numerator);
  return s;
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  if (a.variables != b.variables) throw std::domain_error("series variable lists differ");
  RationalSeries out;
  out.variables = a.variables;
  // Least common multiple of the two factored denominators.
  std::vector<std::pair<Poly, unsigned>> merged = a.denominator;
  for (const auto& [lambda, e] : b.denominator) {
    bool found = false;
    for (auto& [l, me] : merged) {
      if (l == lambda) {
        me = std::max(me, e);
        found = true;
        break;
      }
    }
    if (!found) merged.emplace_back(lambda, e);
  }
  Poly na = a.numerator;
  Poly nb = b.numerator;
  for (const auto& [lambda, e] : merged) {
    Poly f = one_minus(lambda);
    unsigned ea = factor_exponent(a, lambda);
    unsigned eb = factor_exponent(b, lambda);
    for (unsigned i = ea; i < e; ++i) na = na * f;
    for (unsigned i = eb; i < e; ++i) nb = nb * f;
  }
  out.numerator = na + nb;
  out.denominator = std::move(merged);
  return series_normalize(std::move(out));
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries nb = b;
  nb.numerator = -nb.numerator;
  return series_add(a, nb);
}

RationalSeries series_mul_poly(const RationalSeries& s, const Poly& p) {
  RationalSeries out = s;
  out.numerator = out.numerator * p;
  return out;
}

RationalSeries series_div_one_minus(const RationalSeries& s, const Poly& lambda) {
  check_factor(lambda, s.variables.size());
  if (lambda.is_zero()) return s;
  RationalSeries out = s;
  for (auto& [l, e] : out.denominator) {
    if (l == lambda) {
      ++e;
      return out;
    }
  }
  out.denominator.emplace_back(lambda, 1);
  return out;
}

RationalSeries series_normalize(RationalSeries s) {
  for (const auto& [lambda, e] : s.denominator) check_factor(lambda, s.variables.size());
  // Merge equal factors, drop trivial ones.
  std::vector<std::pair<Poly, unsigned>> factors;
  for (auto& [lambda, e] : s.denominator) {
    if (e == 0 || lambda.is_zero()) continue;
    bool found = false;
    for (auto& [l, me] : factors) {
      if (l == lambda) {
        me += e;
        found = true;
        break;
      }
    }
    if (!found) factors.emplace_back(std::move(lambda), e);
  }
  if (s.numerator.is_zero()) {
    factors.clear();
  } else {
    for (auto& [lambda, e] : factors) {
      Poly f = one_minus(lambda);
      while (e > 0) {
        auto q = try_divexact(s.numerator, f);
        if (!q) break;
        s.numerator = std::move(*q);
        --e;
      }
    }
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const auto& fe) { return fe.second == 0; }),
                  factors.end());
  }
  std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return poly_less(x.first, y.first);
    return x.second < y.second;
  });
  s.denominator = std::move(factors);
  return s;
}

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
  if (a.variables != b.variables) throw std::domain_error("series variable lists differ");
  return a.numerator * denominator_product(b) == b.numerator * denominator_product(a);
}

CoeffTable expand(const RationalSeries& s, unsigned order) {
  Poly acc = truncate_total_degree(s.numerator, order);
  for (const auto& [lambda, e] : s.denominator) {
    check_factor(lambda, s.variables.size());
    if (lambda.is_zero()) continue;
    // geometric series 1 + lambda + lambda^2 + ... up to the order
    Poly geom = Poly::constant(lambda.nvars, 1);
    Poly power = Poly::constant(lambda.nvars, 1);
    while (true) {
      power = truncate_total_degree(power * lambda, order);
      if (power.is_zero()) break;
      geom = geom + power;
    }
    for (unsigned i = 0; i < e; ++i) acc = truncate_total_degree(acc * geom, order);
  }
  return acc.terms;
}

std::vector<Rat> univariate_coeffs(const CoeffTable& table, unsigned order) {
  std::vector<Rat> out(order + 1, Rat(0));
  for (const auto& [e, c] : table) {
    if (e.size() != 1) throw std::domain_error("coefficient table is not univariate");
    if (e[0] <= order) out[e[0]] = c;
  }
  return out;
}

RationalSeries fit_rational(const std::vector<Rat>& coeffs,
                            std::vector<std::pair<Poly, unsigned>> denominator,
                            int max_numerator_degree) {
  Poly d = Poly::constant(1, 1);
  for (const auto& [lambda, e] : denominator) {
    check_factor(lambda, 1);
    Poly f = one_minus(lambda);
    for (unsigned i = 0; i < e; ++i) d = d * f;
  }
  const unsigned g = d.total_degree();
  if (max_numerator_degree < 0) max_numerator_degree = g == 0 ? 0 : static_cast<int>(g) - 1;
  const std::size_t need = g + static_cast<std::size_t>(max_numerator_degree) + 2;
  if (coeffs.size() < need) {
    throw std::domain_error("fit window too small: need at least " + std::to_string(need) +
                            " coefficients, have " + std::to_string(coeffs.size()));
  }
  // product = coefficient series * denominator, truncated to the window
  std::vector<Rat> product(coeffs.size(), Rat(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (unsigned j = 0; j <= std::min<std::size_t>(k, g); ++j) {
      product[k] += coeffs[k - j] * d.coeff({j});
    }
  }
  Poly num = Poly::zero(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (product[k] == 0) continue;
    if (k > static_cast<std::size_t>(max_numerator_degree)) {
      throw std::domain_error("fit failure: product has degree " + std::to_string(k) +
                              " term beyond numerator bound " + std::to_string(max_numerator_degree));
    }
    num.terms.emplace(Exponents{static_cast<unsigned>(k)}, product[k]);
  }
  RationalSeries s;
  s.variables = {"t"};
  s.numerator = std::move(num);
  s.denominator = std::move(denominator);
  return series_normalize(std::move(s));
}

std::string series_to_string(const RationalSeries& s) {
  if (s.numerator.is_zero()) return "0";
  std::string num = poly_to_string(s.numerator, s.variables);
  if (s.denominator.empty()) return num;
  if (s.numerator.terms.size() > 1) num = "(" + num + ")";
  std::string den;
  for (const auto& [lambda, e] : s.denominator) {
    den += "(1-" + poly_to_string(lambda, s.variables) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  if (s.denominator.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace catgb
