#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catgb/rat.hpp"

namespace catgb {

using Exponents = std::vector<unsigned>;

// Sparse multivariate polynomial over Q with a fixed variable count.
struct Poly {
  std::size_t nvars = 0;
  std::map<Exponents, Rat> terms;  // zero coefficients are never stored

  static Poly zero(std::size_t nvars);
  static Poly constant(std::size_t nvars, Rat c);
  static Poly monomial(Exponents exps, Rat c);

  bool is_zero() const { return terms.empty(); }
  unsigned total_degree() const;  // 0 for the zero polynomial
  Rat coeff(const Exponents& e) const;
};

bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Rat& c);

// Deterministic total order, used to keep factor lists canonical.
bool poly_less(const Poly& a, const Poly& b);

// Quotient when b divides a exactly, nullopt otherwise.
std::optional<Poly> try_divexact(const Poly& a, const Poly& b);

Poly truncate_total_degree(const Poly& p, unsigned order);

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

}  // namespace catgb
