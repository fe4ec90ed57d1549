#include "catgb/egf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace catgb {

namespace {

std::vector<Rat> poly_to_coeffs(const Poly& p) {
  std::vector<Rat> out(p.is_zero() ? 1 : p.total_degree() + 1, Rat(0));
  for (const auto& [e, c] : p.terms) out[e[0]] = c;
  return out;
}

Poly coeffs_to_poly(const std::vector<Rat>& c) {
  Poly p = Poly::zero(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) p.terms.emplace(Exponents{static_cast<unsigned>(k)}, c[k]);
  }
  return p;
}

// Exact quotient of u by (1 - j*t); the factor is known to divide u.
std::vector<Rat> divide_one_minus_jt(const std::vector<Rat>& u, unsigned j) {
  if (u.size() <= 1) throw std::logic_error("division by (1-jt) of a constant");
  std::vector<Rat> v(u.size() - 1, Rat(0));
  v[0] = u[0];
  for (std::size_t k = 1; k < v.size(); ++k) v[k] = u[k] + Rat(j) * v[k - 1];
  return v;
}

}  // namespace

EgfForm egf_convert(const RationalSeries& s) {
  if (s.variables.size() != 1) {
    throw std::domain_error("exponential form requires a one-variable series");
  }
  // Collect denominator multiplicities per geometric ratio j.
  std::map<unsigned, unsigned> mult;
  unsigned deg_d = 0;
  for (const auto& [lambda, e] : s.denominator) {
    if (lambda.terms.size() != 1) {
      throw std::domain_error("denominator factor is not of the form (1-j*t): 1-" +
                              poly_to_string(lambda, s.variables));
    }
    const auto& [exps, c] = *lambda.terms.begin();
    if (exps[0] != 1 || denominator(c) != 1 || c <= 0) {
      throw std::domain_error("denominator factor is not of the form (1-j*t): 1-" +
                              poly_to_string(lambda, s.variables));
    }
    mult[static_cast<unsigned>(numerator(c))] += e;
    deg_d += e;
  }

  // Polynomial part by long division, numerator = q*D + r with deg r < deg D.
  std::vector<Rat> dpoly = {Rat(1)};
  for (const auto& [j, e] : mult) {
    for (unsigned i = 0; i < e; ++i) {
      std::vector<Rat> next(dpoly.size() + 1, Rat(0));
      for (std::size_t k = 0; k < dpoly.size(); ++k) {
        next[k] += dpoly[k];
        next[k + 1] -= Rat(j) * dpoly[k];
      }
      dpoly = std::move(next);
    }
  }
  std::vector<Rat> rem = poly_to_coeffs(s.numerator);
  std::vector<Rat> qpart;
  if (deg_d == 0) {
    qpart = rem;
    rem.assign(1, Rat(0));
  } else {
    if (rem.size() < dpoly.size()) rem.resize(dpoly.size(), Rat(0));
    qpart.assign(rem.size() - deg_d, Rat(0));
    for (std::size_t k = rem.size(); k-- > deg_d;) {
      Rat q = rem[k] / dpoly[deg_d];
      if (q == 0) continue;
      qpart[k - deg_d] = q;
      for (std::size_t i = 0; i <= deg_d; ++i) rem[k - deg_d + i] -= q * dpoly[i];
    }
    rem.resize(deg_d, Rat(0));
  }

  // Partial fractions: rem/D = sum over (j, i <= e_j) of c_{j,i}/(1-jt)^i.
  std::vector<std::pair<unsigned, unsigned>> unknowns;  // (j, i)
  for (const auto& [j, e] : mult) {
    for (unsigned i = 1; i <= e; ++i) unknowns.emplace_back(j, i);
  }
  std::vector<Rat> solution(unknowns.size(), Rat(0));
  if (!unknowns.empty()) {
    // Columns are coefficients of D/(1-jt)^i; match against rem.
    std::vector<std::vector<Rat>> cols;
    for (const auto& [j, i] : unknowns) {
      std::vector<Rat> col = dpoly;
      for (unsigned k = 0; k < i; ++k) col = divide_one_minus_jt(col, j);
      col.resize(deg_d, Rat(0));
      cols.push_back(std::move(col));
    }
    const std::size_t nrows = deg_d;
    std::vector<std::vector<Rat>> aug(nrows, std::vector<Rat>(unknowns.size() + 1, Rat(0)));
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c = 0; c < unknowns.size(); ++c) aug[r][c] = cols[c][r];
      aug[r][unknowns.size()] = r < rem.size() ? rem[r] : Rat(0);
    }
    for (std::size_t col = 0, row = 0; col < unknowns.size() && row < nrows; ++col) {
      std::size_t piv = row;
      while (piv < nrows && aug[piv][col] == 0) ++piv;
      if (piv == nrows) throw std::logic_error("singular partial-fraction system");
      std::swap(aug[row], aug[piv]);
      Rat inv = Rat(1) / aug[row][col];
      for (auto& x : aug[row]) x *= inv;
      for (std::size_t r = 0; r < nrows; ++r) {
        if (r == row || aug[r][col] == 0) continue;
        Rat factor = aug[r][col];
        for (std::size_t c2 = col; c2 <= unknowns.size(); ++c2) {
          aug[r][c2] -= factor * aug[row][c2];
        }
      }
      ++row;
    }
    for (std::size_t c = 0; c < unknowns.size(); ++c) solution[c] = aug[c][unknowns.size()];
  }

  // c/(1-jt)^i has ordinary coefficients c*C(n+i-1, i-1)*j^n; in the
  // exponential basis C(n, r) contributes (jt)^r / r! * e^{jt}.
  std::map<unsigned, std::vector<Rat>> qs;  // j -> polynomial coefficients
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [j, i] = unknowns[u];
    const Rat c = solution[u];
    if (c == 0) continue;
    // Binomial-basis coefficients of n -> C(n+i-1, i-1): forward differences.
    for (unsigned r = 0; r < i; ++r) {
      Rat gamma = 0;
      for (unsigned sidx = 0; sidx <= r; ++sidx) {
        Rat term = Rat(binomial(r, sidx)) * Rat(binomial(sidx + i - 1, i - 1));
        gamma += ((r - sidx) % 2 == 0) ? term : -term;
      }
      if (gamma == 0) continue;
      auto& q = qs[j];
      if (q.size() <= r) q.resize(r + 1, Rat(0));
      q[r] += c * gamma * Rat(ipow(Int(j), r), factorial(r));
    }
  }
  // The polynomial part contributes q_k t^k / k! alongside e^{0t}.
  for (std::size_t k = 0; k < qpart.size(); ++k) {
    if (qpart[k] == 0) continue;
    auto& q = qs[0];
    if (q.size() <= k) q.resize(k + 1, Rat(0));
    q[k] += qpart[k] / Rat(factorial(static_cast<unsigned>(k)));
  }

  EgfForm out;
  for (const auto& [j, q] : qs) {
    Poly p = coeffs_to_poly(q);
    if (!p.is_zero()) out.terms.emplace_back(std::move(p), j);
  }
  return out;
}

std::vector<Rat> egf_expand(const EgfForm& f, unsigned order) {
  std::vector<Rat> out(order + 1, Rat(0));
  for (const auto& [q, j] : f.terms) {
    for (const auto& [e, c] : q.terms) {
      unsigned k = e[0];
      for (unsigned n = k; n <= order; ++n) {
        if (j == 0 && n != k) continue;
        out[n] += c * Rat(ipow(Int(j), n - k), factorial(n - k));
      }
    }
  }
  return out;
}

std::string egf_to_string(const EgfForm& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  const std::vector<std::string> vars = {"t"};
  for (const auto& [q, j] : f.terms) {
    std::string qs = poly_to_string(q, vars);
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += qs;
      continue;
    }
    std::string ex = "e^(" + (j == 1 ? "" : std::to_string(j)) + "t)";
    if (q == Poly::constant(1, 1)) {
      out += ex;
    } else {
      if (q.terms.size() > 1) qs = "(" + qs + ")";
      out += qs + "*" + ex;
    }
  }
  return out;
}

}  // namespace catgb
