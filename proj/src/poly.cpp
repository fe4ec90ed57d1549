#include "catgb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace catgb {

namespace {

unsigned exp_total(const Exponents& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

// Graded lex, compatible with monomial multiplication; used to pick leading
// terms in the exact-division loop.
bool grlex_less(const Exponents& a, const Exponents& b) {
  unsigned ta = exp_total(a);
  unsigned tb = exp_total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

std::map<Exponents, Rat>::const_iterator leading_term(const Poly& p) {
  auto best = p.terms.begin();
  for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return best;
}

void add_term(Poly& p, const Exponents& e, const Rat& c) {
  auto it = p.terms.find(e);
  if (it == p.terms.end()) {
    if (c != 0) p.terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.terms.erase(it);
}

}  // namespace

Poly Poly::zero(std::size_t nvars) {
  Poly p;
  p.nvars = nvars;
  return p;
}

Poly Poly::constant(std::size_t nvars, Rat c) {
  Poly p;
  p.nvars = nvars;
  if (c != 0) p.terms.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

Poly Poly::monomial(Exponents exps, Rat c) {
  Poly p;
  p.nvars = exps.size();
  if (c != 0) p.terms.emplace(std::move(exps), std::move(c));
  return p;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, exp_total(e));
  return d;
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? Rat(0) : it->second;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars == b.nvars && a.terms == b.terms;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out = a;
  for (const auto& [e, c] : b.terms) add_term(out, e, -c);
  return out;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [e, c] : out.terms) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out = Poly::zero(a.nvars);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Poly& a, const Rat& c) {
  Poly out = Poly::zero(a.nvars);
  if (c == 0) return out;
  for (const auto& [e, ca] : a.terms) out.terms.emplace(e, ca * c);
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) return a.nvars < b.nvars;
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  // Reversed exponent vectors rank earlier variables first, so for example
  // the factor in t1 sorts before the one in t2.
  auto key = [](const Poly& p) {
    std::vector<std::pair<Exponents, Rat>> terms;
    for (const auto& [e, c] : p.terms) terms.emplace_back(Exponents(e.rbegin(), e.rend()), c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return terms;
  };
  return key(a) < key(b);
}

std::optional<Poly> try_divexact(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("polynomial variable count mismatch");
  if (b.is_zero()) return std::nullopt;
  Poly q = Poly::zero(a.nvars);
  Poly r = a;
  const auto lb = leading_term(b);
  while (!r.is_zero()) {
    const auto lr = leading_term(r);
    Exponents e(a.nvars);
    for (std::size_t i = 0; i < a.nvars; ++i) {
      if (lr->first[i] < lb->first[i]) return std::nullopt;
      e[i] = lr->first[i] - lb->first[i];
    }
    Poly m = Poly::monomial(std::move(e), lr->second / lb->second);
    q = q + m;
    r = r - m * b;
  }
  return q;
}

Poly truncate_total_degree(const Poly& p, unsigned order) {
  Poly out = Poly::zero(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (exp_total(e) <= order) out.terms.emplace(e, c);
  }
  return out;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.nvars != vars.size()) throw std::invalid_argument("variable name count mismatch");
  if (p.is_zero()) return "0";
  bool short_names = true;
  for (const auto& v : vars) short_names = short_names && v.size() == 1;

  // Terms ascending by (total degree, exponents) reads like a series front.
  std::vector<std::pair<Exponents, Rat>> terms(p.terms.begin(), p.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    unsigned tx = exp_total(x.first);
    unsigned ty = exp_total(y.first);
    if (tx != ty) return tx < ty;
    return x.first < y.first;
  });

  std::string out;
  for (const auto& [e, c] : terms) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty() && !short_names) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_to_string(ac);
    } else if (ac == 1) {
      out += mono;
    } else {
      out += rat_to_string(ac);
      if (!short_names || denominator(ac) != 1) out += "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace catgb
