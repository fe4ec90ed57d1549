#include "catgb/dfa_series.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace catgb {

namespace {

// Determinant by fraction-free elimination; every division is exact.
Poly bareiss_det(std::vector<std::vector<Poly>> m, std::size_t nv) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nv, 1);
  Poly prev = Poly::constant(nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly::zero(nv);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = try_divexact(num, prev);
        if (!q) throw std::logic_error("fraction-free elimination produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly::zero(nv);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

RationalSeries dfa_series(const Dfa& d, const NormedAlphabet& norms) {
  const std::size_t nv = norms.variables.size();
  if (nv == 0) throw std::domain_error("normed alphabet has no variables");
  if (norms.norms.size() != norms.letters.size()) {
    throw std::domain_error("norm table size does not match the alphabet");
  }
  for (std::size_t i = 0; i < norms.letters.size(); ++i) {
    if (norms.norms[i].size() != nv) throw std::domain_error("norm vector dimension mismatch");
    unsigned total = 0;
    for (unsigned v : norms.norms[i]) total += v;
    if (total == 0) {
      throw std::domain_error(std::string("letter '") + norms.letters[i] + "' has zero norm");
    }
  }
  if (d.trans.size() != d.num_states) throw std::domain_error("non-total transition table");
  for (const auto& row : d.trans) {
    if (row.size() != d.alphabet.size()) throw std::domain_error("non-total transition table");
    for (std::size_t to : row) {
      if (to >= d.num_states) throw std::domain_error("transition target out of range");
    }
  }
  if (d.num_states == 0 || d.initial >= d.num_states) {
    throw std::domain_error("automaton has no valid initial state");
  }
  std::vector<std::size_t> letter_norm_index(d.alphabet.size());
  for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
    auto pos = norms.letters.find(d.alphabet[l]);
    if (pos == std::string::npos) {
      throw std::domain_error(std::string("letter '") + d.alphabet[l] + "' has no norm");
    }
    letter_norm_index[l] = pos;
  }
  auto letter_monomial = [&](std::size_t l) {
    Exponents e(norms.norms[letter_norm_index[l]].begin(), norms.norms[letter_norm_index[l]].end());
    return Poly::monomial(std::move(e), Rat(1));
  };

  // Restrict to useful states; the series only sees accepting paths.
  std::vector<bool> useful(d.num_states, false);
  {
    auto reach = reachable_mask(d);
    auto coreach = coreachable_mask(d);
    for (std::size_t q = 0; q < d.num_states; ++q) useful[q] = reach[q] && coreach[q];
  }
  std::vector<std::size_t> pack(d.num_states, SIZE_MAX);
  std::vector<std::size_t> unpack;
  for (std::size_t q = 0; q < d.num_states; ++q) {
    if (useful[q]) {
      pack[q] = unpack.size();
      unpack.push_back(q);
    }
  }
  const std::size_t n = unpack.size();
  if (n == 0 || !useful[d.initial]) return series_zero(norms.variables);

  // Transfer matrix over useful states.
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly::zero(nv)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
      std::size_t to = d.trans[unpack[i]][l];
      if (useful[to]) a[i][pack[to]] = a[i][pack[to]] + letter_monomial(l);
    }
  }
  const std::size_t init = pack[d.initial];
  std::vector<std::size_t> finals;
  for (std::size_t f : d.finals) {
    if (useful[f]) finals.push_back(pack[f]);
  }

  // Ordered case: only self-loops among the diagonal, so states sort
  // topologically and each state's series follows from its predecessors.
  {
    std::vector<unsigned> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !a[i][j].is_zero()) ++indeg[j];
      }
    }
    std::vector<std::size_t> topo;
    std::vector<std::size_t> queue;
    for (std::size_t j = 0; j < n; ++j) {
      if (indeg[j] == 0) queue.push_back(j);
    }
    while (!queue.empty()) {
      std::size_t i = queue.back();
      queue.pop_back();
      topo.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && !a[i][j].is_zero() && --indeg[j] == 0) queue.push_back(j);
      }
    }
    if (topo.size() == n) {
      std::vector<RationalSeries> f(n, series_zero(norms.variables));
      for (std::size_t j : topo) {
        RationalSeries s = series_zero(norms.variables);
        if (j == init) s.numerator = Poly::constant(nv, 1);
        for (std::size_t i = 0; i < n; ++i) {
          if (i != j && !a[i][j].is_zero()) s = series_add(s, series_mul_poly(f[i], a[i][j]));
        }
        f[j] = series_div_one_minus(s, a[j][j]);
      }
      RationalSeries h = series_zero(norms.variables);
      for (std::size_t t : finals) h = series_add(h, f[t]);
      return series_normalize(std::move(h));
    }
  }

  // General case: paths from the initial state solve x(I - A) = e_init, so
  // x_t is a signed cofactor of (I - A) over its determinant.
  std::vector<std::vector<Poly>> im(n, std::vector<Poly>(n, Poly::zero(nv)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      im[i][j] = (i == j ? Poly::constant(nv, 1) : Poly::zero(nv)) - a[i][j];
    }
  }
  Poly det = bareiss_det(im, nv);
  if (det.is_zero()) throw std::logic_error("singular path matrix for a finite automaton");
  Poly num = Poly::zero(nv);
  for (std::size_t t : finals) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == t) continue;
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == init) continue;
        row.push_back(im[i][j]);
      }
      minor.push_back(std::move(row));
    }
    Poly cof = bareiss_det(std::move(minor), nv);
    if ((init + t) % 2 == 1) cof = -cof;
    num = num + cof;
  }
  RationalSeries h;
  h.variables = norms.variables;
  h.numerator = std::move(num);
  Poly lambda = Poly::constant(nv, 1) - det;
  if (!lambda.is_zero()) h.denominator.emplace_back(std::move(lambda), 1);
  return series_normalize(std::move(h));
}

}  // namespace catgb
