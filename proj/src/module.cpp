#include "catgb/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "catgb/dfa_series.hpp"
#include "catgb/errors.hpp"
#include "catgb/ordered_expr.hpp"

namespace catgb {

namespace {

void check_word_kind(const CategoryId& cat) {
  if (cat.kind != CategoryId::Kind::oi && cat.kind != CategoryId::Kind::os) {
    throw std::domain_error("modules are modeled over oi:d and os only");
  }
}

// Reduce v against the reduced echelon rows, in place.
void reduce_row(std::vector<Rat>& v, const std::vector<std::vector<Rat>>& rows,
                const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t p = pivots[i];
    if (v[p] == 0) continue;
    Rat factor = v[p];
    const auto& row = rows[i];
    v[p] = 0;
    for (std::size_t j = p + 1; j < v.size(); ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
}

// Insert v into the reduced echelon basis; returns false when v reduces to 0.
bool insert_row(std::vector<std::vector<Rat>>& rows, std::vector<std::size_t>& pivots,
                std::vector<Rat> v) {
  reduce_row(v, rows, pivots);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Rat inv = Rat(1) / v[p];
  for (std::size_t j = p; j < v.size(); ++j) {
    if (v[j] != 0) v[j] *= inv;
  }
  for (auto& row : rows) {
    if (row[p] == 0) continue;
    Rat factor = row[p];
    row[p] = 0;
    for (std::size_t j = p + 1; j < v.size(); ++j) {
      if (v[j] != 0) row[j] -= factor * v[j];
    }
  }
  auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
  std::size_t at = static_cast<std::size_t>(it - pivots.begin());
  pivots.insert(it, p);
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

std::vector<Rat> element_vector(const ModuleElement& e, const std::vector<Word>& columns) {
  std::vector<Rat> v(columns.size(), Rat(0));
  for (const auto& [w, c] : e.coeffs) {
    auto it = std::find(columns.begin(), columns.end(), w);
    if (it == columns.end()) throw std::logic_error("support word missing from the column list");
    v[it - columns.begin()] = c;
  }
  return v;
}

void validate_element(const CategoryId& cat, int n, const ModuleElement& e) {
  if (e.cat != cat) throw std::domain_error("element belongs to a different category");
  if (e.n != n) throw std::domain_error("element has source " + std::to_string(e.n) +
                                        ", expected " + std::to_string(n));
  for (const auto& [w, c] : e.coeffs) {
    MorphismWord mw = morphism_word(cat, w);
    if (mw.n != n || mw.m != e.m) {
      throw std::domain_error("word \"" + w + "\" does not map " + std::to_string(n) +
                              " to " + std::to_string(e.m));
    }
  }
}

}  // namespace

ModuleElement parse_module_element(const CategoryId& cat, int n, const std::string& text) {
  check_word_kind(cat);
  ModuleElement out;
  out.cat = cat;
  out.n = n;
  out.m = -1;
  std::size_t pos = 0;
  std::size_t end = text.size();
  auto skip_ws = [&] {
    while (pos < end && text[pos] == ' ') ++pos;
  };
  while (end > 0 && text[end - 1] == ' ') --end;
  skip_ws();
  if (pos == end) throw parse_error("empty module element");
  if (text[pos] == '0' && pos + 1 == end) {
    out.m = 0;
    return out;
  }
  bool first = true;
  while (pos < end) {
    skip_ws();
    Rat sign(1);
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (text[pos] != '+' && text[pos] != '-') {
        throw parse_error("expected + or - at offset " + std::to_string(pos) + " in: " + text);
      }
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    }
    std::size_t star = text.find('*', pos);
    if (star == std::string::npos || star >= end) {
      throw parse_error("missing '*' in term: " + text);
    }
    std::size_t coeff_end = star;
    while (coeff_end > pos && text[coeff_end - 1] == ' ') --coeff_end;
    Rat coeff = sign * rat_from_string(text.substr(pos, coeff_end - pos));
    pos = star + 1;
    skip_ws();
    if (pos >= end || text[pos] != '[') throw parse_error("missing '[' in term: " + text);
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos || close >= end) {
      throw parse_error("missing ']' in term: " + text);
    }
    Word w = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    skip_ws();
    first = false;

    if (out.m < 0) out.m = static_cast<int>(w.size());
    if (static_cast<int>(w.size()) != out.m) {
      throw std::domain_error("mixed target sizes in one element: " + text);
    }
    if (coeff != 0) {
      out.coeffs[w] += coeff;
      if (out.coeffs[w] == 0) out.coeffs.erase(w);
    }
  }
  if (out.m < 0) out.m = 0;
  validate_element(cat, n, out);
  return out;
}

std::string module_element_to_string(const ModuleElement& e) {
  if (e.coeffs.empty()) return "0";
  // Terms from the initial word down.
  std::vector<std::pair<Word, Rat>> terms(e.coeffs.begin(), e.coeffs.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return admissible_less(b.first, a.first); });
  std::string out;
  for (const auto& [w, c] : terms) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += rat_to_string(ac) + "*[" + w + "]";
  }
  return out;
}

Word initial_word(const ModuleElement& e) {
  if (e.coeffs.empty()) throw std::domain_error("the zero element has no initial word");
  Word best;
  bool have = false;
  for (const auto& [w, c] : e.coeffs) {
    if (!have || admissible_less(best, w)) {
      best = w;
      have = true;
    }
  }
  return best;
}

std::vector<std::size_t> TruncatedModule::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.size());
  return out;
}

TruncatedModule span_generators(const CategoryId& cat, int n,
                                const std::vector<ModuleElement>& gens, int D) {
  check_word_kind(cat);
  if (n < 0 || D < 0) throw std::domain_error("sizes must be nonnegative");
  for (const auto& g : gens) validate_element(cat, n, g);

  TruncatedModule mod;
  mod.cat = cat;
  mod.n = n;
  mod.D = D;
  mod.columns.resize(D + 1);
  mod.rows.resize(D + 1);
  mod.pivots.resize(D + 1);
  for (int m = 0; m <= D; ++m) {
    auto words = hom_words(cat, n, m);
    std::sort(words.begin(), words.end(),
              [](const Word& a, const Word& b) { return admissible_less(b, a); });
    mod.columns[m] = std::move(words);
    for (const auto& g : gens) {
      if (g.m > m || g.coeffs.empty()) continue;
      for (const Word& h : hom_words(cat, g.m, m)) {
        std::vector<Rat> v(mod.columns[m].size(), Rat(0));
        for (const auto& [w, c] : g.coeffs) {
          Word moved = compose_words(cat, h, w);
          auto it = std::find(mod.columns[m].begin(), mod.columns[m].end(), moved);
          v[it - mod.columns[m].begin()] += c;
        }
        insert_row(mod.rows[m], mod.pivots[m], std::move(v));
      }
    }
  }
  return mod;
}

bool module_contains(const TruncatedModule& mod, const ModuleElement& e) {
  validate_element(mod.cat, mod.n, e);
  if (e.coeffs.empty()) return true;
  if (e.m > mod.D) throw std::domain_error("element target exceeds the truncation degree");
  std::vector<Rat> v = element_vector(e, mod.columns[e.m]);
  reduce_row(v, mod.rows[e.m], mod.pivots[e.m]);
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

MonomialIdealGens initial_module(const TruncatedModule& mod) {
  WordOrder order = category_word_order(mod.cat, mod.n);
  std::vector<Word> leads;
  for (int m = 0; m <= mod.D; ++m) {
    for (std::size_t p : mod.pivots[m]) leads.push_back(mod.columns[m][p]);
  }
  MonomialIdealGens out;
  out.generators = minimal_generators(leads, order);
  out.order = std::move(order);
  out.complete_up_to = mod.D;
  return out;
}

bool is_groebner_up_to(const TruncatedModule& mod, const std::vector<ModuleElement>& candidate,
                       int D) {
  if (D > mod.D) throw std::domain_error("the module is only spanned up to degree " +
                                         std::to_string(mod.D));
  std::vector<Word> initials;
  for (const auto& e : candidate) {
    if (e.coeffs.empty()) continue;
    if (!module_contains(mod, e)) {
      throw std::domain_error("candidate element is not in the module: " +
                              module_element_to_string(e));
    }
    initials.push_back(initial_word(e));
  }
  PosetIdeal ideal(category_word_order(mod.cat, mod.n), std::move(initials));
  for (int m = 0; m <= D; ++m) {
    for (std::size_t p : mod.pivots[m]) {
      if (!ideal_member(ideal, mod.columns[m][p])) return false;
    }
  }
  return true;
}

RationalSeries module_series(const CategoryId& cat, int n, const MonomialIdealGens& ideal) {
  check_word_kind(cat);
  WordOrder expected = category_word_order(cat, n);
  if (ideal.order.kind != expected.kind || ideal.order.alphabet != expected.alphabet ||
      ideal.order.d != expected.d) {
    throw std::domain_error("ideal order does not match the category at source " +
                            std::to_string(n));
  }
  for (const Word& g : ideal.generators) {
    MorphismWord mw = morphism_word(cat, g);
    if (mw.n != n) {
      throw std::domain_error("generator \"" + g + "\" has source " + std::to_string(mw.n) +
                              ", expected " + std::to_string(n));
    }
  }
  PosetIdeal pid(ideal.order, ideal.generators);
  Dfa d = compile_expr(ideal_to_expr(pid), expected.alphabet);
  return dfa_series(d, NormedAlphabet::length_norm(expected.alphabet));
}

RationalSeries quotient_series(const CategoryId& cat, int n, const MonomialIdealGens& ideal) {
  return series_sub(principal_projective_series(cat, n), module_series(cat, n, ideal));
}

}  // namespace catgb
