#pragma once

#include <map>
#include <string>
#include <vector>

#include "catgb/category.hpp"
#include "catgb/rational_series.hpp"
#include "catgb/word_order.hpp"

namespace catgb {

// A homogeneous element of the principal projective at [n]: a rational
// combination of morphism words with common source n and common target m.
struct ModuleElement {
  CategoryId cat;
  int n = 0;
  int m = 0;
  std::map<Word, Rat> coeffs;  // zero coefficients never stored
};

// Syntax: terms joined by + or -, each "rational*[word]"; "0" is the zero
// element.  All words must share one target size.
ModuleElement parse_module_element(const CategoryId& cat, int n, const std::string& text);
std::string module_element_to_string(const ModuleElement& e);

// Largest word of the support under (target size, lex).
Word initial_word(const ModuleElement& e);

// Degreewise reduced echelon bases of the submodule spanned by all category
// translates of the generators, for target sizes up to D.
struct TruncatedModule {
  CategoryId cat;
  int n = 0;
  int D = 0;
  std::vector<std::vector<Word>> columns;           // per degree, descending (target, lex)
  std::vector<std::vector<std::vector<Rat>>> rows;  // per degree, reduced echelon
  std::vector<std::vector<std::size_t>> pivots;     // pivot column of each row, ascending

  std::vector<std::size_t> dims() const;
};

TruncatedModule span_generators(const CategoryId& cat, int n,
                                const std::vector<ModuleElement>& gens, int D);

bool module_contains(const TruncatedModule& mod, const ModuleElement& e);

// Generators of a monomial submodule, as minimal words in the pattern order.
struct MonomialIdealGens {
  WordOrder order;
  std::vector<Word> generators;
  int complete_up_to = 0;
};

// Pivot words of every degree, reduced to their minimal elements.
MonomialIdealGens initial_module(const TruncatedModule& mod);

// True when the candidates lie in the module and their initial words
// generate every pivot word up to degree D.  A candidate outside the module
// is a domain error.
bool is_groebner_up_to(const TruncatedModule& mod, const std::vector<ModuleElement>& candidate,
                       int D);

// Hilbert series of the monomial module spanned by an ideal of words, graded
// by target size.
RationalSeries module_series(const CategoryId& cat, int n, const MonomialIdealGens& ideal);

// Projective series minus the module series.
RationalSeries quotient_series(const CategoryId& cat, int n, const MonomialIdealGens& ideal);

}  // namespace catgb
