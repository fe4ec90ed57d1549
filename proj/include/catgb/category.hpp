#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgb/rat.hpp"
#include "catgb/rational_series.hpp"
#include "catgb/word_order.hpp"

namespace catgb {

// One of the combinatorial categories the library models. The color count d
// applies to the oi/fi/oieq kinds; products list their components.
struct CategoryId {
  enum class Kind { oi, fi, os, fs, fa, oieq, product };
  Kind kind = Kind::oi;
  int d = 1;
  std::vector<CategoryId> factors;

  static CategoryId oi(int d);
  static CategoryId fi(int d);
  static CategoryId os();
  static CategoryId fs();
  static CategoryId fa();
  static CategoryId oieq(int d);
  static CategoryId product(std::vector<CategoryId> factors);
};

bool operator==(const CategoryId& a, const CategoryId& b);
inline bool operator!=(const CategoryId& a, const CategoryId& b) { return !(a == b); }

// Text forms: "oi:2", "fi:1", "os", "fs", "fa", "oieq:3", "os^2".  A bare
// "oi", "fi" or "oieq" means color count 1.
CategoryId parse_category(const std::string& text);
std::string category_to_string(const CategoryId& cat);

// Number of morphisms n -> m, by closed form.  The vector overload is for
// product categories; base kinds take singleton tuples.
Int hom_count(const CategoryId& cat, int n, int m);
Int hom_count(const CategoryId& cat, const std::vector<int>& n, const std::vector<int>& m);

// A morphism as plain function tables.
//  - oi/fi/oieq: values[i] = f(i+1) in [m] (strictly increasing for oi and
//    oieq), colors[j-1] in [d] for the points j outside the image, 0 on it;
//  - os/fs: values[j] = value of the surjection [m] -> [n] at j+1;
//  - fa: values[i] = f(i+1) in [m], arbitrary.
struct Morphism {
  int n = 0, m = 0;
  std::vector<int> values;
  std::vector<int> colors;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// All morphisms n -> m in a deterministic order.
std::vector<Morphism> hom_enumerate(const CategoryId& cat, int n, int m);

// Letter encoding of a morphism for the oi family and os.
struct MorphismWord {
  CategoryId cat;
  int n = 0, m = 0;
  Word word;
};

// Builds a MorphismWord from its letters, inferring and validating n and m.
MorphismWord morphism_word(const CategoryId& cat, const Word& w);

MorphismWord encode(const CategoryId& cat, const Morphism& f);
Morphism decode(const MorphismWord& f);

bool is_valid_hom_word(const CategoryId& cat, int n, int m, const Word& w);

// All encoded morphism words n -> m, ascending lexicographic.
std::vector<Word> hom_words(const CategoryId& cat, int n, int m);

// Word of outer . inner; the inner target must equal the outer source.
Word compose_words(const CategoryId& cat, const Word& outer, const Word& inner);

// Does some h satisfy g = h . f?  Requires equal source objects.
bool divides(const CategoryId& cat, const Word& f, const Word& g);

// The order whose poset ideals are the monomial submodules of the projective
// at [n].
WordOrder category_word_order(const CategoryId& cat, int n);

// (target size, lex with 0 < 1 < ... < 9) on encoded morphisms.
bool admissible_less(const Word& a, const Word& b);

RationalSeries principal_projective_series(const CategoryId& cat, const std::vector<int>& n);
RationalSeries principal_projective_series(const CategoryId& cat, int n);

// Smallest k whose k-th finite difference vanishes on values[from..]; returns
// the polynomial degree and the interpolating polynomial in one variable, or
// nullopt when no difference order settles inside the window.
std::optional<std::pair<int, Poly>> fa_polynomiality_certificate(const std::vector<Rat>& values,
                                                                 std::size_t from);

// Run lengths of ones around the zeros of an OI(1) word: the exponent vector
// of the corresponding monomial in n+1 commuting variables.
Exponents oi_monomial_bijection(const MorphismWord& f);

}  // namespace catgb
