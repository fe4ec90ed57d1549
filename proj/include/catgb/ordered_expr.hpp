#pragma once

#include <string>
#include <vector>

#include "catgb/dfa.hpp"
#include "catgb/word_order.hpp"

namespace catgb {

// Star-free-in-depth expressions: stars apply to letter subsets only, so the
// denoted languages are exactly the finite unions of concatenations of
// singletons and subset stars.
struct OrderedExpr {
  enum class Kind { epsilon, singleton, star, concat, union_of };

  Kind kind = Kind::epsilon;
  char letter = 0;                 // singleton
  std::string letters;             // star subset, sorted distinct
  std::vector<OrderedExpr> items;  // concat / union_of; an empty union is the empty language

  static OrderedExpr eps();
  static OrderedExpr single(char c);
  static OrderedExpr star(std::string set);
  static OrderedExpr concat(std::vector<OrderedExpr> items);
  static OrderedExpr union_of(std::vector<OrderedExpr> items);
};

bool operator==(const OrderedExpr& a, const OrderedExpr& b);
inline bool operator!=(const OrderedExpr& a, const OrderedExpr& b) { return !(a == b); }

Alphabet expr_alphabet(const OrderedExpr& e);

// Text syntax: 'a' singleton, [ab]* subset star, juxtaposition for
// concatenation, | for union, eps, empty, parentheses.
std::string print_expr(const OrderedExpr& e);
OrderedExpr parse_expr(const std::string& text);  // throws parse_error

// Ordered DFA recognizing L(e) over the given alphabet (default: the letters
// of e). Throws std::domain_error when no ordered DFA recognizes L(e).
Dfa compile_expr(const OrderedExpr& e);
Dfa compile_expr(const OrderedExpr& e, const Alphabet& alphabet);

// State-elimination over a topological order of the (minimized) state graph;
// requires ordered input.
OrderedExpr dfa_to_expr(const Dfa& d);

// Pattern language of the ideal, one concatenation block per generator:
// subsequence ideals interleave full-alphabet stars, zero-aligned ideals
// interleave stars of the nonzero letters, surjection-word ideals grow the
// filler set letter by letter.
OrderedExpr ideal_to_expr(const PosetIdeal& ideal);

// Words of L(e) up to max_len, shortlex, by simulating the expression
// directly (works for unrecognizable languages too).
std::vector<Word> enumerate_language(const OrderedExpr& e, std::size_t max_len,
                                     std::size_t limit = kEnumerationLimit);

}  // namespace catgb
