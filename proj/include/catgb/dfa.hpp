#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catgb/errors.hpp"
#include "catgb/word_order.hpp"

namespace catgb {

// Default cap on enumeration length; callers can raise it explicitly.
inline constexpr std::size_t kEnumerationLimit = 12;

// A norm assigns each letter a vector of naturals over a shared list of
// variables, extended to words by coordinatewise addition. The default is
// the length norm: one variable, every letter weighing 1.
struct NormedAlphabet {
  Alphabet letters;
  std::vector<std::string> variables;
  std::vector<std::vector<unsigned>> norms;  // norms[i].size() == variables.size()

  static NormedAlphabet length_norm(const Alphabet& letters, const std::string& variable = "t");

  std::size_t letter_index(char c) const;  // throws std::domain_error
};

// Total DFA: trans[q][i] is the successor of state q on alphabet[i].
struct Dfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> trans;
  std::vector<std::size_t> finals;  // ascending, distinct

  std::size_t letter_index(char c) const;  // throws std::domain_error
  bool is_final(std::size_t q) const;
};

Dfa epsilon_dfa(const Alphabet& alphabet);         // accepts {""}
Dfa empty_language_dfa(const Alphabet& alphabet);  // accepts nothing

bool dfa_accepts(const Dfa& d, const Word& w);

// True iff every strongly connected component of the transition digraph is a
// single state; self-loops are allowed.
bool is_ordered(const Dfa& d);

std::vector<char> reachable_mask(const Dfa& d);
std::vector<char> coreachable_mask(const Dfa& d);

// Full product automaton with finals (F x Q') u (Q x F'). Requires both
// inputs ordered and over the same alphabet.
Dfa ordered_union(const Dfa& a, const Dfa& b);

// One single-final copy per final state, in ascending state order.
std::vector<Dfa> split_by_final(const Dfa& d);

// Ordered DFA for L(d)·{c}. Works final state by final state; a final whose
// self-loop letters include c next to at least one other letter makes the
// concatenation unrecognizable by any ordered DFA, and throws
// std::domain_error.
Dfa concat_singleton(const Dfa& d, char c);

// Ordered DFA for L(d)·pi*. Always succeeds on ordered input.
Dfa concat_star(const Dfa& d, const std::string& pi);

// Moore partition refinement on the reachable part. Preserves the language;
// also preserves orderedness (the minimal DFA of a language recognized by an
// ordered DFA is again ordered).
Dfa minimize(const Dfa& d);

// Accepted words of length <= max_len, shortlex. max_len beyond the limit is
// a bounds error.
std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len,
                                     std::size_t limit = kEnumerationLimit);

// Self-loop letter sets of the states lying on some accepting path, each set
// sorted, deduplicated keeping first occurrence in state order.
std::vector<std::string> repeatable_subsets(const Dfa& d);

}  // namespace catgb
