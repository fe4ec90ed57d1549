#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catgb/dfa.hpp"
#include "catgb/rational_series.hpp"

namespace catgb {

// Context-free grammar over single-character symbols.
struct Cfg {
  std::string terminals;
  std::string nonterminals;  // disjoint from terminals
  std::vector<std::pair<char, std::string>> rules;
  char start = 0;
};

void validate_cfg(const Cfg& g);  // throws std::domain_error

// Coefficient at norm vector v = total number of derivation trees over all
// words of that norm, up to total degree <= order.  Ambiguous grammars count
// words with multiplicity.  Grammars whose derivation counts do not settle
// (cyclic unit or epsilon structure) are rejected.
CoeffTable cfg_count(const Cfg& g, const NormedAlphabet& norms, unsigned order);

// Derivable words of length <= max_len, shortlex, each word once.
std::vector<Word> enumerate_language(const Cfg& g, std::size_t max_len,
                                     std::size_t limit = kEnumerationLimit);

// Univariate table with (d*n)!/(n!)^d at degree d*n: words made of d letters
// in equal counts.
CoeffTable multinomial_series(unsigned d, unsigned order);

}  // namespace catgb
