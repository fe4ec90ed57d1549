#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgb/errors.hpp"

namespace catgb {

// Words are strings of single-character letters; category alphabets use the
// digits '0'..'9' (so d, n <= 9, which is far beyond what exact truncations
// can reach anyway).
using Word = std::string;
using Alphabet = std::string;  // distinct letters, ascending

enum class OrderKind {
  higman_subsequence,  // letter-equal subsequence order
  os_pattern,          // surjection-word pattern order with nested fillers
  oi_zero_aligned,     // subsequence order on words with a fixed zero count
};

struct WordOrder {
  OrderKind kind = OrderKind::higman_subsequence;
  Alphabet alphabet;  // the alphabet the order applies to
  int d = 0;          // nonzero letter count for oi_zero_aligned

  static WordOrder higman(Alphabet a);
  static WordOrder os(int n);
  static WordOrder oi(int d);
};

Alphabet oi_alphabet(int d);  // "0","1",...,"d"
Alphabet os_alphabet(int n);  // "1",...,"n"

int zero_count(const Word& w);

// Surjective onto [n] with first occurrences in increasing order.
bool is_valid_os_word(const Word& w, int n);
// Over {0..d} with exactly n zeros.
bool is_valid_oi_word(const Word& w, int d, int n);

bool higman_leq(const Word& u, const Word& w);
bool os_leq(const Word& u, const Word& w);
// Throws std::domain_error when zero counts differ.
bool oi_leq(const Word& u, const Word& w, int d);

bool word_leq(const WordOrder& ord, const Word& u, const Word& w);

// word_leq, with incomparability (instead of a domain error) for words in
// different zero-count classes. Used by ideal membership and minimization.
bool word_leq_or_incomparable(const WordOrder& ord, const Word& u, const Word& w);

std::vector<Word> minimal_generators(const std::vector<Word>& words, const WordOrder& order);

// Lexicographically first (i, j), i < j, 0-based, with seq[i] <= seq[j].
std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(
    const std::vector<Word>& seq, const WordOrder& order);

struct PosetIdeal {
  WordOrder order;
  std::vector<Word> generators;  // minimal, insertion order preserved

  PosetIdeal(WordOrder ord, std::vector<Word> gens);
};

bool ideal_member(const PosetIdeal& ideal, const Word& w);

}  // namespace catgb
