#include "catgb/word_order.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace catgb {

WordOrder WordOrder::higman(Alphabet a) {
  return WordOrder{OrderKind::higman_subsequence, std::move(a), 0};
}

WordOrder WordOrder::os(int n) {
  return WordOrder{OrderKind::os_pattern, os_alphabet(n), 0};
}

WordOrder WordOrder::oi(int d) {
  return WordOrder{OrderKind::oi_zero_aligned, oi_alphabet(d), d};
}

Alphabet oi_alphabet(int d) {
  if (d < 0 || d > 9) throw bounds_error("zero-aligned alphabets support 0 <= d <= 9");
  Alphabet a;
  for (int c = 0; c <= d; ++c) a.push_back(static_cast<char>('0' + c));
  return a;
}

Alphabet os_alphabet(int n) {
  if (n < 0 || n > 9) throw bounds_error("surjection alphabets support 0 <= n <= 9");
  Alphabet a;
  for (int c = 1; c <= n; ++c) a.push_back(static_cast<char>('0' + c));
  return a;
}

int zero_count(const Word& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), '0'));
}

bool is_valid_os_word(const Word& w, int n) {
  std::array<bool, 10> seen{};
  int distinct = 0;
  for (char c : w) {
    int v = c - '0';
    if (v < 1 || v > n) return false;
    if (!seen[v]) {
      // First occurrences must appear in the order 1, 2, ..., n.
      if (v != distinct + 1) return false;
      seen[v] = true;
      ++distinct;
    }
  }
  return distinct == n;
}

bool is_valid_oi_word(const Word& w, int d, int n) {
  int zeros = 0;
  for (char c : w) {
    int v = c - '0';
    if (v < 0 || v > d) return false;
    if (v == 0) ++zeros;
  }
  return zeros == n;
}

bool higman_leq(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j)
    if (w[j] == u[i]) ++i;
  return i == u.size();
}

bool os_leq(const Word& u, const Word& w) {
  // Membership of w in u1 P1* u2 P2* ... uk Pk* with Pi = {u1,...,ui}.
  // Greedy advance is safe because the filler alphabets are nested increasing
  // and each u(i+1) lies in P(i+1).
  std::array<bool, 256> filler{};
  std::size_t i = 0;  // letters of u matched so far
  for (std::size_t j = 0; j < w.size(); ++j) {
    unsigned char c = static_cast<unsigned char>(w[j]);
    if (i < u.size() && w[j] == u[i]) {
      filler[static_cast<unsigned char>(u[i])] = true;
      ++i;
    } else if (!filler[c]) {
      return false;
    }
  }
  return i == u.size();
}

bool oi_leq(const Word& u, const Word& w, int d) {
  (void)d;  // the comparison itself only needs the zero counts
  if (zero_count(u) != zero_count(w))
    throw std::domain_error("zero-aligned comparison of words with different zero counts");
  return higman_leq(u, w);
}

bool word_leq(const WordOrder& ord, const Word& u, const Word& w) {
  switch (ord.kind) {
    case OrderKind::higman_subsequence:
      return higman_leq(u, w);
    case OrderKind::os_pattern:
      return os_leq(u, w);
    case OrderKind::oi_zero_aligned:
      return oi_leq(u, w, ord.d);
  }
  throw std::logic_error("unreachable");
}

bool word_leq_or_incomparable(const WordOrder& ord, const Word& u, const Word& w) {
  if (ord.kind == OrderKind::oi_zero_aligned && zero_count(u) != zero_count(w)) return false;
  return word_leq(ord, u, w);
}

std::vector<Word> minimal_generators(const std::vector<Word>& words, const WordOrder& order) {
  std::vector<Word> kept;
  for (std::size_t i = 0; i < words.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < words.size() && !redundant; ++j) {
      if (j == i) continue;
      if (!word_leq_or_incomparable(order, words[j], words[i])) continue;
      // words[j] <= words[i]: drop words[i] unless it is an earlier duplicate.
      if (words[j] != words[i] || j < i) redundant = true;
    }
    if (!redundant) kept.push_back(words[i]);
  }
  return kept;
}

std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(
    const std::vector<Word>& seq, const WordOrder& order) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (word_leq_or_incomparable(order, seq[i], seq[j])) return std::make_pair(i, j);
  return std::nullopt;
}

PosetIdeal::PosetIdeal(WordOrder ord, std::vector<Word> gens) : order(std::move(ord)) {
  for (const Word& g : gens)
    for (char c : g)
      if (order.alphabet.find(c) == std::string::npos)
        throw std::domain_error("ideal generator uses a letter outside the order's alphabet");
  if (order.kind == OrderKind::oi_zero_aligned) {
    for (const Word& g : gens)
      if (zero_count(g) != zero_count(gens.front()))
        throw std::domain_error("zero-aligned ideal generators must share one zero count");
  }
  generators = minimal_generators(gens, order);
}

bool ideal_member(const PosetIdeal& ideal, const Word& w) {
  for (const Word& g : ideal.generators)
    if (word_leq_or_incomparable(ideal.order, g, w)) return true;
  return false;
}

}  // namespace catgb
