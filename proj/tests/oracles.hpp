#pragma once

// Brute-force reference implementations used as test oracles. These are kept
// deliberately naive: each one re-states a definition directly so that the
// optimized library code can be checked against it.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catgb/ordered_expr.hpp"

namespace oracles {

using Word = std::string;

// Does u embed into w as a letter-equal subsequence? Tries every injection.
inline bool subseq_search(const Word& u, const Word& w, std::size_t ui, std::size_t wi) {
  if (ui == u.size()) return true;
  for (std::size_t j = wi; j < w.size(); ++j)
    if (w[j] == u[ui] && subseq_search(u, w, ui + 1, j + 1)) return true;
  return false;
}

inline bool higman_leq(const Word& u, const Word& w) { return subseq_search(u, w, 0, 0); }

// Order-preserving injection phi with u_i = w_phi(i) such that every position
// j of w has some matched position j' <= j carrying the same letter.
inline bool os_leq(const Word& u, const Word& w) {
  std::size_t n = u.size(), m = w.size();
  std::vector<std::size_t> phi;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t ui, std::size_t wi) -> bool {
    if (ui == n) {
      std::vector<bool> matched(m, false);
      for (std::size_t p : phi) matched[p] = true;
      for (std::size_t j = 0; j < m; ++j) {
        bool supported = false;
        for (std::size_t jp = 0; jp <= j && !supported; ++jp)
          if (matched[jp] && w[jp] == w[j]) supported = true;
        if (!supported) return false;
      }
      return true;
    }
    for (std::size_t j = wi; j < m; ++j) {
      if (w[j] != u[ui]) continue;
      phi.push_back(j);
      if (rec(ui + 1, j + 1)) return true;
      phi.pop_back();
    }
    return false;
  };
  return rec(0, 0);
}

inline bool oi_leq(const Word& u, const Word& w) {
  auto zeros = [](const Word& x) { return std::count(x.begin(), x.end(), '0'); };
  return zeros(u) == zeros(w) && higman_leq(u, w);
}

// All words over `alphabet` of length <= max_len, in shortlex order.
inline std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<Word> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

// Does the expression match w exactly? Concatenation tries every split, so
// this stays a direct reading of the semantics.
inline bool expr_match(const catgb::OrderedExpr& e, const Word& w) {
  using K = catgb::OrderedExpr::Kind;
  switch (e.kind) {
    case K::epsilon:
      return w.empty();
    case K::singleton:
      return w.size() == 1 && w[0] == e.letter;
    case K::star:
      return std::all_of(w.begin(), w.end(),
                         [&](char c) { return e.letters.find(c) != std::string::npos; });
    case K::union_of:
      return std::any_of(e.items.begin(), e.items.end(),
                         [&](const catgb::OrderedExpr& item) { return expr_match(item, w); });
    case K::concat: {
      std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t from) {
        if (idx == e.items.size()) return from == w.size();
        for (std::size_t to = from; to <= w.size(); ++to)
          if (expr_match(e.items[idx], w.substr(from, to - from)) && rec(idx + 1, to)) return true;
        return false;
      };
      return rec(0, 0);
    }
  }
  return false;
}

// Runs fn over every tuple in [1..base]^len.
inline void for_each_tuple(int base, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> t(len, 1);
  if (base < 1 && len > 0) return;
  while (true) {
    fn(t);
    int i = len - 1;
    while (i >= 0 && t[i] == base) t[i--] = 1;
    if (i < 0) return;
    ++t[i];
  }
}

// Morphism counts by iterating over raw tables, one kind at a time.

inline long long count_oi_tables(int d, int n, int m, bool balanced = false) {
  long long total = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    for_each_tuple(d, m - n, [&](const std::vector<int>& colors) {
      if (balanced) {
        std::vector<int> cnt(d + 1, 0);
        for (int c : colors) ++cnt[c];
        for (int c = 2; c <= d; ++c)
          if (cnt[c] != cnt[1]) return;
      }
      ++total;
    });
  }
  return total;
}

inline long long count_fi_tables(int d, int n, int m) {
  long long total = 0;
  for_each_tuple(m, n, [&](const std::vector<int>& values) {
    std::set<int> image(values.begin(), values.end());
    if (static_cast<int>(image.size()) != n) return;
    for_each_tuple(d, m - n, [&](const std::vector<int>&) { ++total; });
  });
  return total;
}

inline long long count_surjections(int n, int m, bool canonical) {
  long long total = 0;
  for_each_tuple(n, m, [&](const std::vector<int>& values) {
    std::set<int> image(values.begin(), values.end());
    if (static_cast<int>(image.size()) != n) return;
    if (canonical) {
      int seen = 0;
      for (int v : values) {
        if (v > seen + 1) return;
        seen = std::max(seen, v);
      }
    }
    ++total;
  });
  return total;
}

inline long long count_functions(int n, int m) {
  long long total = 0;
  for_each_tuple(m, n, [&](const std::vector<int>&) { ++total; });
  return total;
}

// Function-level composition of encoded words, by explicit index bookkeeping.

inline Word oi_compose_functions(const Word& outer, const Word& inner) {
  // outer: source = zero count, target = length; positions of zeros are the
  // image. The composite image is outer's image restricted to inner's zeros.
  std::vector<std::size_t> outer_image;
  for (std::size_t j = 0; j < outer.size(); ++j)
    if (outer[j] == '0') outer_image.push_back(j);
  Word result = outer;
  for (std::size_t i = 0; i < outer_image.size(); ++i) result[outer_image[i]] = inner[i];
  return result;
}

inline Word os_compose_functions(const Word& outer, const Word& inner) {
  // Value tables compose pointwise: result(j) = inner(outer(j)).
  Word result;
  for (char c : outer) result.push_back(inner[static_cast<std::size_t>(c - '1')]);
  return result;
}

// Is L(e) recognizable by a DFA whose only cycles are self-loops?  Textbook
// route: epsilon-NFA, subset construction over `alphabet` (the empty subset
// is the sink), Moore minimization, then a mutual-reachability scan.  The
// minimal DFA of such a language has the same property, so the scan on the
// minimal machine decides the class.
inline bool ordered_recognizable(const catgb::OrderedExpr& e, const std::string& alphabet) {
  using Expr = catgb::OrderedExpr;
  std::vector<std::map<char, std::set<int>>> step;
  std::vector<std::set<int>> eps;
  auto add_state = [&] {
    step.emplace_back();
    eps.emplace_back();
    return static_cast<int>(step.size()) - 1;
  };
  std::function<std::pair<int, int>(const Expr&)> build =
      [&](const Expr& x) -> std::pair<int, int> {
    int s = add_state(), t = add_state();
    switch (x.kind) {
      case Expr::Kind::epsilon:
        eps[s].insert(t);
        break;
      case Expr::Kind::singleton:
        step[s][x.letter].insert(t);
        break;
      case Expr::Kind::star:
        eps[s].insert(t);
        for (char c : x.letters) step[t][c].insert(t);
        break;
      case Expr::Kind::concat: {
        int prev = s;
        for (const Expr& item : x.items) {
          auto [a, b] = build(item);
          eps[prev].insert(a);
          prev = b;
        }
        eps[prev].insert(t);
        break;
      }
      case Expr::Kind::union_of:
        for (const Expr& item : x.items) {
          auto [a, b] = build(item);
          eps[s].insert(a);
          eps[b].insert(t);
        }
        break;
    }
    return {s, t};
  };
  auto [start, accept] = build(e);
  auto closure = [&](std::set<int> states) {
    std::vector<int> work(states.begin(), states.end());
    while (!work.empty()) {
      int q = work.back();
      work.pop_back();
      for (int r : eps[q])
        if (states.insert(r).second) work.push_back(r);
    }
    return states;
  };

  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> subsets;
  std::vector<std::vector<int>> delta;
  std::vector<bool> is_final;
  auto intern = [&](const std::set<int>& s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(s);
      delta.emplace_back(alphabet.size(), -1);
      is_final.push_back(s.count(accept) > 0);
    }
    return it->second;
  };
  intern(closure({start}));
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::set<int> next;
      for (int p : subsets[q]) {
        auto it = step[p].find(alphabet[a]);
        if (it != step[p].end()) next.insert(it->second.begin(), it->second.end());
      }
      delta[q][a] = intern(closure(next));
    }
  }

  const int n = static_cast<int>(subsets.size());
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = is_final[q] ? 1 : 0;
  std::size_t classes = std::set<int>(cls.begin(), cls.end()).size();
  while (true) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> refined(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> key{cls[q]};
      for (std::size_t a = 0; a < alphabet.size(); ++a) key.push_back(cls[delta[q][a]]);
      refined[q] = sig.emplace(key, static_cast<int>(sig.size())).first->second;
    }
    bool stable = sig.size() == classes;
    classes = sig.size();
    cls = refined;
    if (stable) break;
  }

  const int k = static_cast<int>(classes);
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (int q = 0; q < n; ++q)
    for (std::size_t a = 0; a < alphabet.size(); ++a) reach[cls[q]][cls[delta[q][a]]] = true;
  for (int via = 0; via < k; ++via)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (reach[i][via] && reach[via][j]) reach[i][j] = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (reach[i][j] && reach[j][i]) return false;
  return true;
}

}  // namespace oracles
