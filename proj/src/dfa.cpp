#include "catgb/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace catgb {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string self_loop_letters(const Dfa& d, std::size_t q) {
  std::string out;
  for (std::size_t i = 0; i < d.alphabet.size(); ++i)
    if (d.trans[q][i] == q) out.push_back(d.alphabet[i]);
  std::sort(out.begin(), out.end());
  return out;
}

void require_ordered(const Dfa& d) {
  if (!is_ordered(d)) throw std::domain_error("unordered input DFA");
}

}  // namespace

NormedAlphabet NormedAlphabet::length_norm(const Alphabet& letters, const std::string& variable) {
  NormedAlphabet na;
  na.letters = letters;
  na.variables = {variable};
  na.norms.assign(letters.size(), {1u});
  return na;
}

std::size_t NormedAlphabet::letter_index(char c) const {
  auto pos = letters.find(c);
  if (pos == std::string::npos)
    throw std::domain_error(std::string("letter '") + c + "' not in alphabet");
  return pos;
}

std::size_t Dfa::letter_index(char c) const {
  auto pos = alphabet.find(c);
  if (pos == std::string::npos)
    throw std::domain_error(std::string("letter '") + c + "' not in alphabet");
  return pos;
}

bool Dfa::is_final(std::size_t q) const {
  return std::binary_search(finals.begin(), finals.end(), q);
}

Dfa epsilon_dfa(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = 2;
  d.initial = 0;
  d.trans.assign(2, std::vector<std::size_t>(alphabet.size(), 1));
  d.finals = {0};
  return d;
}

Dfa empty_language_dfa(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = 1;
  d.initial = 0;
  d.trans.assign(1, std::vector<std::size_t>(alphabet.size(), 0));
  return d;
}

bool dfa_accepts(const Dfa& d, const Word& w) {
  std::size_t q = d.initial;
  for (char c : w) q = d.trans[q][d.letter_index(c)];
  return d.is_final(q);
}

// Iterative Tarjan; rejects as soon as a component with two states closes.
bool is_ordered(const Dfa& d) {
  const std::size_t n = d.num_states;
  const std::size_t nl = d.alphabet.size();
  std::vector<std::size_t> index(n, kNone), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      std::size_t q = frames.back().first;
      if (frames.back().second < nl) {
        std::size_t to = d.trans[q][frames.back().second++];
        if (index[to] == kNone) {
          index[to] = low[to] = next++;
          stack.push_back(to);
          on_stack[to] = 1;
          frames.emplace_back(to, 0);
        } else if (on_stack[to]) {
          low[q] = std::min(low[q], index[to]);
        }
      } else {
        if (low[q] == index[q]) {
          std::size_t size = 0, top;
          do {
            top = stack.back();
            stack.pop_back();
            on_stack[top] = 0;
            ++size;
          } while (top != q);
          if (size > 1) return false;
        }
        frames.pop_back();
        if (!frames.empty()) {
          std::size_t parent = frames.back().first;
          low[parent] = std::min(low[parent], low[q]);
        }
      }
    }
  }
  return true;
}

std::vector<char> reachable_mask(const Dfa& d) {
  std::vector<char> seen(d.num_states, 0);
  std::deque<std::size_t> queue{d.initial};
  seen[d.initial] = 1;
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t to : d.trans[q])
      if (!seen[to]) {
        seen[to] = 1;
        queue.push_back(to);
      }
  }
  return seen;
}

std::vector<char> coreachable_mask(const Dfa& d) {
  std::vector<std::vector<std::size_t>> rev(d.num_states);
  for (std::size_t q = 0; q < d.num_states; ++q)
    for (std::size_t to : d.trans[q]) rev[to].push_back(q);
  std::vector<char> seen(d.num_states, 0);
  std::deque<std::size_t> queue;
  for (std::size_t f : d.finals) {
    seen[f] = 1;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t from : rev[q])
      if (!seen[from]) {
        seen[from] = 1;
        queue.push_back(from);
      }
  }
  return seen;
}

Dfa ordered_union(const Dfa& a, const Dfa& b) {
  if (a.alphabet != b.alphabet) throw std::domain_error("union of DFAs over different alphabets");
  require_ordered(a);
  require_ordered(b);
  const std::size_t nl = a.alphabet.size();
  Dfa out;
  out.alphabet = a.alphabet;
  out.num_states = a.num_states * b.num_states;
  out.initial = a.initial * b.num_states + b.initial;
  out.trans.assign(out.num_states, std::vector<std::size_t>(nl, 0));
  for (std::size_t i = 0; i < a.num_states; ++i)
    for (std::size_t j = 0; j < b.num_states; ++j) {
      std::size_t q = i * b.num_states + j;
      for (std::size_t l = 0; l < nl; ++l)
        out.trans[q][l] = a.trans[i][l] * b.num_states + b.trans[j][l];
      if (a.is_final(i) || b.is_final(j)) out.finals.push_back(q);
    }
  return out;
}

std::vector<Dfa> split_by_final(const Dfa& d) {
  require_ordered(d);
  std::vector<Dfa> out;
  for (std::size_t f : d.finals) {
    Dfa piece = d;
    piece.finals = {f};
    out.push_back(std::move(piece));
  }
  return out;
}

namespace {

// L(d)·{c} for a single reachable final tau. With loop letters Delta at tau:
//   c not in Delta : route tau --c--> tau' and let tau' mimic the old target
//                    of c (once tau is left on a non-loop letter it is never
//                    seen again, so the suffix bookkeeping stays exact);
//   Delta == {c}   : tau' keeps the c self-loop and falls back to tau's other
//                    transitions;
//   otherwise      : a final with two repeatable letters, one of them c,
//                    pumps words ending in either letter into the same state,
//                    so no ordered DFA recognizes the concatenation.
Dfa concat_singleton_piece(const Dfa& d, std::size_t tau, char c) {
  const std::size_t nl = d.alphabet.size();
  const std::size_t ci = d.letter_index(c);
  const std::string delta = self_loop_letters(d, tau);
  Dfa out = d;
  const std::size_t tprime = out.num_states++;
  out.trans.emplace_back(nl, 0);
  out.finals = {tprime};
  if (delta.find(c) == std::string::npos) {
    std::size_t rho = d.trans[tau][ci];
    out.trans[tau][ci] = tprime;
    for (std::size_t l = 0; l < nl; ++l) out.trans[tprime][l] = d.trans[rho][l];
  } else if (delta.size() == 1) {
    out.trans[tau][ci] = tprime;
    for (std::size_t l = 0; l < nl; ++l)
      out.trans[tprime][l] = (l == ci) ? tprime : d.trans[tau][l];
  } else {
    throw std::domain_error(
        std::string("no ordered DFA recognizes the concatenation: letters \"") + delta +
        "\" repeat at an accepting state reached before '" + c + "'");
  }
  return out;
}

// L(d)·pi* for a single reachable final tau: loop letters keep tau, other
// pi letters move to a fresh final tau' that survives exactly on pi, and
// anything else is dead (tau cannot be revisited in an ordered DFA).
Dfa concat_star_piece(const Dfa& d, std::size_t tau, const std::string& pi) {
  const std::size_t nl = d.alphabet.size();
  Dfa out = d;
  const std::size_t tprime = out.num_states++;
  const std::size_t rho = out.num_states++;
  out.trans.emplace_back(nl, 0);
  out.trans.emplace_back(nl, 0);
  out.finals = {tau, tprime};
  for (std::size_t l = 0; l < nl; ++l) {
    bool in_pi = pi.find(d.alphabet[l]) != std::string::npos;
    if (out.trans[tau][l] != tau) out.trans[tau][l] = in_pi ? tprime : rho;
    out.trans[tprime][l] = in_pi ? tprime : rho;
    out.trans[rho][l] = rho;
  }
  return out;
}

}  // namespace

Dfa concat_singleton(const Dfa& d, char c) {
  require_ordered(d);
  d.letter_index(c);
  std::vector<char> reach = reachable_mask(d);
  std::vector<Dfa> pieces;
  for (std::size_t f : d.finals)
    if (reach[f]) pieces.push_back(concat_singleton_piece(d, f, c));
  if (pieces.empty()) return empty_language_dfa(d.alphabet);
  Dfa out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out = ordered_union(out, pieces[i]);
  return out;
}

Dfa concat_star(const Dfa& d, const std::string& pi) {
  require_ordered(d);
  std::string sorted_pi = pi;
  std::sort(sorted_pi.begin(), sorted_pi.end());
  sorted_pi.erase(std::unique(sorted_pi.begin(), sorted_pi.end()), sorted_pi.end());
  for (char c : sorted_pi) d.letter_index(c);
  std::vector<char> reach = reachable_mask(d);
  std::vector<Dfa> pieces;
  for (std::size_t f : d.finals)
    if (reach[f]) pieces.push_back(concat_star_piece(d, f, sorted_pi));
  if (pieces.empty()) return empty_language_dfa(d.alphabet);
  Dfa out = pieces[0];
  for (std::size_t i = 1; i < pieces.size(); ++i) out = ordered_union(out, pieces[i]);
  return out;
}

Dfa minimize(const Dfa& d) {
  const std::size_t nl = d.alphabet.size();
  std::vector<char> reach = reachable_mask(d);
  std::vector<std::size_t> dense(d.num_states, kNone);
  std::vector<std::size_t> states;
  for (std::size_t q = 0; q < d.num_states; ++q)
    if (reach[q]) {
      dense[q] = states.size();
      states.push_back(q);
    }
  const std::size_t n = states.size();
  std::vector<std::size_t> part(n);
  for (std::size_t i = 0; i < n; ++i) part[i] = d.is_final(states[i]) ? 1 : 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig_id;
    std::vector<std::size_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{part[i]};
      for (std::size_t l = 0; l < nl; ++l) sig.push_back(part[dense[d.trans[states[i]][l]]]);
      auto [it, inserted] = sig_id.emplace(std::move(sig), sig_id.size());
      next[i] = it->second;
    }
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((part[i] == part[j]) != (next[i] == next[j])) {
          stable = false;
          break;
        }
    part = std::move(next);
    if (stable) break;
  }
  std::size_t num_parts = 0;
  for (std::size_t p : part) num_parts = std::max(num_parts, p + 1);
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = num_parts;
  out.initial = part[dense[d.initial]];
  out.trans.assign(num_parts, std::vector<std::size_t>(nl, 0));
  std::set<std::size_t> final_parts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < nl; ++l)
      out.trans[part[i]][l] = part[dense[d.trans[states[i]][l]]];
    if (d.is_final(states[i])) final_parts.insert(part[i]);
  }
  out.finals.assign(final_parts.begin(), final_parts.end());
  return out;
}

std::vector<Word> enumerate_language(const Dfa& d, std::size_t max_len, std::size_t limit) {
  if (max_len > limit)
    throw bounds_error("enumeration length exceeds the configured limit");
  // Distance (in letters) from each state to the nearest final, for pruning.
  std::vector<std::vector<std::size_t>> rev(d.num_states);
  for (std::size_t q = 0; q < d.num_states; ++q)
    for (std::size_t to : d.trans[q]) rev[to].push_back(q);
  std::vector<std::size_t> dist(d.num_states, kNone);
  std::deque<std::size_t> queue;
  for (std::size_t f : d.finals) {
    dist[f] = 0;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t from : rev[q])
      if (dist[from] == kNone) {
        dist[from] = dist[q] + 1;
        queue.push_back(from);
      }
  }
  std::vector<std::size_t> letter_order(d.alphabet.size());
  for (std::size_t i = 0; i < letter_order.size(); ++i) letter_order[i] = i;
  std::sort(letter_order.begin(), letter_order.end(),
            [&](std::size_t a, std::size_t b) { return d.alphabet[a] < d.alphabet[b]; });
  std::vector<Word> out;
  Word prefix;
  // Depth-first over prefixes that can still reach a final in time.
  auto walk = [&](auto&& self, std::size_t q) -> void {
    if (d.is_final(q)) out.push_back(prefix);
    if (prefix.size() == max_len) return;
    std::size_t remaining = max_len - prefix.size();
    for (std::size_t l : letter_order) {
      std::size_t to = d.trans[q][l];
      if (dist[to] == kNone || dist[to] > remaining - 1) continue;
      prefix.push_back(d.alphabet[l]);
      self(self, to);
      prefix.pop_back();
    }
  };
  if (dist[d.initial] != kNone && dist[d.initial] <= max_len) walk(walk, d.initial);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::string> repeatable_subsets(const Dfa& d) {
  require_ordered(d);
  std::vector<char> reach = reachable_mask(d);
  std::vector<char> coreach = coreachable_mask(d);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t q = 0; q < d.num_states; ++q) {
    if (!reach[q] || !coreach[q]) continue;
    std::string loops = self_loop_letters(d, q);
    if (seen.insert(loops).second) out.push_back(std::move(loops));
  }
  return out;
}

}  // namespace catgb
