#include "catgb/ordered_expr.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace catgb {

OrderedExpr OrderedExpr::eps() { return OrderedExpr{}; }

OrderedExpr OrderedExpr::single(char c) {
  OrderedExpr e;
  e.kind = Kind::singleton;
  e.letter = c;
  return e;
}

OrderedExpr OrderedExpr::star(std::string set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  OrderedExpr e;
  e.kind = Kind::star;
  e.letters = std::move(set);
  return e;
}

OrderedExpr OrderedExpr::concat(std::vector<OrderedExpr> items) {
  OrderedExpr e;
  e.kind = Kind::concat;
  e.items = std::move(items);
  return e;
}

OrderedExpr OrderedExpr::union_of(std::vector<OrderedExpr> items) {
  OrderedExpr e;
  e.kind = Kind::union_of;
  e.items = std::move(items);
  return e;
}

bool operator==(const OrderedExpr& a, const OrderedExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case OrderedExpr::Kind::epsilon:
      return true;
    case OrderedExpr::Kind::singleton:
      return a.letter == b.letter;
    case OrderedExpr::Kind::star:
      return a.letters == b.letters;
    default:
      return a.items == b.items;
  }
}

namespace {

void collect_letters(const OrderedExpr& e, std::set<char>& out) {
  switch (e.kind) {
    case OrderedExpr::Kind::singleton:
      out.insert(e.letter);
      break;
    case OrderedExpr::Kind::star:
      out.insert(e.letters.begin(), e.letters.end());
      break;
    case OrderedExpr::Kind::concat:
    case OrderedExpr::Kind::union_of:
      for (const OrderedExpr& item : e.items) collect_letters(item, out);
      break;
    case OrderedExpr::Kind::epsilon:
      break;
  }
}

}  // namespace

Alphabet expr_alphabet(const OrderedExpr& e) {
  std::set<char> letters;
  collect_letters(e, letters);
  return Alphabet(letters.begin(), letters.end());
}

// ---------------------------------------------------------------------------
// Printing and parsing.

namespace {

void print_rec(const OrderedExpr& e, std::string& out, bool inside_concat) {
  switch (e.kind) {
    case OrderedExpr::Kind::epsilon:
      out += "eps";
      break;
    case OrderedExpr::Kind::singleton:
      out += '\'';
      out += e.letter;
      out += '\'';
      break;
    case OrderedExpr::Kind::star:
      out += '[';
      out += e.letters;
      out += "]*";
      break;
    case OrderedExpr::Kind::concat:
      if (e.items.empty()) {
        out += "eps";
        break;
      }
      for (const OrderedExpr& item : e.items) print_rec(item, out, true);
      break;
    case OrderedExpr::Kind::union_of:
      if (e.items.empty()) {
        out += "empty";
        break;
      }
      if (inside_concat) out += '(';
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += " | ";
        bool wrap = e.items[i].kind == OrderedExpr::Kind::union_of;
        if (wrap) out += '(';
        print_rec(e.items[i], out, false);
        if (wrap) out += ')';
      }
      if (inside_concat) out += ')';
      break;
  }
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("expression syntax error at offset " + std::to_string(pos) + ": " + what);
  }

  bool at_factor() {
    skip_space();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '\'' || c == '[' || c == '(' || text.compare(pos, 3, "eps") == 0 ||
           text.compare(pos, 5, "empty") == 0;
  }

  OrderedExpr parse_factor() {
    skip_space();
    if (pos >= text.size()) fail("expected a factor");
    char c = text[pos];
    if (c == '\'') {
      if (pos + 2 >= text.size() || text[pos + 2] != '\'') fail("unterminated letter literal");
      char letter = text[pos + 1];
      pos += 3;
      return OrderedExpr::single(letter);
    }
    if (c == '[') {
      std::size_t end = text.find(']', pos);
      if (end == std::string::npos) fail("unterminated letter set");
      std::string set = text.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      if (pos >= text.size() || text[pos] != '*') fail("letter set must be starred");
      ++pos;
      return OrderedExpr::star(std::move(set));
    }
    if (c == '(') {
      ++pos;
      OrderedExpr inner = parse_union();
      skip_space();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (text.compare(pos, 3, "eps") == 0) {
      pos += 3;
      return OrderedExpr::eps();
    }
    if (text.compare(pos, 5, "empty") == 0) {
      pos += 5;
      return OrderedExpr::union_of({});
    }
    fail("expected a factor");
  }

  OrderedExpr parse_concat() {
    std::vector<OrderedExpr> items;
    items.push_back(parse_factor());
    while (at_factor()) items.push_back(parse_factor());
    return items.size() == 1 ? std::move(items[0]) : OrderedExpr::concat(std::move(items));
  }

  OrderedExpr parse_union() {
    std::vector<OrderedExpr> items;
    items.push_back(parse_concat());
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        items.push_back(parse_concat());
      } else {
        break;
      }
    }
    return items.size() == 1 ? std::move(items[0]) : OrderedExpr::union_of(std::move(items));
  }
};

}  // namespace

std::string print_expr(const OrderedExpr& e) {
  std::string out;
  print_rec(e, out, false);
  return out;
}

OrderedExpr parse_expr(const std::string& text) {
  Parser p(text);
  OrderedExpr e = p.parse_union();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

// ---------------------------------------------------------------------------
// Normal form: a union of blocks, each block a concatenation of singleton and
// star atoms.

namespace {

struct Atom {
  bool star = false;
  char c = 0;
  std::string set;  // sorted distinct

  friend bool operator==(const Atom&, const Atom&) = default;
};

using Block = std::vector<Atom>;

bool subset_of(const std::string& a, const std::string& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Adjacent stars with nested sets collapse to the larger one; incomparable
// neighbours are kept (such a block falls off the pattern fast path).
void append_atom(Block& block, Atom atom) {
  if (atom.star && !block.empty() && block.back().star) {
    if (subset_of(block.back().set, atom.set)) {
      block.back().set = std::move(atom.set);
      return;
    }
    if (subset_of(atom.set, block.back().set)) return;
  }
  block.push_back(std::move(atom));
}

std::vector<Block> normal_blocks(const OrderedExpr& e) {
  switch (e.kind) {
    case OrderedExpr::Kind::epsilon:
      return {Block{}};
    case OrderedExpr::Kind::singleton: {
      Atom a;
      a.c = e.letter;
      return {Block{a}};
    }
    case OrderedExpr::Kind::star: {
      if (e.letters.empty()) return {Block{}};
      Atom a;
      a.star = true;
      a.set = e.letters;
      return {Block{a}};
    }
    case OrderedExpr::Kind::concat: {
      std::vector<Block> acc{Block{}};
      for (const OrderedExpr& item : e.items) {
        std::vector<Block> rhs = normal_blocks(item);
        std::vector<Block> next;
        for (const Block& left : acc)
          for (const Block& right : rhs) {
            Block joined = left;
            for (const Atom& atom : right) append_atom(joined, atom);
            next.push_back(std::move(joined));
          }
        acc = std::move(next);
      }
      return acc;
    }
    case OrderedExpr::Kind::union_of: {
      std::vector<Block> acc;
      for (const OrderedExpr& item : e.items)
        for (Block& b : normal_blocks(item)) acc.push_back(std::move(b));
      return acc;
    }
  }
  return {};
}

// Pattern shape f0* c1 f1* c2 f2* ... ck fk* (missing stars read as empty
// sets). Fails when two incomparable stars sit side by side.
struct Pattern {
  std::vector<std::string> fillers;  // size chars.size() + 1
  std::string chars;
};

std::optional<Pattern> pattern_form(const Block& block) {
  Pattern p;
  p.fillers.emplace_back();
  bool last_star = false;
  for (const Atom& atom : block) {
    if (atom.star) {
      if (last_star) return std::nullopt;
      p.fillers.back() = atom.set;
      last_star = true;
    } else {
      p.chars.push_back(atom.c);
      p.fillers.emplace_back();
      last_star = false;
    }
  }
  return p;
}

bool fillers_nested(const Pattern& p) {
  for (std::size_t i = 0; i + 1 < p.fillers.size(); ++i)
    if (!subset_of(p.fillers[i], p.fillers[i + 1])) return false;
  return true;
}

// Leftmost matcher for a pattern with nested fillers: the first occurrence of
// the next pattern letter always advances (shifting the match left only
// donates filler letters to a larger filler set), so the automaton below is
// exact. One gap state per pattern position, plus a dead state on demand.
Dfa greedy_pattern_dfa(const Pattern& p, const Alphabet& alphabet) {
  const std::size_t k = p.chars.size();
  const std::size_t nl = alphabet.size();
  bool need_dead = false;
  for (std::size_t i = 0; i <= k && !need_dead; ++i)
    for (char c : alphabet) {
      bool advances = i < k && c == p.chars[i];
      bool stays = p.fillers[i].find(c) != std::string::npos;
      if (!advances && !stays) {
        need_dead = true;
        break;
      }
    }
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = k + 1 + (need_dead ? 1 : 0);
  d.initial = 0;
  d.finals = {k};
  d.trans.assign(d.num_states, std::vector<std::size_t>(nl, k + 1));
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t l = 0; l < nl; ++l) {
      char c = alphabet[l];
      if (i < k && c == p.chars[i])
        d.trans[i][l] = i + 1;
      else if (p.fillers[i].find(c) != std::string::npos)
        d.trans[i][l] = i;
    }
  if (need_dead)
    for (std::size_t l = 0; l < nl; ++l) d.trans[k + 1][l] = k + 1;
  return d;
}

// Minimizing after each step keeps the repeated split/product constructions
// at the minimal automaton size; the minimal DFA of an ordered-recognizable
// language is itself ordered, so nothing is lost.
Dfa fold_block(const Block& block, const Alphabet& alphabet) {
  Dfa d = epsilon_dfa(alphabet);
  for (const Atom& atom : block)
    d = minimize(atom.star ? concat_star(d, atom.set) : concat_singleton(d, atom.c));
  return d;
}

// ---------------------------------------------------------------------------
// Expression NFA (used by the fallback compilation path and by enumeration).

struct Nfa {
  std::size_t num_states = 0;
  std::size_t start = 0;
  std::size_t accept = 0;
  std::vector<std::vector<std::pair<char, std::size_t>>> letter_edges;
  std::vector<std::vector<std::size_t>> eps_edges;

  std::size_t add_state() {
    letter_edges.emplace_back();
    eps_edges.emplace_back();
    return num_states++;
  }
};

std::pair<std::size_t, std::size_t> build_fragment(Nfa& nfa, const OrderedExpr& e) {
  switch (e.kind) {
    case OrderedExpr::Kind::epsilon: {
      std::size_t s = nfa.add_state(), t = nfa.add_state();
      nfa.eps_edges[s].push_back(t);
      return {s, t};
    }
    case OrderedExpr::Kind::singleton: {
      std::size_t s = nfa.add_state(), t = nfa.add_state();
      nfa.letter_edges[s].emplace_back(e.letter, t);
      return {s, t};
    }
    case OrderedExpr::Kind::star: {
      std::size_t s = nfa.add_state(), t = nfa.add_state();
      for (char c : e.letters) nfa.letter_edges[s].emplace_back(c, s);
      nfa.eps_edges[s].push_back(t);
      return {s, t};
    }
    case OrderedExpr::Kind::concat: {
      std::size_t s = nfa.add_state();
      std::size_t cur = s;
      for (const OrderedExpr& item : e.items) {
        auto [fs, ft] = build_fragment(nfa, item);
        nfa.eps_edges[cur].push_back(fs);
        cur = ft;
      }
      return {s, cur};
    }
    case OrderedExpr::Kind::union_of: {
      std::size_t s = nfa.add_state(), t = nfa.add_state();
      for (const OrderedExpr& item : e.items) {
        auto [fs, ft] = build_fragment(nfa, item);
        nfa.eps_edges[s].push_back(fs);
        nfa.eps_edges[ft].push_back(t);
      }
      return {s, t};
    }
  }
  throw std::logic_error("unreachable expression kind");
}

Nfa build_nfa(const OrderedExpr& e) {
  Nfa nfa;
  auto [s, t] = build_fragment(nfa, e);
  nfa.start = s;
  nfa.accept = t;
  return nfa;
}

void eps_close(const Nfa& nfa, std::set<std::size_t>& states) {
  std::vector<std::size_t> stack(states.begin(), states.end());
  while (!stack.empty()) {
    std::size_t q = stack.back();
    stack.pop_back();
    for (std::size_t to : nfa.eps_edges[q])
      if (states.insert(to).second) stack.push_back(to);
  }
}

std::set<std::size_t> step(const Nfa& nfa, const std::set<std::size_t>& states, char c) {
  std::set<std::size_t> next;
  for (std::size_t q : states)
    for (auto [letter, to] : nfa.letter_edges[q])
      if (letter == c) next.insert(to);
  eps_close(nfa, next);
  return next;
}

Dfa subset_dfa(const Nfa& nfa, const Alphabet& alphabet) {
  std::map<std::set<std::size_t>, std::size_t> ids;
  std::vector<std::set<std::size_t>> subsets;
  auto intern = [&](std::set<std::size_t> s) {
    auto [it, inserted] = ids.emplace(std::move(s), subsets.size());
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };
  std::set<std::size_t> start{nfa.start};
  eps_close(nfa, start);
  Dfa d;
  d.alphabet = alphabet;
  d.initial = intern(std::move(start));
  for (std::size_t q = 0; q < subsets.size(); ++q) {
    d.trans.emplace_back();
    for (char c : alphabet) d.trans[q].push_back(intern(step(nfa, subsets[q], c)));
  }
  d.num_states = subsets.size();
  for (std::size_t q = 0; q < subsets.size(); ++q)
    if (subsets[q].count(nfa.accept)) d.finals.push_back(q);
  return d;
}

// Distance from each NFA state to the accept state, counting letter edges.
std::vector<std::size_t> nfa_accept_distance(const Nfa& nfa) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> rev_eps(nfa.num_states);
  std::vector<std::vector<std::size_t>> rev_letter(nfa.num_states);
  for (std::size_t q = 0; q < nfa.num_states; ++q) {
    for (std::size_t to : nfa.eps_edges[q]) rev_eps[to].push_back(q);
    for (auto [c, to] : nfa.letter_edges[q]) rev_letter[to].push_back(q);
  }
  std::vector<std::size_t> dist(nfa.num_states, inf);
  std::deque<std::size_t> queue;
  dist[nfa.accept] = 0;
  queue.push_back(nfa.accept);
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    for (std::size_t from : rev_eps[q])
      if (dist[q] < dist[from]) {
        dist[from] = dist[q];
        queue.push_front(from);
      }
    for (std::size_t from : rev_letter[q])
      if (dist[q] != inf && dist[q] + 1 < dist[from]) {
        dist[from] = dist[q] + 1;
        queue.push_back(from);
      }
  }
  return dist;
}

}  // namespace

// ---------------------------------------------------------------------------
// Compilation.

Dfa compile_expr(const OrderedExpr& e, const Alphabet& alphabet) {
  for (char c : expr_alphabet(e))
    if (alphabet.find(c) == std::string::npos)
      throw std::domain_error(std::string("expression letter '") + c + "' not in alphabet");
  std::vector<Block> blocks = normal_blocks(e);
  std::vector<Block> unique_blocks;
  for (Block& block : blocks)
    if (std::find(unique_blocks.begin(), unique_blocks.end(), block) == unique_blocks.end())
      unique_blocks.push_back(std::move(block));
  blocks = std::move(unique_blocks);
  bool blockwise_ok = true;
  std::vector<Dfa> pieces;
  for (const Block& block : blocks) {
    std::optional<Pattern> p = pattern_form(block);
    if (p && fillers_nested(*p)) {
      pieces.push_back(greedy_pattern_dfa(*p, alphabet));
      continue;
    }
    try {
      pieces.push_back(fold_block(block, alphabet));
    } catch (const std::domain_error&) {
      blockwise_ok = false;
      break;
    }
  }
  if (blockwise_ok) {
    if (pieces.empty()) return empty_language_dfa(alphabet);
    Dfa out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i)
      out = minimize(ordered_union(out, pieces[i]));
    return out;
  }
  // Some block has no ordered DFA of its own; the union can still have one,
  // so decide on the minimal DFA of the whole language.
  Dfa d = minimize(subset_dfa(build_nfa(e), alphabet));
  if (!is_ordered(d))
    throw std::domain_error("the language is not recognizable by an ordered DFA");
  return d;
}

Dfa compile_expr(const OrderedExpr& e) { return compile_expr(e, expr_alphabet(e)); }

// ---------------------------------------------------------------------------
// DFA to expression.

namespace {

bool expr_is_empty(const OrderedExpr& e) {
  return e.kind == OrderedExpr::Kind::union_of && e.items.empty();
}

OrderedExpr cat_smart(std::vector<OrderedExpr> parts) {
  std::vector<OrderedExpr> items;
  for (OrderedExpr& part : parts) {
    if (expr_is_empty(part)) return OrderedExpr::union_of({});
    if (part.kind == OrderedExpr::Kind::epsilon) continue;
    if (part.kind == OrderedExpr::Kind::concat)
      for (OrderedExpr& sub : part.items) items.push_back(std::move(sub));
    else
      items.push_back(std::move(part));
  }
  if (items.empty()) return OrderedExpr::eps();
  if (items.size() == 1) return std::move(items[0]);
  return OrderedExpr::concat(std::move(items));
}

OrderedExpr uni_smart(OrderedExpr a, OrderedExpr b) {
  if (expr_is_empty(a)) return b;
  if (expr_is_empty(b)) return a;
  std::vector<OrderedExpr> items;
  auto push = [&](OrderedExpr e) {
    if (e.kind == OrderedExpr::Kind::union_of)
      for (OrderedExpr& sub : e.items) items.push_back(std::move(sub));
    else
      items.push_back(std::move(e));
  };
  push(std::move(a));
  push(std::move(b));
  std::vector<OrderedExpr> dedup;
  for (OrderedExpr& item : items)
    if (std::find(dedup.begin(), dedup.end(), item) == dedup.end())
      dedup.push_back(std::move(item));
  if (dedup.size() == 1) return std::move(dedup[0]);
  return OrderedExpr::union_of(std::move(dedup));
}

OrderedExpr loop_expr(const std::string& letters) {
  if (letters.empty()) return OrderedExpr::eps();
  return OrderedExpr::star(letters);
}

}  // namespace

OrderedExpr dfa_to_expr(const Dfa& input) {
  if (!is_ordered(input)) throw std::domain_error("unordered input DFA");
  Dfa d = minimize(input);
  std::vector<char> reach = reachable_mask(d);
  std::vector<char> coreach = coreachable_mask(d);
  std::vector<std::size_t> nodes;
  for (std::size_t q = 0; q < d.num_states; ++q)
    if (reach[q] && coreach[q]) nodes.push_back(q);
  if (nodes.empty() || !coreach[d.initial]) return OrderedExpr::union_of({});

  // Edges between distinct useful states, plus the self-loop letter sets.
  std::map<std::size_t, std::string> loops;
  std::map<std::pair<std::size_t, std::size_t>, OrderedExpr> edge;
  auto add_edge = [&](std::size_t i, std::size_t j, OrderedExpr e) {
    auto key = std::make_pair(i, j);
    auto it = edge.find(key);
    if (it == edge.end())
      edge.emplace(key, std::move(e));
    else
      it->second = uni_smart(std::move(it->second), std::move(e));
  };
  for (std::size_t q : nodes) {
    std::string& own = loops[q];
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
      std::size_t to = d.trans[q][l];
      if (to == q)
        own.push_back(d.alphabet[l]);
      else if (reach[to] && coreach[to])
        add_edge(q, to, OrderedExpr::single(d.alphabet[l]));
    }
    std::sort(own.begin(), own.end());
  }

  // Virtual endpoints; eliminating a state k never creates a self-loop
  // because useful states of an ordered DFA form a DAG under distinct edges.
  const std::size_t vstart = d.num_states;
  const std::size_t vend = d.num_states + 1;
  add_edge(vstart, d.initial, OrderedExpr::eps());
  for (std::size_t f : d.finals)
    if (reach[f] && coreach[f]) add_edge(f, vend, OrderedExpr::eps());

  for (std::size_t k : nodes) {
    std::vector<std::pair<std::size_t, OrderedExpr>> in, out;
    for (auto it = edge.begin(); it != edge.end();) {
      if (it->first.second == k) {
        in.emplace_back(it->first.first, std::move(it->second));
        it = edge.erase(it);
      } else if (it->first.first == k) {
        out.emplace_back(it->first.second, std::move(it->second));
        it = edge.erase(it);
      } else {
        ++it;
      }
    }
    OrderedExpr mid = loop_expr(loops[k]);
    for (const auto& [i, left] : in)
      for (const auto& [j, right] : out)
        add_edge(i, j, cat_smart({left, mid, right}));
  }
  auto it = edge.find({vstart, vend});
  if (it == edge.end()) return OrderedExpr::union_of({});
  return it->second;
}

// ---------------------------------------------------------------------------
// Ideals.

OrderedExpr ideal_to_expr(const PosetIdeal& ideal) {
  std::vector<OrderedExpr> blocks;
  for (const Word& gen : ideal.generators) {
    std::vector<OrderedExpr> parts;
    switch (ideal.order.kind) {
      case OrderKind::higman_subsequence: {
        parts.push_back(OrderedExpr::star(ideal.order.alphabet));
        for (char c : gen) {
          parts.push_back(OrderedExpr::single(c));
          parts.push_back(OrderedExpr::star(ideal.order.alphabet));
        }
        break;
      }
      case OrderKind::oi_zero_aligned: {
        std::string nonzero;
        for (char c : ideal.order.alphabet)
          if (c != '0') nonzero.push_back(c);
        parts.push_back(OrderedExpr::star(nonzero));
        for (char c : gen) {
          parts.push_back(OrderedExpr::single(c));
          parts.push_back(OrderedExpr::star(nonzero));
        }
        break;
      }
      case OrderKind::os_pattern: {
        std::string seen;
        for (char c : gen) {
          parts.push_back(OrderedExpr::single(c));
          if (seen.find(c) == std::string::npos) {
            seen.push_back(c);
            std::sort(seen.begin(), seen.end());
          }
          parts.push_back(OrderedExpr::star(seen));
        }
        break;
      }
    }
    blocks.push_back(parts.empty() ? OrderedExpr::eps() : OrderedExpr::concat(std::move(parts)));
  }
  if (blocks.size() == 1) return std::move(blocks[0]);
  return OrderedExpr::union_of(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Enumeration by direct NFA simulation.

std::vector<Word> enumerate_language(const OrderedExpr& e, std::size_t max_len, std::size_t limit) {
  if (max_len > limit)
    throw bounds_error("enumeration length exceeds the configured limit");
  Alphabet alphabet = expr_alphabet(e);
  Nfa nfa = build_nfa(e);
  std::vector<std::size_t> dist = nfa_accept_distance(nfa);
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  auto min_dist = [&](const std::set<std::size_t>& states) {
    std::size_t best = inf;
    for (std::size_t q : states) best = std::min(best, dist[q]);
    return best;
  };
  std::set<std::size_t> start{nfa.start};
  eps_close(nfa, start);
  std::vector<Word> out;
  Word prefix;
  auto walk = [&](auto&& self, const std::set<std::size_t>& states) -> void {
    if (states.count(nfa.accept)) out.push_back(prefix);
    if (prefix.size() == max_len) return;
    for (char c : alphabet) {
      std::set<std::size_t> next = step(nfa, states, c);
      if (min_dist(next) > max_len - prefix.size() - 1) continue;
      prefix.push_back(c);
      self(self, next);
      prefix.pop_back();
    }
  };
  if (min_dist(start) <= max_len) walk(walk, start);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace catgb
