#include "catgb/cfg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace catgb {

namespace {

bool declared(const std::string& s, char c) { return s.find(c) != std::string::npos; }

unsigned exp_total(const Exponents& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

using CountTable = std::map<Exponents, Int>;

CountTable convolve(const CountTable& a, const CountTable& b, unsigned order) {
  CountTable out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (exp_total(e) > order) continue;
      out[e] += ca * cb;
    }
  }
  return out;
}

}  // namespace

void validate_cfg(const Cfg& g) {
  std::set<char> seen;
  for (char c : g.terminals) {
    if (!seen.insert(c).second) throw std::domain_error(std::string("symbol declared twice: ") + c);
  }
  for (char c : g.nonterminals) {
    if (!seen.insert(c).second) throw std::domain_error(std::string("symbol declared twice: ") + c);
  }
  if (!declared(g.nonterminals, g.start)) {
    throw std::domain_error("start symbol is not a declared nonterminal");
  }
  for (const auto& [head, body] : g.rules) {
    if (!declared(g.nonterminals, head)) {
      throw std::domain_error(std::string("rule head is not a nonterminal: ") + head);
    }
    for (char c : body) {
      if (!seen.count(c)) throw std::domain_error(std::string("undeclared symbol in rule body: ") + c);
    }
    if (body.size() == 1 && body[0] == head) {
      throw std::domain_error(std::string("rule ") + head + " -> " + head +
                              " makes derivation counts infinite");
    }
  }
}

CoeffTable cfg_count(const Cfg& g, const NormedAlphabet& norms, unsigned order) {
  validate_cfg(g);
  const std::size_t nv = norms.variables.size();
  for (char c : g.terminals) {
    unsigned total = 0;
    for (unsigned v : norms.norms[norms.letter_index(c)]) total += v;
    if (total == 0) throw std::domain_error(std::string("terminal '") + c + "' has zero norm");
  }

  std::map<char, CountTable> counts;
  for (char a : g.nonterminals) counts[a] = {};
  const std::size_t cap =
      (g.nonterminals.size() + 2) * (2 * static_cast<std::size_t>(order) + 3) + 8;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap) {
      throw std::domain_error("derivation counts do not stabilize: the grammar has a cyclic "
                              "unit or epsilon structure");
    }
    std::map<char, CountTable> next;
    for (char a : g.nonterminals) next[a] = {};
    for (const auto& [head, body] : g.rules) {
      CountTable acc = {{Exponents(nv, 0), Int(1)}};
      for (char c : body) {
        if (declared(g.terminals, c)) {
          const auto& nvec = norms.norms[norms.letter_index(c)];
          CountTable letter = {{Exponents(nvec.begin(), nvec.end()), Int(1)}};
          acc = convolve(acc, letter, order);
        } else {
          acc = convolve(acc, counts[c], order);
        }
        if (acc.empty()) break;
      }
      auto& dst = next[head];
      for (const auto& [e, c] : acc) dst[e] += c;
    }
    if (next == counts) break;
    counts = std::move(next);
  }

  CoeffTable out;
  for (const auto& [e, c] : counts[g.start]) {
    if (c != 0) out.emplace(e, Rat(c));
  }
  return out;
}

std::vector<Word> enumerate_language(const Cfg& g, std::size_t max_len, std::size_t limit) {
  validate_cfg(g);
  if (max_len > limit) {
    throw bounds_error("enumeration length " + std::to_string(max_len) +
                       " exceeds the limit " + std::to_string(limit));
  }
  std::map<char, std::set<Word>> words;
  for (char a : g.nonterminals) words[a] = {};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [head, body] : g.rules) {
      std::set<Word> acc = {Word()};
      for (char c : body) {
        std::set<Word> next;
        if (declared(g.terminals, c)) {
          for (const auto& w : acc) {
            if (w.size() + 1 <= max_len) next.insert(w + c);
          }
        } else {
          for (const auto& w : acc) {
            for (const auto& u : words[c]) {
              if (w.size() + u.size() <= max_len) next.insert(w + u);
            }
          }
        }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      auto& dst = words[head];
      for (const auto& w : acc) changed = dst.insert(w).second || changed;
    }
  }
  std::vector<Word> out(words[g.start].begin(), words[g.start].end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CoeffTable multinomial_series(unsigned d, unsigned order) {
  if (d < 1) throw std::domain_error("alphabet size must be at least 1");
  CoeffTable out;
  for (unsigned n = 0; d * n <= order; ++n) {
    Rat c(factorial(d * n), ipow(factorial(n), d));
    out.emplace(Exponents{d * n}, c);
  }
  return out;
}

}  // namespace catgb
