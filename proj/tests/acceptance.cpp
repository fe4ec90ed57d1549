// End-to-end gate over the whole library.  Each check prints one PASS/FAIL
// line; the exit status is the number of failing checks.  Expected values are
// recomputed here from first principles (closed forms, brute-force counting,
// naive search) rather than through the code paths under test.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catgb/category.hpp"
#include "catgb/cfg.hpp"
#include "catgb/dfa_series.hpp"
#include "catgb/egf.hpp"
#include "catgb/module.hpp"
#include "catgb/ordered_expr.hpp"
#include "oracles.hpp"

using namespace catgb;

namespace {

int failures = 0;

void run(int idx, const char* name, const std::function<void(bool&, std::string&)>& body) {
  bool ok = true;
  std::string why;
  try {
    body(ok, why);
  } catch (const std::exception& e) {
    ok = false;
    why = std::string("exception: ") + e.what();
  }
  std::printf("%s %2d: %s\n", ok ? "PASS" : "FAIL", idx, name);
  if (!ok && !why.empty()) std::printf("         %s\n", why.c_str());
  if (!ok) ++failures;
}

Int binom(int m, int k) {
  if (k < 0 || k > m) return Int(0);
  Int r(1);
  for (int i = 0; i < k; ++i) {
    r *= (m - i);
    r /= (i + 1);
  }
  return r;
}

Int int_pow(Int b, int e) {
  Int r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Rat rat_factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Surjective words onto {1..n} whose first occurrences appear in order,
// counted by direct enumeration of all n^m letter strings.
long long brute_canonical_surjections(int n, int m) {
  if (n == 0) return m == 0 ? 1 : 0;
  long long count = 0;
  std::vector<int> w(m, 1);
  while (true) {
    int seen = 0;
    bool canonical = true;
    for (int i = 0; i < m && canonical; ++i) {
      if (w[i] <= seen) continue;
      canonical = w[i] == seen + 1;
      seen = w[i];
    }
    if (canonical && seen == n) ++count;
    int i = m - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return count;
}

ModuleElement row_element(const TruncatedModule& mod, int m, std::size_t r) {
  ModuleElement e;
  e.cat = mod.cat;
  e.n = mod.n;
  e.m = m;
  const auto& row = mod.rows[m][r];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) e.coeffs[mod.columns[m][j]] = row[j];
  }
  return e;
}

struct SpanCase {
  CategoryId cat;
  int n;
  std::vector<std::string> gens;
};

const std::vector<SpanCase>& span_catalogue() {
  static const std::vector<SpanCase> cases = {
      {CategoryId::oi(1), 1, {"1*[01] - 1*[10]"}},
      {CategoryId::oi(1), 1, {"1*[0]"}},
      {CategoryId::oi(1), 1, {"1*[011] - 1*[110]"}},
      {CategoryId::oi(1), 2, {"1*[001] - 1*[010]", "1*[100]"}},
      {CategoryId::oi(1), 2, {"1*[0101] - 2*[0110] + 1*[1001]"}},
      {CategoryId::oi(1), 0, {}},
      {CategoryId::oi(2), 0, {"1*[12] - 1*[21]"}},
      {CategoryId::oi(2), 1, {"1*[10]"}},
      {CategoryId::oi(2), 1, {"1*[20]", "1*[012]"}},
      {CategoryId::oi(2), 2, {"1*[0210]"}},
  };
  return cases;
}

TruncatedModule build_span(const SpanCase& c, int D) {
  std::vector<ModuleElement> gens;
  for (const auto& g : c.gens) gens.push_back(parse_module_element(c.cat, c.n, g));
  return span_generators(c.cat, c.n, gens, D);
}

std::vector<Word> random_morphism_words(std::mt19937& rng, const CategoryId& cat, int n,
                                        int count, int max_len) {
  std::vector<Word> out;
  while (static_cast<int>(out.size()) < count) {
    int len = n + static_cast<int>(rng() % static_cast<unsigned>(max_len - n + 1));
    auto pool = hom_words(cat, n, len);
    if (pool.empty()) continue;
    out.push_back(pool[rng() % pool.size()]);
  }
  return out;
}

std::string random_subset(std::mt19937& rng, const std::string& alphabet, unsigned within) {
  unsigned mask = 1 + rng() % within;
  std::string set;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (mask & (1u << i)) set += alphabet[i];
  }
  return set;
}

OrderedExpr random_expr(std::mt19937& rng, const std::string& alphabet, int atoms) {
  if (atoms == 1) {
    switch (rng() % 5) {
      case 0:
        return OrderedExpr::eps();
      case 1:
      case 2:
        return OrderedExpr::single(alphabet[rng() % alphabet.size()]);
      default:
        return OrderedExpr::star(random_subset(rng, alphabet, (1u << alphabet.size()) - 1));
    }
  }
  int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(atoms - 1));
  std::vector<OrderedExpr> items;
  items.push_back(random_expr(rng, alphabet, left));
  items.push_back(random_expr(rng, alphabet, atoms - left));
  return rng() % 2 ? OrderedExpr::concat(std::move(items))
                   : OrderedExpr::union_of(std::move(items));
}

// Filler-pattern shapes recognized by the greedy matcher: a constant filler
// around one letter, or fillers growing left to right.
OrderedExpr filler_pattern(std::mt19937& rng, const std::string& alphabet) {
  const unsigned all = (1u << alphabet.size()) - 1;
  std::vector<OrderedExpr> items;
  if (rng() % 2) {
    std::string set = random_subset(rng, alphabet, all);
    items.push_back(OrderedExpr::star(set));
    items.push_back(OrderedExpr::single(alphabet[rng() % alphabet.size()]));
    items.push_back(OrderedExpr::star(set));
  } else {
    unsigned outer_mask = 1 + rng() % all;
    unsigned inner_mask = outer_mask & (1 + rng() % all);
    std::string outer, inner;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (outer_mask & (1u << i)) outer += alphabet[i];
      if (inner_mask & (1u << i)) inner += alphabet[i];
    }
    items.push_back(OrderedExpr::single(alphabet[rng() % alphabet.size()]));
    if (!inner.empty()) items.push_back(OrderedExpr::star(inner));
    items.push_back(OrderedExpr::single(alphabet[rng() % alphabet.size()]));
    items.push_back(OrderedExpr::star(outer));
  }
  return OrderedExpr::concat(std::move(items));
}

void check_projectives_oi(bool& ok, std::string& why) {
  for (int d = 1; d <= 2 && ok; ++d) {
    for (int n = 0; n <= 3 && ok; ++n) {
      RationalSeries s = principal_projective_series(CategoryId::oi(d), n);
      auto cs = univariate_coeffs(expand(s, 10), 10);
      for (int m = 0; m <= 10 && ok; ++m) {
        Rat expected = m < n ? Rat(0) : Rat(binom(m, n) * int_pow(Int(d), m - n));
        if (cs[m] != expected) {
          ok = false;
          why = "coefficient mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n) +
                " m=" + std::to_string(m);
        }
      }
      RationalSeries norm = series_normalize(s);
      bool shape = norm.denominator.size() == 1 &&
                   norm.denominator[0].first == Poly::monomial({1}, Rat(d)) &&
                   norm.denominator[0].second == static_cast<unsigned>(n) + 1;
      if (!shape) {
        ok = false;
        why = "denominator is not (1-" + std::to_string(d) + "t)^" + std::to_string(n + 1);
      }
    }
  }
}

void check_projectives_os(bool& ok, std::string& why) {
  for (int n = 0; n <= 4 && ok; ++n) {
    RationalSeries s = principal_projective_series(CategoryId::os(), n);
    RationalSeries want;
    want.variables = {"t"};
    want.numerator = Poly::monomial({static_cast<unsigned>(n)}, Rat(1));
    for (int j = 1; j <= n; ++j) {
      want.denominator.emplace_back(Poly::monomial({1}, Rat(j)), 1);
    }
    RationalSeries a = series_normalize(s);
    RationalSeries b = series_normalize(want);
    if (!(a.numerator == b.numerator && a.denominator == b.denominator)) {
      ok = false;
      why = "series shape differs from t^n / prod (1-jt) at n=" + std::to_string(n);
      return;
    }
    auto cs = univariate_coeffs(expand(s, 9), 9);
    for (int m = 0; m <= 9 && ok; ++m) {
      if (cs[m] != Rat(brute_canonical_surjections(n, m))) {
        ok = false;
        why = "coefficient mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  }
}

void check_expr_pipeline(bool& ok, std::string& why) {
  std::mt19937 rng(20240811);
  const std::string letters = "abc";
  int compiled = 0;
  for (int trial = 0; trial < 2000 && compiled < 200 && ok; ++trial) {
    std::string alphabet = letters.substr(0, 1 + rng() % 3);
    OrderedExpr e = trial % 3 == 0
                        ? filler_pattern(rng, alphabet)
                        : random_expr(rng, alphabet, 1 + static_cast<int>(rng() % 4));
    // The expression syntax can denote non-ordered languages; compilation
    // must succeed exactly on the ones an independent check accepts.
    bool recognizable = oracles::ordered_recognizable(e, alphabet);
    Dfa d;
    try {
      d = compile_expr(e, alphabet);
    } catch (const std::domain_error&) {
      if (recognizable) {
        ok = false;
        why = "rejected a recognizable language: " + print_expr(e);
        return;
      }
      continue;
    }
    if (!recognizable) {
      ok = false;
      why = "compiled a non-recognizable language: " + print_expr(e);
      return;
    }
    ++compiled;
    if (!is_ordered(d)) {
      ok = false;
      why = "compiled DFA not ordered for " + print_expr(e);
      return;
    }
    auto cs = univariate_coeffs(expand(dfa_series(d, NormedAlphabet::length_norm(alphabet)), 8), 8);
    std::vector<Word> lang = enumerate_language(e, 8);
    std::vector<Rat> counts(9, Rat(0));
    for (const Word& w : lang) counts[w.size()] += 1;
    if (cs != counts) {
      ok = false;
      why = "series disagrees with enumeration for " + print_expr(e);
      return;
    }
    std::vector<Word> back = enumerate_language(compile_expr(dfa_to_expr(d), alphabet), 8);
    std::sort(back.begin(), back.end());
    std::sort(lang.begin(), lang.end());
    if (back != lang) {
      ok = false;
      why = "round trip changed the language of " + print_expr(e);
      return;
    }
  }
  if (ok && compiled < 200) {
    ok = false;
    why = "only " + std::to_string(compiled) + " of 200 expressions compiled";
  }
}

void check_random_ideals(bool& ok, std::string& why) {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 50 && ok; ++trial) {
    CategoryId cat = trial % 2 ? CategoryId::os() : CategoryId::oi(1);
    int n = 1 + static_cast<int>(rng() % 3);
    MonomialIdealGens ideal;
    ideal.order = category_word_order(cat, n);
    ideal.generators = random_morphism_words(rng, cat, n, 1 + static_cast<int>(rng() % 3), 4);
    auto mc = univariate_coeffs(expand(module_series(cat, n, ideal), 8), 8);
    auto qc = univariate_coeffs(expand(quotient_series(cat, n, ideal), 8), 8);
    PosetIdeal pid(ideal.order, ideal.generators);
    for (int m = 0; m <= 8 && ok; ++m) {
      long long members = 0, total = 0;
      for (const Word& w : hom_words(cat, n, m)) {
        ++total;
        if (ideal_member(pid, w)) ++members;
      }
      if (mc[m] != Rat(members) || qc[m] != Rat(total - members) || qc[m] < 0) {
        ok = false;
        why = "ideal count mismatch in trial " + std::to_string(trial) + " at m=" +
              std::to_string(m);
      }
    }
  }
}

void check_span_consistency(bool& ok, std::string& why) {
  const int D = 8;
  for (std::size_t i = 0; i < span_catalogue().size() && ok; ++i) {
    const SpanCase& c = span_catalogue()[i];
    TruncatedModule mod = build_span(c, D);
    MonomialIdealGens init = initial_module(mod);
    PosetIdeal pid(init.order, init.generators);
    auto dims = mod.dims();
    for (int m = 0; m <= D && ok; ++m) {
      std::size_t members = 0;
      for (const Word& w : hom_words(c.cat, c.n, m)) {
        if (ideal_member(pid, w)) ++members;
      }
      if (dims[m] != members) {
        ok = false;
        why = "dims differ from initial ideal in catalogue entry " + std::to_string(i) +
              " at m=" + std::to_string(m);
      }
    }
  }
  if (!ok) return;

  // Nested spans: equal initial submodules up to D force equal spans up to D,
  // and unequal spans force unequal initial submodules.
  struct Pair {
    CategoryId cat;
    int n;
    std::vector<std::string> small, large;
    bool same_initials;
  };
  const std::vector<Pair> pairs = {
      {CategoryId::oi(1), 1, {"1*[01] - 1*[10]"},
       {"1*[01] - 1*[10]", "1*[011] - 1*[110]"}, true},
      {CategoryId::oi(2), 1, {"1*[10]"}, {"1*[10]", "1*[120]"}, true},
      {CategoryId::oi(1), 1, {"1*[011] - 1*[110]"}, {"1*[01] - 1*[10]"}, false},
  };
  for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
    const Pair& p = pairs[i];
    TruncatedModule small = build_span({p.cat, p.n, p.small}, D);
    TruncatedModule large = build_span({p.cat, p.n, p.large}, D);
    for (int m = 0; m <= D && ok; ++m) {
      for (std::size_t r = 0; r < small.rows[m].size(); ++r) {
        if (!module_contains(large, row_element(small, m, r))) {
          ok = false;
          why = "pair " + std::to_string(i) + " is not nested";
        }
      }
    }
    if (!ok) return;
    bool inits_equal = small.pivots == large.pivots;
    if (inits_equal != p.same_initials) {
      ok = false;
      why = "pair " + std::to_string(i) + " has unexpected initial submodules";
      return;
    }
    if (!inits_equal) continue;
    if (small.dims() != large.dims()) {
      ok = false;
      why = "pair " + std::to_string(i) + ": equal initials but unequal dimensions";
      return;
    }
    for (int m = 0; m <= D && ok; ++m) {
      for (std::size_t r = 0; r < large.rows[m].size(); ++r) {
        if (!module_contains(small, row_element(large, m, r))) {
          ok = false;
          why = "pair " + std::to_string(i) + ": equal initials but unequal spans at m=" +
                std::to_string(m);
        }
      }
    }
  }
}

void check_quotient_tails(bool& ok, std::string& why) {
  for (std::size_t i = 0; i < span_catalogue().size() && ok; ++i) {
    const SpanCase& c = span_catalogue()[i];
    if (c.cat.kind != CategoryId::Kind::oi || c.cat.d != 1) continue;
    TruncatedModule mod = build_span(c, 8);
    auto values = univariate_coeffs(expand(quotient_series(c.cat, c.n, initial_module(mod)), 12),
                                    12);
    if (!fa_polynomiality_certificate(values, 4)) {
      ok = false;
      why = "no polynomial tail on window [4,12] for catalogue entry " + std::to_string(i);
    }
  }
}

void check_point_counts(bool& ok, std::string& why) {
  for (int s = 0; s <= 3 && ok; ++s) {
    auto cs = univariate_coeffs(expand(principal_projective_series(CategoryId::fa(), s), 10), 10);
    std::vector<Rat> values;
    for (int m = 0; m <= 12; ++m) values.emplace_back(int_pow(Int(m), s));
    for (int m = 0; m <= 10 && ok; ++m) {
      if (cs[m] != values[m]) {
        ok = false;
        why = "series coefficient differs from m^s at s=" + std::to_string(s) + " m=" +
              std::to_string(m);
      }
    }
    auto cert = fa_polynomiality_certificate(values, 1);
    if (!cert || cert->first != s) {
      ok = false;
      why = "certificate degree is not " + std::to_string(s);
    }
  }
}

void check_egf_conversion(bool& ok, std::string& why) {
  RationalSeries s;
  s.variables = {"t"};
  s.numerator = Poly::monomial({2}, Rat(1));
  s.denominator = {{Poly::monomial({1}, Rat(1)), 1}, {Poly::monomial({1}, Rat(2)), 1}};
  EgfForm f = egf_convert(s);
  EgfForm want;
  want.terms = {{Poly::constant(1, Rat(1, 2)), 0},
                {Poly::constant(1, Rat(-1)), 1},
                {Poly::constant(1, Rat(1, 2)), 2}};
  bool same = f.terms.size() == want.terms.size();
  for (std::size_t i = 0; same && i < f.terms.size(); ++i) {
    same = f.terms[i].first == want.terms[i].first && f.terms[i].second == want.terms[i].second;
  }
  if (!same) {
    ok = false;
    why = "converted form is " + egf_to_string(f);
    return;
  }
  auto lhs = egf_expand(f, 12);
  auto series_coeffs = univariate_coeffs(expand(s, 12), 12);
  for (int k = 0; k <= 12 && ok; ++k) {
    // (1/2) 2^k - 1 + (1/2) [k=0], all over k!
    Rat direct = (Rat(int_pow(Int(2), k)) / 2 - 1 + Rat(k == 0 ? 1 : 0, 2)) / rat_factorial(k);
    if (lhs[k] != series_coeffs[k] / rat_factorial(k) || lhs[k] != direct) {
      ok = false;
      why = "expansion mismatch at order " + std::to_string(k);
    }
  }
}

void check_balanced_counts(bool& ok, std::string& why) {
  Cfg g;
  g.terminals = "12";
  g.nonterminals = "SPN";
  g.start = 'S';
  g.rules = {{'S', ""},     {'S', "1P2S"}, {'S', "2N1S"}, {'P', ""},
             {'P', "1P2P"}, {'N', ""},     {'N', "2N1N"}};
  auto cs = univariate_coeffs(cfg_count(g, NormedAlphabet::length_norm("12"), 16), 16);
  for (int n = 0; n <= 8 && ok; ++n) {
    if (cs[2 * n] != Rat(binom(2 * n, n)) || (n > 0 && cs[2 * n - 1] != 0)) {
      ok = false;
      why = "equal-count words of length " + std::to_string(2 * n) + " miscounted";
    }
  }
  if (!ok) return;

  CoeffTable table = multinomial_series(3, 9);
  CoeffTable brute;
  for (unsigned len = 0; len <= 9; ++len) {
    long long count = 0;
    std::vector<int> w(len, 0);
    while (true) {
      int c0 = 0, c1 = 0, c2 = 0;
      for (int x : w) (x == 0 ? c0 : x == 1 ? c1 : c2)++;
      if (c0 == c1 && c1 == c2) ++count;
      int i = static_cast<int>(len) - 1;
      while (i >= 0 && w[i] == 2) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
    if (count > 0) brute[{len}] = Rat(count);
  }
  if (table != brute) {
    ok = false;
    why = "three-letter balanced counts differ from enumeration";
  }
}

void check_order_comparators(bool& ok, std::string& why) {
  for (int d = 1; d <= 2 && ok; ++d) {
    WordOrder ord = WordOrder::oi(d);
    auto words = oracles::all_words(oi_alphabet(d), 7);
    std::vector<int> zero_count(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      zero_count[i] = static_cast<int>(std::count(words[i].begin(), words[i].end(), '0'));
    }
    for (std::size_t i = 0; i < words.size() && ok; ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        bool expect = zero_count[i] == zero_count[j] && oracles::higman_leq(words[i], words[j]);
        if (word_leq_or_incomparable(ord, words[i], words[j]) != expect ||
            (zero_count[i] == zero_count[j] && oi_leq(words[i], words[j], d) != expect)) {
          ok = false;
          why = "zero-aligned comparison differs on (" + words[i] + ", " + words[j] + ")";
          break;
        }
      }
    }
  }
  for (int n = 2; n <= 3 && ok; ++n) {
    auto words = oracles::all_words(os_alphabet(n), 7);
    for (std::size_t i = 0; i < words.size() && ok; ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (os_leq(words[i], words[j]) != oracles::os_leq(words[i], words[j])) {
          ok = false;
          why = "pattern comparison differs on (" + words[i] + ", " + words[j] + ")";
          break;
        }
      }
    }
  }
  if (!ok) return;

  // Divisibility against explicit factorization over enumerated hom sets.
  for (const CategoryId& cat : {CategoryId::oi(1), CategoryId::oi(2), CategoryId::os()}) {
    for (int n = 0; n <= 3 && ok; ++n) {
      for (int k = n; k <= 7 && ok; ++k) {
        auto fs = hom_words(cat, n, k);
        if (fs.empty()) continue;
        for (int m = k; m <= 7 && ok; ++m) {
          auto gs = hom_words(cat, n, m);
          auto hs = hom_words(cat, k, m);
          for (const Word& f : fs) {
            std::set<Word> image;
            for (const Word& h : hs) image.insert(compose_words(cat, h, f));
            for (const Word& g : gs) {
              if (divides(cat, f, g) != (image.count(g) > 0)) {
                ok = false;
                why = "divides(" + f + ", " + g + ") disagrees with factorization";
                break;
              }
            }
            if (!ok) break;
          }
        }
      }
    }
  }
  if (!ok) return;

  // One-color divisibility is exponentwise division of run-length monomials.
  CategoryId oi1 = CategoryId::oi(1);
  for (int n = 0; n <= 3 && ok; ++n) {
    std::vector<std::pair<Word, Exponents>> all;
    for (int k = n; k <= 7; ++k) {
      for (const Word& w : hom_words(oi1, n, k)) {
        all.emplace_back(w, oi_monomial_bijection(morphism_word(oi1, w)));
      }
    }
    for (const auto& [f, ef] : all) {
      for (const auto& [g, eg] : all) {
        bool monomial_divides = true;
        for (std::size_t i = 0; i < ef.size(); ++i) monomial_divides &= ef[i] <= eg[i];
        if (divides(oi1, f, g) != monomial_divides) {
          ok = false;
          why = "run-length test disagrees on (" + f + ", " + g + ")";
          break;
        }
      }
      if (!ok) break;
    }
  }
}

}  // namespace

int main() {
  run(1, "one-color and two-color projectives: binomial counts, single denominator factor",
      check_projectives_oi);
  run(2, "surjection-word projectives: t^n over falling factors, brute-force counts",
      check_projectives_os);
  run(3, "random ordered expressions: ordered compile, counts, round trip",
      check_expr_pipeline);
  run(4, "random monomial ideals: series match membership counts, quotients nonnegative",
      check_random_ideals);
  run(5, "spanned modules: dimensions match initial ideals, equal initials force equal spans",
      check_span_consistency);
  run(6, "one-color quotient tails are polynomial on the window [4,12]",
      check_quotient_tails);
  run(7, "point-counting projectives: m^s certified with degree exactly s",
      check_point_counts);
  run(8, "exponential form of t^2/((1-t)(1-2t))",
      check_egf_conversion);
  run(9, "equal-count grammar and three-letter balanced words",
      check_balanced_counts);
  run(10, "order comparators vs search, divisibility vs factorization, run-length monomials",
      check_order_comparators);
  return failures;
}
