#include "catgb/category.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "catgb/errors.hpp"

namespace catgb {

namespace {

void check_color_count(int d) {
  if (d < 1 || d > 9) throw std::domain_error("color count must be between 1 and 9");
}

void check_sizes(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("object sizes must be nonnegative");
}

// k!/((k/d)!)^d colorings of k points with all d colors used equally often.
Int balanced_colorings(int k, int d) {
  if (k % d != 0) return 0;
  return Rat(factorial(k), ipow(factorial(k / d), d)).convert_to<Int>();
}

bool balanced_word(const Word& w, int d) {
  std::vector<int> count(d + 1, 0);
  for (char c : w) ++count[c - '0'];
  for (int c = 2; c <= d; ++c) {
    if (count[c] != count[1]) return false;
  }
  return true;
}

bool is_oi_kind(const CategoryId& cat) {
  return cat.kind == CategoryId::Kind::oi || cat.kind == CategoryId::Kind::oieq;
}

void validate_word(const CategoryId& cat, const Word& w, int n, int m) {
  switch (cat.kind) {
    case CategoryId::Kind::oi:
      check_color_count(cat.d);
      if (!is_valid_oi_word(w, cat.d, n) || static_cast<int>(w.size()) != m) {
        throw std::domain_error("not a valid morphism word: \"" + w + "\"");
      }
      return;
    case CategoryId::Kind::oieq:
      check_color_count(cat.d);
      if (!is_valid_oi_word(w, cat.d, n) || static_cast<int>(w.size()) != m ||
          !balanced_word(w, cat.d)) {
        throw std::domain_error("not a valid morphism word: \"" + w + "\"");
      }
      return;
    case CategoryId::Kind::os:
      if (n > 9) throw std::domain_error("surjection words need source size at most 9");
      if (!is_valid_os_word(w, n) || static_cast<int>(w.size()) != m) {
        throw std::domain_error("not a valid morphism word: \"" + w + "\"");
      }
      return;
    default:
      throw std::domain_error("category " + category_to_string(cat) +
                              " has no morphism word encoding");
  }
}

}  // namespace

CategoryId CategoryId::oi(int d) { return {Kind::oi, d, {}}; }
CategoryId CategoryId::fi(int d) { return {Kind::fi, d, {}}; }
CategoryId CategoryId::os() { return {Kind::os, 1, {}}; }
CategoryId CategoryId::fs() { return {Kind::fs, 1, {}}; }
CategoryId CategoryId::fa() { return {Kind::fa, 1, {}}; }
CategoryId CategoryId::oieq(int d) { return {Kind::oieq, d, {}}; }
CategoryId CategoryId::product(std::vector<CategoryId> factors) {
  CategoryId c;
  c.kind = Kind::product;
  c.factors = std::move(factors);
  return c;
}

bool operator==(const CategoryId& a, const CategoryId& b) {
  return a.kind == b.kind && a.d == b.d && a.factors == b.factors;
}

CategoryId parse_category(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    CategoryId base = parse_category(text.substr(0, caret));
    if (base.kind == CategoryId::Kind::product) throw parse_error("nested product category");
    const std::string count = text.substr(caret + 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
      throw parse_error("malformed category power: " + text);
    }
    int k = std::stoi(count);
    if (k < 1 || k > 9) throw parse_error("category power out of range: " + text);
    if (k == 1) return base;
    return CategoryId::product(std::vector<CategoryId>(k, base));
  }
  auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  int d = 1;
  if (colon != std::string::npos) {
    const std::string ds = text.substr(colon + 1);
    if (ds.empty() || ds.find_first_not_of("0123456789") != std::string::npos) {
      throw parse_error("malformed color count: " + text);
    }
    d = std::stoi(ds);
    if (d < 1 || d > 9) throw parse_error("color count out of range: " + text);
    if (kind != "oi" && kind != "fi" && kind != "oieq") {
      throw parse_error("category " + kind + " takes no color count");
    }
  }
  if (kind == "oi") return CategoryId::oi(d);
  if (kind == "fi") return CategoryId::fi(d);
  if (kind == "os") return CategoryId::os();
  if (kind == "fs") return CategoryId::fs();
  if (kind == "fa") return CategoryId::fa();
  if (kind == "oieq") return CategoryId::oieq(d);
  throw parse_error("unknown category: " + text);
}

std::string category_to_string(const CategoryId& cat) {
  switch (cat.kind) {
    case CategoryId::Kind::oi:
      return "oi:" + std::to_string(cat.d);
    case CategoryId::Kind::fi:
      return "fi:" + std::to_string(cat.d);
    case CategoryId::Kind::os:
      return "os";
    case CategoryId::Kind::fs:
      return "fs";
    case CategoryId::Kind::fa:
      return "fa";
    case CategoryId::Kind::oieq:
      return "oieq:" + std::to_string(cat.d);
    case CategoryId::Kind::product: {
      bool uniform = !cat.factors.empty();
      for (const auto& f : cat.factors) uniform = uniform && f == cat.factors.front();
      if (uniform) {
        return category_to_string(cat.factors.front()) + "^" +
               std::to_string(cat.factors.size());
      }
      std::string out;
      for (const auto& f : cat.factors) {
        if (!out.empty()) out += "*";
        out += category_to_string(f);
      }
      return out;
    }
  }
  return "?";
}

Int hom_count(const CategoryId& cat, int n, int m) {
  check_sizes(n, m);
  switch (cat.kind) {
    case CategoryId::Kind::oi:
      check_color_count(cat.d);
      return m < n ? Int(0) : binomial(m, n) * ipow(Int(cat.d), m - n);
    case CategoryId::Kind::fi:
      check_color_count(cat.d);
      return m < n ? Int(0) : binomial(m, n) * factorial(n) * ipow(Int(cat.d), m - n);
    case CategoryId::Kind::os:
      return stirling2(m, n);
    case CategoryId::Kind::fs:
      return stirling2(m, n) * factorial(n);
    case CategoryId::Kind::fa:
      return ipow(Int(m), n);
    case CategoryId::Kind::oieq:
      check_color_count(cat.d);
      return m < n ? Int(0) : binomial(m, n) * balanced_colorings(m - n, cat.d);
    case CategoryId::Kind::product:
      throw std::domain_error("product categories take size tuples");
  }
  throw std::logic_error("unhandled category kind");
}

Int hom_count(const CategoryId& cat, const std::vector<int>& n, const std::vector<int>& m) {
  if (cat.kind == CategoryId::Kind::product) {
    if (n.size() != cat.factors.size() || m.size() != cat.factors.size()) {
      throw std::domain_error("size tuple length does not match the product arity");
    }
    Int total = 1;
    for (std::size_t i = 0; i < cat.factors.size(); ++i) {
      total *= hom_count(cat.factors[i], n[i], m[i]);
    }
    return total;
  }
  if (n.size() != 1 || m.size() != 1) {
    throw std::domain_error("base categories take single sizes");
  }
  return hom_count(cat, n[0], m[0]);
}

std::vector<Word> hom_words(const CategoryId& cat, int n, int m) {
  check_sizes(n, m);
  std::vector<Word> out;
  if (is_oi_kind(cat)) {
    check_color_count(cat.d);
    if (n > m) return out;
    Word cur;
    std::function<void(int, int)> rec = [&](int pos, int zeros_left) {
      if (pos == m) {
        if (zeros_left == 0) out.push_back(cur);
        return;
      }
      if (zeros_left > 0) {
        cur.push_back('0');
        rec(pos + 1, zeros_left - 1);
        cur.pop_back();
      }
      if (m - pos - 1 >= zeros_left) {
        for (int c = 1; c <= cat.d; ++c) {
          cur.push_back(static_cast<char>('0' + c));
          rec(pos + 1, zeros_left);
          cur.pop_back();
        }
      }
    };
    rec(0, n);
    if (cat.kind == CategoryId::Kind::oieq) {
      out.erase(std::remove_if(out.begin(), out.end(),
                               [&](const Word& w) { return !balanced_word(w, cat.d); }),
                out.end());
    }
    return out;
  }
  if (cat.kind == CategoryId::Kind::os) {
    if (n > 9) throw std::domain_error("surjection words need source size at most 9");
    if (n > m) return out;
    Word cur;
    std::function<void(int, int)> rec = [&](int pos, int used) {
      if (pos == m) {
        if (used == n) out.push_back(cur);
        return;
      }
      if (n - used > m - pos) return;  // not enough room for the unseen values
      int top = std::min(used + 1, n);
      for (int v = 1; v <= top; ++v) {
        cur.push_back(static_cast<char>('0' + v));
        rec(pos + 1, std::max(used, v));
        cur.pop_back();
      }
    };
    rec(0, 0);
    return out;
  }
  throw std::domain_error("category " + category_to_string(cat) +
                          " has no morphism word encoding");
}

std::vector<Morphism> hom_enumerate(const CategoryId& cat, int n, int m) {
  check_sizes(n, m);
  std::vector<Morphism> out;
  switch (cat.kind) {
    case CategoryId::Kind::oi:
    case CategoryId::Kind::oieq:
    case CategoryId::Kind::os:
      for (const Word& w : hom_words(cat, n, m)) {
        MorphismWord mw{cat, n, m, w};
        out.push_back(decode(mw));
      }
      return out;
    case CategoryId::Kind::fi: {
      check_color_count(cat.d);
      if (n > m) return out;
      std::vector<int> values(n);
      std::vector<bool> used(m + 1, false);
      std::vector<int> colors(m, 0);
      std::function<void(int)> color_rec;
      std::function<void(int)> value_rec = [&](int i) {
        if (i == n) {
          color_rec(0);
          return;
        }
        for (int v = 1; v <= m; ++v) {
          if (used[v]) continue;
          used[v] = true;
          values[i] = v;
          value_rec(i + 1);
          used[v] = false;
        }
      };
      color_rec = [&](int j) {
        if (j == m) {
          out.push_back({n, m, values, colors});
          return;
        }
        if (used[j + 1]) {
          colors[j] = 0;
          color_rec(j + 1);
          return;
        }
        for (int c = 1; c <= cat.d; ++c) {
          colors[j] = c;
          color_rec(j + 1);
        }
        colors[j] = 0;
      };
      value_rec(0);
      return out;
    }
    case CategoryId::Kind::fs: {
      std::vector<int> values(m);
      std::function<void(int, int)> rec = [&](int j, int seen) {
        if (j == m) {
          if (seen == n) out.push_back({n, m, values, {}});
          return;
        }
        for (int v = 1; v <= n; ++v) {
          values[j] = v;
          bool is_new = std::find(values.begin(), values.begin() + j, v) == values.begin() + j;
          rec(j + 1, seen + (is_new ? 1 : 0));
        }
      };
      if (n <= m) rec(0, 0);
      return out;
    }
    case CategoryId::Kind::fa: {
      std::vector<int> values(n);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          out.push_back({n, m, values, {}});
          return;
        }
        for (int v = 1; v <= m; ++v) {
          values[i] = v;
          rec(i + 1);
        }
      };
      if (m > 0 || n == 0) rec(0);
      return out;
    }
    case CategoryId::Kind::product:
      throw std::domain_error("product categories take size tuples");
  }
  throw std::logic_error("unhandled category kind");
}

MorphismWord morphism_word(const CategoryId& cat, const Word& w) {
  const int m = static_cast<int>(w.size());
  int n = 0;
  if (is_oi_kind(cat)) {
    n = zero_count(w);
  } else if (cat.kind == CategoryId::Kind::os) {
    for (char c : w) n = std::max(n, c - '0');
  } else {
    throw std::domain_error("category " + category_to_string(cat) +
                            " has no morphism word encoding");
  }
  validate_word(cat, w, n, m);
  return {cat, n, m, w};
}

MorphismWord encode(const CategoryId& cat, const Morphism& f) {
  check_sizes(f.n, f.m);
  if (is_oi_kind(cat)) {
    check_color_count(cat.d);
    if (static_cast<int>(f.values.size()) != f.n ||
        static_cast<int>(f.colors.size()) != f.m) {
      throw std::domain_error("morphism tables have the wrong arity");
    }
    Word w(f.m, '0');
    std::vector<bool> image(f.m + 1, false);
    int prev = 0;
    for (int v : f.values) {
      if (v <= prev || v > f.m) throw std::domain_error("values are not strictly increasing");
      image[v] = true;
      prev = v;
    }
    for (int j = 1; j <= f.m; ++j) {
      int c = f.colors[j - 1];
      if (image[j] != (c == 0) || c < 0 || c > cat.d) {
        throw std::domain_error("colors disagree with the image");
      }
      if (c > 0) w[j - 1] = static_cast<char>('0' + c);
    }
    validate_word(cat, w, f.n, f.m);
    return {cat, f.n, f.m, w};
  }
  if (cat.kind == CategoryId::Kind::os) {
    if (static_cast<int>(f.values.size()) != f.m) {
      throw std::domain_error("morphism tables have the wrong arity");
    }
    Word w;
    for (int v : f.values) {
      if (v < 1 || v > f.n) throw std::domain_error("surjection value out of range");
      w.push_back(static_cast<char>('0' + v));
    }
    validate_word(cat, w, f.n, f.m);
    return {cat, f.n, f.m, w};
  }
  throw std::domain_error("category " + category_to_string(cat) +
                          " has no morphism word encoding");
}

Morphism decode(const MorphismWord& f) {
  validate_word(f.cat, f.word, f.n, f.m);
  Morphism out;
  out.n = f.n;
  out.m = f.m;
  if (is_oi_kind(f.cat)) {
    out.colors.assign(f.m, 0);
    for (int j = 0; j < f.m; ++j) {
      if (f.word[j] == '0') {
        out.values.push_back(j + 1);
      } else {
        out.colors[j] = f.word[j] - '0';
      }
    }
    return out;
  }
  for (char c : f.word) out.values.push_back(c - '0');
  return out;
}

bool is_valid_hom_word(const CategoryId& cat, int n, int m, const Word& w) {
  try {
    validate_word(cat, w, n, m);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Word compose_words(const CategoryId& cat, const Word& outer, const Word& inner) {
  if (is_oi_kind(cat)) {
    MorphismWord o = morphism_word(cat, outer);
    MorphismWord i = morphism_word(cat, inner);
    if (i.m != o.n) {
      throw std::domain_error("inner target " + std::to_string(i.m) +
                              " does not match outer source " + std::to_string(o.n));
    }
    Word out = outer;
    std::size_t next = 0;
    for (char& c : out) {
      if (c == '0') c = inner[next++];
    }
    return out;
  }
  if (cat.kind == CategoryId::Kind::os) {
    MorphismWord o = morphism_word(cat, outer);
    MorphismWord i = morphism_word(cat, inner);
    if (i.m != o.n) {
      throw std::domain_error("inner target " + std::to_string(i.m) +
                              " does not match outer source " + std::to_string(o.n));
    }
    Word out;
    for (char c : outer) out.push_back(inner[c - '1']);
    return out;
  }
  throw std::domain_error("category " + category_to_string(cat) +
                          " has no morphism word encoding");
}

namespace {

// Source size of a surjective value word, without the first-occurrence
// canonicity that morphism words carry: divisibility questions make sense
// for any surjective word, and come out false on the non-canonical ones.
int surjective_word_source(const Word& w) {
  int n = 0;
  for (char c : w) {
    if (c < '1' || c > '9') throw std::domain_error("not a surjection word: \"" + w + "\"");
    n = std::max(n, c - '0');
  }
  std::vector<bool> seen(n + 1, false);
  for (char c : w) seen[c - '0'] = true;
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) throw std::domain_error("not a surjection word: \"" + w + "\"");
  }
  return n;
}

}  // namespace

bool divides(const CategoryId& cat, const Word& f, const Word& g) {
  if (cat.kind == CategoryId::Kind::oi) {
    MorphismWord wf = morphism_word(cat, f);
    MorphismWord wg = morphism_word(cat, g);
    if (wf.n != wg.n) throw std::domain_error("divisibility needs a common source object");
    return oi_leq(f, g, cat.d);
  }
  if (cat.kind == CategoryId::Kind::os) {
    if (surjective_word_source(f) != surjective_word_source(g)) {
      throw std::domain_error("divisibility needs a common source object");
    }
    return os_leq(f, g);
  }
  throw std::domain_error("divisibility is only modeled for oi:d and os");
}

WordOrder category_word_order(const CategoryId& cat, int n) {
  if (cat.kind == CategoryId::Kind::oi) return WordOrder::oi(cat.d);
  if (cat.kind == CategoryId::Kind::os) {
    if (n > 9) throw std::domain_error("surjection words need source size at most 9");
    return WordOrder::os(n);
  }
  throw std::domain_error("no word order for category " + category_to_string(cat));
}

bool admissible_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RationalSeries principal_projective_series(const CategoryId& cat, const std::vector<int>& n) {
  if (cat.kind == CategoryId::Kind::product) {
    if (n.size() != cat.factors.size()) {
      throw std::domain_error("size tuple length does not match the product arity");
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < cat.factors.size(); ++i) {
      if (cat.factors[i].kind != CategoryId::Kind::os) {
        throw std::domain_error("only products of os factors have factored series");
      }
      check_sizes(n[i], 0);
      vars.push_back("t" + std::to_string(i + 1));
    }
    RationalSeries s;
    s.variables = vars;
    Exponents top(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) top[i] = static_cast<unsigned>(n[i]);
    s.numerator = Poly::monomial(std::move(top), Rat(1));
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (int j = 1; j <= n[i]; ++j) {
        Exponents e(vars.size(), 0);
        e[i] = 1;
        s.denominator.emplace_back(Poly::monomial(std::move(e), Rat(j)), 1);
      }
    }
    return series_normalize(std::move(s));
  }
  if (n.size() != 1) throw std::domain_error("base categories take single sizes");
  return principal_projective_series(cat, n[0]);
}

RationalSeries principal_projective_series(const CategoryId& cat, int n) {
  check_sizes(n, 0);
  const unsigned un = static_cast<unsigned>(n);
  switch (cat.kind) {
    case CategoryId::Kind::oi:
    case CategoryId::Kind::fi: {
      check_color_count(cat.d);
      RationalSeries s;
      s.variables = {"t"};
      Rat lead = cat.kind == CategoryId::Kind::fi ? Rat(factorial(un)) : Rat(1);
      s.numerator = Poly::monomial({un}, lead);
      s.denominator = {{Poly::monomial({1}, Rat(cat.d)), un + 1}};
      return s;
    }
    case CategoryId::Kind::os: {
      RationalSeries s;
      s.variables = {"t"};
      s.numerator = Poly::monomial({un}, Rat(1));
      for (int j = 1; j <= n; ++j) s.denominator.emplace_back(Poly::monomial({1}, Rat(j)), 1);
      return s;
    }
    case CategoryId::Kind::fa: {
      std::vector<Rat> window;
      for (int m = 0; m <= 2 * n + 6; ++m) window.emplace_back(hom_count(cat, n, m));
      return fit_rational(window, {{Poly::monomial({1}, Rat(1)), un + 1}});
    }
    case CategoryId::Kind::fs:
    case CategoryId::Kind::oieq:
      throw std::domain_error("category " + category_to_string(cat) +
                              " has no rational projective series");
    case CategoryId::Kind::product:
      throw std::domain_error("product categories take size tuples");
  }
  throw std::logic_error("unhandled category kind");
}

std::optional<std::pair<int, Poly>> fa_polynomiality_certificate(const std::vector<Rat>& values,
                                                                 std::size_t from) {
  if (from + 3 > values.size()) {
    throw std::domain_error("certificate window needs at least three values");
  }
  std::vector<Rat> diffs(values.begin() + from, values.end());
  std::vector<Rat> leads;
  for (unsigned k = 0; diffs.size() >= 2; ++k) {
    if (std::all_of(diffs.begin(), diffs.end(), [](const Rat& r) { return r == 0; })) {
      // Newton form: sum of leads[r] * C(x - from, r).
      Poly p = Poly::zero(1);
      for (unsigned r = 0; r < k; ++r) {
        if (leads[r] == 0) continue;
        Poly basis = Poly::constant(1, 1);
        for (unsigned s = 0; s < r; ++s) {
          basis = basis * (Poly::monomial({1}, Rat(1)) -
                           Poly::constant(1, Rat(static_cast<long long>(from + s))));
        }
        p = p + basis * (leads[r] / Rat(factorial(r)));
      }
      for (std::size_t i = from; i < values.size(); ++i) {
        Rat x(static_cast<long long>(i));
        Rat y = 0;
        for (const auto& [e, c] : p.terms) {
          Rat power = 1;
          for (unsigned s = 0; s < e[0]; ++s) power *= x;
          y += c * power;
        }
        if (y != values[i]) throw std::logic_error("interpolation failed to reproduce the window");
      }
      return std::make_pair(static_cast<int>(p.total_degree()), p);
    }
    leads.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return std::nullopt;
}

Exponents oi_monomial_bijection(const MorphismWord& f) {
  if (f.cat.kind != CategoryId::Kind::oi || f.cat.d != 1) {
    throw std::domain_error("the monomial correspondence needs oi:1 words");
  }
  validate_word(f.cat, f.word, f.n, f.m);
  Exponents runs(f.n + 1, 0);
  std::size_t block = 0;
  for (char c : f.word) {
    if (c == '0') {
      ++block;
    } else {
      ++runs[block];
    }
  }
  return runs;
}

}  // namespace catgb
