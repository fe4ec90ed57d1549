#include "catgb/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "catgb/errors.hpp"

namespace catgb {

namespace {

// Reads j[key] with a type check so malformed records fail as parse errors
// instead of nlohmann exceptions.
const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw parse_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw parse_error(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw parse_error(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<long long>();
}

// Coefficient vector of an N-linear form, or nothing when p has a term of
// total degree != 1 or a non-natural coefficient.
bool linear_form_coeffs(const Poly& p, std::vector<Int>& out) {
  out.assign(p.nvars, Int(0));
  for (const auto& [e, c] : p.terms) {
    unsigned deg = 0;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i] != 0) idx = i;
    }
    if (deg != 1) return false;
    if (denominator(c) != 1 || numerator(c) < 0) return false;
    out[idx] = numerator(c);
  }
  return true;
}

Json term_list(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) {
    terms.push_back(Json::array({Json(e), rat_to_string(c)}));
  }
  return terms;
}

}  // namespace

std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::higman_subsequence:
      return "higman";
    case OrderKind::os_pattern:
      return "os";
    case OrderKind::oi_zero_aligned:
      return "oi";
  }
  throw std::logic_error("unknown order kind");
}

OrderKind order_kind_from_name(const std::string& name) {
  if (name == "higman") return OrderKind::higman_subsequence;
  if (name == "os") return OrderKind::os_pattern;
  if (name == "oi") return OrderKind::oi_zero_aligned;
  throw parse_error("unknown order kind \"" + name + "\"");
}

Json dfa_to_json(const Dfa& d) {
  Json j;
  j["alphabet"] = d.alphabet;
  j["states"] = d.num_states;
  Json trans = Json::array();
  for (std::size_t q = 0; q < d.num_states; ++q) {
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
      trans.push_back(Json::array({std::string(1, d.alphabet[i]), q, d.trans[q][i]}));
    }
  }
  j["transitions"] = std::move(trans);
  j["initial"] = d.initial;
  j["finals"] = d.finals;
  return j;
}

Dfa dfa_from_json(const Json& j) {
  Dfa d;
  d.alphabet = string_field(j, "alphabet");
  {
    std::set<char> seen(d.alphabet.begin(), d.alphabet.end());
    if (seen.size() != d.alphabet.size() ||
        !std::is_sorted(d.alphabet.begin(), d.alphabet.end())) {
      throw parse_error("alphabet letters must be distinct and ascending");
    }
  }
  long long states = int_field(j, "states");
  if (states <= 0) throw parse_error("a DFA needs at least one state");
  d.num_states = static_cast<std::size_t>(states);
  long long initial = int_field(j, "initial");
  if (initial < 0 || initial >= states) throw parse_error("initial state out of range");
  d.initial = static_cast<std::size_t>(initial);

  d.trans.assign(d.num_states, std::vector<std::size_t>(d.alphabet.size(), SIZE_MAX));
  const Json& trans = field(j, "transitions");
  if (!trans.is_array()) throw parse_error("field \"transitions\" must be an array");
  for (const Json& t : trans) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_number_integer() ||
        !t[2].is_number_integer()) {
      throw parse_error("each transition must be [letter, from, to]");
    }
    std::string letter = t[0].get<std::string>();
    long long from = t[1].get<long long>(), to = t[2].get<long long>();
    if (letter.size() != 1 || d.alphabet.find(letter[0]) == std::string::npos) {
      throw parse_error("transition letter \"" + letter + "\" is not in the alphabet");
    }
    if (from < 0 || from >= states || to < 0 || to >= states) {
      throw parse_error("transition state out of range");
    }
    std::size_t i = d.alphabet.find(letter[0]);
    if (d.trans[from][i] != SIZE_MAX) {
      throw parse_error("duplicate transition for state " + std::to_string(from) +
                        " on letter " + letter);
    }
    d.trans[from][i] = static_cast<std::size_t>(to);
  }
  for (std::size_t q = 0; q < d.num_states; ++q) {
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
      if (d.trans[q][i] == SIZE_MAX) {
        throw parse_error("transition table is not total: state " + std::to_string(q) +
                          " has no move on letter " + std::string(1, d.alphabet[i]));
      }
    }
  }

  const Json& finals = field(j, "finals");
  if (!finals.is_array()) throw parse_error("field \"finals\" must be an array");
  for (const Json& f : finals) {
    if (!f.is_number_integer()) throw parse_error("final states must be integers");
    long long q = f.get<long long>();
    if (q < 0 || q >= states) throw parse_error("final state out of range");
    d.finals.push_back(static_cast<std::size_t>(q));
  }
  if (std::adjacent_find(d.finals.begin(), d.finals.end(),
                         [](std::size_t a, std::size_t b) { return a >= b; }) != d.finals.end()) {
    throw parse_error("final states must be ascending and distinct");
  }
  return d;
}

Json ideal_to_json(const MonomialIdealGens& g) {
  Json j;
  j["order"] = order_kind_name(g.order.kind);
  if (g.order.kind == OrderKind::oi_zero_aligned) j["d"] = g.order.d;
  j["alphabet"] = g.order.alphabet;
  j["generators"] = g.generators;
  return j;
}

MonomialIdealGens ideal_from_json(const Json& j) {
  MonomialIdealGens g;
  OrderKind kind = order_kind_from_name(string_field(j, "order"));
  Alphabet alphabet = string_field(j, "alphabet");
  switch (kind) {
    case OrderKind::higman_subsequence:
      g.order = WordOrder::higman(alphabet);
      break;
    case OrderKind::oi_zero_aligned: {
      long long d = int_field(j, "d");
      if (d < 1 || d > 9) throw parse_error("zero-aligned orders need 1 <= d <= 9");
      g.order = WordOrder::oi(static_cast<int>(d));
      if (g.order.alphabet != alphabet) {
        throw parse_error("alphabet \"" + alphabet + "\" does not match d = " + std::to_string(d));
      }
      break;
    }
    case OrderKind::os_pattern: {
      int n = static_cast<int>(alphabet.size());
      if (n < 1 || n > 9 || os_alphabet(n) != alphabet) {
        throw parse_error("pattern-order alphabets must be \"1\"..\"n\"");
      }
      g.order = WordOrder::os(n);
      break;
    }
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw parse_error("field \"generators\" must be an array");
  for (const Json& w : gens) {
    if (!w.is_string()) throw parse_error("generators must be words");
    g.generators.push_back(w.get<std::string>());
  }
  return g;
}

Json series_to_json(const RationalSeries& s) {
  Json j;
  j["vars"] = s.variables;
  j["numerator"] = term_list(s.numerator);
  Json den = Json::array();
  for (const auto& [lambda, e] : s.denominator) {
    std::vector<Int> coeffs;
    if (linear_form_coeffs(lambda, coeffs)) {
      Json cs = Json::array();
      for (const Int& c : coeffs) cs.push_back(c.convert_to<long long>());
      den.push_back(Json::array({std::move(cs), e}));
    } else {
      Json factor;
      factor["terms"] = term_list(lambda);
      factor["exponent"] = e;
      den.push_back(std::move(factor));
    }
  }
  j["denominator"] = std::move(den);
  return j;
}

}  // namespace catgb
