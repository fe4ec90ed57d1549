#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catgb/category.hpp"
#include "catgb/cfg.hpp"
#include "catgb/dfa_series.hpp"
#include "catgb/egf.hpp"
#include "catgb/errors.hpp"
#include "catgb/module.hpp"
#include "catgb/ordered_expr.hpp"
#include "catgb/serialize.hpp"

using namespace catgb;

namespace {

struct GlobalOpts {
  std::string format = "text";
  long long max_work = 64;
  std::string config_path;
};

void check_work(const GlobalOpts& g, long long value, const std::string& what) {
  if (value > g.max_work) {
    throw bounds_error(what + " " + std::to_string(value) + " exceeds --max-work " +
                       std::to_string(g.max_work));
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("invalid integer in " + what + ": \"" + text + "\"");
  }
}

std::vector<int> parse_int_tuple(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_int(trim(part), what));
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open file: " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

const Json& config_entry(const Json& config, const std::string& section, const std::string& name) {
  if (!config.is_object() || !config.contains(section) || !config.at(section).contains(name)) {
    throw parse_error("config has no entry \"" + name + "\" under \"" + section + "\"");
  }
  return config.at(section).at(name);
}

// Output accumulates every line, then prints once; structured mode dumps a
// single JSON document. Either way a rerun is byte-identical.
struct Output {
  bool json;
  Json doc;
  std::string text;

  explicit Output(const GlobalOpts& g) : json(g.format == "json") {}

  void line(const std::string& s) { text += s + "\n"; }

  void flush() const {
    if (json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

std::string join_rats(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(v[i]);
  }
  return out;
}

Json expansion_json(const CoeffTable& table, std::size_t nvars, unsigned order) {
  if (nvars == 1) {
    Json a = Json::array();
    for (const Rat& c : univariate_coeffs(table, order)) a.push_back(rat_to_string(c));
    return a;
  }
  Json a = Json::array();
  for (const auto& [e, c] : table) a.push_back(Json::array({Json(e), rat_to_string(c)}));
  return a;
}

void emit_expansion(Output& out, const CoeffTable& table, std::size_t nvars, unsigned order) {
  if (out.json) {
    out.doc["expansion"] = expansion_json(table, nvars, order);
    return;
  }
  if (nvars == 1) {
    out.line(join_rats(univariate_coeffs(table, order)));
    return;
  }
  for (const auto& [e, c] : table) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    out.line(key + ": " + rat_to_string(c));
  }
}

void emit_series(Output& out, const RationalSeries& s, int expand_order, bool egf) {
  if (out.json) {
    out.doc["series"] = series_to_json(s);
  } else {
    out.line(series_to_string(s));
  }
  if (expand_order >= 0) {
    emit_expansion(out, expand(s, static_cast<unsigned>(expand_order)), s.variables.size(),
                   static_cast<unsigned>(expand_order));
  }
  if (egf) {
    EgfForm f = egf_convert(s);
    if (out.json) {
      out.doc["egf"] = egf_to_string(f);
    } else {
      out.line(egf_to_string(f));
    }
  }
}

std::vector<ModuleElement> parse_elements(const CategoryId& cat, int n, const std::string& text) {
  std::vector<ModuleElement> out;
  for (const std::string& part : split(text, ';')) {
    if (trim(part).empty()) continue;
    out.push_back(parse_module_element(cat, n, part));
  }
  return out;
}

struct HomcountArgs {
  std::string cat, n, m;
};

int run_homcount(const GlobalOpts& g, const HomcountArgs& a) {
  CategoryId cat = parse_category(a.cat);
  std::vector<int> n = parse_int_tuple(a.n, "n"), m = parse_int_tuple(a.m, "m");
  for (int v : n) check_work(g, v, "size");
  for (int v : m) check_work(g, v, "size");
  Int count = n.size() == 1 && m.size() == 1 && cat.kind != CategoryId::Kind::product
                  ? hom_count(cat, n[0], m[0])
                  : hom_count(cat, n, m);
  Output out(g);
  if (out.json) {
    out.doc["command"] = "homcount";
    out.doc["category"] = category_to_string(cat);
    out.doc["n"] = n;
    out.doc["m"] = m;
    out.doc["count"] = count.str();
  } else {
    out.line(count.str());
  }
  out.flush();
  return 0;
}

struct SeriesArgs {
  std::string subject;
  std::string cat;
  std::string n;
  std::string gens;
  std::string ideal_name;
  std::string dfa_path;
  std::string expr;
  std::string alphabet;
  std::string terminals, nonterminals, rules;
  std::string start = "S";
  int d = 0;
  int expand_order = -1;
  bool egf = false;
};

MonomialIdealGens resolve_ideal(const GlobalOpts& g, const SeriesArgs& a, const CategoryId& cat,
                                int n) {
  if (!a.ideal_name.empty()) {
    if (!a.gens.empty()) throw parse_error("use either --gens or --ideal, not both");
    if (g.config_path.empty()) throw parse_error("--ideal needs --config");
    Json config = load_json_file(g.config_path);
    return ideal_from_json(config_entry(config, "ideals", a.ideal_name));
  }
  MonomialIdealGens ideal;
  ideal.order = category_word_order(cat, n);
  for (const std::string& w : split(a.gens, ',')) {
    std::string word = trim(w);
    if (!word.empty()) ideal.generators.push_back(word);
  }
  return ideal;
}

Cfg parse_cfg_args(const SeriesArgs& a) {
  Cfg g;
  g.terminals = a.terminals;
  g.nonterminals = a.nonterminals;
  if (a.start.size() != 1) throw parse_error("--start must be a single symbol");
  g.start = a.start[0];
  for (const std::string& rule : split(a.rules, ';')) {
    std::string r = trim(rule);
    if (r.empty()) continue;
    std::size_t arrow = r.find("->");
    if (arrow == std::string::npos) throw parse_error("rule without \"->\": " + r);
    std::string head = trim(r.substr(0, arrow));
    if (head.size() != 1) throw parse_error("rule head must be a single symbol: " + r);
    for (const std::string& body : split(r.substr(arrow + 2), '|')) {
      g.rules.emplace_back(head[0], trim(body));
    }
  }
  return g;
}

int run_series(const GlobalOpts& g, const SeriesArgs& a) {
  Output out(g);
  if (out.json) {
    out.doc["command"] = "series";
    out.doc["subject"] = a.subject;
  }
  if (a.expand_order >= 0) check_work(g, a.expand_order, "--expand");

  if (a.subject == "projective" || a.subject == "ideal" || a.subject == "quotient") {
    if (a.cat.empty() || a.n.empty()) throw parse_error(a.subject + " needs --cat and --n");
    CategoryId cat = parse_category(a.cat);
    std::vector<int> n = parse_int_tuple(a.n, "--n");
    for (int v : n) check_work(g, v, "--n");
    if (out.json) {
      out.doc["category"] = category_to_string(cat);
      out.doc["n"] = n;
    }
    if (a.subject == "projective") {
      RationalSeries s = n.size() == 1 && cat.kind != CategoryId::Kind::product
                             ? principal_projective_series(cat, n[0])
                             : principal_projective_series(cat, n);
      emit_series(out, s, a.expand_order, a.egf);
    } else {
      if (n.size() != 1) throw parse_error("--n must be a single size for " + a.subject);
      MonomialIdealGens ideal = resolve_ideal(g, a, cat, n[0]);
      for (const Word& w : ideal.generators) check_work(g, static_cast<long long>(w.size()),
                                                        "generator length");
      if (out.json) out.doc["ideal"] = ideal_to_json(ideal);
      RationalSeries s = a.subject == "ideal" ? module_series(cat, n[0], ideal)
                                              : quotient_series(cat, n[0], ideal);
      emit_series(out, s, a.expand_order, a.egf);
    }
  } else if (a.subject == "dfa") {
    if (a.dfa_path.empty()) throw parse_error("dfa needs --dfa <file>");
    Dfa d = dfa_from_json(load_json_file(a.dfa_path));
    check_work(g, static_cast<long long>(d.num_states), "state count");
    emit_series(out, dfa_series(d, NormedAlphabet::length_norm(d.alphabet)), a.expand_order,
                a.egf);
  } else if (a.subject == "expr") {
    if (a.expr.empty()) throw parse_error("expr needs --expr <text>");
    check_work(g, static_cast<long long>(a.expr.size()), "--expr length");
    OrderedExpr e = parse_expr(a.expr);
    Dfa d = a.alphabet.empty() ? compile_expr(e) : compile_expr(e, a.alphabet);
    emit_series(out, dfa_series(d, NormedAlphabet::length_norm(d.alphabet)), a.expand_order,
                a.egf);
  } else if (a.subject == "cfg") {
    if (a.expand_order < 0) throw parse_error("cfg needs --expand <order>");
    Cfg grammar = parse_cfg_args(a);
    CoeffTable table = cfg_count(grammar, NormedAlphabet::length_norm(grammar.terminals),
                                 static_cast<unsigned>(a.expand_order));
    emit_expansion(out, table, 1, static_cast<unsigned>(a.expand_order));
  } else if (a.subject == "multinomial") {
    if (a.expand_order < 0) throw parse_error("multinomial needs --expand <order>");
    if (a.d < 1) throw parse_error("multinomial needs --d >= 1");
    CoeffTable table = multinomial_series(a.d, static_cast<unsigned>(a.expand_order));
    emit_expansion(out, table, 1, static_cast<unsigned>(a.expand_order));
  } else {
    throw parse_error("unknown series subject \"" + a.subject + "\"");
  }
  out.flush();
  return 0;
}

struct GroebnerArgs {
  std::string cat;
  std::string n;
  std::string gens;
  std::string module_name;
  std::string candidate;
  int trunc = -1;
  bool have_candidate = false;
};

int run_groebner(const GlobalOpts& g, GroebnerArgs a) {
  if (!a.module_name.empty()) {
    if (g.config_path.empty()) throw parse_error("--module needs --config");
    Json config = load_json_file(g.config_path);
    const Json& entry = config_entry(config, "modules", a.module_name);
    if (a.cat.empty() && entry.contains("cat")) a.cat = entry.at("cat").get<std::string>();
    if (a.n.empty() && entry.contains("n")) a.n = std::to_string(entry.at("n").get<long long>());
    if (a.gens.empty() && entry.contains("gens")) {
      std::string joined;
      for (const Json& e : entry.at("gens")) {
        if (!e.is_string()) throw parse_error("config gens must be strings");
        if (!joined.empty()) joined += ";";
        joined += e.get<std::string>();
      }
      a.gens = joined;
    }
    if (a.trunc < 0 && entry.contains("trunc")) a.trunc = entry.at("trunc").get<int>();
  }
  if (a.cat.empty() || a.n.empty()) throw parse_error("groebner needs --cat and --n");
  if (a.trunc < 0) throw parse_error("groebner needs --trunc");
  check_work(g, a.trunc, "--trunc");
  CategoryId cat = parse_category(a.cat);
  int n = parse_int(a.n, "--n");
  check_work(g, n, "--n");

  std::vector<ModuleElement> gens = parse_elements(cat, n, a.gens);
  TruncatedModule mod = span_generators(cat, n, gens, a.trunc);
  MonomialIdealGens ideal = initial_module(mod);
  RationalSeries series = module_series(cat, n, ideal);

  Output out(g);
  std::vector<std::size_t> dims = mod.dims();
  if (out.json) {
    out.doc["command"] = "groebner";
    out.doc["category"] = category_to_string(cat);
    out.doc["n"] = n;
    out.doc["trunc"] = a.trunc;
    out.doc["dims"] = dims;
    out.doc["initial"] = ideal.generators;
    out.doc["series"] = series_to_json(series);
  } else {
    std::string ds;
    for (std::size_t i = 0; i < dims.size(); ++i) ds += (i ? "," : "") + std::to_string(dims[i]);
    out.line("dims: " + ds);
    std::string is;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
      is += (i ? "," : "") + ideal.generators[i];
    }
    out.line("initial: " + is);
    out.line("series: " + series_to_string(series));
  }
  if (a.have_candidate) {
    bool ok = is_groebner_up_to(mod, parse_elements(cat, n, a.candidate), a.trunc);
    if (out.json) {
      out.doc["groebner"] = ok;
    } else {
      out.line(std::string("groebner: ") + (ok ? "yes" : "no"));
    }
  }
  out.flush();
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact invariants of combinatorial categories: hom counts, Hilbert series, "
               "and truncated Groebner data for submodules of principal projectives."};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-work", g.max_work, "Reject requests whose size parameters exceed this");
  app.add_option("--config", g.config_path, "JSON file with named ideals and modules");

  HomcountArgs hc;
  CLI::App* homcount = app.add_subcommand("homcount", "Count morphisms n -> m");
  homcount->add_option("cat", hc.cat, "Category id, e.g. oi:2, os, fa")->required();
  homcount->add_option("n", hc.n, "Source size (comma tuple for products)")->required();
  homcount->add_option("m", hc.m, "Target size (comma tuple for products)")->required();

  SeriesArgs se;
  CLI::App* series = app.add_subcommand(
      "series", "Hilbert series of projectives, ideals, quotients, DFAs, expressions, grammars");
  series->add_option("subject", se.subject,
                     "projective | ideal | quotient | dfa | expr | cfg | multinomial")
      ->required();
  series->add_option("--cat", se.cat, "Category id");
  series->add_option("--n", se.n, "Source size (comma tuple for products)");
  series->add_option("--gens", se.gens, "Comma-separated ideal generator words");
  series->add_option("--ideal", se.ideal_name, "Named ideal from --config");
  series->add_option("--dfa", se.dfa_path, "DFA JSON file");
  series->add_option("--expr", se.expr, "Ordered expression, e.g. \"'1'[1]*'2'[12]*\"");
  series->add_option("--alphabet", se.alphabet, "Alphabet override for --expr");
  series->add_option("--terminals", se.terminals, "Grammar terminal symbols");
  series->add_option("--nonterminals", se.nonterminals, "Grammar nonterminal symbols");
  series->add_option("--start", se.start, "Grammar start symbol");
  series->add_option("--rules", se.rules, "Rules \"S->|1S2S;T->a\" separated by ;");
  series->add_option("--d", se.d, "Letter count for multinomial");
  series->add_option("--expand", se.expand_order, "Also print coefficients up to this order");
  series->add_flag("--egf", se.egf, "Also print the exponential form");

  GroebnerArgs gr;
  CLI::App* groebner =
      app.add_subcommand("groebner", "Span generators, report dims and the initial module");
  groebner->add_option("--cat", gr.cat, "Category id (oi:d or os)");
  groebner->add_option("--n", gr.n, "Source size");
  groebner->add_option("--gens", gr.gens, "Module elements separated by ;");
  groebner->add_option("--module", gr.module_name, "Named module from --config");
  groebner->add_option("--trunc", gr.trunc, "Span targets up to this size");
  groebner->add_option("--candidate", gr.candidate, "Elements to test as a basis");

  for (CLI::App* sub : {homcount, series, groebner}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  gr.have_candidate = groebner->count("--candidate") > 0;

  if (homcount->parsed()) return run_homcount(g, hc);
  if (series->parsed()) return run_series(g, se);
  return run_groebner(g, gr);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bounds_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
