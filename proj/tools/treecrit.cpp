// treecrit: command-line front end for the tree criticality and minimality
// toolkit. Exit status: 0 all checks pass, 1 a check failed (witness
// printed), 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treecrit/checks.hpp"
#include "treecrit/counting.hpp"
#include "treecrit/criticality.hpp"
#include "treecrit/enumeration.hpp"
#include "treecrit/errors.hpp"
#include "treecrit/families.hpp"
#include "treecrit/minimality.hpp"
#include "treecrit/primality.hpp"

using namespace treecrit;
using json = nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  int jobs = 1;
};

// An input graph plus the optional label map carried in "# labels:" comments.
struct Input {
  Graph graph;
  std::vector<std::string> labels;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Input read_input(const std::string& file) {
  EdgeListDocument doc;
  if (file == "-") {
    doc = parse_edge_list(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    doc = parse_edge_list(in);
  }
  Input input{std::move(doc.graph), {}};
  for (const auto& c : doc.comments) {
    if (c.rfind("labels:", 0) != 0) continue;
    input.labels = split_ws(c.substr(7));
    if (static_cast<int>(input.labels.size()) != input.graph.order())
      throw InputError("label map has " + std::to_string(input.labels.size()) +
                       " entries for " + std::to_string(input.graph.order()) +
                       " vertices");
  }
  return input;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError("not an integer: " + s);
  return v;
}

VertexSet resolve_set(const Input& in, const std::string& arg) {
  std::vector<Vertex> ids;
  for (const auto& tok : split(arg, ',')) {
    if (in.labels.empty()) {
      int v = parse_int(tok);
      if (v < 0 || v >= in.graph.order())
        throw InputError("vertex " + tok + " out of range");
      ids.push_back(v);
      continue;
    }
    auto it = std::find(in.labels.begin(), in.labels.end(), tok);
    if (it == in.labels.end()) throw InputError("unknown label " + tok);
    ids.push_back(static_cast<Vertex>(it - in.labels.begin()));
  }
  if (ids.empty()) throw InputError("empty vertex set");
  return VertexSet(ids);
}

std::vector<std::string> label_list(const VertexSet& s,
                                    const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(labels[static_cast<std::size_t>(v)]);
  return out;
}

// "{1,4}" or "{1,4} labels {a1,b1}".
std::string show(const VertexSet& s, const std::vector<std::string>& labels) {
  std::string out = to_string(s);
  if (labels.empty()) return out;
  out += " labels {";
  bool first = true;
  for (const auto& l : label_list(s, labels)) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

json set_json(const VertexSet& s, const std::vector<std::string>& labels) {
  json j;
  j["ids"] = s.ids();
  if (!labels.empty()) j["labels"] = label_list(s, labels);
  return j;
}

json edges_json(const Graph& g) {
  json arr = json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  return arr;
}

json report_json(const ConditionReport& r,
                 const std::vector<std::string>& labels) {
  json conds = json::array();
  for (const auto& c : r.conditions)
    conds.push_back({{"index", c.index},
                     {"holds", c.holds},
                     {"witness", set_json(c.witness, labels)},
                     {"detail", c.detail}});
  return conds;
}

void print_report(std::ostream& out, const ConditionReport& r,
                  const std::vector<std::string>& labels) {
  for (const auto& c : r.conditions) {
    out << "condition " << c.index << ": " << (c.holds ? "holds" : "fails");
    if (!c.holds) out << "  witness " << show(c.witness, labels);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
}

void emit(const Options& opt, const json& record) {
  if (opt.format == "records") std::cout << record.dump() << '\n';
}

bool text(const Options& opt) { return opt.format == "text"; }

// ---- subcommands ----

// Trees use the leaf-pair criterion, so they are not bound by the module
// search guard.
std::optional<ModuleWitness> module_witness(const Graph& g) {
  if (is_tree(g)) {
    if (g.order() < 4) return std::nullopt;
    return tree_nontrivial_modules_witness(certify_tree(g));
  }
  return find_nontrivial_module(g);
}

int cmd_prime(const Options& opt, const std::string& file) {
  Input in = read_input(file);
  auto witness = module_witness(in.graph);
  bool prime = in.graph.order() >= 4 && !witness;
  json rec{{"command", "prime"}, {"n", in.graph.order()}, {"prime", prime}};
  if (witness) rec["module"] = set_json(witness->members, in.labels);
  if (text(opt)) {
    std::cout << "n: " << in.graph.order() << '\n';
    std::cout << "prime: " << (prime ? "yes" : "no") << '\n';
    if (witness) std::cout << "module: " << show(witness->members, in.labels) << '\n';
    else if (!prime) std::cout << "reason: fewer than 4 vertices\n";
  }
  emit(opt, rec);
  return prime ? kPass : kFail;
}

// Prints the module witness and returns false when g is not prime.
bool require_prime(const Options& opt, const Input& in, const char* command) {
  auto witness = module_witness(in.graph);
  if (in.graph.order() >= 4 && !witness) return true;
  json rec{{"command", command}, {"prime", false}};
  if (witness) rec["module"] = set_json(witness->members, in.labels);
  if (text(opt)) {
    std::cout << "prime: no\n";
    if (witness) std::cout << "module: " << show(witness->members, in.labels) << '\n';
    else std::cout << "reason: fewer than 4 vertices\n";
  }
  emit(opt, rec);
  return false;
}

int cmd_sigma(const Options& opt, const std::string& file) {
  Input in = read_input(file);
  if (!require_prime(opt, in, "sigma")) return kFail;
  SigmaResult s = sigma(in.graph);
  if (text(opt)) {
    std::cout << "sigma: " << show(s.sigma, in.labels) << '\n';
    std::cout << "k: " << s.k() << '\n';
  }
  emit(opt, {{"command", "sigma"},
             {"n", in.graph.order()},
             {"sigma", set_json(s.sigma, in.labels)},
             {"k", s.k()}});
  return kPass;
}

int cmd_classify_critical(const Options& opt, const std::string& file,
                          const std::string& set) {
  Input in = read_input(file);
  TreeCert t = certify_tree(in.graph);
  if (!require_prime(opt, in, "classify-critical")) return kFail;
  SigmaResult s = sigma(t);
  VertexSet x = set.empty() ? s.sigma : resolve_set(in, set);
  CriticalFamilyTag tag = classify_critical_family(t);

  json rec{{"command", "classify-critical"},
           {"n", t.order()},
           {"sigma", set_json(s.sigma, in.labels)},
           {"k", s.k()},
           {"family", tag.to_string()}};
  if (text(opt)) {
    std::cout << "sigma: " << show(s.sigma, in.labels) << '\n';
    std::cout << "k: " << s.k() << '\n';
  }
  bool ok = true;
  if (t.order() >= 5 && !x.empty()) {
    ConditionReport r = check_critical_characterization(t, x);
    ok = r.overall();
    rec["x"] = set_json(x, in.labels);
    rec["conditions"] = report_json(r, in.labels);
    rec["holds"] = ok;
    if (text(opt)) {
      std::cout << "X: " << show(x, in.labels) << '\n';
      print_report(std::cout, r, in.labels);
      std::cout << "characterization: " << (ok ? "holds" : "fails") << '\n';
    }
    if (!set.empty() && ok && !(x == s.sigma)) ok = false;
  }
  if (text(opt)) std::cout << "family: " << tag.to_string() << '\n';
  emit(opt, rec);
  return ok ? kPass : kFail;
}

int cmd_check_minimal(const Options& opt, const std::string& file,
                      const std::string& set, bool brute) {
  Input in = read_input(file);
  TreeCert t = certify_tree(in.graph);
  VertexSet x = resolve_set(in, set);
  json rec{{"command", "check-minimal"}, {"n", t.order()},
           {"x", set_json(x, in.labels)}};
  bool verdict = false;
  if (t.order() >= 5) {
    ConditionReport r = check_minimal_characterization(t, x);
    verdict = r.overall();
    rec["conditions"] = report_json(r, in.labels);
    if (text(opt)) {
      std::cout << "X: " << show(x, in.labels) << '\n';
      print_report(std::cout, r, in.labels);
    }
  } else {
    verdict = is_minimal(t, x);
  }
  rec["minimal"] = verdict;
  if (text(opt)) std::cout << "minimal: " << (verdict ? "yes" : "no") << '\n';
  bool ok = verdict;
  if (brute) {
    bool b = is_minimal_bruteforce(t, x);
    rec["brute"] = b;
    if (text(opt))
      std::cout << "brute force: " << (b ? "yes" : "no")
                << (b == verdict ? " (agrees)" : " (DISAGREES)") << '\n';
    ok = ok && b == verdict;
  }
  emit(opt, rec);
  return ok ? kPass : kFail;
}

int cmd_extract_minimal(const Options& opt, const std::string& file,
                        const std::string& set) {
  Input in = read_input(file);
  TreeCert t = certify_tree(in.graph);
  VertexSet x = resolve_set(in, set);
  MinimalSubtree m = extract_minimal_subtree(t, x);
  VertexSet kept(m.original);
  if (text(opt)) {
    std::cout << "# kept: " << show(kept, in.labels) << '\n';
    std::cout << "# original:";
    for (Vertex v : m.original) std::cout << ' ' << v;
    std::cout << '\n';
    if (!in.labels.empty()) {
      std::cout << "# labels:";
      for (Vertex v : m.original) std::cout << ' ' << in.labels[v];
      std::cout << '\n';
    }
    write_edge_list(std::cout, m.tree.graph());
  }
  emit(opt, {{"command", "extract-minimal"},
             {"x", set_json(x, in.labels)},
             {"kept", set_json(kept, in.labels)},
             {"n", m.tree.order()},
             {"edges", edges_json(m.tree.graph())}});
  return kPass;
}

FamilyTree build_family(const std::string& family, const std::vector<int>& p) {
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw InputError("family " + family + " takes " + std::to_string(count) +
                       " parameter(s)");
  };
  if (family == "path") return need(1), path(p[0]);
  if (family == "A") return need(1), spider_a(p[0]);
  if (family == "Pkt") return need(2), p_kt(p[0], p[1]);
  if (family == "Pmn") return need(3), p_mn1n2(p[0], p[1], p[2]);
  if (family == "Skmn") return need(3), s_kmn(p[0], p[1], p[2]);
  throw InputError("unknown family " + family);
}

int cmd_gen(const Options& opt, const std::string& family,
            const std::vector<std::string>& params, bool dot) {
  std::vector<int> p;
  for (const auto& s : params)
    for (const auto& tok : split(s, ',')) p.push_back(parse_int(tok));
  FamilyTree f = build_family(family, p);
  std::optional<SigmaResult> s;
  if (tree_is_prime(f.tree)) s = sigma(f.tree);

  if (text(opt)) {
    if (dot) {
      write_dot(std::cout, f.tree.graph(), f.labels);
      return kPass;
    }
    std::cout << "# family: " << f.name() << '\n';
    std::cout << "# labels:";
    for (const auto& l : f.labels) std::cout << ' ' << l;
    std::cout << '\n';
    if (s) {
      std::cout << "# sigma: " << to_string(s->sigma) << '\n';
      std::cout << "# sigma-labels:";
      for (const auto& l : label_list(s->sigma, f.labels)) std::cout << ' ' << l;
      std::cout << '\n';
    } else {
      std::cout << "# sigma: undefined (not prime)\n";
    }
    write_edge_list(std::cout, f.tree.graph());
  }
  json rec{{"command", "gen"},
           {"family", f.name()},
           {"n", f.tree.order()},
           {"labels", f.labels},
           {"edges", edges_json(f.tree.graph())}};
  if (s) rec["sigma"] = set_json(s->sigma, f.labels);
  emit(opt, rec);
  return kPass;
}

TreePredicate parse_predicate(const std::string& arg) {
  if (arg.empty()) return [](const TreeCert&) { return true; };
  if (arg == "prime") return [](const TreeCert& t) { return tree_is_prime(t); };
  auto eq = arg.find('=');
  if (eq != std::string::npos) {
    std::string name = arg.substr(0, eq);
    int k = parse_int(arg.substr(eq + 1));
    if (k < 0) throw InputError("negative k in predicate " + arg);
    if (name == "critical")
      return [k](const TreeCert& t) {
        return tree_is_prime(t) && sigma(t).k() == k;
      };
    if (name == "minimal")
      return [k](const TreeCert& t) { return is_k_minimal(t, k); };
  }
  throw InputError("unknown predicate " + arg +
                   " (expected prime, critical=K or minimal=K)");
}

int cmd_enumerate(const Options& opt, int n, const std::string& predicate) {
  TreePredicate pred = parse_predicate(predicate);
  auto trees = filter_trees(n, pred, opt.jobs);
  for (const auto& t : trees) {
    std::string code = canonical_form(t).hex();
    if (text(opt)) {
      std::cout << "# code: " << code << '\n';
      write_edge_list(std::cout, t.graph());
      std::cout << '\n';
    }
    emit(opt, {{"command", "enumerate"},
               {"code", code},
               {"n", t.order()},
               {"edges", edges_json(t.graph())}});
  }
  if (text(opt)) std::cout << "# count: " << trees.size() << '\n';
  return kPass;
}

int cmd_count(const Options& opt, const std::string& what, int n_max,
              bool verify) {
  CountedFamily which = parse_counted_family(what);
  int first = first_counted_n(which);
  if (n_max < first)
    throw InputError("--nmax must be at least " + std::to_string(first));

  CountTable table;
  if (verify) {
    table = verify_formula(n_max, which, opt.jobs);
  } else {
    table.which = which;
    for (int n = first; n <= n_max; ++n)
      table.rows.push_back({n, formula_value(which, n), 0});
  }

  if (text(opt)) {
    std::cout << "# " << to_string(which) << '\n';
    std::cout << std::setw(4) << "n" << std::setw(10) << "formula";
    if (verify) std::cout << std::setw(12) << "enumerated" << std::setw(7) << "agree";
    std::cout << '\n';
    for (const auto& r : table.rows) {
      std::cout << std::setw(4) << r.n << std::setw(10) << r.formula;
      if (verify)
        std::cout << std::setw(12) << r.enumerated << std::setw(7)
                  << (r.agree() ? "yes" : "NO");
      std::cout << '\n';
    }
  }
  for (const auto& r : table.rows) {
    json rec{{"command", "count"},
             {"what", to_string(which)},
             {"n", r.n},
             {"formula", r.formula}};
    if (verify) {
      rec["enumerated"] = r.enumerated;
      rec["agree"] = r.agree();
    }
    emit(opt, rec);
  }
  return !verify || table.all_agree() ? kPass : kFail;
}

int cmd_selftest(const Options& opt) {
  bool all = true;
  for (const auto& suite : checks::standard_suites(opt.jobs)) {
    checks::CheckResult r = suite();
    all = all && r.passed;
    if (text(opt))
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail
                << '\n';
    emit(opt, {{"command", "selftest"},
               {"suite", r.name},
               {"passed", r.passed},
               {"detail", r.detail}});
  }
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treecrit: critical and minimal prime trees"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for enumerate/count")
      ->check(CLI::Range(1, 256));

  std::string file, set, family, what, predicate;
  std::vector<std::string> params;
  bool brute = false, dot = false, verify = false;
  int n = 0, n_max = 0;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Edge-list file, - for stdin")->required();
  };

  auto* prime = app.add_subcommand("prime", "Prime verdict with a module witness");
  add_file(prime);
  auto* sig = app.add_subcommand("sigma", "Non-critical vertices and k");
  add_file(sig);
  auto* crit = app.add_subcommand("classify-critical",
                                  "Criticality report and family tag");
  add_file(crit);
  crit->add_option("--set", set, "Check this X instead of sigma (a,b,c)");
  auto* minimal = app.add_subcommand("check-minimal", "Minimality report for X");
  add_file(minimal);
  minimal->add_option("--set", set, "X as a,b,c")->required();
  minimal->add_flag("--brute", brute, "Confirm against the definition");
  auto* extract = app.add_subcommand("extract-minimal",
                                     "Shrink to a minimal subtree around X");
  add_file(extract);
  extract->add_option("--set", set, "X as a,b,c")->required();
  auto* gen = app.add_subcommand("gen", "Emit a family member");
  gen->add_option("--family", family, "path, A, Pkt, Pmn or Skmn")->required();
  gen->add_option("--params", params, "Family parameters")->required();
  gen->add_flag("--dot", dot, "Emit DOT instead of an edge list");
  auto* enumerate = app.add_subcommand("enumerate", "All trees on n vertices");
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_option("--predicate", predicate,
                        "prime, critical=K or minimal=K");
  auto* count = app.add_subcommand("count", "Counting formula table");
  count->add_option("--what", what, "critical2 or minimal3")->required();
  count->add_option("--nmax", n_max, "Largest n")->required();
  count->add_flag("--verify", verify, "Compare against enumeration");
  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*prime) return cmd_prime(opt, file);
    if (*sig) return cmd_sigma(opt, file);
    if (*crit) return cmd_classify_critical(opt, file, set);
    if (*minimal) return cmd_check_minimal(opt, file, set, brute);
    if (*extract) return cmd_extract_minimal(opt, file, set);
    if (*gen) return cmd_gen(opt, family, params, dot);
    if (*enumerate) return cmd_enumerate(opt, n, predicate);
    if (*count) return cmd_count(opt, what, n_max, verify);
    if (*selftest) return cmd_selftest(opt);
  } catch (const std::exception& e) {
    // Input, guard and primality-precondition errors alike.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
