// xclique: command-line front end. Vertex ids and indices in every output are 1-based.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xclique/bench.hpp"
#include "xclique/builders.hpp"
#include "xclique/domination.hpp"
#include "xclique/graph_io.hpp"
#include "xclique/oracle.hpp"
#include "xclique/recognizer.hpp"
#include "xclique/reduction.hpp"

using namespace xclique;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string dot;
  std::size_t budget = 0;  // 0: subcommand default
  std::uint64_t seed = 1;
  std::string f;
};

std::size_t resolve_budget(const Common& c, std::size_t fallback) {
  if (c.budget > 0) return c.budget;
  if (const char* env = std::getenv("XCLIQUE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw UsageError("XCLIQUE_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

std::vector<std::uint32_t> parse_size_list(const std::string& text, char sep) {
  std::vector<std::uint32_t> out;
  std::string item;
  std::istringstream in(text);
  auto push = [&](const std::string& s) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw UsageError("bad clique size '" + s + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  };
  if (sep == ',') {
    while (std::getline(in, item, ',')) push(item);
  } else {
    while (in >> item) push(item);
  }
  return out;
}

// uniform:k | degrees | comma list | file of sizes or graph file with f lines.
ExpansionSpec resolve_spec(const Common& c, const GraphFile& file) {
  const Graph& g = file.graph;
  ExpansionSpec spec;
  if (c.f.empty()) {
    if (!file.clique_sizes) throw UsageError("no --f given and the graph file has no f lines");
    spec.f = *file.clique_sizes;
  } else if (c.f.rfind("uniform:", 0) == 0) {
    const auto k = parse_size_list(c.f.substr(8), ',');
    if (k.size() != 1) throw UsageError("uniform:k takes one size");
    spec = ExpansionSpec::uniform(g.order(), k[0]);
  } else if (c.f == "degrees") {
    spec = ExpansionSpec::degrees(g);
  } else if (c.f.find_first_not_of("0123456789,") == std::string::npos) {
    spec.f = parse_size_list(c.f, ',');
  } else {
    const std::string text = read_text(c.f);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == 'p' || text[first] == 'c')) {
      const GraphFile sizes = parse_graph_file(text);
      if (!sizes.clique_sizes) throw UsageError(c.f + " has no f lines");
      spec.f = *sizes.clique_sizes;
    } else {
      spec.f = parse_size_list(text, ' ');
    }
  }
  if (spec.f.size() != g.order()) {
    throw UsageError("f has " + std::to_string(spec.f.size()) + " entries for " + std::to_string(g.order()) +
                     " vertices");
  }
  spec.validate(g);
  return spec;
}

Json ids(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

Json ids(const VertexSet& s) { return ids(s.members()); }

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

Json role_json(Vertex clique, const Role& role) {
  Json out{{"clique", clique + 1}};
  if (role.is_port()) {
    out["port"] = role.index + 1;
  } else {
    out["slot"] = role.index + 1;
  }
  return out;
}

Json certificate_json(const RootCertificate& cert) {
  Json parts = Json::array();
  for (const auto& part : cert.cliques) parts.push_back(ids(part));
  Json roles = Json::array();
  for (Vertex h = 0; h < cert.role.size(); ++h) roles.push_back(role_json(cert.clique_of[h], cert.role[h]));
  return {{"accepted", true},
          {"parts", std::move(parts)},
          {"quotient", graph_json(cert.quotient)},
          {"f", cert.f.f},
          {"roles", std::move(roles)}};
}

Json rejection_json(const Rejection& r) {
  return {{"accepted", false}, {"reason", to_string(r.reason)}, {"location", ids(r.location)}};
}

Json domination_json(const DominationResult& r) {
  return {{"method", to_string(r.method)}, {"size", r.size}, {"exact", r.exact}, {"set", ids(r.set)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_ids(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

void maybe_dot(const Common& c, const Graph& g, const std::vector<std::vector<Vertex>>& clusters = {}) {
  if (!c.dot.empty()) write_text(c.dot, write_dot(g, clusters));
}

std::size_t to_size(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw UsageError("expected a number, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  static const std::vector<std::pair<std::string, std::size_t>> arity{
      {"path", 1},        {"cycle", 1},       {"complete", 1}, {"empty", 1},
      {"circular-ladder", 1}, {"sierpinski", 2}, {"gnp", 2},  {"line", 1},
      {"subdivision", 1}, {"subdivided-line", 1}};
  const auto known = std::find_if(arity.begin(), arity.end(), [&](const auto& a) { return a.first == family; });
  if (known == arity.end()) throw UsageError("unknown family '" + family + "'");
  if (params.size() != known->second) {
    throw UsageError(family + " takes " + std::to_string(known->second) + " parameter" +
                     (known->second == 1 ? "" : "s"));
  }
  if (family == "path") return path(to_size(params[0]));
  if (family == "cycle") return cycle(to_size(params[0]));
  if (family == "complete") return complete(to_size(params[0]));
  if (family == "empty") return empty_graph(to_size(params[0]));
  if (family == "circular-ladder") return circular_ladder(to_size(params[0]));
  if (family == "sierpinski") {
    return sierpinski(static_cast<int>(to_size(params[0])), static_cast<int>(to_size(params[1])));
  }
  if (family == "line") return line_graph(load_graph_file(params[0]).graph);
  if (family == "subdivision") return subdivision(load_graph_file(params[0]).graph);
  if (family == "subdivided-line") return subdivided_line_graph(load_graph_file(params[0]).graph);
  if (family == "gnp") {
    const std::size_t n = to_size(params[0]);
    const double p = std::stod(params[1]);
    if (p < 0 || p > 1) throw UsageError("gnp edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    return Graph(n, edges);
  }
  throw std::logic_error("generate: family table out of sync");
}

int run_generate(const Common& c, const std::string& family, const std::vector<std::string>& params) {
  const Graph g = generate(family, params, c.seed);
  std::cout << write_graph(g);
  maybe_dot(c, g);
  return kOk;
}

int run_expand(const Common& c, const std::string& path, const std::string& labels_path) {
  const GraphFile file = load_graph_file(path);
  const ExpansionSpec spec = resolve_spec(c, file);
  const Expansion x = expand(file.graph, spec);
  Json labels{{"clique_of", Json::array()}, {"role", Json::array()}};
  for (Vertex h = 0; h < x.graph.order(); ++h) {
    labels["clique_of"].push_back(x.labeling.clique_of[h] + 1);
    labels["role"].push_back(role_json(x.labeling.clique_of[h], x.labeling.role[h]));
  }
  if (!labels_path.empty()) write_text(labels_path, labels.dump(2) + "\n");
  if (c.json) {
    emit({{"graph", graph_json(x.graph)}, {"clique_of", labels["clique_of"]}, {"role", labels["role"]}});
  } else {
    std::cout << write_graph(x.graph);
  }
  std::vector<std::vector<Vertex>> clusters(file.graph.order());
  for (Vertex h = 0; h < x.graph.order(); ++h) clusters[x.labeling.clique_of[h]].push_back(h);
  maybe_dot(c, x.graph, clusters);
  return kOk;
}

int run_recognize(const Common& c, const std::string& path) {
  const Graph h = load_graph_file(path).graph;
  const Recognition r = recognize(h);
  if (accepted(r)) {
    const auto& cert = std::get<RootCertificate>(r);
    if (c.json) {
      emit(certificate_json(cert));
    } else {
      std::cout << "accepted: root with " << cert.quotient.order() << " vertices and " << cert.quotient.size()
                << " edges\n";
      for (Vertex i = 0; i < cert.cliques.size(); ++i) {
        std::cout << "  V" << i + 1 << " (f=" << cert.f.f[i] << "): " << join_ids(cert.cliques[i]) << '\n';
      }
    }
    maybe_dot(c, h, cert.cliques);
    return kOk;
  }
  const auto& rej = std::get<Rejection>(r);
  if (c.json) {
    emit(rejection_json(rej));
  } else {
    std::cout << "rejected: " << to_string(rej.reason) << " at " << join_ids(rej.location) << '\n';
  }
  maybe_dot(c, h);
  return kNo;
}

int run_classify(const Common& c, const std::string& path) {
  const Graph h = load_graph_file(path).graph;
  const std::size_t budget = resolve_budget(c, kDefaultOddHoleBudget);
  Json patterns = Json::object();
  bool any = false, complete_scan = true;
  auto record = [&](Pattern kind, auto&& find) {
    Json entry;
    try {
      const auto w = find();
      entry["found"] = w.has_value();
      entry["witness"] = w ? ids(w->vertices) : Json(nullptr);
      any = any || w.has_value();
    } catch (const BudgetExceeded&) {
      entry["found"] = nullptr;
      entry["witness"] = nullptr;
      entry["skipped"] = true;
      complete_scan = false;
    }
    patterns[to_string(kind)] = std::move(entry);
  };
  record(Pattern::Claw, [&] { return find_claw(h); });
  record(Pattern::Diamond, [&] { return find_diamond(h); });
  record(Pattern::C4, [&] { return find_c4(h); });
  record(Pattern::Butterfly, [&] { return find_butterfly(h); });
  record(Pattern::OddHole, [&] { return find_odd_hole(h, budget); });
  record(Pattern::BadChain, [&] { return find_bad_chain(h); });

  bool characterization = true;
  for (const VertexSet& comp : connected_components(h)) {
    characterization = characterization && characterization_accepts(induced_subgraph(h, comp.members()));
  }
  const bool recognized = accepted(recognize(h));
  Json out{{"n", h.order()},
           {"m", h.size()},
           {"patterns", std::move(patterns)},
           {"forbidden_free", complete_scan ? Json(!any) : Json(nullptr)},
           {"characterization", characterization},
           {"recognized", recognized}};
  if (c.json) {
    emit(out);
  } else {
    for (const auto& [name, entry] : out["patterns"].items()) {
      std::cout << name << ": ";
      if (entry.contains("skipped")) {
        std::cout << "skipped (budget)\n";
      } else if (entry["found"].get<bool>()) {
        std::cout << "found at";
        for (const auto& v : entry["witness"]) std::cout << ' ' << v.get<std::size_t>();
        std::cout << '\n';
      } else {
        std::cout << "none\n";
      }
    }
    std::cout << "recognized: " << (recognized ? "yes" : "no") << '\n';
  }
  return recognized ? kOk : kNo;
}

RootCertificate certificate_from_json(const Graph& h, const std::string& path) {
  const Json j = Json::parse(read_text(path));
  if (!j.contains("parts")) throw UsageError(path + " has no parts array");
  std::vector<std::vector<Vertex>> parts;
  for (const auto& part : j.at("parts")) {
    auto& out = parts.emplace_back();
    for (const auto& v : part) {
      const auto id = v.get<std::size_t>();
      if (id == 0) throw UsageError("certificate ids are 1-based");
      out.push_back(static_cast<Vertex>(id - 1));
    }
  }
  const Recognition r = certificate_from_parts(h, parts);
  if (!accepted(r)) throw CertificateError("certificate parts do not form an expansion: " +
                                           to_string(std::get<Rejection>(r).reason));
  return std::get<RootCertificate>(r);
}

int run_dominate(const Common& c, const std::string& path, bool heuristic, const std::string& cert_path) {
  const Graph h = load_graph_file(path).graph;
  DominationResult result;
  Json extra = Json::object();
  if (heuristic) {
    RootCertificate cert;
    if (!cert_path.empty()) {
      try {
        cert = certificate_from_json(h, cert_path);
      } catch (const CertificateError& e) {
        std::cerr << "xclique: " << e.what() << '\n';
        return kNo;
      }
    } else {
      const Recognition r = recognize(h);
      if (!accepted(r)) {
        std::cerr << "xclique: graph is not expanded-clique (" << to_string(std::get<Rejection>(r).reason) << ")\n";
        return kNo;
      }
      cert = std::get<RootCertificate>(r);
    }
    result = clique_heuristic(h, cert);
    extra["root_order"] = cert.quotient.order();
  } else {
    result = dominate_exact(h, resolve_budget(c, kDefaultExactBudget));
  }
  Json out = domination_json(result);
  out["dominates"] = dominates(h, result.set);
  for (auto& [k, v] : extra.items()) out[k] = v;
  if (c.json) {
    emit(out);
  } else {
    std::cout << to_string(result.method) << ": size " << result.size << (result.exact ? " (exact)" : "")
              << "\n  " << join_ids(result.set.members()) << '\n';
  }
  return kOk;
}

int run_alpha2(const Common& c, const std::string& path) {
  const GraphFile file = load_graph_file(path);
  const ExpansionSpec spec = resolve_spec(c, file);
  const TwoIndependenceResult r = alpha2(file.graph, spec, resolve_budget(c, kDefaultAlpha2Budget));
  if (c.json) {
    emit({{"size", r.size}, {"set", ids(r.set)}});
  } else {
    std::cout << "alpha2: " << r.size << "\n  " << join_ids(r.set.members()) << '\n';
  }
  return kOk;
}

bool is_path_or_cycle(const Graph& g) {
  if (g.order() < 4 || !is_connected(g) || g.max_degree() > 2) return false;
  return g.size() == g.order() || g.size() + 1 == g.order();
}

int run_verify_identities(const Common& c, const std::string& path) {
  const GraphFile file = load_graph_file(path);
  const Graph& g = file.graph;
  const ExpansionSpec spec = resolve_spec(c, file);
  const std::size_t budget = resolve_budget(c, kMaxSolverOrder);
  bool ok = true;

  const GammaAlphaReport ga = check_gamma_alpha_identity(g, spec, budget);
  ok = ok && ga.passed();
  Json out;
  out["gamma_alpha"] = {{"root_order", ga.root_order},
                        {"gamma", ga.gamma},
                        {"alpha2", ga.alpha2},
                        {"minimum", ids(ga.minimum)},
                        {"canonical", ids(ga.canonical)},
                        {"independent_from_canonical", ids(ga.independent_from_canonical)},
                        {"dominating_from_independent", ids(ga.dominating_from_independent)},
                        {"identity", ga.identity},
                        {"canonical_ok", ga.canonical_ok},
                        {"independent_ok", ga.independent_ok},
                        {"dominating_ok", ga.dominating_ok},
                        {"passed", ga.passed()}};
  if (g.max_degree() >= 1) {
    const DeltaBoundsReport db = check_delta_bounds(g, budget);
    ok = ok && db.passed();
    out["delta_bounds"] = {{"delta", db.delta},       {"gamma", db.gamma}, {"heuristic", db.heuristic},
                           {"lower_bound", static_cast<double>(g.order() * db.delta) / (db.delta + 1)},
                           {"upper_bound", g.order()}, {"lower", db.lower}, {"upper", db.upper},
                           {"ratio", db.ratio},       {"passed", db.passed()}};
  } else {
    out["delta_bounds"] = nullptr;
  }
  if (is_path_or_cycle(g)) {
    const K2FormulaReport k2 = check_k2_formula(g, budget);
    ok = ok && k2.holds;
    out["k2_formula"] = {
        {"expanded_order", k2.expanded_order}, {"gamma", k2.gamma}, {"expected", k2.expected}, {"holds", k2.holds}};
  } else {
    out["k2_formula"] = nullptr;
  }
  out["passed"] = ok;
  if (c.json) {
    emit(out);
  } else {
    std::cout << "gamma + alpha2 = " << ga.gamma << " + " << ga.alpha2 << " (|V(G)| = " << ga.root_order
              << "): " << (ga.passed() ? "ok" : "VIOLATED") << '\n';
    if (!out["delta_bounds"].is_null()) {
      std::cout << "delta bounds: " << (out["delta_bounds"]["passed"].get<bool>() ? "ok" : "VIOLATED") << '\n';
    }
    if (!out["k2_formula"].is_null()) {
      std::cout << "k = 2 formula: " << (out["k2_formula"]["holds"].get<bool>() ? "ok" : "VIOLATED") << '\n';
    }
  }
  return ok ? kOk : kNo;
}

int run_reduce(const Common& c, const std::string& path, std::size_t ell, bool verify) {
  const Graph g = load_graph_file(path).graph;
  if (g.max_degree() > 3) throw UsageError("reduce needs maximum degree at most 3");
  const ReductionInstance inst = build_reduction(g, ell);
  Json gadgets = Json::array();
  for (const auto& gadget : inst.gadget_index) gadgets.push_back(ids(std::vector<Vertex>(gadget.begin(), gadget.end())));
  Json out{{"ell", ell}, {"ell_prime", inst.ell_prime}, {"h", graph_json(inst.h)}, {"gadgets", gadgets}};
  bool ok = true;
  if (verify) {
    const std::size_t budget = resolve_budget(c, kReductionBudget);
    const ReductionReport r = verify_reduction_identity(g, budget);
    const StructuralReport s = check_structural_claims(inst);
    const bool agree = (r.gamma_source <= ell) == (r.gamma_h <= inst.ell_prime);
    ok = r.passed() && s.passed() && agree;
    out["verification"] = {{"gamma_source", r.gamma_source},
                           {"gamma_h", r.gamma_h},
                           {"expected", r.expected},
                           {"identity", r.identity},
                           {"forward_size", r.forward_size},
                           {"forward_ok", r.forward_ok},
                           {"backward_ok", r.backward_ok},
                           {"decision_agrees", agree},
                           {"h_bipartite", s.h_bipartite},
                           {"line_of_bipartite", s.line_of_bipartite},
                           {"h_cubic", s.h_cubic},
                           {"recognized", s.recognized},
                           {"passed", ok}};
  }
  if (c.json) {
    emit(out);
  } else {
    std::cout << "c ell " << ell << "\nc ell_prime " << inst.ell_prime << '\n';
    for (Vertex u = 0; u < inst.gadget_index.size(); ++u) {
      const auto& gi = inst.gadget_index[u];
      std::cout << "c gadget " << u + 1 << ": " << join_ids(std::vector<Vertex>(gi.begin(), gi.end())) << '\n';
    }
    if (verify) {
      const Json& v = out["verification"];
      std::cout << "c gamma(G) = " << v["gamma_source"].get<std::size_t>() << ", gamma(H) = "
                << v["gamma_h"].get<std::size_t>() << ", expected " << v["expected"].get<std::size_t>() << ": "
                << (ok ? "verified" : "VIOLATED") << '\n';
    }
    std::cout << write_graph(inst.h);
  }
  std::vector<std::vector<Vertex>> clusters;
  for (const auto& gi : inst.gadget_index) clusters.emplace_back(gi.begin(), gi.end());
  maybe_dot(c, inst.h, clusters);
  return ok ? kOk : kNo;
}

std::vector<std::size_t> default_bench_sizes(const std::string& family) {
  if (family == "path" || family == "even-cycle") return {10'000, 100'000, 1'000'000};
  if (family == "sierpinski") return {6, 7, 8, 9, 10};
  return {10, 100, 1000};
}

int run_bench_command(const std::vector<std::string>& families, const std::vector<std::size_t>& sizes) {
  std::vector<BenchRow> rows;
  for (const std::string& family : families) {
    if (!is_bench_family(family)) throw UsageError("unknown bench family '" + family + "'");
    const auto chosen = sizes.empty() ? default_bench_sizes(family) : sizes;
    for (std::size_t i = 1; i < chosen.size(); ++i) {
      if (chosen[i] < chosen[i - 1]) throw UsageError("bench sizes must be ascending");
    }
    for (BenchRow& row : run_bench(family, chosen)) rows.push_back(std::move(row));
  }
  std::cout << bench_csv(rows);
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_f) {
  sub->add_flag("--json", c.json, "Write JSON to stdout");
  sub->add_option("--dot", c.dot, "Also write a DOT rendering to this path");
  sub->add_option("--budget", c.budget, "Solver size budget")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed for randomized generators");
  if (with_f) sub->add_option("--f", c.f, "Clique sizes: uniform:k, degrees, a comma list or a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expanded-clique graphs: construction, recognition, domination and reduction"};
  app.require_subcommand(1);
  Common c;
  std::string input, family, cert_path, labels_path;
  std::vector<std::string> params, families;
  std::vector<std::size_t> sizes;
  std::size_t ell = 0;
  bool exact = false, heuristic = false, verify = false;

  auto* gen = app.add_subcommand("generate", "Emit a graph from a named family");
  gen->add_option("family", family, "path | cycle | complete | empty | circular-ladder | sierpinski | gnp | "
                                    "line | subdivision | subdivided-line")
      ->required();
  gen->add_option("params", params, "Family parameters (sizes, or a graph file)");
  add_common(gen, c, false);

  auto* exp = app.add_subcommand("expand", "Expand (G, f) into H");
  exp->add_option("graph", input)->required();
  exp->add_option("--labels", labels_path, "Write the labeling sidecar JSON to this path");
  add_common(exp, c, true);

  auto* rec = app.add_subcommand("recognize", "Decide whether a graph is expanded-clique");
  rec->add_option("graph", input)->required();
  add_common(rec, c, false);

  auto* cls = app.add_subcommand("classify", "Report forbidden structures with witnesses");
  cls->add_option("graph", input)->required();
  add_common(cls, c, false);

  auto* dom = app.add_subcommand("dominate", "Minimum or clique-heuristic dominating set");
  dom->add_option("graph", input)->required();
  auto* exact_flag = dom->add_flag("--exact", exact, "Exact branch and bound (default)");
  dom->add_flag("--heuristic", heuristic, "One vertex per expanded clique")->excludes(exact_flag);
  dom->add_option("--cert", cert_path, "Certificate JSON from recognize --json");
  add_common(dom, c, false);

  auto* a2 = app.add_subcommand("alpha2", "Maximum 2-independent set of G under f");
  a2->add_option("graph", input)->required();
  add_common(a2, c, true);

  auto* ver = app.add_subcommand("verify-identities", "Check the domination identities for (G, f)");
  ver->add_option("graph", input)->required();
  add_common(ver, c, true);

  auto* red = app.add_subcommand("reduce", "Build the instance (H, ell') from (G, ell)");
  red->add_option("graph", input)->required();
  red->add_option("ell", ell)->required();
  red->add_flag("--verify", verify, "Check the domination identity on the built instance");
  add_common(red, c, false);

  auto* ben = app.add_subcommand("bench", "Time recognition on growing instances, CSV output");
  ben->add_option("families", families, "path | even-cycle | sierpinski | subdivided-line")->required();
  ben->add_option("--sizes", sizes, "Ascending instance sizes");
  add_common(ben, c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }
  if (!cert_path.empty() && !heuristic) {
    std::cerr << "xclique: --cert requires --heuristic\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return run_generate(c, family, params);
    if (exp->parsed()) return run_expand(c, input, labels_path);
    if (rec->parsed()) return run_recognize(c, input);
    if (cls->parsed()) return run_classify(c, input);
    if (dom->parsed()) return run_dominate(c, input, heuristic, cert_path);
    if (a2->parsed()) return run_alpha2(c, input);
    if (ver->parsed()) return run_verify_identities(c, input);
    if (red->parsed()) return run_reduce(c, input, ell, verify);
    if (ben->parsed()) return run_bench_command(families, sizes);
  } catch (const BudgetExceeded& e) {
    std::cerr << "xclique: " << e.what() << " (raise --budget or XCLIQUE_BUDGET)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "xclique: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
