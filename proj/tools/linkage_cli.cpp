#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkage/linkage.hpp"

namespace {

using linkage::Json;

enum Exit { kAnswered = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::string roots;
  std::string graph_kind;
  int m = -1;
  int k = -1;
  std::uint64_t seed = 1;
  int trials = 100;
  int n_min = -1;
  int n_max = -1;
  double p = 0.5;
  std::uint64_t budget_nodes = 0;
  std::uint64_t budget_ms = 0;
  bool pretty = false;
  bool k_check = false;
  bool sweep = false;
  std::string collection;
  std::string u_set;
  std::string boundary;
  std::string campaign = "connected-feasibility";
  std::string model = "k-connected";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw linkage::InvalidInput("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

linkage::GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return linkage::GraphFormat::edge_list;
  if (name == "graph6") return linkage::GraphFormat::graph6;
  return linkage::GraphFormat::automatic;
}

linkage::SearchBudget budget_of(const Options& o) {
  linkage::SearchBudget b;
  if (o.budget_nodes > 0) b.max_nodes_expanded = o.budget_nodes;
  if (o.budget_ms > 0) b.time_limit_ms = o.budget_ms;
  return b;
}

// Comma or whitespace separated vertex ids, or a JSON array.
std::vector<linkage::Vertex> parse_vertex_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<linkage::Vertex> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0) throw linkage::ParseError(1, "bad vertex id '" + token + "'");
    out.push_back(v);
  }
  return out;
}

linkage::Collection parse_collection(const std::string& text) {
  linkage::Collection x;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& member : j) x.members.push_back(linkage::make_vertex_set(member.get<std::vector<int>>()));
  } catch (const nlohmann::json::exception& e) {
    throw linkage::ParseError(1, std::string("collection must be a JSON array of arrays: ") + e.what());
  }
  return x;
}

linkage::Graph load_graph(const Options& o) { return linkage::parse_graph(read_input(o.input), parse_format(o.format)); }

linkage::RootedGraph load_rooted(const Options& o) {
  if (o.graph_kind == "gmk") {
    if (o.m < 0 || o.k < 0) throw linkage::InvalidInput("--graph gmk needs --m and --k");
    return linkage::gmk_graph(o.m, o.k);
  }
  if (!o.graph_kind.empty()) throw linkage::InvalidInput("unknown --graph '" + o.graph_kind + "'");
  if (o.roots.empty()) throw linkage::InvalidInput("--roots is required");
  return linkage::make_rooted(load_graph(o), linkage::parse_roots(o.roots));
}

void render_pretty(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_pretty(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render_pretty(item, out, indent + 4);
      }
    } else {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void emit(const Json& j, const Options& o) {
  if (o.pretty) {
    render_pretty(j, std::cout, 0);
  } else {
    std::cout << j.dump() << '\n';
  }
}

int run_feasible(const Options& o) {
  const auto rg = load_rooted(o);
  const auto r = linkage::find_linkage_pair(rg, budget_of(o));
  emit(linkage::to_json(r), o);
  return r.status == linkage::LinkageStatus::budget_exhausted ? kBudget : kAnswered;
}

int run_certify(const Options& o) {
  const auto rg = load_rooted(o);
  if (!o.collection.empty()) {
    const auto x = parse_collection(o.collection);
    Json j{{"schema_version", linkage::kSchemaVersion}};
    const auto report = linkage::verify_collection_2mlink(rg, x);
    j["report"] = linkage::to_json(report);
    j["equality"] = report.equality();
    emit(j, o);
    return kAnswered;
  }
  const auto v = linkage::theorem_check(rg, budget_of(o));
  emit(linkage::to_json(v), o);
  switch (v.outcome) {
    case linkage::VerdictOutcome::counterexample_candidate: return kViolation;
    case linkage::VerdictOutcome::inconclusive: return kBudget;
    default: return kAnswered;
  }
}

int run_removable(const Options& o) {
  const auto rg = load_rooted(o);
  std::optional<int> kappa;
  Json warnings = Json::array();
  if (o.k_check) {
    kappa = linkage::vertex_connectivity(rg.graph);
    const int need = 2 * rg.m() + 2;
    if (*kappa < need) {
      const std::string w = "graph is " + std::to_string(*kappa) + "-connected but 2m+2=" + std::to_string(need) +
                            " > " + std::to_string(*kappa) + "; success is not guaranteed, attempting anyway";
      std::cerr << "warning: " << w << '\n';
      warnings.push_back(w);
    }
  }
  const auto r = linkage::removable_path(rg, budget_of(o));
  Json j = linkage::to_json(r);
  if (kappa) j["vertex_connectivity"] = *kappa;
  if (!warnings.empty()) j["warnings"] = warnings;
  emit(j, o);
  if (r.failure == linkage::RemovableFailure::budget_exhausted) return kBudget;
  if (!r.ok() && kappa && *kappa >= 2 * rg.m() + 2) return kViolation;
  return kAnswered;
}

int run_critical(const Options& o) {
  const auto rg = load_rooted(o);
  const auto u = linkage::make_vertex_set(parse_vertex_list(o.u_set));
  const bool critical = linkage::is_critically_feasible(rg, u);
  Json j{{"schema_version", linkage::kSchemaVersion}, {"u", u}, {"critically_feasible", critical}};
  int code = kAnswered;
  if (!o.collection.empty()) {
    const auto report = linkage::verify_collection_critical(rg, u, parse_collection(o.collection));
    j["report"] = linkage::to_json(report);
  } else if (critical) {
    const auto search = linkage::search_collection(rg, linkage::CertificateKind::critical, u, budget_of(o));
    if (search.status == linkage::CollectionSearchStatus::found) {
      j["report"] = linkage::to_json(*search.report);
    } else if (search.status == linkage::CollectionSearchStatus::budget_exhausted) {
      j["reason"] = "budget";
      code = kBudget;
    } else {
      j["outcome"] = "counterexample-candidate";
      code = kViolation;
    }
    if (rg.m() == 0) {
      const auto base = linkage::critical_base_collection(rg, u);
      const auto report = linkage::verify_collection_critical(rg, u, base);
      j["base_collection"] = linkage::to_json(report);
      if (!report.holds) code = kViolation;
    }
  }
  emit(j, o);
  return code;
}

int run_gmk(const Options& o) {
  std::vector<std::pair<int, int>> cases;
  if (o.sweep) {
    for (int m = 1; m <= 5; ++m) {
      for (int k = 0; k <= 6; ++k) cases.emplace_back(m, k);
    }
  } else {
    if (o.m < 0 || o.k < 0) throw linkage::InvalidInput("gmk needs --m and --k (or --sweep)");
    cases.emplace_back(o.m, o.k);
  }
  Json audits = Json::array();
  bool all_passed = true;
  for (auto [m, k] : cases) {
    const auto audit = linkage::gmk_audit(m, k);
    all_passed = all_passed && audit.passed();
    audits.push_back(linkage::to_json(audit));
  }
  if (cases.size() == 1) {
    emit(audits.front(), o);
  } else {
    emit(Json{{"schema_version", linkage::kSchemaVersion}, {"passed", all_passed}, {"audits", audits}}, o);
  }
  return all_passed ? kAnswered : kViolation;
}

int run_connectivity(const Options& o) {
  const auto g = load_graph(o);
  emit(Json{{"schema_version", linkage::kSchemaVersion},
            {"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"vertex_connectivity", linkage::vertex_connectivity(g)}},
       o);
  return kAnswered;
}

int run_disc_planar(const Options& o) {
  const auto g = load_graph(o);
  const auto boundary = parse_vertex_list(o.boundary);
  const bool disc = linkage::is_disc_planar({g, boundary});
  emit(Json{{"schema_version", linkage::kSchemaVersion},
            {"boundary", boundary},
            {"planar", linkage::is_planar(g)},
            {"disc_planar", disc}},
       o);
  return kAnswered;
}

int run_fuzz(const Options& o) {
  linkage::CampaignConfig c;
  c.seed = o.seed;
  c.trials = o.trials;
  c.m = o.m < 0 ? 1 : o.m;
  c.p = o.p;
  c.budget = budget_of(o);
  if (o.model == "gnp") {
    c.model = linkage::GraphModel::gnp;
  } else if (o.model != "k-connected") {
    throw linkage::InvalidInput("unknown --model '" + o.model + "'");
  }
  c.k = o.k < 0 ? 2 * c.m + 2 : o.k;
  linkage::CampaignReport report;
  if (o.campaign == "exhaustive") {
    c.n_min = o.n_min < 0 ? c.m + 2 : o.n_min;
    c.n_max = o.n_max < 0 ? 5 : o.n_max;
    std::vector<linkage::Graph> graphs;
    if (o.input != "-") graphs = linkage::parse_graph6_stream(read_input(o.input));
    report = linkage::campaign_exhaustive_small(c, graphs);
  } else {
    c.n_min = o.n_min < 0 ? std::max(6, 2 * c.m + 3) : o.n_min;
    c.n_max = o.n_max < 0 ? std::max(10, c.n_min) : o.n_max;
    if (o.campaign == "connected-feasibility") {
      report = linkage::campaign_connected_feasibility(c);
    } else if (o.campaign == "removable-paths") {
      report = linkage::campaign_removable_paths(c);
    } else {
      throw linkage::InvalidInput("unknown --campaign '" + o.campaign + "'");
    }
  }
  emit(linkage::to_json(report), o);
  if (report.violations > 0) return kViolation;
  if (report.budget_exhausted > 0) return kBudget;
  return kAnswered;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "graph file, or - for stdin");
  cmd->add_option("--format", o.format, "edgelist or graph6 (detected when omitted)")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

void add_rooted(CLI::App* cmd, Options& o) {
  add_input(cmd, o);
  cmd->add_option("--roots", o.roots, R"(roots as "a:1,2 b:0,4" or {"a":[1,2],"b1":0,"b2":4})");
  cmd->add_option("--graph", o.graph_kind, "built-in graph instead of input (gmk)");
  cmd->add_option("--m", o.m, "number of a-roots for built-in graphs");
  cmd->add_option("--k", o.k, "path length parameter for built-in graphs");
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-nodes", o.budget_nodes, "maximum search nodes expanded");
  cmd->add_option("--budget-ms", o.budget_ms, "wall-clock limit per search in milliseconds");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasibility, certificates and removable paths for rooted graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "human-readable output instead of JSON");
  app.fallthrough();

  auto* feasible = app.add_subcommand("feasible", "find a linkage pair or prove there is none");
  add_rooted(feasible, o);
  add_budget(feasible, o);

  auto* certify = app.add_subcommand("certify", "linkage pair or certifying collection");
  add_rooted(certify, o);
  add_budget(certify, o);
  certify->add_option("--collection", o.collection, "verify this collection (JSON array of arrays) instead");

  auto* removable = app.add_subcommand("removable", "b1-b2 path avoiding the a-roots with a connected remainder");
  add_rooted(removable, o);
  add_budget(removable, o);
  removable->add_flag("--k-check", o.k_check, "report the connectivity against 2m+2 first");

  auto* critical = app.add_subcommand("critical", "critical feasibility with respect to a vertex set U");
  add_rooted(critical, o);
  add_budget(critical, o);
  critical->add_option("--u", o.u_set, "vertices of U, comma separated");
  critical->add_option("--collection", o.collection, "verify this collection (JSON array of arrays) instead");

  auto* gmk = app.add_subcommand("gmk", "audit the tight family G_{m,k}");
  gmk->add_option("--m", o.m, "number of a-roots (>= 1)");
  gmk->add_option("--k", o.k, "number of interior path vertices");
  gmk->add_flag("--sweep", o.sweep, "audit every 1 <= m <= 5, 0 <= k <= 6");

  auto* connectivity = app.add_subcommand("connectivity", "vertex connectivity");
  add_input(connectivity, o);

  auto* disc = app.add_subcommand("disc-planar", "planarity with vertices on the outer boundary");
  add_input(disc, o);
  disc->add_option("--boundary", o.boundary, "boundary vertices in cyclic order, comma separated");

  auto* fuzz = app.add_subcommand("fuzz", "run a verification campaign");
  fuzz->add_option("--campaign", o.campaign, "connected-feasibility, removable-paths or exhaustive")
      ->check(CLI::IsMember({"connected-feasibility", "removable-paths", "exhaustive"}));
  fuzz->add_option("--model", o.model, "gnp or k-connected")->check(CLI::IsMember({"gnp", "k-connected"}));
  fuzz->add_option("--m", o.m, "number of a-roots");
  fuzz->add_option("--k", o.k, "target connectivity (default 2m+2)");
  fuzz->add_option("--seed", o.seed, "random seed");
  fuzz->add_option("--trials", o.trials, "number of sampled instances");
  fuzz->add_option("--n-min", o.n_min, "smallest vertex count");
  fuzz->add_option("--n-max", o.n_max, "largest vertex count");
  fuzz->add_option("--p", o.p, "edge probability");
  fuzz->add_option("-i,--input", o.input, "graph6 stream for the exhaustive campaign");
  add_budget(fuzz, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAnswered : kUsage;
  }

  try {
    if (*feasible) return run_feasible(o);
    if (*certify) return run_certify(o);
    if (*removable) return run_removable(o);
    if (*critical) return run_critical(o);
    if (*gmk) return run_gmk(o);
    if (*connectivity) return run_connectivity(o);
    if (*disc) return run_disc_planar(o);
    if (*fuzz) return run_fuzz(o);
  } catch (const linkage::ParseError& e) {
    std::cerr << "error: line " << e.line() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
