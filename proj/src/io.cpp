#include "p6/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "p6/errors.hpp"

namespace p6 {

WeightedGraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  long long m = -1, edges_seen = 0;
  Graph g;
  std::vector<long long> weights;
  std::vector<char> weight_set;

  auto check_id = [&](long long id) {
    if (id < 1 || id > n) throw ParseError("vertex id out of range: " + std::to_string(id), line_no);
    return static_cast<int>(id - 1);
  };

  while (std::getline(in, line)) {
    line_no++;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw ParseError("duplicate header", line_no);
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "pfree" || n < 0 || m < 0) throw ParseError("bad header", line_no);
      g = Graph(n);
      weights.assign(n, 1);
      weight_set.assign(n, 0);
      continue;
    }
    if (n == -1) throw ParseError("line before header", line_no);
    if (tag == "v") {
      long long id, w;
      if (!(ls >> id >> w)) throw ParseError("bad vertex line", line_no);
      int v = check_id(id);
      if (weight_set[v]) throw ParseError("duplicate vertex line for id " + std::to_string(id), line_no);
      weight_set[v] = 1;
      weights[v] = w;
    } else if (tag == "e") {
      long long a, b;
      if (!(ls >> a >> b)) throw ParseError("bad edge line", line_no);
      if (a == b) throw ParseError("self-loop at id " + std::to_string(a), line_no);
      int u = check_id(a), v = check_id(b);
      if (g.has_edge(u, v)) throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b), line_no);
      g.add_edge(u, v);
      edges_seen++;
    } else {
      throw ParseError("unknown directive '" + tag + "'", line_no);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens", line_no);
  }
  if (n == -1) throw ParseError("missing header");
  if (edges_seen != m) throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                                        std::to_string(edges_seen));
  return WeightedGraph(std::move(g), std::move(weights));
}

WeightedGraph read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_instance(const WeightedGraph& gw) {
  std::ostringstream out;
  int n = gw.graph.n();
  out << "p pfree " << n << " " << gw.graph.edge_count() << "\n";
  for (int v = 0; v < n; v++) out << "v " << v + 1 << " " << gw.weights[v] << "\n";
  for (auto [u, v] : gw.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

namespace {

nlohmann::json stats_json(const SolveStats& s) {
  nlohmann::json j;
  j["findis_nodes"] = s.findis_nodes;
  j["findisnuke_nodes"] = s.findisnuke_nodes;
  j["fallback_calls"] = s.fallback_calls;
  j["below_gamma_events"] = s.below_gamma_events;
  j["max_depth"] = s.max_depth;
  j["nuke_seed_events"] = s.nuke_seed_events;
  j["eds_branch_nodes"] = s.eds_branch_nodes;
  j["eds_bag_states"] = s.eds_bag_states;
  return j;
}

}  // namespace

std::string ResultRecord::to_json() const {
  nlohmann::json j;
  j["problem"] = problem;
  j["status"] = status;
  if (status == "optimal") {
    j["weight"] = weight;
    j["solution"] = solution;
  } else {
    j["weight"] = nullptr;
    j["solution"] = nullptr;
  }
  j["stats"] = stats_json(stats);
  return j.dump();
}

std::string ResultRecord::to_text() const {
  std::ostringstream out;
  out << "problem " << problem << "\n";
  out << "status " << status << "\n";
  if (status == "optimal") {
    out << "weight " << weight << "\n";
    out << "solution";
    for (int v : solution) out << " " << v;
    out << "\n";
  }
  out << "stats findis_nodes=" << stats.findis_nodes << " findisnuke_nodes=" << stats.findisnuke_nodes
      << " fallback_calls=" << stats.fallback_calls << " below_gamma_events=" << stats.below_gamma_events
      << " max_depth=" << stats.max_depth << " nuke_seed_events=" << stats.nuke_seed_events
      << " eds_branch_nodes=" << stats.eds_branch_nodes;
  if (!stats.eds_bag_states.empty()) {
    out << " eds_bag_states=";
    for (size_t i = 0; i < stats.eds_bag_states.size(); i++) out << (i ? "," : "") << stats.eds_bag_states[i];
  }
  out << "\n";
  return out.str();
}

ResultRecord make_result(const std::string& problem, const std::optional<Solution>& sol, const SolveStats& stats) {
  ResultRecord r;
  r.problem = problem;
  r.stats = stats;
  if (sol) {
    r.status = "optimal";
    r.weight = sol->weight;
    for (int v : sol->chosen) r.solution.push_back(v + 1);
  } else {
    r.status = "no-solution";
  }
  return r;
}

}  // namespace p6
