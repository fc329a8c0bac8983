#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p6/graph.hpp"
#include "p6/mwis.hpp"

namespace p6 {

// Line-oriented instance format, 1-indexed external ids:
//   c <comment>
//   p pfree <n> <m>
//   v <i> <w>        (omitted vertices default to weight 1)
//   e <u> <v>
// Duplicate edges, self-loops and out-of-range ids are rejected.
WeightedGraph parse_instance(const std::string& text);
WeightedGraph read_instance_file(const std::string& path);

// Canonical encoding: header, all v lines, then e lines with u < v in
// ascending order. parse(write(x)) re-serializes byte-identically.
std::string write_instance(const WeightedGraph& gw);

struct ResultRecord {
  std::string problem;  // "mwis" | "eds"
  std::string status;   // "optimal" | "no-solution"
  long long weight = 0;
  std::vector<int> solution;  // 1-indexed, ascending
  SolveStats stats;

  std::string to_json() const;  // single line
  std::string to_text() const;
};

ResultRecord make_result(const std::string& problem, const std::optional<Solution>& sol, const SolveStats& stats);

}  // namespace p6
