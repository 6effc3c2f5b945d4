#pragma once

#include <iosfwd>
#include <string>

#include "lightspan/graph.hpp"
#include "lightspan/metric_space.hpp"
#include "lightspan/ranking.hpp"

namespace lightspan {

// Edge-list text format, shared by every module: first line `n m`, then m
// lines `u v w`; `#` starts a comment. Ranking files hold one vertex id per
// line; matrix files hold `n` followed by n rows of n decimals.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Subgraph& h);
void write_edge_list_file(const std::string& path, const Graph& g);
void write_edge_list_file(const std::string& path, const Subgraph& h);

PriorityRanking read_ranking(std::istream& in, int n);
PriorityRanking read_ranking_file(const std::string& path, int n);
void write_ranking(std::ostream& out, const PriorityRanking& pi);

/// Vertex subset, one id per line (terminal lists).
std::vector<VertexId> read_vertex_set(std::istream& in, int n);
std::vector<VertexId> read_vertex_set_file(const std::string& path, int n);

MetricSpace read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const MetricSpace& m);

/// Reinterprets an edge list written by `spanner`/`tree` as a subgraph of
/// `parent`: every candidate edge must match a parent edge by endpoints and
/// weight.
Subgraph match_subgraph(const Graph& parent, const Graph& candidate);

}  // namespace lightspan
