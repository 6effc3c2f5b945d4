#include "lightspan/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lightspan/numeric.hpp"

namespace lightspan {

namespace {

// token stream over the text with # comments stripped
std::istringstream strip_comments(std::istream& in) {
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    body << line << '\n';
  }
  return std::istringstream(body.str());
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

void print_edge(std::ostream& out, VertexId u, VertexId v, double w) {
  char line[96];
  std::snprintf(line, sizeof(line), "%d %d %.17g\n", u, v, w);
  out << line;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto tokens = strip_comments(in);
  int n = 0;
  long long m = 0;
  if (!(tokens >> n >> m)) throw ParseError("expected header `n m`");
  std::vector<EdgeInput> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    double w = 0.0;
    if (!(tokens >> u >> v >> w))
      throw ParseError("expected edge line `u v w` (edge " +
                       std::to_string(i) + ")");
    edges.emplace_back(u, v, w);
  }
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) print_edge(out, e.u, e.v, e.weight);
}

void write_edge_list(std::ostream& out, const Subgraph& h) {
  out << h.parent().vertex_count() << ' ' << h.edge_count() << '\n';
  for (int id : h.edge_ids()) {
    const auto& e = h.parent().edge(id);
    print_edge(out, e.u, e.v, e.weight);
  }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_edge_list(out, g);
}

void write_edge_list_file(const std::string& path, const Subgraph& h) {
  auto out = open_output(path);
  write_edge_list(out, h);
}

PriorityRanking read_ranking(std::istream& in, int n) {
  return PriorityRanking(read_vertex_set(in, n));
}

PriorityRanking read_ranking_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_ranking(in, n);
}

void write_ranking(std::ostream& out, const PriorityRanking& pi) {
  for (VertexId v : pi.order()) out << v << '\n';
}

std::vector<VertexId> read_vertex_set(std::istream& in, int n) {
  auto tokens = strip_comments(in);
  std::vector<VertexId> out;
  int v = 0;
  while (tokens >> v) {
    if (v < 0 || v >= n) throw InvalidVertex("vertex id out of range");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("expected at least one vertex id");
  return out;
}

std::vector<VertexId> read_vertex_set_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_vertex_set(in, n);
}

MetricSpace read_matrix(std::istream& in) {
  auto tokens = strip_comments(in);
  int n = 0;
  if (!(tokens >> n) || n < 1) throw ParseError("expected point count");
  std::vector<double> flat(static_cast<size_t>(n) * n);
  for (auto& value : flat)
    if (!(tokens >> value)) throw ParseError("matrix entry missing");
  return MetricSpace(n, std::move(flat));
}

void write_matrix(std::ostream& out, const MetricSpace& m) {
  out << m.size() << '\n';
  char cell[48];
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      std::snprintf(cell, sizeof(cell), "%.17g%c", m.distance(i, j),
                    j + 1 == m.size() ? '\n' : ' ');
      out << cell;
    }
}

Subgraph match_subgraph(const Graph& parent, const Graph& candidate) {
  if (candidate.vertex_count() != parent.vertex_count())
    throw InvalidParams("vertex counts differ");
  Subgraph h(parent);
  for (const auto& e : candidate.edges()) {
    int id = parent.find_edge(e.u, e.v);
    if (id < 0 || !approx_eq(parent.edge(id).weight, e.weight))
      throw InvalidParams("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) +
                          ") does not appear in the host graph");
    h.add_edge(id);
  }
  return h;
}

}  // namespace lightspan
