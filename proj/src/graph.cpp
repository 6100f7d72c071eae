#include "gsr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace gsr {

namespace {

std::pair<Index, Index> unordered(Index u, Index v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Index parse_positive(std::string_view token, std::size_t line_no) {
  Index value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
    throw GraphError("line " + std::to_string(line_no) + ": expected a positive integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

} // namespace

DirectedGraph::DirectedGraph(Index vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count_));
  for (Index id = 0; id < edge_count(); ++id) {
    const Edge &e = edges_[static_cast<std::size_t>(id)];
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
      throw GraphError("edge " + std::to_string(id) + ": vertex id out of range");
    }
    if (e.tail == e.head) throw GraphError("edge " + std::to_string(id) + ": self-loop");
    auto [it, inserted] = pair_index_.emplace(unordered(e.tail, e.head), id);
    if (!inserted) {
      throw GraphError("edge " + std::to_string(id) + ": duplicate of edge " + std::to_string(it->second) +
                       " (same unordered vertex pair)");
    }
    adjacency_[static_cast<std::size_t>(e.tail)].emplace_back(e.head, id);
    adjacency_[static_cast<std::size_t>(e.head)].emplace_back(e.tail, id);
  }
}

std::optional<Index> DirectedGraph::edge_between(Index u, Index v) const {
  auto it = pair_index_.find(unordered(u, v));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

SupportSet::SupportSet(std::vector<Index> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

SupportSet SupportSet::of(const Vector &x, double tol) {
  std::vector<Index> ids;
  for (Index j = 0; j < x.size(); ++j)
    if (std::abs(x(j)) > tol) ids.push_back(j);
  return SupportSet(std::move(ids));
}

SupportSet SupportSet::all(Index n) {
  std::vector<Index> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), Index{0});
  return SupportSet(std::move(ids));
}

bool SupportSet::contains(Index id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

void SupportSet::validate(Index n) const {
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n)) {
    throw GraphError("support contains an edge id outside [0, " + std::to_string(n) + ")");
  }
}

IncidenceMatrix::IncidenceMatrix(const DirectedGraph &g)
    : entries_(Matrix::Zero(g.vertex_count(), g.edge_count())) {
  for (Index j = 0; j < g.edge_count(); ++j) {
    entries_(g.edge(j).tail, j) = -1.0;
    entries_(g.edge(j).head, j) = 1.0;
  }
}

IncidenceMatrix incidence_matrix(const DirectedGraph &g) { return IncidenceMatrix(g); }

Components connected_components(const DirectedGraph &g) {
  Components out;
  out.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Index> frontier;
  for (Index root = 0; root < g.vertex_count(); ++root) {
    if (out.label[static_cast<std::size_t>(root)] >= 0) continue;
    out.label[static_cast<std::size_t>(root)] = out.count;
    frontier.push(root);
    while (!frontier.empty()) {
      Index u = frontier.front();
      frontier.pop();
      for (auto [w, id] : g.neighbors(u)) {
        if (out.label[static_cast<std::size_t>(w)] < 0) {
          out.label[static_cast<std::size_t>(w)] = out.count;
          frontier.push(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

Subgraph edge_subgraph(const DirectedGraph &g, const SupportSet &support) {
  if (support.empty()) throw GraphError("edge_subgraph: empty support");
  support.validate(g.edge_count());

  std::vector<Index> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Index j : support) {
    new_id[static_cast<std::size_t>(g.edge(j).tail)] = 0;
    new_id[static_cast<std::size_t>(g.edge(j).head)] = 0;
  }
  Subgraph sub;
  for (Index v = 0; v < g.vertex_count(); ++v) {
    if (new_id[static_cast<std::size_t>(v)] < 0) continue;
    new_id[static_cast<std::size_t>(v)] = static_cast<Index>(sub.vertex_to_parent.size());
    sub.vertex_to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(support.size());
  for (Index j : support) {
    edges.push_back({new_id[static_cast<std::size_t>(g.edge(j).tail)],
                     new_id[static_cast<std::size_t>(g.edge(j).head)]});
    sub.edge_to_parent.push_back(j);
  }
  sub.graph = DirectedGraph(static_cast<Index>(sub.vertex_to_parent.size()), std::move(edges));
  return sub;
}

DirectedGraph parse_graph(std::string_view text) {
  std::optional<std::pair<Index, Index>> header;
  std::vector<Edge> edges;
  Index max_id = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "p") {
      if (header) throw GraphError("line " + std::to_string(line_no) + ": duplicate header");
      if (!edges.empty()) throw GraphError("line " + std::to_string(line_no) + ": header after edges");
      if (tokens.size() != 3) throw GraphError("line " + std::to_string(line_no) + ": header must be 'p <m> <n>'");
      Index n = 0;
      auto [ptr, ec] = std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), n);
      if (ec != std::errc{} || ptr != tokens[2].data() + tokens[2].size() || n < 0) {
        throw GraphError("line " + std::to_string(line_no) + ": bad edge count");
      }
      header = std::pair{parse_positive(tokens[1], line_no), n};
      continue;
    }
    if (tokens.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) + ": expected 'tail head'");
    }
    Index tail = parse_positive(tokens[0], line_no);
    Index head = parse_positive(tokens[1], line_no);
    if (header && (tail > header->first || head > header->first)) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    max_id = std::max({max_id, tail, head});
    edges.push_back({tail - 1, head - 1});
  }
  Index m = max_id;
  if (header) {
    m = header->first;
    if (static_cast<Index>(edges.size()) != header->second) {
      throw GraphError("header declares " + std::to_string(header->second) + " edges, found " +
                       std::to_string(edges.size()));
    }
  }
  return DirectedGraph(m, std::move(edges));
}

DirectedGraph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const DirectedGraph &g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges()) out << e.tail + 1 << ' ' << e.head + 1 << '\n';
  return out.str();
}

} // namespace gsr
