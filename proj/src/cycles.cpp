#include "gsr/cycles.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

namespace gsr {

SimpleCycle SimpleCycle::from_vertices(const DirectedGraph &g, std::vector<Index> vertices) {
  const std::size_t len = vertices.size();
  if (len < 3) throw GraphError("a simple cycle needs at least 3 vertices");
  if (std::set<Index>(vertices.begin(), vertices.end()).size() != len) {
    throw GraphError("cycle repeats a vertex");
  }
  auto min_it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), min_it, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());

  SimpleCycle c;
  c.vertices = std::move(vertices);
  for (std::size_t i = 0; i < len; ++i) {
    Index u = c.vertices[i];
    Index v = c.vertices[(i + 1) % len];
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
      throw GraphError("cycle vertex out of range");
    }
    auto id = g.edge_between(u, v);
    if (!id) throw GraphError("cycle uses a missing edge");
    c.edges.push_back(*id);
    c.orientations.push_back(g.edge(*id).tail == u ? 1 : -1);
  }
  return c;
}

namespace {

// Best closed walk found from one BFS root: length, then discovery order.
struct RootCandidate {
  Index length = std::numeric_limits<Index>::max();
  Index root = -1;
  Index u = -1;
  Index w = -1;
};

struct BfsScratch {
  std::vector<Index> dist;
  std::vector<Index> parent;
  std::vector<Index> queue;
};

RootCandidate bfs_from(const DirectedGraph &g, Index root, BfsScratch &s) {
  const auto m = static_cast<std::size_t>(g.vertex_count());
  s.dist.assign(m, -1);
  s.parent.assign(m, -1);
  s.queue.clear();
  s.dist[static_cast<std::size_t>(root)] = 0;
  s.queue.push_back(root);

  RootCandidate best;
  best.root = root;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    Index u = s.queue[head];
    Index du = s.dist[static_cast<std::size_t>(u)];
    // Every candidate discovered from here on has length >= 2 du.
    if (2 * du >= best.length) break;
    for (auto [w, id] : g.neighbors(u)) {
      auto &dw = s.dist[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = du + 1;
        s.parent[static_cast<std::size_t>(w)] = u;
        s.queue.push_back(w);
      } else if (w != s.parent[static_cast<std::size_t>(u)]) {
        Index len = du + dw + 1;
        if (len < best.length) best = {len, root, u, w};
      }
    }
  }
  return best;
}

bool better(const RootCandidate &a, const RootCandidate &b) {
  return std::tie(a.length, a.root) < std::tie(b.length, b.root);
}

RootCandidate best_candidate(const DirectedGraph &g, Exec exec) {
  const Index m = g.vertex_count();
  RootCandidate best;
  if (exec == Exec::serial) {
    BfsScratch scratch;
    for (Index r = 0; r < m; ++r) {
      auto c = bfs_from(g, r, scratch);
      if (better(c, best)) best = c;
    }
    return best;
  }
#pragma omp parallel
  {
    BfsScratch scratch;
    RootCandidate local;
#pragma omp for schedule(dynamic, 4) nowait
    for (Index r = 0; r < m; ++r) {
      auto c = bfs_from(g, r, scratch);
      if (better(c, local)) local = c;
    }
#pragma omp critical(gsr_girth_reduce)
    if (better(local, best)) best = local;
  }
  return best;
}

std::vector<Index> path_to_root(const std::vector<Index> &parent, Index v) {
  std::vector<Index> path;
  for (; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  return path;
}

} // namespace

Girth girth(const DirectedGraph &g, Exec exec) {
  auto best = best_candidate(g, exec);
  if (best.root < 0 || best.u < 0) return Girth::infinite();
  return Girth::finite(best.length);
}

std::optional<SimpleCycle> shortest_cycle(const DirectedGraph &g, Exec exec) {
  auto best = best_candidate(g, exec);
  if (best.root < 0 || best.u < 0) return std::nullopt;
  // Replay the winning BFS to recover parent pointers.
  BfsScratch scratch;
  bfs_from(g, best.root, scratch);
  auto to_u = path_to_root(scratch.parent, best.u); // u ... root
  auto to_w = path_to_root(scratch.parent, best.w); // w ... root
  std::vector<Index> walk(to_u.rbegin(), to_u.rend()); // root ... u
  walk.insert(walk.end(), to_w.begin(), to_w.end() - 1); // w ... (child of root)
  // A minimum-length closed walk through a non-tree edge is a simple cycle.
  return SimpleCycle::from_vertices(g, std::move(walk));
}

namespace {

class CircuitSearch {
public:
  CircuitSearch(const DirectedGraph &g, std::size_t cap)
      : g_(g), cap_(cap), blocked_(static_cast<std::size_t>(g.vertex_count())),
        blockers_(static_cast<std::size_t>(g.vertex_count())) {}

  std::vector<SimpleCycle> run() {
    for (start_ = 0; start_ < g_.vertex_count(); ++start_) {
      std::fill(blocked_.begin(), blocked_.end(), false);
      for (auto &b : blockers_) b.clear();
      circuit(start_);
    }
    return std::move(found_);
  }

private:
  bool circuit(Index v) {
    bool closed = false;
    stack_.push_back(v);
    blocked_[static_cast<std::size_t>(v)] = true;
    for (auto [w, id] : g_.neighbors(v)) {
      if (w < start_) continue;
      if (w == start_) {
        // Length-2 walks are the same edge twice; each cycle is seen in both
        // directions and kept only in canonical direction.
        if (stack_.size() >= 3 && stack_[1] < stack_.back()) emit();
        closed = true;
      } else if (!blocked_[static_cast<std::size_t>(w)] && circuit(w)) {
        closed = true;
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (auto [w, id] : g_.neighbors(v)) {
        if (w < start_) continue;
        auto &b = blockers_[static_cast<std::size_t>(w)];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    stack_.pop_back();
    return closed;
  }

  void unblock(Index v) {
    blocked_[static_cast<std::size_t>(v)] = false;
    auto pending = std::move(blockers_[static_cast<std::size_t>(v)]);
    blockers_[static_cast<std::size_t>(v)].clear();
    for (Index w : pending)
      if (blocked_[static_cast<std::size_t>(w)]) unblock(w);
  }

  void emit() {
    if (found_.size() >= cap_) throw CycleCapExceeded(cap_);
    found_.push_back(SimpleCycle::from_vertices(g_, stack_));
  }

  const DirectedGraph &g_;
  std::size_t cap_;
  Index start_ = 0;
  std::vector<Index> stack_;
  std::vector<bool> blocked_;
  std::vector<std::vector<Index>> blockers_;
  std::vector<SimpleCycle> found_;
};

} // namespace

std::vector<SimpleCycle> enumerate_simple_cycles(const DirectedGraph &g, std::size_t cap) {
  return CircuitSearch(g, cap).run();
}

CycleVector cycle_vector(const SimpleCycle &c, const DirectedGraph &g, bool normalized) {
  CycleVector out;
  out.coords = Vector::Zero(g.edge_count());
  const double scale = normalized ? 1.0 / static_cast<double>(c.length()) : 1.0;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    out.coords(c.edges[i]) = scale * c.orientations[i];
  }
  out.norm1 = out.coords.lpNorm<1>();
  return out;
}

Index cycle_space_dimension(const DirectedGraph &g) {
  return g.edge_count() - g.vertex_count() + connected_components(g).count;
}

} // namespace gsr
