#pragma once

// Temporal-graph data model, classification predicates and static-graph
// utilities. Vertices are dense integer ids 0..n-1; time labels are signed
// integers (constructions may use nonpositive labels before normalization).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tempocc {

enum class Orientation { directed, undirected };
enum class ReachabilityMode { strict, nonstrict };

inline const char* to_string(Orientation o) {
  return o == Orientation::directed ? "directed" : "undirected";
}
inline const char* to_string(ReachabilityMode m) {
  return m == ReachabilityMode::strict ? "strict" : "nonstrict";
}

struct TimeEdge {
  int u = 0;
  int v = 0;
  int t = 0;

  friend bool operator==(const TimeEdge& a, const TimeEdge& b) {
    return a.u == b.u && a.v == b.v && a.t == b.t;
  }
  friend bool operator<(const TimeEdge& a, const TimeEdge& b) {
    return std::tie(a.u, a.v, a.t) < std::tie(b.u, b.v, b.t);
  }
};

// A multiset of time-edges over vertices 0..n-1. Multi-label edges are stored
// as repeated TimeEdges. Values are treated as immutable once built; every
// operation below is a pure function.
struct TemporalGraph {
  Orientation orientation = Orientation::undirected;
  int n = 0;
  std::vector<TimeEdge> edges;
  std::vector<std::string> names;  // optional, empty or size n

  bool directed() const { return orientation == Orientation::directed; }

  void validate() const {
    for (const TimeEdge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw std::invalid_argument("time-edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    }
    if (!names.empty() && static_cast<int>(names.size()) != n)
      throw std::invalid_argument("name map must cover all vertices");
  }

  const std::string& name_of(int v) const {
    static const std::string empty;
    if (names.empty()) return empty;
    return names[static_cast<size_t>(v)];
  }

  // Canonical endpoint order for an undirected edge.
  TimeEdge canonical(const TimeEdge& e) const {
    if (!directed() && e.u > e.v) return TimeEdge{e.v, e.u, e.t};
    return e;
  }
};

inline TemporalGraph make_graph(Orientation orientation, int n,
                                std::vector<TimeEdge> edges,
                                std::vector<std::string> names = {}) {
  TemporalGraph g{orientation, n, std::move(edges), std::move(names)};
  g.validate();
  return g;
}

struct ClassificationReport {
  bool simple = false;
  bool proper = false;
  bool happy = false;
  int lifetime = 0;     // max label - min label + 1, 0 for edgeless graphs
  int label_count = 0;  // number of distinct labels
};

inline ClassificationReport classify(const TemporalGraph& g) {
  ClassificationReport r;
  if (g.edges.empty()) {
    r.simple = r.proper = r.happy = true;
    return r;
  }

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  std::set<int> labels;
  std::set<std::pair<int, int>> pairs;
  r.simple = true;
  for (const TimeEdge& e0 : g.edges) {
    TimeEdge e = g.canonical(e0);
    lo = std::min(lo, e.t);
    hi = std::max(hi, e.t);
    labels.insert(e.t);
    if (!pairs.insert({e.u, e.v}).second) r.simple = false;
  }
  r.lifetime = hi - lo + 1;
  r.label_count = static_cast<int>(labels.size());

  r.proper = true;
  if (g.directed()) {
    // No in-arc may share a label with an out-arc at the same vertex.
    std::vector<std::set<int>> in_labels(static_cast<size_t>(g.n));
    std::vector<std::set<int>> out_labels(static_cast<size_t>(g.n));
    for (const TimeEdge& e : g.edges) {
      out_labels[static_cast<size_t>(e.u)].insert(e.t);
      in_labels[static_cast<size_t>(e.v)].insert(e.t);
    }
    for (int v = 0; v < g.n && r.proper; ++v)
      for (int t : in_labels[static_cast<size_t>(v)])
        if (out_labels[static_cast<size_t>(v)].count(t)) {
          r.proper = false;
          break;
        }
  } else {
    // No two distinct underlying edges sharing a vertex may share a label.
    std::vector<std::set<std::pair<int, std::pair<int, int>>>> incident(
        static_cast<size_t>(g.n));
    for (const TimeEdge& e0 : g.edges) {
      TimeEdge e = g.canonical(e0);
      std::pair<int, int> pr{e.u, e.v};
      incident[static_cast<size_t>(e.u)].insert({e.t, pr});
      incident[static_cast<size_t>(e.v)].insert({e.t, pr});
    }
    for (int v = 0; v < g.n && r.proper; ++v) {
      const auto& inc = incident[static_cast<size_t>(v)];
      for (auto it = inc.begin(); it != inc.end() && r.proper; ++it) {
        auto nx = std::next(it);
        if (nx != inc.end() && nx->first == it->first) r.proper = false;
      }
    }
  }
  r.happy = r.simple && r.proper;
  return r;
}

// Plain static graph used for underlying graphs, mutual-reachability graphs
// and MCC adjacency.
struct StaticGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v
  std::vector<std::vector<int>> adj;

  static StaticGraph empty(int n) {
    StaticGraph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), {});
    return g;
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }

  bool connected() const {
    if (n == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[static_cast<size_t>(u)])
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++cnt;
          q.push(w);
        }
    }
    return cnt == n;
  }
};

// Underlying simple undirected graph: directions dropped, labels and
// multiplicities collapsed.
inline StaticGraph underlying_simple(const TemporalGraph& g) {
  StaticGraph s = StaticGraph::empty(g.n);
  std::set<std::pair<int, int>> seen;
  for (const TimeEdge& e : g.edges) {
    int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
    if (seen.insert({u, v}).second) s.add_edge(u, v);
  }
  return s;
}

namespace detail {
// BFS girth scan. With a depth cap set to L/2 it still finds every cycle of
// length < L; cycles of length >= L may be missed, which is exactly what the
//短-cycle test needs.
inline std::optional<int> girth_scan(const StaticGraph& g, int depth_cap,
                                     std::optional<int> early_below) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<size_t>(g.n));
  std::vector<int> parent(static_cast<size_t>(g.n));
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(r)] = 0;
    parent[static_cast<size_t>(r)] = -1;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[static_cast<size_t>(u)] >= depth_cap) continue;
      for (int w : g.adj[static_cast<size_t>(u)]) {
        if (dist[static_cast<size_t>(w)] == -1) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          parent[static_cast<size_t>(w)] = u;
          q.push(w);
        } else if (w != parent[static_cast<size_t>(u)]) {
          best = std::min(best,
                          dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1);
          if (early_below && best < *early_below) return best;
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}
}  // namespace detail

// Exact girth by BFS from every vertex; nullopt for forests.
inline std::optional<int> girth_static(const StaticGraph& g) {
  return detail::girth_scan(g, std::numeric_limits<int>::max(), std::nullopt);
}

// True iff some cycle of length < limit exists (depth-limited, cheap on
// high-girth inputs).
inline bool has_cycle_shorter_than(const StaticGraph& g, int limit) {
  auto found = detail::girth_scan(g, limit / 2, limit);
  return found && *found < limit;
}

// Girth of the underlying static graph, ignoring labels and directions.
inline std::optional<int> girth(const TemporalGraph& g) {
  return girth_static(underlying_simple(g));
}

inline bool has_four_cycle(const StaticGraph& g) {
  // C4 exists iff two vertices share two common neighbors.
  std::vector<std::set<int>> nb(static_cast<size_t>(g.n));
  for (auto [u, v] : g.edges) {
    nb[static_cast<size_t>(u)].insert(v);
    nb[static_cast<size_t>(v)].insert(u);
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      int common = 0;
      for (int w : nb[static_cast<size_t>(u)])
        if (w != v && nb[static_cast<size_t>(v)].count(w) && ++common >= 2) return true;
    }
  return false;
}

// 2-vertex-connectivity of a static graph (n >= 3: connected and no cut vertex).
inline bool is_biconnected(const StaticGraph& g) {
  if (g.n < 3) return false;
  if (!g.connected()) return false;
  // Tarjan lowlink articulation check, iterative not needed at these sizes.
  std::vector<int> disc(static_cast<size_t>(g.n), -1), low(static_cast<size_t>(g.n), 0);
  int timer = 0;
  bool has_cut = false;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
    int children = 0;
    for (int w : g.adj[static_cast<size_t>(u)]) {
      if (w == parent) continue;
      if (disc[static_cast<size_t>(w)] == -1) {
        ++children;
        self(self, w, u);
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
        if (parent != -1 && low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)])
          has_cut = true;
      } else {
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
      }
    }
    if (parent == -1 && children > 1) has_cut = true;
  };
  dfs(dfs, 0, -1);
  return !has_cut;
}

struct InducedGraph {
  TemporalGraph graph;
  std::vector<int> original_ids;  // induced id -> id in the source graph
};

// Keeps exactly the time-edges with both endpoints in s; ids remapped densely.
inline InducedGraph induced(const TemporalGraph& g, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 0 || v >= g.n) throw std::out_of_range("unknown vertex id in induced()");

  std::vector<int> remap(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < sorted.size(); ++i) remap[static_cast<size_t>(sorted[i])] = static_cast<int>(i);

  InducedGraph out;
  out.original_ids = sorted;
  out.graph.orientation = g.orientation;
  out.graph.n = static_cast<int>(sorted.size());
  for (const TimeEdge& e : g.edges) {
    int ru = remap[static_cast<size_t>(e.u)], rv = remap[static_cast<size_t>(e.v)];
    if (ru >= 0 && rv >= 0) out.graph.edges.push_back(TimeEdge{ru, rv, e.t});
  }
  if (!g.names.empty()) {
    out.graph.names.reserve(sorted.size());
    for (int v : sorted) out.graph.names.push_back(g.names[static_cast<size_t>(v)]);
  }
  return out;
}

// Shifts every label by delta. Reachability is invariant under shifting.
inline TemporalGraph shift_labels(const TemporalGraph& g, int delta) {
  TemporalGraph out = g;
  for (TimeEdge& e : out.edges) {
    long long t = static_cast<long long>(e.t) + delta;
    if (t < std::numeric_limits<int>::min() || t > std::numeric_limits<int>::max())
      throw std::overflow_error("label shift overflows");
    e.t = static_cast<int>(t);
  }
  return out;
}

// Shifts labels so the minimum label becomes 1.
inline TemporalGraph normalize_labels(const TemporalGraph& g) {
  if (g.edges.empty()) return g;
  int lo = std::numeric_limits<int>::max();
  for (const TimeEdge& e : g.edges) lo = std::min(lo, e.t);
  return shift_labels(g, 1 - lo);
}

}  // namespace tempocc
