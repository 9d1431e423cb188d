#ifndef PCLIE_GRAPH_HPP
#define PCLIE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"

namespace pclie {

/// Sorted set of 1-based vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}
  explicit VertexSet(std::vector<int> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
  }

  static VertexSet range(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return VertexSet(std::move(v));
  }

  bool contains(int v) const { return std::binary_search(vs_.begin(), vs_.end(), v); }
  bool empty() const { return vs_.empty(); }
  std::size_t size() const { return vs_.size(); }
  int front() const { return vs_.front(); }
  int back() const { return vs_.back(); }
  auto begin() const { return vs_.begin(); }
  auto end() const { return vs_.end(); }
  const std::vector<int>& elements() const { return vs_; }

  bool is_subset_of(const VertexSet& o) const {
    return std::includes(o.vs_.begin(), o.vs_.end(), vs_.begin(), vs_.end());
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  /// `{a1,a3}` style.
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      if (i) s += ",";
      s += "a" + std::to_string(vs_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> vs_;
};

/// Finite simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {}) : n_(n) {
    detail::require(n >= 1, "graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [i, j] : edges) {
      detail::require(i >= 1 && i <= n && j >= 1 && j <= n,
                      "edge {" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
      detail::require(i != j, "loop at vertex " + std::to_string(i));
      detail::require(!adjacent(i, j),
                      "duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
      set(i, j);
    }
  }

  /// Graph on n vertices whose edges are selected by the bits of `mask` over
  /// the pairs (1,2),(1,3),...,(n-1,n) in that order.
  static Graph from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j, ++bit) {
        if (mask >> bit & 1u) edges.emplace_back(i, j);
      }
    }
    return Graph(n, edges);
  }

  static Graph complete(int n) { return from_edge_mask(n, ~std::uint64_t{0}); }

  int vertex_count() const { return n_; }

  bool adjacent(int i, int j) const {
    return adj_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)] != 0;
  }

  /// Edges as (i, j) with i < j, lexicographic.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        if (adjacent(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto [i, j] : edges()) h = h * 1000003u ^ static_cast<std::size_t>(i * 131 + j);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set(int i, int j) {
    adj_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)] = 1;
    adj_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1)] = 1;
  }

  int n_ = 0;
  std::vector<char> adj_;
};

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  const int n = g.vertex_count();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// Components ordered by their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n + 1), 0);
  std::vector<VertexSet> out;
  for (int start = 1; start <= n; ++start) {
    if (label[static_cast<std::size_t>(start)]) continue;
    std::vector<int> members{start};
    label[static_cast<std::size_t>(start)] = start;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int w = 1; w <= n; ++w) {
        if (!label[static_cast<std::size_t>(w)] && g.adjacent(members[k], w)) {
          label[static_cast<std::size_t>(w)] = start;
          members.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

struct InducedSubgraph {
  Graph graph;
  /// original_index[k] is the original vertex of new vertex k+1.
  std::vector<int> original_index;

  VertexSet lift(const VertexSet& s) const {
    std::vector<int> out;
    for (int v : s) out.push_back(original_index[static_cast<std::size_t>(v - 1)]);
    return VertexSet(std::move(out));
  }
};

/// Subgraph on `v`, re-indexed by ascending original index. `v` must be nonempty.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& v) {
  detail::require(!v.empty(), "induced subgraph of an empty vertex set");
  for (int x : v) {
    detail::require(x >= 1 && x <= g.vertex_count(), "vertex " + std::to_string(x) + " out of range");
  }
  const auto& idx = v.elements();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (g.adjacent(idx[a], idx[b])) edges.emplace_back(static_cast<int>(a + 1), static_cast<int>(b + 1));
    }
  }
  return {Graph(static_cast<int>(idx.size()), edges), idx};
}

/// True iff vertex i is adjacent to every vertex of s. Requires i not in s.
inline bool adjacent_to_all(const Graph& g, int i, const VertexSet& s) {
  detail::require(i >= 1 && i <= g.vertex_count(), "vertex " + std::to_string(i) + " out of range");
  detail::require(!s.contains(i), "vertex " + std::to_string(i) + " belongs to the tested set");
  return std::all_of(s.begin(), s.end(), [&](int j) {
    detail::require(j >= 1 && j <= g.vertex_count(), "vertex " + std::to_string(j) + " out of range");
    return g.adjacent(i, j);
  });
}

/// Vertices adjacent to every vertex of s (and therefore outside s).
inline VertexSet adjacency_hull(const Graph& g, const VertexSet& s) {
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!s.contains(v) && adjacent_to_all(g, v, s)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

// Text format:
//   # comment
//   n <count>
//   e <i> <j>
inline Graph parse_graph(std::istream& in) {
  std::string line;
  int n = 0;
  int lineno = 0;
  std::vector<std::pair<int, int>> edges;
  auto fail = [&](const std::string& msg) {
    throw InputError("graph line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (n == 0) {
      if (kw != "n") fail("expected 'n <count>' before any edge");
      if (!(ls >> n) || n < 1) fail("vertex count must be a positive integer");
    } else if (kw == "e") {
      int i = 0;
      int j = 0;
      if (!(ls >> i >> j)) fail("malformed edge line");
      if (i < 1 || i > n || j < 1 || j > n) fail("edge endpoint out of range");
      if (i == j) fail("loop at vertex " + std::to_string(i));
      auto e = std::minmax(i, j);
      if (std::find(edges.begin(), edges.end(), std::pair<int, int>(e)) != edges.end()) {
        fail("duplicate edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
      }
      edges.emplace_back(e);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing text '" + extra + "'");
  }
  if (n == 0) throw InputError("graph file has no 'n <count>' line");
  return Graph(n, edges);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
  std::string s = "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [i, j] : g.edges()) s += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
  return s;
}

}  // namespace pclie

#endif  // PCLIE_GRAPH_HPP
