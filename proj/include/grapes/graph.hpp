#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "grapes/complex.hpp"

namespace grapes {

/// Finite simple undirected graph. Edges are stored as index pairs (u < v)
/// into the vertex list and keep their input order.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
      : vertices_(std::move(vertices)) {
    for (const auto& [a, b] : edges) add_edge(vertices_.index_of(a), vertices_.index_of(b));
  }

  Graph(GroundSet vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : vertices_(std::move(vertices)) {
    for (const auto& [a, b] : edges) add_edge(a, b);
  }

  const GroundSet& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    return std::find(edges_.begin(), edges_.end(), std::pair<std::size_t, std::size_t>(std::minmax(u, v))) != edges_.end();
  }

  /// Closed neighborhood N[v] as a vertex mask.
  Face closed_neighborhood(std::size_t v) const {
    Face n = Face::singleton(v);
    for (const auto& [a, b] : edges_) {
      if (a == v) n = n.with(b);
      if (b == v) n = n.with(a);
    }
    return n;
  }

  /// Name used for edge {u, v} when edges become ground elements.
  std::string edge_name(std::size_t e) const { return vertices_[edges_[e].first] + "-" + vertices_[edges_[e].second]; }

  GroundSet edge_ground() const {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < edges_.size(); ++e) names.push_back(edge_name(e));
    return GroundSet(std::move(names));
  }

  Face edge_mask(std::size_t e) const { return Face::singleton(edges_[e].first).with(edges_[e].second); }

 private:
  void add_edge(std::size_t a, std::size_t b) {
    if (a >= vertices_.size() || b >= vertices_.size()) throw InputError("edge endpoint out of range");
    if (a == b) throw InputError("loops are not allowed in a simple graph");
    const std::pair<std::size_t, std::size_t> e = std::minmax(a, b);
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) throw InputError("duplicate edge");
    edges_.emplace_back(e);
  }

  GroundSet vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Complex of all subsets of `ground` accepted by a downward-closed predicate.
template <class Pred>
Complex complex_from_predicate(const GroundSet& ground, Pred&& is_face) {
  const std::size_t n = ground.size();
  if (n > 24) throw InputError("ground set too large for subset enumeration");
  std::vector<Face> gens;
  const Face::mask_type limit = Face::mask_type{1} << n;
  for (Face::mask_type m = 0; m < limit; ++m) {
    const Face f(m);
    if (!is_face(f)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!f.contains(i) && is_face(f.with(i))) maximal = false;
    }
    if (maximal) gens.push_back(f);
  }
  return Complex(ground, std::move(gens));
}

inline bool is_independent(const Graph& g, Face s) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const auto& e) { return s.contains(e.first) && s.contains(e.second); });
}

inline bool is_dominating(const Graph& g, Face s) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    if ((g.closed_neighborhood(v) & s).empty()) return false;
  }
  return true;
}

inline bool is_vertex_cover(const Graph& g, Face s) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& e) { return s.contains(e.first) || s.contains(e.second); });
}

/// `edges` is a mask over edge indices.
inline bool is_edge_cover(const Graph& g, Face edges) {
  Face covered;
  edges.for_each_index([&](std::size_t e) { covered = covered | g.edge_mask(e); });
  return covered == Face::full(g.order());
}

inline bool is_matching(const Graph& g, Face edges) {
  Face used;
  bool ok = true;
  edges.for_each_index([&](std::size_t e) {
    const Face m = g.edge_mask(e);
    if (!(used & m).empty()) ok = false;
    used = used | m;
  });
  return ok;
}

/// Every edge meets some edge of `edges` (an edge meets itself).
inline bool is_edge_dominating(const Graph& g, Face edges) {
  for (std::size_t e = 0; e < g.size(); ++e) {
    bool hit = false;
    edges.for_each_index([&](std::size_t f) { hit = hit || !(g.edge_mask(e) & g.edge_mask(f)).empty(); });
    if (!hit) return false;
  }
  return true;
}

inline Complex independence_complex(const Graph& g) {
  return complex_from_predicate(g.vertices(), [&](Face f) { return is_independent(g, f); });
}

inline Complex dominance_complex(const Graph& g) {
  const Face all = Face::full(g.order());
  return complex_from_predicate(g.vertices(), [&](Face f) { return is_dominating(g, all - f); });
}

inline Complex edge_cover_complex(const Graph& g) {
  const Face all = Face::full(g.size());
  return complex_from_predicate(g.edge_ground(), [&](Face f) { return is_edge_cover(g, all - f); });
}

inline Complex edge_dominance_complex(const Graph& g) {
  const Face all = Face::full(g.size());
  return complex_from_predicate(g.edge_ground(), [&](Face f) { return is_edge_dominating(g, all - f); });
}

/// Graph on the edges of g, two edges adjacent when they share an endpoint.
inline Graph line_dual(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t e = 0; e < g.size(); ++e)
    for (std::size_t f = e + 1; f < g.size(); ++f) {
      if (!(g.edge_mask(e) & g.edge_mask(f)).empty()) adj.emplace_back(e, f);
    }
  return Graph(g.edge_ground(), adj);
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) adj.emplace_back(u, v);
    }
  return Graph(g.vertices(), adj);
}

struct GraphInvariants {
  std::size_t gamma = 0;   // domination number
  std::size_t i_dom = 0;   // independent domination number
  std::size_t alpha0 = 0;  // vertex covering number
  std::size_t beta1 = 0;   // matching number

  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

namespace detail {

/// Smallest size of a subset of {0..n-1} accepted by `pred`; n+1 if none.
template <class Pred>
std::size_t min_subset(std::size_t n, Pred&& pred) {
  std::size_t best = n + 1;
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << n); ++m) {
    const Face f(m);
    if (f.size() < best && pred(f)) best = f.size();
  }
  return best;
}

}  // namespace detail

/// Exact invariants by exhaustive subset search.
inline GraphInvariants invariants(const Graph& g) {
  if (g.order() > 24 || g.size() > 24) throw InputError("graph too large for exhaustive invariants");
  GraphInvariants inv;
  inv.gamma = detail::min_subset(g.order(), [&](Face s) { return is_dominating(g, s); });
  inv.i_dom = detail::min_subset(g.order(), [&](Face s) { return is_dominating(g, s) && is_independent(g, s); });
  inv.alpha0 = detail::min_subset(g.order(), [&](Face s) { return is_vertex_cover(g, s); });
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << g.size()); ++m) {
    if (is_matching(g, Face(m))) inv.beta1 = std::max(inv.beta1, Face(m).size());
  }
  return inv;
}

inline std::size_t count_components(const Graph& g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = g.order();
  for (const auto& [a, b] : g.edges()) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

/// A simple graph is a forest iff |E| = |V| - (number of components).
inline bool is_forest(const Graph& g) { return g.size() + count_components(g) == g.order(); }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : g.edges()) {
        if (a != u && b != u) continue;
        const auto w = a == u ? b : a;
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace grapes
