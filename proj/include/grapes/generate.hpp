#pragma once

#include <cstdint>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grapes/complex.hpp"
#include "grapes/digraph.hpp"
#include "grapes/graph.hpp"

namespace grapes::gen {

/// mt19937_64 is fully specified by the standard; the bounded draw below is
/// ours, so instances are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// True with probability p (resolution 2^-53).
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Random recursive tree on n vertices (vertex k attaches to a uniformly
/// chosen earlier vertex), then `deletions` uniformly chosen edges removed.
inline Graph forest(std::size_t n, std::uint64_t seed, std::size_t deletions = 0) {
  Rng rng(seed);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 1; k < n; ++k) edges.emplace_back(rng.below(k), k);
  for (std::size_t d = 0; d < deletions && !edges.empty(); ++d) {
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
  }
  return Graph(GroundSet(numbered("v", n)), edges);
}

/// Each subset of an n-element ground set becomes a generator with probability `density`.
inline Complex complex(std::size_t n, double density, std::uint64_t seed) {
  if (n > 16) throw InputError("random complexes are limited to 16 ground elements");
  Rng rng(seed);
  std::vector<Face> gens;
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << n); ++m) {
    if (rng.chance(density)) gens.emplace_back(m);
  }
  return Complex(GroundSet(numbered("x", n)), std::move(gens));
}

/// `arcs` arcs, each with a uniformly chosen ordered pair of distinct
/// endpoints (a loop only when there is a single vertex); s is the first
/// vertex and t the last.
inline Digraph digraph(std::size_t vertices, std::size_t arcs, std::uint64_t seed) {
  if (vertices == 0) throw InputError("a digraph needs at least one vertex");
  Rng rng(seed);
  std::vector<Arc> out;
  for (std::size_t i = 0; i < arcs; ++i) {
    const auto u = static_cast<std::size_t>(rng.below(vertices));
    auto v = u;
    if (vertices > 1) {
      v = static_cast<std::size_t>(rng.below(vertices - 1));
      if (v >= u) ++v;
    }
    out.push_back({"e" + std::to_string(i), u, v});
  }
  return Digraph(GroundSet(numbered("v", vertices)), std::move(out), 0, vertices - 1);
}

/// Every simplicial complex on ground x0..x{n-1}, void included, n <= 5.
/// Subsets are decided in order of size; a subset may join the face family
/// only if all its codimension-one subsets already have.
inline std::vector<Complex> all_complexes(std::size_t n) {
  if (n > 5) throw InputError("exhaustive complex enumeration is limited to 5 ground elements");
  std::vector<Face> order;
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << n); ++m) order.emplace_back(m);
  std::stable_sort(order.begin(), order.end(), [](Face a, Face b) { return a.size() < b.size(); });
  const GroundSet ground(numbered("x", n));
  std::vector<Complex> out;
  std::vector<bool> in(std::size_t{1} << n, false);
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      std::vector<Face> gens;
      for (Face f : order) {
        if (in[f.bits()]) gens.push_back(f);
      }
      out.emplace_back(ground, std::move(gens));
      return;
    }
    const Face f = order[k];
    self(self, k + 1);
    bool allowed = true;
    f.for_each_index([&](std::size_t i) { allowed = allowed && in[f.without(i).bits()]; });
    if (!allowed) return;
    in[f.bits()] = true;
    self(self, k + 1);
    in[f.bits()] = false;
  };
  walk(walk, 0);
  return out;
}

/// Every digraph with vertices v0..v{n-1}, 1 <= n <= max_vertices, at most
/// max_arcs arcs (loops and parallel arcs included, arcs up to relabeling),
/// and every choice of s and t.
inline std::vector<Digraph> all_digraphs(std::size_t max_vertices, std::size_t max_arcs) {
  std::vector<Digraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const GroundSet names(numbered("v", n));
    const std::size_t kinds = n * n;
    // Non-decreasing sequences of ordered pairs = multisets of arcs.
    std::vector<std::size_t> pick;
    auto emit = [&] {
      std::vector<Arc> arcs;
      for (std::size_t k = 0; k < pick.size(); ++k) arcs.push_back({"e" + std::to_string(k), pick[k] / n, pick[k] % n});
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) out.emplace_back(names, arcs, s, t);
    };
    auto grow = [&](auto&& self, std::size_t from) -> void {
      emit();
      if (pick.size() == max_arcs) return;
      for (std::size_t k = from; k < kinds; ++k) {
        pick.push_back(k);
        self(self, k);
        pick.pop_back();
      }
    };
    grow(grow, 0);
  }
  return out;
}

/// The seeded part of the complex instance set: ground sizes 1..max_ground
/// and generator densities between 0.05 and 0.30, both drawn from `seed`.
inline std::vector<Complex> random_complexes(std::size_t count, std::size_t max_ground, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<std::size_t>(1 + rng.below(max_ground));
    const double density = 0.05 * static_cast<double>(1 + rng.below(6));
    out.push_back(complex(n, density, rng.below(~std::uint64_t{0})));
  }
  return out;
}

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto w : adj[v]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

/// Isomorphism-invariant encoding: AHU code rooted at the center(s).
inline std::string tree_code(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer)
      for (auto w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    layer = std::move(next);
  }
  std::string best;
  for (auto c : layer) {
    auto code = rooted_code(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace detail

/// One representative of every isomorphism class of trees on n >= 1 vertices,
/// grown leaf by leaf from the classes on n - 1 vertices.
inline std::vector<Graph> all_trees(std::size_t n) {
  using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
  std::vector<EdgeList> level{EdgeList{}};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<EdgeList> next;
    std::set<std::string> seen;
    for (const auto& edges : level) {
      for (std::size_t v = 0; v + 1 < k; ++v) {
        EdgeList grown = edges;
        grown.emplace_back(v, k - 1);
        if (seen.insert(detail::tree_code(k, grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  const GroundSet names(numbered("v", n));
  for (const auto& edges : level) out.emplace_back(names, edges);
  return out;
}

}  // namespace grapes::gen
