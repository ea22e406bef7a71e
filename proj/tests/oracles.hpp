#pragma once

// Brute-force reference implementations. They work on explicit face sets of
// element names and share no code paths with the library beyond reading a
// complex's ground and facets.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grapes/complex.hpp"
#include "grapes/digraph.hpp"
#include "grapes/graph.hpp"
#include "grapes/homology.hpp"

namespace oracle {

using Names = std::set<std::string>;
using FaceSet = std::set<Names>;

inline std::vector<Names> subsets(const std::vector<std::string>& xs) {
  std::vector<Names> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << xs.size()); ++m) {
    Names s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (m >> i & 1) s.insert(xs[i]);
    }
    out.push_back(s);
  }
  return out;
}

inline bool subset(const Names& a, const Names& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline FaceSet face_set(const grapes::Complex& c) {
  FaceSet out;
  for (grapes::Face f : c.facets()) {
    std::vector<std::string> members = c.ground().names_of(f);
    for (auto& s : subsets(members)) out.insert(s);
  }
  return out;
}

inline Names ground(const grapes::Complex& c) { return Names(c.ground().names().begin(), c.ground().names().end()); }

inline FaceSet link(const FaceSet& faces, const std::string& x) {
  FaceSet out;
  for (const auto& f : faces) {
    if (f.count(x)) continue;
    Names g = f;
    g.insert(x);
    if (faces.count(g)) out.insert(f);
  }
  return out;
}

inline FaceSet deletion(const FaceSet& faces, const std::string& x) {
  FaceSet out;
  for (const auto& f : faces) {
    if (!f.count(x)) out.insert(f);
  }
  return out;
}

inline FaceSet dual(const FaceSet& faces, const Names& x) {
  FaceSet out;
  for (const auto& f : subsets(std::vector<std::string>(x.begin(), x.end()))) {
    Names comp;
    std::set_difference(x.begin(), x.end(), f.begin(), f.end(), std::inserter(comp, comp.end()));
    if (!faces.count(comp)) out.insert(f);
  }
  return out;
}

inline Names vertices(const FaceSet& faces) {
  Names out;
  for (const auto& f : faces) out.insert(f.begin(), f.end());
  return out;
}

/// Rank over ℚ by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(const grapes::IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = Q(m.at(i, j));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t p = rank;
    while (p < m.rows && a[p][col] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Q factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers over ℚ from face counts and ranks of boundary maps
/// built here, index -1 .. top.
inline std::vector<std::size_t> rational_betti(const grapes::Complex& c) {
  const FaceSet faces = face_set(c);
  if (faces.empty()) return {};
  int top = -1;
  for (const auto& f : faces) top = std::max(top, static_cast<int>(f.size()) - 1);
  std::vector<std::vector<Names>> by_dim(static_cast<std::size_t>(top + 2));
  for (const auto& f : faces) by_dim[f.size()].push_back(f);
  auto rank_of = [&](int k) -> std::size_t {  // ∂_k : C_k → C_{k-1}
    if (k < 0 || k > top) return 0;
    const auto& cols = by_dim[static_cast<std::size_t>(k + 1)];
    const auto& rows = by_dim[static_cast<std::size_t>(k)];
    grapes::IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (const auto& x : cols[j]) {
        Names sub = cols[j];
        sub.erase(x);
        const auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), sub) - rows.begin());
        m.at(i, j) = sign;
        sign = -sign;
      }
    }
    return rational_rank(m);
  };
  std::vector<std::size_t> out;
  for (int k = -1; k <= top; ++k) {
    out.push_back(by_dim[static_cast<std::size_t>(k + 1)].size() - rank_of(k) - rank_of(k + 1));
  }
  return out;
}

// -- graphs ------------------------------------------------------------------

struct Invariants {
  std::size_t gamma, i, alpha0, beta1;
};

/// Invariants by enumerating vertex subsets of increasing size with
/// adjacency read from the edge list directly.
inline Invariants graph_invariants(const grapes::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
  auto dominating = [&](std::uint64_t s) {
    for (std::size_t v = 0; v < n; ++v) {
      bool hit = s >> v & 1;
      for (std::size_t u = 0; u < n && !hit; ++u) hit = (s >> u & 1) && adj[u][v];
      if (!hit) return false;
    }
    return true;
  };
  auto independent = [&](std::uint64_t s) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        if ((s >> u & 1) && (s >> v & 1) && adj[u][v]) return false;
      }
    return true;
  };
  auto cover = [&](std::uint64_t s) {
    for (const auto& [a, b] : g.edges()) {
      if (!(s >> a & 1) && !(s >> b & 1)) return false;
    }
    return true;
  };
  Invariants inv{n + 1, n + 1, n + 1, 0};
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (dominating(s)) inv.gamma = std::min(inv.gamma, k);
    if (dominating(s) && independent(s)) inv.i = std::min(inv.i, k);
    if (cover(s)) inv.alpha0 = std::min(inv.alpha0, k);
  }
  const auto& es = g.edges();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << es.size()); ++s) {
    std::set<std::size_t> used;
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t e = 0; e < es.size() && ok; ++e) {
      if (!(s >> e & 1)) continue;
      ok = used.insert(es[e].first).second && used.insert(es[e].second).second;
      ++k;
    }
    if (ok) inv.beta1 = std::max(inv.beta1, k);
  }
  return inv;
}

// -- digraphs ----------------------------------------------------------------

/// All simple s→t paths as arc-id sets.
inline std::vector<Names> st_paths(const grapes::Digraph& d) {
  std::vector<Names> out;
  std::vector<bool> visited(d.vertices().size(), false);
  Names current;
  auto go = [&](auto&& self, std::size_t u) -> void {
    if (u == d.t()) {
      out.push_back(current);
      return;
    }
    visited[u] = true;
    for (const auto& a : d.arcs()) {
      if (a.source != u || visited[a.target]) continue;
      current.insert(a.id);
      self(self, a.target);
      current.erase(a.id);
    }
    visited[u] = false;
  };
  go(go, d.s());
  return out;
}

/// Path-free faces: arc sets containing no simple s→t path.
inline FaceSet path_free(const grapes::Digraph& d) {
  std::vector<std::string> ids;
  for (const auto& a : d.arcs()) ids.push_back(a.id);
  const auto paths = st_paths(d);
  FaceSet out;
  for (const auto& f : subsets(ids)) {
    if (std::none_of(paths.begin(), paths.end(), [&](const Names& p) { return subset(p, f); })) out.insert(f);
  }
  return out;
}

}  // namespace oracle
