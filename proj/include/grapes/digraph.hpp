#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grapes/complex.hpp"

namespace grapes {

struct Arc {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph with distinguished vertices s and t (possibly equal).
/// Parallel arcs and loops are allowed; arcs are told apart by id.
class Digraph {
 public:
  struct NamedArc {
    std::string id;
    std::string source;
    std::string target;
  };

  Digraph() = default;

  Digraph(std::vector<std::string> vertices, const std::vector<NamedArc>& arcs, std::string_view s,
          std::string_view t)
      : vertices_(std::move(vertices)) {
    for (const auto& a : arcs) arcs_.push_back({a.id, vertices_.index_of(a.source), vertices_.index_of(a.target)});
    s_ = vertices_.index_of(s);
    t_ = vertices_.index_of(t);
    check_ids();
  }

  Digraph(GroundSet vertices, std::vector<Arc> arcs, std::size_t s, std::size_t t)
      : vertices_(std::move(vertices)), arcs_(std::move(arcs)), s_(s), t_(t) {
    if (s_ >= vertices_.size() || t_ >= vertices_.size()) throw InputError("s or t is not a vertex");
    for (const auto& a : arcs_) {
      if (a.source >= vertices_.size() || a.target >= vertices_.size()) throw InputError("arc endpoint out of range");
    }
    check_ids();
  }

  const GroundSet& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }

  GroundSet arc_ground() const {
    std::vector<std::string> ids;
    for (const auto& a : arcs_) ids.push_back(a.id);
    return GroundSet(std::move(ids));
  }

  std::size_t arc_index(std::string_view id) const {
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (arcs_[i].id == id) return i;
    }
    throw InputError("unknown arc '" + std::string(id) + "'");
  }

 private:
  void check_ids() const {
    std::unordered_set<std::string> seen;
    for (const auto& a : arcs_) {
      if (a.id.empty()) throw InputError("arc ids must be nonempty");
      if (!seen.insert(a.id).second) throw InputError("duplicate arc id '" + a.id + "'");
    }
  }

  GroundSet vertices_;
  std::vector<Arc> arcs_;
  std::size_t s_ = 0;
  std::size_t t_ = 0;
};

/// Whether the arcs in `allowed` (mask over arc indices) contain an s→t path.
/// With s = t the trivial path always qualifies.
inline bool has_st_path(const Digraph& d, Face allowed) {
  std::vector<bool> seen(d.vertices().size(), false);
  std::vector<std::size_t> stack{d.s()};
  seen[d.s()] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    if (u == d.t()) return true;
    allowed.for_each_index([&](std::size_t e) {
      const Arc& a = d.arcs()[e];
      if (a.source == u && !seen[a.target]) {
        seen[a.target] = true;
        stack.push_back(a.target);
      }
    });
  }
  return false;
}

/// Faces: arc sets containing no s→t path.
inline Complex pf_complex(const Digraph& d) {
  const GroundSet ground = d.arc_ground();
  const std::size_t n = ground.size();
  if (n > 24) throw InputError("too many arcs for subset enumeration");
  std::vector<Face> gens;
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << n); ++m) {
    const Face f(m);
    if (has_st_path(d, f)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!f.contains(i) && !has_st_path(d, f.with(i))) maximal = false;
    }
    if (maximal) gens.push_back(f);
  }
  return Complex(ground, std::move(gens));
}

/// Faces: arc sets whose complement contains an s→t path.
inline Complex pm_complex(const Digraph& d) {
  const GroundSet ground = d.arc_ground();
  const std::size_t n = ground.size();
  if (n > 24) throw InputError("too many arcs for subset enumeration");
  const Face all = Face::full(n);
  std::vector<Face> gens;
  for (Face::mask_type m = 0; m < (Face::mask_type{1} << n); ++m) {
    const Face f(m);
    if (!has_st_path(d, all - f)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!f.contains(i) && has_st_path(d, all - f.with(i))) maximal = false;
    }
    if (maximal) gens.push_back(f);
  }
  return Complex(ground, std::move(gens));
}

/// Arcs on no simple s→t path, by enumerating all simple paths. Loops never
/// lie on a simple path, and with s = t only the trivial path exists.
inline Face useless_arcs(const Digraph& d) {
  const Face all = Face::full(d.arcs().size());
  Face used;
  if (d.s() == d.t()) return all;
  std::vector<bool> on_path(d.vertices().size(), false);
  std::vector<std::size_t> arc_stack;
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    if (u == d.t()) {
      for (auto e : arc_stack) used = used.with(e);
      return;
    }
    on_path[u] = true;
    for (std::size_t e = 0; e < d.arcs().size(); ++e) {
      const Arc& a = d.arcs()[e];
      if (a.source != u || on_path[a.target]) continue;
      arc_stack.push_back(e);
      self(self, a.target);
      arc_stack.pop_back();
    }
    on_path[u] = false;
  };
  dfs(dfs, d.s());
  return all - used;
}

inline bool has_useless_arc(const Digraph& d) { return !useless_arcs(d).empty(); }

/// A nontrivial closed walk exists: some loop, or some arc u→v with u reachable from v.
inline bool has_cycle(const Digraph& d) {
  const std::size_t n = d.vertices().size();
  auto reachable = [&](std::size_t from, std::size_t to) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      if (u == to) return true;
      for (const auto& a : d.arcs()) {
        if (a.source == u && !seen[a.target]) {
          seen[a.target] = true;
          stack.push_back(a.target);
        }
      }
    }
    return false;
  };
  return std::any_of(d.arcs().begin(), d.arcs().end(),
                     [&](const Arc& a) { return reachable(a.target, a.source); });
}

/// V′: vertices that are the source of at least one arc.
inline Face nonsinks(const Digraph& d) {
  Face v;
  for (const auto& a : d.arcs()) v = v.with(a.source);
  return v;
}

inline Digraph delete_arc(const Digraph& d, std::size_t e) {
  auto arcs = d.arcs();
  arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(e));
  return Digraph(d.vertices(), std::move(arcs), d.s(), d.t());
}

/// Contract an arc leaving s: its target merges into s, every other arc is
/// re-pointed (parallel arcs and loops kept), and the arc itself disappears.
/// Contracting a loop at s only removes it.
inline Digraph contract_arc(const Digraph& d, std::size_t e) {
  const Arc& arc = d.arcs().at(e);
  if (arc.source != d.s()) throw InputError("can only contract an arc whose source is s");
  const std::size_t gone = arc.target;
  const std::size_t keep = arc.source;
  if (gone == keep) return delete_arc(d, e);

  auto remap = [&](std::size_t v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    if (i == e) continue;
    const Arc& a = d.arcs()[i];
    arcs.push_back({a.id, remap(a.source), remap(a.target)});
  }
  return Digraph(d.vertices().without(gone), std::move(arcs), remap(d.s()), remap(d.t()));
}

inline Digraph delete_arc(const Digraph& d, std::string_view id) { return delete_arc(d, d.arc_index(id)); }
inline Digraph contract_arc(const Digraph& d, std::string_view id) { return contract_arc(d, d.arc_index(id)); }

}  // namespace grapes
