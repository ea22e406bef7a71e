#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grapes/errors.hpp"
#include "grapes/face.hpp"

namespace grapes {

/// Ordered list of distinct, opaque element names. Order is insertion order
/// and fixes the bit index of every element.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxGround) {
      throw InputError("ground set has " + std::to_string(names_.size()) + " elements; at most " +
                       std::to_string(kMaxGround) + " are supported");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InputError("ground element names must be nonempty");
      if (!seen.insert(n).second) throw InputError("duplicate ground element '" + n + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InputError("unknown ground element '" + std::string(name) + "'");
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  GroundSet without(std::size_t i) const {
    GroundSet out;
    out.names_ = names_;
    out.names_.erase(out.names_.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  GroundSet restricted_to(Face keep) const {
    GroundSet out;
    keep.for_each_index([&](std::size_t i) { out.names_.push_back(names_[i]); });
    return out;
  }

  GroundSet extended(const std::vector<std::string>& more) const {
    auto all = names_;
    all.insert(all.end(), more.begin(), more.end());
    return GroundSet(std::move(all));
  }

  Face face_of(const std::vector<std::string>& members) const {
    Face f;
    for (const auto& m : members) f = f.with(index_of(m));
    return f;
  }

  std::vector<std::string> names_of(Face f) const {
    std::vector<std::string> out;
    f.for_each_index([&](std::size_t i) { out.push_back(names_[i]); });
    return out;
  }

  /// Same elements, possibly in a different order.
  bool same_elements(const GroundSet& other) const {
    if (size() != other.size()) return false;
    return std::all_of(names_.begin(), names_.end(), [&](const auto& n) { return other.contains(n); });
  }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Re-express a face of `from` as a face of `to`. Every member must exist in `to`.
inline Face transport(Face f, const GroundSet& from, const GroundSet& to) {
  if (from == to) return f;
  Face out;
  f.for_each_index([&](std::size_t i) { out = out.with(to.index_of(from[i])); });
  return out;
}

/// Reduce a family of faces to its inclusion-maximal members, sorted by mask.
inline std::vector<Face> maximal_faces(std::vector<Face> gens) {
  std::sort(gens.begin(), gens.end(), [](Face a, Face b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Face> kept;
  for (Face g : gens) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(), [g](Face k) { return g.subset_of(k); });
    if (!absorbed) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// A finite simplicial complex over an explicit ground set, held as its facet
/// antichain. No facets is the void complex; the single facet {} is the
/// irrelevant complex. Immutable once built.
class Complex {
 public:
  Complex() = default;

  Complex(GroundSet ground, std::vector<Face> generators) : ground_(std::move(ground)) {
    const Face all = Face::full(ground_.size());
    for (Face g : generators) {
      if (!g.subset_of(all)) throw InputError("generator references an element outside the ground set");
    }
    facets_ = maximal_faces(std::move(generators));
  }

  Complex(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& generators)
      : Complex(GroundSet(std::move(ground)), {}) {
    std::vector<Face> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(ground_.face_of(g));
    facets_ = maximal_faces(std::move(gens));
  }

  static Complex void_complex(GroundSet ground) { return Complex(std::move(ground), {}); }
  static Complex irrelevant(GroundSet ground) { return Complex(std::move(ground), {Face{}}); }
  static Complex simplex(GroundSet ground) {
    const auto n = ground.size();
    return Complex(std::move(ground), {Face::full(n)});
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }

  bool contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
  }

  Face vertex_mask() const {
    Face v;
    for (Face f : facets_) v = v | f;
    return v;
  }

  std::size_t num_vertices() const { return vertex_mask().size(); }

  /// Dimension of the largest facet; -1 for the irrelevant complex and -2 for void.
  int dimension() const {
    int d = -2;
    for (Face f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  /// Structural identity: same ground order, same facets.
  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  GroundSet ground_;
  std::vector<Face> facets_;
};

/// Every face, sorted by (size, mask). The void complex yields nothing.
inline std::vector<Face> faces(const Complex& c) {
  std::vector<Face> out;
  for (Face f : c.facets()) for_each_subset(f, [&](Face s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::string> vertices(const Complex& c) { return c.ground().names_of(c.vertex_mask()); }

inline Complex deletion_at(const Complex& c, std::size_t x) {
  std::vector<Face> gens;
  gens.reserve(c.facets().size());
  for (Face f : c.facets()) gens.push_back(f.without(x).drop_index(x));
  return Complex(c.ground().without(x), std::move(gens));
}

inline Complex link_at(const Complex& c, std::size_t x) {
  std::vector<Face> gens;
  for (Face f : c.facets()) {
    if (f.contains(x)) gens.push_back(f.without(x).drop_index(x));
  }
  return Complex(c.ground().without(x), std::move(gens));
}

inline Complex deletion(const Complex& c, std::string_view x) { return deletion_at(c, c.ground().index_of(x)); }
inline Complex link(const Complex& c, std::string_view x) { return link_at(c, c.ground().index_of(x)); }

/// Join of two complexes on the same ground set: all unions m1 ∪ m2.
inline Complex join(const Complex& a, const Complex& b) {
  if (!(a.ground() == b.ground())) throw InputError("join requires identical ground sets");
  std::vector<Face> gens;
  gens.reserve(a.facets().size() * b.facets().size());
  for (Face f : a.facets()) {
    for (Face g : b.facets()) gens.push_back(f | g);
  }
  return Complex(a.ground(), std::move(gens));
}

/// Same facets over a larger ground set. New names are appended.
inline Complex extend_ground(const Complex& c, const std::vector<std::string>& more) {
  return Complex(c.ground().extended(more), c.facets());
}

namespace detail {

inline std::size_t fresh_slot(Complex& c, std::string_view x) {
  if (auto i = c.ground().find(x)) {
    if (c.vertex_mask().contains(*i)) {
      throw InputError("'" + std::string(x) + "' is already a vertex; apex must be fresh");
    }
    return *i;
  }
  c = extend_ground(c, {std::string(x)});
  return c.ground().size() - 1;
}

}  // namespace detail

/// A_x(c) = c * {∅, x}. `x` may be a new name or a ground element that is not a vertex.
inline Complex cone_over(const Complex& c, std::string_view x) {
  Complex base = c;
  const std::size_t i = detail::fresh_slot(base, x);
  std::vector<Face> gens;
  for (Face f : base.facets()) gens.push_back(f.with(i));
  return Complex(base.ground(), std::move(gens));
}

/// Σ_{x,y}(c) = c * {∅, x, y}.
inline Complex suspension(const Complex& c, std::string_view x, std::string_view y) {
  if (x == y) throw InputError("suspension points must be distinct");
  Complex base = c;
  const std::size_t i = detail::fresh_slot(base, x);
  const std::size_t j = detail::fresh_slot(base, y);
  std::vector<Face> gens;
  for (Face f : base.facets()) {
    gens.push_back(f.with(i));
    gens.push_back(f.with(j));
  }
  return Complex(base.ground(), std::move(gens));
}

/// Elements lying in every facet. Empty (not a cone) for void and irrelevant.
inline Face cone_apexes(const Complex& c) {
  if (c.is_void()) return {};
  Face common = Face::full(c.ground().size());
  for (Face f : c.facets()) common = common & f;
  return common;
}

inline bool is_cone(const Complex& c) { return !cone_apexes(c).empty(); }

/// Inclusion-minimal subsets of the ground set that are not faces.
/// Depth-first over faces in index order; a non-face is never extended.
inline std::vector<Face> minimal_nonfaces(const Complex& c) {
  std::vector<Face> out;
  const std::size_t n = c.ground().size();
  auto visit = [&](auto&& self, Face f, std::size_t next) -> void {
    if (!c.contains(f)) {
      bool minimal = true;
      f.for_each_index([&](std::size_t i) { minimal = minimal && c.contains(f.without(i)); });
      if (minimal) out.push_back(f);
      return;
    }
    for (std::size_t i = next; i < n; ++i) self(self, f.with(i), i + 1);
  };
  visit(visit, Face{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Δ* = {F : X∖F ∉ Δ}, on the same ground set.
inline Complex alexander_dual(const Complex& c) {
  const Face all = Face::full(c.ground().size());
  std::vector<Face> gens;
  for (Face m : minimal_nonfaces(c)) gens.push_back(all - m);
  return Complex(c.ground(), std::move(gens));
}

/// Drop every ground element that is not a vertex.
inline Complex restrict_ground(const Complex& c) {
  const Face keep = c.vertex_mask();
  const GroundSet g = c.ground().restricted_to(keep);
  std::vector<Face> gens;
  gens.reserve(c.facets().size());
  for (Face f : c.facets()) gens.push_back(transport(f, c.ground(), g));
  return Complex(g, std::move(gens));
}

/// Express `c` over a ground set with the same elements in another order.
inline Complex reorder_ground(const Complex& c, const GroundSet& target) {
  if (!c.ground().same_elements(target)) throw InputError("ground sets differ");
  std::vector<Face> gens;
  for (Face f : c.facets()) gens.push_back(transport(f, c.ground(), target));
  return Complex(target, std::move(gens));
}

/// Equality of labeled complexes up to the order in which the ground set is listed.
inline bool equals(const Complex& a, const Complex& b) {
  if (!a.ground().same_elements(b.ground())) return false;
  return reorder_ground(b, a.ground()).facets() == a.facets();
}

/// Every face of `a` is a face of `b`. Ground sets must hold the same elements.
inline bool is_subcomplex(const Complex& a, const Complex& b) {
  if (!a.ground().same_elements(b.ground())) throw InputError("is_subcomplex requires equal ground sets");
  const Complex bb = reorder_ground(b, a.ground());
  return std::all_of(a.facets().begin(), a.facets().end(), [&](Face f) { return bb.contains(f); });
}

/// Face-set union and intersection over a shared ground set.
inline Complex face_union(const Complex& a, const Complex& b) {
  if (!(a.ground() == b.ground())) throw InputError("face_union requires identical ground sets");
  auto gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return Complex(a.ground(), std::move(gens));
}

inline Complex face_intersection(const Complex& a, const Complex& b) {
  if (!(a.ground() == b.ground())) throw InputError("face_intersection requires identical ground sets");
  std::vector<Face> gens;
  for (Face f : a.facets()) {
    for (Face g : b.facets()) gens.push_back(f & g);
  }
  return Complex(a.ground(), std::move(gens));
}

}  // namespace grapes
