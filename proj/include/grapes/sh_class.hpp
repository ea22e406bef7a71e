#pragma once

#include <string>

namespace grapes {

/// Simple-homotopy class of a strong combinatorial grape: the void complex,
/// or the boundary ∂β_n of the n-dimensional cross-polytope (an (n-1)-sphere;
/// n = 0 is the irrelevant complex).
struct ShClass {
  enum class Kind { void_class, cross_polytope_boundary };

  Kind kind = Kind::void_class;
  int n = 0;

  static ShClass void_class() { return {}; }
  static ShClass sphere(int n) { return {Kind::cross_polytope_boundary, n}; }

  bool is_void() const { return kind == Kind::void_class; }

  /// Suspension: void stays void, ∂β_n becomes ∂β_{n+1}.
  ShClass suspended() const { return is_void() ? *this : sphere(n + 1); }

  std::string describe() const { return is_void() ? "void" : "cross-polytope-boundary(" + std::to_string(n) + ")"; }

  friend bool operator==(const ShClass& a, const ShClass& b) {
    return a.kind == b.kind && (a.is_void() || a.n == b.n);
  }
};

}  // namespace grapes
