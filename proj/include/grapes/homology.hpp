#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grapes/complex.hpp"
#include "grapes/sh_class.hpp"

namespace grapes {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

/// Nonzero diagonal of the Smith normal form, each entry dividing the next.
/// Pivots are chosen by minimal magnitude to keep entries small.
inline std::vector<BigInt> smith_invariants(IntMatrix m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  std::size_t t = 0;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(a, c), m.at(b, c));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(m.at(r, a), m.at(r, b));
  };

  while (t < rows && t < cols) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (m.at(r, c) == 0) continue;
        if (!best || abs(m.at(r, c)) < abs(m.at(best->first, best->second))) best = {r, c};
      }
    if (!best) break;
    swap_rows(t, best->first);
    swap_cols(t, best->second);

    bool settled = false;
    while (!settled) {
      settled = true;
      // Clear column t below the pivot.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m.at(r, t) == 0) continue;
        const BigInt q = m.at(r, t) / m.at(t, t);
        for (std::size_t c = t; c < cols; ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {
          swap_rows(t, r);
          settled = false;
        }
      }
      if (!settled) continue;
      // Clear row t right of the pivot.
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m.at(t, c) == 0) continue;
        const BigInt q = m.at(t, c) / m.at(t, t);
        for (std::size_t r = t; r < rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          swap_cols(t, c);
          settled = false;
        }
      }
      if (!settled) continue;
      // Divisibility: fold an offending row into row t and start over.
      for (std::size_t r = t + 1; r < rows && settled; ++r)
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (std::size_t k = t; k < cols; ++k) m.at(t, k) += m.at(r, k);
            settled = false;
            break;
          }
        }
    }
    diag.push_back(abs(m.at(t, t)));
    ++t;
  }
  return diag;
}

/// The k-faces (k+1 elements) of `c`, sorted by mask; k = -1 gives {∅}.
inline std::vector<Face> chain_basis(const Complex& c, int k) {
  std::vector<Face> out;
  for (Face f : faces(c)) {
    if (static_cast<int>(f.size()) == k + 1) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Matrix of ∂_k from k-chains (columns) to (k-1)-chains (rows) of the
/// augmented chain complex. Removing the i-th smallest element gets sign (-1)^i.
inline IntMatrix boundary_matrix(const Complex& c, int k) {
  if (k < -1 || k > c.dimension()) throw InputError("boundary dimension out of range");
  const auto cols = chain_basis(c, k);
  const auto rows = k >= 0 ? chain_basis(c, k - 1) : std::vector<Face>{};
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    int sign = 1;
    cols[j].for_each_index([&](std::size_t v) {
      const Face sub = cols[j].without(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      m.at(static_cast<std::size_t>(it - rows.begin()), j) = sign;
      sign = -sign;
    });
  }
  return m;
}

/// Reduced (co)homology groups over the integers, by dimension.
struct HomologyProfile {
  int top = -1;                                 // groups live in [-1, top]
  std::map<int, std::size_t> betti;             // rank of the free part
  std::map<int, std::vector<BigInt>> torsion;   // invariant factors > 1

  std::size_t betti_at(int k) const {
    auto it = betti.find(k);
    return it == betti.end() ? 0 : it->second;
  }
  std::vector<BigInt> torsion_at(int k) const {
    auto it = torsion.find(k);
    return it == torsion.end() ? std::vector<BigInt>{} : it->second;
  }
  bool torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& kv) { return kv.second.empty(); });
  }
  bool acyclic() const {
    return torsion_free() &&
           std::all_of(betti.begin(), betti.end(), [](const auto& kv) { return kv.second == 0; });
  }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

namespace detail {

struct ChainData {
  std::vector<std::size_t> rank;               // rank[k+1] = dim C_k
  std::map<int, std::vector<BigInt>> factors;  // SNF of ∂_k (or its transpose)
};

inline std::vector<BigInt> torsion_part(const std::vector<BigInt>& inv) {
  std::vector<BigInt> out;
  for (const auto& d : inv) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

inline HomologyProfile compute_profile(const Complex& c, bool cohomology) {
  HomologyProfile p;
  if (c.is_void()) return p;
  p.top = std::max(c.dimension(), -1);
  // inv[k] = invariant factors of ∂_k for k in [0, top]; ∂_{-1} and ∂_{top+1} vanish.
  std::map<int, std::vector<BigInt>> inv;
  std::map<int, std::size_t> dims;
  for (int k = -1; k <= p.top; ++k) dims[k] = chain_basis(c, k).size();
  for (int k = 0; k <= p.top; ++k) {
    IntMatrix d = boundary_matrix(c, k);
    inv[k] = smith_invariants(cohomology ? d.transposed() : std::move(d));
  }
  auto rank = [&](int k) -> std::size_t { return inv.count(k) ? inv[k].size() : 0; };
  for (int k = -1; k <= p.top; ++k) {
    p.betti[k] = dims[k] - rank(k) - rank(k + 1);
    // H_k torsion comes from im ∂_{k+1}; H^k torsion from im δ^{k-1} = ∂_k^T.
    const int source = cohomology ? k : k + 1;
    p.torsion[k] = inv.count(source) ? torsion_part(inv[source]) : std::vector<BigInt>{};
  }
  return p;
}

}  // namespace detail

inline HomologyProfile reduced_homology(const Complex& c) { return detail::compute_profile(c, false); }

/// Computed from transposed boundary maps, independently of reduced_homology.
inline HomologyProfile reduced_cohomology(const Complex& c) { return detail::compute_profile(c, true); }

struct DualityReport {
  bool pass = true;
  std::optional<int> first_violation;  // index i on the complex's side
  std::string detail;
};

/// Checks H̃_i(Γ) ≅ H̃^{|X|-i-3}(Γ*) and H̃^i(Γ) ≅ H̃_{|X|-i-3}(Γ*), ranks and
/// torsion, for every i. Requires a nonempty ground set.
inline DualityReport check_alexander_duality(const Complex& c) {
  const int n = static_cast<int>(c.ground().size());
  if (n == 0) throw InputError("Alexander duality check needs a nonempty ground set");
  const Complex dual = alexander_dual(c);
  const auto h = reduced_homology(c);
  const auto co = reduced_cohomology(c);
  const auto dual_h = reduced_homology(dual);
  const auto dual_co = reduced_cohomology(dual);

  DualityReport report;
  for (int i = -1; i <= n - 1; ++i) {
    const int j = n - i - 3;
    const bool hom_ok = h.betti_at(i) == dual_co.betti_at(j) && h.torsion_at(i) == dual_co.torsion_at(j);
    const bool co_ok = co.betti_at(i) == dual_h.betti_at(j) && co.torsion_at(i) == dual_h.torsion_at(j);
    if (!hom_ok || !co_ok) {
      report.pass = false;
      report.first_violation = i;
      report.detail = "mismatch at i=" + std::to_string(i) + " against dual index " + std::to_string(j);
      return report;
    }
  }
  return report;
}

/// Homology-level check that `c` looks like the claimed class.
inline bool matches_sphere(const Complex& c, const ShClass& cls) {
  const auto h = reduced_homology(c);
  if (!h.torsion_free()) return false;
  for (const auto& [k, b] : h.betti) {
    const std::size_t expected = (!cls.is_void() && k == cls.n - 1) ? 1 : 0;
    if (b != expected) return false;
  }
  // A sphere above the complex's own dimension cannot be realized.
  return cls.is_void() || (cls.n - 1 <= h.top && h.betti_at(cls.n - 1) == 1 && !c.is_void());
}

}  // namespace grapes
