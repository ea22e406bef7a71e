#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grapes/complex.hpp"

namespace grapes {

/// An elementary collapse: remove the facet `sigma` together with its
/// codimension-one face `tau`, which no other face properly contains.
struct CollapsePair {
  Face sigma;
  Face tau;

  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
};

/// Collapse steps, all expressed over the ground set of the complex they start from.
struct CollapseSequence {
  std::vector<CollapsePair> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const CollapseSequence&, const CollapseSequence&) = default;
};

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

/// Outcome of a collapsibility search. `sequence` is meaningful only for yes.
struct ShvResult {
  Verdict verdict = Verdict::unknown;
  CollapseSequence sequence;
  std::uint64_t budget_spent = 0;
};

enum class SearchMode { greedy, exhaustive };

inline constexpr std::uint64_t kDefaultCollapseBudget = 1'000'000;

namespace detail {

inline bool pair_order(const CollapsePair& a, const CollapsePair& b) {
  if (a.sigma.size() != b.sigma.size()) return a.sigma.size() > b.sigma.size();
  if (a.sigma != b.sigma) return lex_less(a.sigma, b.sigma);
  return lex_less(a.tau, b.tau);
}

inline std::vector<CollapsePair> free_pairs_of(const std::vector<Face>& facets) {
  std::vector<CollapsePair> out;
  for (Face sigma : facets) {
    sigma.for_each_index([&](std::size_t i) {
      const Face tau = sigma.without(i);
      const bool shared = std::any_of(facets.begin(), facets.end(),
                                      [&](Face g) { return g != sigma && tau.subset_of(g); });
      if (!shared) out.push_back({sigma, tau});
    });
  }
  std::sort(out.begin(), out.end(), pair_order);
  return out;
}

inline bool is_free(const std::vector<Face>& facets, const CollapsePair& p) {
  if (p.tau.size() + 1 != p.sigma.size() || !p.tau.subset_of(p.sigma)) return false;
  if (std::find(facets.begin(), facets.end(), p.sigma) == facets.end()) return false;
  return std::none_of(facets.begin(), facets.end(),
                      [&](Face g) { return g != p.sigma && p.tau.subset_of(g); });
}

/// Facets after removing sigma and tau: the other codimension-one faces of
/// sigma become facets unless some remaining facet already covers them.
inline std::vector<Face> collapse_facets(const std::vector<Face>& facets, const CollapsePair& p) {
  std::vector<Face> next;
  next.reserve(facets.size() + p.sigma.size());
  for (Face g : facets) {
    if (g != p.sigma) next.push_back(g);
  }
  const std::size_t others = next.size();
  p.sigma.for_each_index([&](std::size_t i) {
    const Face rho = p.sigma.without(i);
    if (rho == p.tau) return;
    const bool covered = std::any_of(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(others),
                                     [&](Face g) { return rho.subset_of(g); });
    if (!covered) next.push_back(rho);
  });
  std::sort(next.begin(), next.end());
  return next;
}

}  // namespace detail

/// All free pairs, ordered by |σ| descending, then σ and τ lexicographically.
inline std::vector<CollapsePair> free_pairs(const Complex& c) { return detail::free_pairs_of(c.facets()); }

inline Complex apply_collapse(const Complex& c, const CollapsePair& p) {
  if (!detail::is_free(c.facets(), p)) throw ContractViolation("collapse pair is not free");
  return Complex(c.ground(), detail::collapse_facets(c.facets(), p));
}

/// Apply every step in order, checking that each one is free when applied.
inline Complex replay(const Complex& c, const CollapseSequence& seq) {
  Complex cur = c;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    if (!detail::is_free(cur.facets(), seq.steps[k])) {
      throw ContractViolation("collapse step " + std::to_string(k) + " is not free");
    }
    cur = Complex(cur.ground(), detail::collapse_facets(cur.facets(), seq.steps[k]));
  }
  return cur;
}

inline bool replays_to_void(const Complex& c, const CollapseSequence& seq) {
  try {
    return replay(c, seq).is_void();
  } catch (const ContractViolation&) {
    return false;
  }
}

/// Search for a collapse sequence from `c` down to the void complex.
///
/// Greedy mode follows the free-pair order and backtracks without memory;
/// exhaustive mode additionally remembers dead states, and is the only mode
/// that may answer no. Both stop with unknown once `budget` search nodes
/// have been expanded.
inline ShvResult collapse_search(const Complex& c, std::uint64_t budget = kDefaultCollapseBudget,
                                 SearchMode mode = SearchMode::greedy) {
  if (budget == 0) throw InputError("collapse budget must be positive");
  ShvResult result;
  std::set<std::vector<Face>> dead;
  std::vector<CollapsePair> path;
  bool out_of_budget = false;

  auto search = [&](auto&& self, const std::vector<Face>& state) -> bool {
    if (state.empty()) return true;
    if (result.budget_spent >= budget) {
      out_of_budget = true;
      return false;
    }
    ++result.budget_spent;
    if (mode == SearchMode::exhaustive && dead.count(state)) return false;
    for (const CollapsePair& p : detail::free_pairs_of(state)) {
      path.push_back(p);
      if (self(self, detail::collapse_facets(state, p))) return true;
      path.pop_back();
      if (out_of_budget) return false;
    }
    if (mode == SearchMode::exhaustive) dead.insert(state);
    return false;
  };

  if (search(search, c.facets())) {
    result.verdict = Verdict::yes;
    result.sequence.steps = std::move(path);
  } else if (!out_of_budget && mode == SearchMode::exhaustive) {
    result.verdict = Verdict::no;
  } else {
    result.verdict = Verdict::unknown;
  }
  return result;
}

/// Re-express a sequence over another ground set holding all of its elements.
inline CollapseSequence transport(const CollapseSequence& seq, const GroundSet& from, const GroundSet& to) {
  CollapseSequence out;
  out.steps.reserve(seq.steps.size());
  for (const auto& p : seq.steps) out.steps.push_back({transport(p.sigma, from, to), transport(p.tau, from, to)});
  return out;
}

/// Given a sequence collapsing lk_a(c) to void (over the ground of the link),
/// add `a` to every step. The result collapses c onto dl_a(c) and is verified
/// by replay before it is returned.
inline CollapseSequence lifted_collapse(const Complex& c, std::size_t a, const CollapseSequence& link_seq) {
  const Complex lk = link_at(c, a);
  if (!replays_to_void(lk, link_seq)) {
    throw ContractViolation("sequence does not collapse the link to the void complex");
  }
  CollapseSequence lifted;
  lifted.steps.reserve(link_seq.steps.size());
  for (const auto& p : link_seq.steps) {
    lifted.steps.push_back({p.sigma.insert_index(a).with(a), p.tau.insert_index(a).with(a)});
  }
  const Complex end = replay(c, lifted);
  if (!(deletion_at(end, a) == deletion_at(c, a)) || end.vertex_mask().contains(a)) {
    throw ContractViolation("lifted sequence does not end at the deletion");
  }
  return lifted;
}

inline CollapseSequence lifted_collapse(const Complex& c, std::string_view a, const CollapseSequence& link_seq) {
  return lifted_collapse(c, c.ground().index_of(a), link_seq);
}

struct SuspensionCollapse {
  Complex suspension;
  ShvResult result;
};

/// From a collapse of K to void, build one of Σ_{x,y}(K): collapse the cone
/// through x onto the cone through y, then that cone onto K, then K itself.
inline SuspensionCollapse suspension_transport(const Complex& k, const ShvResult& s, std::string_view x,
                                               std::string_view y) {
  if (s.verdict != Verdict::yes) throw ContractViolation("suspension transport needs a yes verdict");
  if (!replays_to_void(k, s.sequence)) throw ContractViolation("sequence does not collapse K");

  SuspensionCollapse out{suspension(k, x, y), {}};
  const Complex& susp = out.suspension;
  const std::size_t ix = susp.ground().index_of(x);
  const std::size_t iy = susp.ground().index_of(y);

  // Stage 1: the link of x is K; pulling it through x leaves cone_y(K).
  const Complex lk_x = link_at(susp, ix);
  auto stage1 = lifted_collapse(susp, ix, transport(s.sequence, k.ground(), lk_x.ground()));
  const Complex after1 = replay(susp, stage1);

  // Stage 2: same with y, leaving K on the full ground.
  const Complex lk_y = link_at(after1, iy);
  auto stage2 = lifted_collapse(after1, iy, transport(s.sequence, k.ground(), lk_y.ground()));

  // Stage 3: K itself.
  auto stage3 = transport(s.sequence, k.ground(), susp.ground());

  auto& steps = out.result.sequence.steps;
  for (const auto* part : {&stage1, &stage2, &stage3}) steps.insert(steps.end(), part->steps.begin(), part->steps.end());
  if (!replays_to_void(susp, out.result.sequence)) {
    throw ContractViolation("transported sequence does not collapse the suspension");
  }
  out.result.verdict = Verdict::yes;
  out.result.budget_spent = s.budget_spent;
  return out;
}

}  // namespace grapes
