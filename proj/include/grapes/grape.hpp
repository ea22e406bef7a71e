#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "grapes/collapse.hpp"
#include "grapes/complex.hpp"
#include "grapes/homology.hpp"
#include "grapes/sh_class.hpp"

namespace grapes {

enum class GrapeVariant { combinatorial, strong, weak, strong_weak };

inline const char* to_string(GrapeVariant v) {
  switch (v) {
    case GrapeVariant::combinatorial: return "comb";
    case GrapeVariant::strong: return "strong";
    case GrapeVariant::weak: return "weak";
    case GrapeVariant::strong_weak: return "strong-weak";
  }
  return "?";
}

inline GrapeVariant parse_variant(std::string_view s) {
  if (s == "comb" || s == "combinatorial") return GrapeVariant::combinatorial;
  if (s == "strong") return GrapeVariant::strong;
  if (s == "weak") return GrapeVariant::weak;
  if (s == "strong-weak" || s == "strong_weak") return GrapeVariant::strong_weak;
  throw InputError("unknown grape variant '" + std::string(s) + "'");
}

/// Weak variants can only approximate "simple-homotopy equivalent to void" by
/// collapsibility, so their negative answers are weaker.
inline bool is_weak_variant(GrapeVariant v) { return v == GrapeVariant::weak || v == GrapeVariant::strong_weak; }

/// A collapse sequence together with the ground set its faces refer to.
struct GroundedSequence {
  GroundSet ground;
  CollapseSequence sequence;
};

enum class Side { link, deletion };

inline const char* to_string(Side s) { return s == Side::link ? "link" : "deletion"; }

/// At least one side is a cone; apexes are recorded for whichever sides are.
struct StrongWitness {
  std::optional<std::string> link_apex;
  std::optional<std::string> deletion_apex;
};

/// A_x(lk) ⊆ dl with x = apex.
struct CombWitness {
  std::string apex;
};

/// lk ⊆ Γ ⊆ dl with Γ collapsible.
struct WeakWitness {
  Complex gamma;
  GroundedSequence collapse;
};

/// One side collapses to void.
struct StrongWeakWitness {
  Side side = Side::link;
  GroundedSequence collapse;
};

using Witness = std::variant<StrongWitness, CombWitness, WeakWitness, StrongWeakWitness>;

inline GrapeVariant variant_of(const Witness& w) {
  switch (w.index()) {
    case 0: return GrapeVariant::strong;
    case 1: return GrapeVariant::combinatorial;
    case 2: return GrapeVariant::weak;
    default: return GrapeVariant::strong_weak;
  }
}

enum class BaseKind { void_complex, irrelevant, point };

inline const char* to_string(BaseKind b) {
  switch (b) {
    case BaseKind::void_complex: return "void";
    case BaseKind::irrelevant: return "irrelevant";
    case BaseKind::point: return "point";
  }
  return "?";
}

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct SplitNode {
  std::string pivot;
  Witness witness;
  CertPtr link;
  CertPtr deletion;
};

/// Recursive witness that a complex is a grape. Subtrees may be shared.
struct Certificate {
  std::variant<BaseKind, SplitNode> node;

  bool is_base() const { return std::holds_alternative<BaseKind>(node); }
  BaseKind base() const { return std::get<BaseKind>(node); }
  const SplitNode& split() const { return std::get<SplitNode>(node); }

  std::size_t depth() const {
    if (is_base()) return 0;
    return 1 + std::max(split().link->depth(), split().deletion->depth());
  }
};

struct GrapeVerdict {
  Verdict verdict = Verdict::unknown;
  CertPtr certificate;  // set iff verdict is yes
  std::string reason;
};

struct GrapeOptions {
  std::uint64_t budget = kDefaultCollapseBudget;  // per collapse search
  bool exhaustive_gamma = false;
};

/// Exhaustive Γ enumeration is only attempted on nodes with at most this many vertices.
inline constexpr std::size_t kExhaustiveGammaLimit = 6;

// ---------------------------------------------------------------------------
// Name-based helpers: certificates refer to elements by name so that they are
// independent of which ground set (restricted or not) a node is expressed on.

namespace detail {

inline std::optional<Face> face_by_names(const GroundSet& from, Face f, const GroundSet& to) {
  Face out;
  bool ok = true;
  f.for_each_index([&](std::size_t i) {
    if (auto j = to.find(from[i])) {
      out = out.with(*j);
    } else {
      ok = false;
    }
  });
  if (!ok) return std::nullopt;
  return out;
}

/// Every face of `a` is a face of `b`, matching elements by name.
inline bool contained_in(const Complex& a, const Complex& b) {
  for (Face f : a.facets()) {
    auto g = face_by_names(a.ground(), f, b.ground());
    if (!g || !b.contains(*g)) return false;
  }
  return true;
}

inline std::optional<CollapseSequence> sequence_on(const GroundedSequence& s, const GroundSet& to) {
  CollapseSequence out;
  for (const auto& p : s.sequence.steps) {
    auto sigma = face_by_names(s.ground, p.sigma, to);
    auto tau = face_by_names(s.ground, p.tau, to);
    if (!sigma || !tau) return std::nullopt;
    out.steps.push_back({*sigma, *tau});
  }
  return out;
}

inline bool grounded_collapses(const Complex& c, const GroundedSequence& s) {
  auto seq = sequence_on(s, c.ground());
  return seq && replays_to_void(c, *seq);
}

/// A_x(lk) ⊆ dl for the element x of dl's ground.
inline bool cone_fits(const Complex& lk, const Complex& dl, std::size_t x) {
  for (Face f : lk.facets()) {
    auto g = face_by_names(lk.ground(), f, dl.ground());
    if (!g || !dl.contains(g->with(x))) return false;
  }
  return true;
}

inline Complex cone_within(const Complex& lk, const Complex& dl, std::size_t x) {
  std::vector<Face> gens;
  for (Face f : lk.facets()) gens.push_back(face_by_names(lk.ground(), f, dl.ground())->with(x));
  return Complex(dl.ground(), std::move(gens));
}

inline Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::yes;
}

inline std::string memo_key(const Complex& c) {
  std::string key;
  for (const auto& n : c.ground().names()) {
    key += n;
    key += '\x1f';
  }
  key += '|';
  for (Face f : c.facets()) {
    key += std::to_string(f.bits());
    key += ',';
  }
  return key;
}

/// All complexes Γ with lo ⊆ Γ ⊆ hi (same ground), each given by its face list.
template <class Fn>
void for_each_between(const Complex& lo, const Complex& hi, Fn&& fn) {
  std::vector<Face> extra;
  for (Face f : faces(hi)) {
    if (!lo.contains(f)) extra.push_back(f);
  }
  std::vector<Face> chosen = faces(lo);
  auto present = [&](Face f) { return std::find(chosen.begin(), chosen.end(), f) != chosen.end(); };
  bool stop = false;
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == extra.size()) {
      stop = !fn(Complex(hi.ground(), chosen));
      return;
    }
    const Face f = extra[k];
    self(self, k + 1);
    bool closed = true;
    f.for_each_index([&](std::size_t i) { closed = closed && present(f.without(i)); });
    if (closed) {
      chosen.push_back(f);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
}

struct WitnessResult {
  Verdict verdict = Verdict::no;
  std::optional<Witness> witness;
  std::string reason;
};

// ---------------------------------------------------------------------------

class Recognizer {
 public:
  Recognizer(GrapeVariant variant, GrapeOptions options) : variant_(variant), options_(options) {}

  /// `c` must already be restricted to its vertices.
  GrapeVerdict recognize(const Complex& c) {
    if (c.num_vertices() <= 1) return {Verdict::yes, make_base(c), {}};
    const std::string key = memo_key(c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    GrapeVerdict overall{Verdict::no, nullptr, "no pivot satisfies the " + std::string(to_string(variant_)) + " condition"};
    for (std::size_t a = 0; a < c.ground().size(); ++a) {
      const Complex lk = link_at(c, a);
      const Complex dl = deletion_at(c, a);
      Verdict v = attempt(c, a, lk, dl, overall);
      if (v == Verdict::yes) break;
      if (v == Verdict::unknown) overall.verdict = Verdict::unknown;
    }
    memo_.emplace(key, overall);
    return overall;
  }

 private:
  static CertPtr make_base(const Complex& c) {
    BaseKind kind = BaseKind::point;
    if (c.is_void()) kind = BaseKind::void_complex;
    else if (c.num_vertices() == 0) kind = BaseKind::irrelevant;
    return std::make_shared<const Certificate>(Certificate{kind});
  }

  Verdict attempt(const Complex& c, std::size_t a, const Complex& lk, const Complex& dl, GrapeVerdict& overall) {
    const bool weak = is_weak_variant(variant_);
    WitnessResult w;
    if (!weak) {
      w = find_witness(lk, dl, c.ground().size());
      if (w.verdict == Verdict::no) return Verdict::no;
    }
    GrapeVerdict sub_lk = recognize(restrict_ground(lk));
    if (sub_lk.verdict == Verdict::no) return Verdict::no;
    GrapeVerdict sub_dl = recognize(restrict_ground(dl));
    if (sub_dl.verdict == Verdict::no) return Verdict::no;
    if (weak) w = find_witness(lk, dl, c.ground().size());

    Verdict v = verdict_and(w.verdict, verdict_and(sub_lk.verdict, sub_dl.verdict));
    if (v == Verdict::yes) {
      overall.verdict = Verdict::yes;
      overall.reason.clear();
      overall.certificate = std::make_shared<const Certificate>(
          Certificate{SplitNode{c.ground()[a], std::move(*w.witness), sub_lk.certificate, sub_dl.certificate}});
    } else if (v == Verdict::unknown && overall.verdict != Verdict::unknown) {
      overall.reason = "pivot " + c.ground()[a] + ": " +
                       (w.verdict == Verdict::unknown ? w.reason : std::string("sub-complex inconclusive"));
    }
    return v;
  }

  WitnessResult find_witness(const Complex& lk, const Complex& dl, std::size_t node_size) {
    switch (variant_) {
      case GrapeVariant::strong: return strong_witness(lk, dl);
      case GrapeVariant::combinatorial: return comb_witness(lk, dl);
      case GrapeVariant::weak: return weak_witness(lk, dl, node_size);
      case GrapeVariant::strong_weak: return strong_weak_witness(lk, dl);
    }
    return {};
  }

  static WitnessResult strong_witness(const Complex& lk, const Complex& dl) {
    StrongWitness w;
    const Face la = cone_apexes(lk);
    const Face da = cone_apexes(dl);
    if (!la.empty()) w.link_apex = lk.ground()[la.indices().front()];
    if (!da.empty()) w.deletion_apex = dl.ground()[da.indices().front()];
    if (!w.link_apex && !w.deletion_apex) return {Verdict::no, std::nullopt, "neither side is a cone"};
    return {Verdict::yes, Witness{w}, {}};
  }

  static WitnessResult comb_witness(const Complex& lk, const Complex& dl) {
    for (std::size_t x = 0; x < dl.ground().size(); ++x) {
      if (cone_fits(lk, dl, x)) return {Verdict::yes, Witness{CombWitness{dl.ground()[x]}}, {}};
    }
    return {Verdict::no, std::nullopt, "no cone between link and deletion"};
  }

  WitnessResult weak_witness(const Complex& lk, const Complex& dl, std::size_t node_size) {
    auto try_gamma = [&](const Complex& gamma, SearchMode mode) -> std::pair<Verdict, std::optional<Witness>> {
      ShvResult r = collapse_search(gamma, options_.budget, mode);
      if (r.verdict != Verdict::yes) return {r.verdict, std::nullopt};
      return {Verdict::yes, Witness{WeakWitness{gamma, {gamma.ground(), std::move(r.sequence)}}}};
    };
    const Complex lk_on_dl = reorder_ground(lk, dl.ground());
    if (auto [v, w] = try_gamma(lk_on_dl, SearchMode::greedy); v == Verdict::yes) return {v, std::move(w), {}};
    if (auto [v, w] = try_gamma(dl, SearchMode::greedy); v == Verdict::yes) return {v, std::move(w), {}};
    for (std::size_t x = 0; x < dl.ground().size(); ++x) {
      if (!cone_fits(lk, dl, x)) continue;
      if (auto [v, w] = try_gamma(cone_within(lk, dl, x), SearchMode::greedy); v == Verdict::yes) {
        return {v, std::move(w), {}};
      }
    }
    if (!options_.exhaustive_gamma || node_size > kExhaustiveGammaLimit) {
      return {Verdict::unknown, std::nullopt, "no collapsible Γ in the default witness family"};
    }
    WitnessResult out{Verdict::no, std::nullopt, "no collapsible Γ between link and deletion"};
    for_each_between(lk_on_dl, dl, [&](const Complex& gamma) {
      auto [v, w] = try_gamma(gamma, SearchMode::exhaustive);
      if (v == Verdict::yes) {
        out = {Verdict::yes, std::move(w), {}};
        return false;
      }
      if (v == Verdict::unknown) {
        out.verdict = Verdict::unknown;
        out.reason = "collapse search budget exhausted on some Γ";
      }
      return true;
    });
    return out;
  }

  WitnessResult strong_weak_witness(const Complex& lk, const Complex& dl) {
    const SearchMode mode = options_.exhaustive_gamma ? SearchMode::exhaustive : SearchMode::greedy;
    Verdict worst = Verdict::no;
    for (Side side : {Side::link, Side::deletion}) {
      const Complex& part = side == Side::link ? lk : dl;
      ShvResult r = collapse_search(part, options_.budget, mode);
      if (r.verdict == Verdict::yes) {
        return {Verdict::yes, Witness{StrongWeakWitness{side, {part.ground(), std::move(r.sequence)}}}, {}};
      }
      if (r.verdict == Verdict::unknown) worst = Verdict::unknown;
    }
    if (!options_.exhaustive_gamma) worst = Verdict::unknown;
    return {worst, std::nullopt, "neither side was shown collapsible"};
  }

  GrapeVariant variant_;
  GrapeOptions options_;
  std::unordered_map<std::string, GrapeVerdict> memo_;
};

}  // namespace detail

/// Decide whether `c` is a grape of the given variant, returning a replayable
/// certificate on success. Search runs on the complex restricted to its vertices.
inline GrapeVerdict check_grape(const Complex& c, GrapeVariant variant, const GrapeOptions& options = {}) {
  detail::Recognizer r(variant, options);
  return r.recognize(restrict_ground(c));
}

// ---------------------------------------------------------------------------
// Certificate replay

struct CertificateCheck {
  bool valid = true;
  std::string reason;

  explicit operator bool() const { return valid; }
};

namespace detail {

inline CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

inline CertificateCheck check_witness(const Witness& w, const Complex& lk, const Complex& dl) {
  return std::visit(
      [&](const auto& wit) -> CertificateCheck {
        using T = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<T, StrongWitness>) {
          if (!wit.link_apex && !wit.deletion_apex) return fail("strong witness names no cone");
          auto apex_ok = [](const Complex& side, const std::optional<std::string>& apex) {
            if (!apex) return true;
            auto i = side.ground().find(*apex);
            return i && cone_apexes(side).contains(*i);
          };
          if (!apex_ok(lk, wit.link_apex)) return fail("link is not a cone with the stated apex");
          if (!apex_ok(dl, wit.deletion_apex)) return fail("deletion is not a cone with the stated apex");
          return {};
        } else if constexpr (std::is_same_v<T, CombWitness>) {
          auto x = dl.ground().find(wit.apex);
          if (!x || !cone_fits(lk, dl, *x)) return fail("cone over the link with apex " + wit.apex + " is not in the deletion");
          return {};
        } else if constexpr (std::is_same_v<T, WeakWitness>) {
          if (!contained_in(lk, wit.gamma)) return fail("link is not contained in Γ");
          if (!contained_in(wit.gamma, dl)) return fail("Γ is not contained in the deletion");
          if (!grounded_collapses(wit.gamma, wit.collapse)) return fail("Γ collapse sequence does not replay");
          return {};
        } else {
          const Complex& side = wit.side == Side::link ? lk : dl;
          if (!grounded_collapses(side, wit.collapse)) return fail("side collapse sequence does not replay");
          return {};
        }
      },
      w);
}

inline CertificateCheck verify_node(const Complex& c, std::optional<GrapeVariant> variant, const Certificate& cert,
                                    std::size_t depth_left) {
  if (cert.is_base()) {
    if (c.num_vertices() > 1) return fail("base leaf on a complex with more than one vertex");
    const BaseKind expected = c.is_void() ? BaseKind::void_complex
                              : c.num_vertices() == 0 ? BaseKind::irrelevant
                                                      : BaseKind::point;
    if (cert.base() != expected) return fail(std::string("base leaf says ") + to_string(cert.base()));
    return {};
  }
  if (depth_left == 0) return fail("certificate deeper than the vertex count");
  const SplitNode& s = cert.split();
  if (!s.link || !s.deletion) return fail("split node is missing a child");
  if (variant && variant_of(s.witness) != *variant) return fail("witness does not match the variant");
  auto a = c.ground().find(s.pivot);
  if (!a) return fail("pivot " + s.pivot + " is not a ground element");
  const Complex lk = link_at(c, *a);
  const Complex dl = deletion_at(c, *a);
  if (auto r = check_witness(s.witness, lk, dl); !r) return fail("pivot " + s.pivot + ": " + r.reason);
  const GrapeVariant v = variant.value_or(variant_of(s.witness));
  if (auto r = verify_node(lk, v, *s.link, depth_left - 1); !r) return r;
  return verify_node(dl, v, *s.deletion, depth_left - 1);
}

}  // namespace detail

/// Replay a certificate without searching. With no variant given, the variant
/// is taken from the first witness and all others must agree with it.
inline CertificateCheck verify_certificate(const Complex& c, const Certificate& cert,
                                           std::optional<GrapeVariant> variant = std::nullopt) {
  return detail::verify_node(c, variant, cert, c.num_vertices());
}

/// Which cone to follow when both sides of a strong split are cones.
enum class BranchPreference { deletion_cone, link_cone };

namespace detail {

inline ShClass classify_node(const Complex& c, const Certificate& cert, BranchPreference pref) {
  if (cert.is_base()) {
    return cert.base() == BaseKind::irrelevant ? ShClass::sphere(0) : ShClass::void_class();
  }
  const SplitNode& s = cert.split();
  const auto& w = std::get<StrongWitness>(s.witness);
  const std::size_t a = c.ground().index_of(s.pivot);
  const bool use_deletion = w.deletion_apex && (pref == BranchPreference::deletion_cone || !w.link_apex);
  if (use_deletion) {
    // dl is a cone, so c is simple-homotopy equivalent to the suspension of lk.
    return classify_node(link_at(c, a), *s.link, pref).suspended();
  }
  // lk is a cone, so c collapses onto dl.
  return classify_node(deletion_at(c, a), *s.deletion, pref);
}

}  // namespace detail

/// Simple-homotopy class of a strong combinatorial grape, read off its certificate.
inline ShClass classify_strong(const Complex& c, const Certificate& cert,
                               BranchPreference pref = BranchPreference::deletion_cone) {
  if (auto r = verify_certificate(c, cert, GrapeVariant::strong); !r) {
    throw ContractViolation("invalid strong certificate: " + r.reason);
  }
  return detail::classify_node(c, cert, pref);
}

/// Reduced Betti numbers predicted by c ≃ dl ∨ Σ lk applied down the
/// certificate: dimension → multiplicity. Empty means contractible.
inline std::map<int, std::size_t> predicted_wedge(const Complex& c, const Certificate& cert) {
  if (auto r = verify_certificate(c, cert); !r) throw ContractViolation("invalid certificate: " + r.reason);
  auto walk = [](auto&& self, const Complex& d, const Certificate& node) -> std::map<int, std::size_t> {
    if (node.is_base()) {
      if (node.base() == BaseKind::irrelevant) return {{-1, 1}};
      return {};
    }
    const SplitNode& s = node.split();
    const std::size_t a = d.ground().index_of(s.pivot);
    auto out = self(self, deletion_at(d, a), *s.deletion);
    for (const auto& [k, m] : self(self, link_at(d, a), *s.link)) out[k + 1] += m;
    return out;
  };
  return walk(walk, c, cert);
}

struct DualInvarianceReport {
  bool pass = true;
  bool unknown = false;  // weak variants only: dual search inconclusive
  Verdict dual_verdict = Verdict::unknown;
  std::optional<ShClass> original_class;
  std::optional<ShClass> dual_class;
  std::optional<ShClass> expected_dual_class;
  std::string detail;
};

/// Given that `c` is a grape of `variant`, check that its Alexander dual is too,
/// and for strong grapes that the classes correspond (∂β_n ↦ ∂β_{|X|-n-1}).
inline DualInvarianceReport verify_dual_invariance(const Complex& c, GrapeVariant variant,
                                                   const GrapeOptions& options = {}) {
  const GrapeVerdict original = check_grape(c, variant, options);
  if (original.verdict != Verdict::yes) throw InputError("complex is not a grape of the requested variant");

  DualInvarianceReport report;
  const Complex dual = alexander_dual(c);
  const GrapeVerdict dv = check_grape(dual, variant, options);
  report.dual_verdict = dv.verdict;
  if (dv.verdict == Verdict::no || (dv.verdict == Verdict::unknown && !is_weak_variant(variant))) {
    report.pass = false;
    report.detail = "dual is not recognized as a grape: " + dv.reason;
    return report;
  }
  if (dv.verdict == Verdict::unknown) {
    report.unknown = true;
    report.detail = "dual search inconclusive: " + dv.reason;
    return report;
  }
  if (variant == GrapeVariant::strong) {
    const ShClass cls = classify_strong(restrict_ground(c), *original.certificate);
    const ShClass dcls = classify_strong(restrict_ground(dual), *dv.certificate);
    report.original_class = cls;
    report.dual_class = dcls;
    const int n = static_cast<int>(c.ground().size());
    if (n > 0) {
      report.expected_dual_class = cls.is_void() ? ShClass::void_class() : ShClass::sphere(n - cls.n - 1);
      if (!(dcls == *report.expected_dual_class)) {
        report.pass = false;
        report.detail = "dual class " + dcls.describe() + ", expected " + report.expected_dual_class->describe();
      }
    }
  }
  return report;
}

}  // namespace grapes
