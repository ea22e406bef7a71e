#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grapes/complex.hpp"
#include "grapes/digraph.hpp"
#include "grapes/grape.hpp"
#include "grapes/graph.hpp"
#include "grapes/homology.hpp"
#include "grapes/json_io.hpp"
#include "grapes/sh_class.hpp"

namespace grapes {

enum class Status { pass, fail, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
  }
  return "?";
}

/// One checked claim on one instance. `instance` is always the serialized
/// input, so a failing report can be re-run on its own.
struct VerificationReport {
  std::string theorem;
  std::string subject;  // which complex or identity inside the theorem
  nlohmann::json instance;
  nlohmann::json expected;
  nlohmann::json observed;
  Status status = Status::pass;
  std::string note;
};

namespace json {

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json out = {{"theorem", r.theorem},   {"subject", r.subject},   {"status", to_string(r.status)},
                        {"expected", r.expected}, {"observed", r.observed}, {"instance", r.instance}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline nlohmann::json to_json(const GraphInvariants& inv) {
  return {{"gamma", inv.gamma}, {"i", inv.i_dom}, {"alpha0", inv.alpha0}, {"beta1", inv.beta1}};
}

}  // namespace json

/// pass < unknown < fail.
inline Status worst(Status a, Status b) {
  auto rank = [](Status s) { return s == Status::pass ? 0 : s == Status::unknown ? 1 : 2; };
  return rank(a) >= rank(b) ? a : b;
}

inline Status overall(const std::vector<VerificationReport>& reports) {
  Status s = Status::pass;
  for (const auto& r : reports) s = worst(s, r.status);
  return s;
}

namespace detail {

/// Allowed outcomes for a strong grape's class: optionally void, optionally one sphere.
struct ClassExpectation {
  bool void_allowed = false;
  std::optional<int> sphere;
  bool side_condition = false;  // i(G) = γ(G) required whenever the class is a sphere

  nlohmann::json to_json() const {
    nlohmann::json alts = nlohmann::json::array();
    if (void_allowed) alts.push_back(json::to_json(ShClass::void_class()));
    if (sphere) alts.push_back(json::to_json(ShClass::sphere(*sphere)));
    nlohmann::json out = {{"one_of", alts}};
    if (side_condition) out["sphere_requires"] = "i = gamma";
    return out;
  }

  bool admits(const ShClass& c) const {
    if (c.is_void()) return void_allowed;
    return sphere && c.n == *sphere;
  }
};

/// Recognize `c` as a strong grape, classify it from the certificate and
/// cross-check the class against homology. Fills observed and status.
inline void check_strong_class(VerificationReport& r, const Complex& c, const std::optional<ClassExpectation>& want,
                               bool side_condition_holds, const GrapeOptions& options) {
  const GrapeVerdict v = check_grape(c, GrapeVariant::strong, options);
  r.observed["complex"] = json::to_json(c);
  r.observed["strong_grape"] = to_string(v.verdict);
  if (v.verdict != Verdict::yes) {
    r.status = v.verdict == Verdict::unknown ? Status::unknown : Status::fail;
    r.note = "not recognized as a strong combinatorial grape: " + v.reason;
    return;
  }
  const ShClass cls = classify_strong(restrict_ground(c), *v.certificate);
  const bool homology_ok = matches_sphere(c, cls);
  r.observed["class"] = json::to_json(cls);
  r.observed["homology_consistent"] = homology_ok;
  if (!homology_ok) {
    r.status = Status::fail;
    r.note = "homology does not match the certified class";
    return;
  }
  if (!want) {
    r.note = "formula not applicable on an empty ground set; recognition and homology checked only";
    return;
  }
  r.expected = want->to_json();
  if (!want->admits(cls)) {
    r.status = Status::fail;
    r.note = "class " + cls.describe() + " is not among the predicted classes";
  } else if (!cls.is_void() && want->side_condition && !side_condition_holds) {
    r.status = Status::fail;
    r.note = "sphere case but i(G) != gamma(G)";
  }
}

inline ClassExpectation void_or_sphere(long n, bool side) { return {true, static_cast<int>(n), side}; }
inline ClassExpectation sphere_only(long n) { return {false, static_cast<int>(n), false}; }

}  // namespace detail

/// The four graph complexes of a forest and their duals against their
/// predicted simple-homotopy classes.
inline std::vector<VerificationReport> verify_forest_theorem(const Graph& g, const GrapeOptions& options = {}) {
  if (!is_forest(g)) throw InputError("verify forest needs a forest");
  const GraphInvariants inv = invariants(g);
  const long V = static_cast<long>(g.order());
  const long E = static_cast<long>(g.size());
  const long i = static_cast<long>(inv.i_dom);
  const long a0 = static_cast<long>(inv.alpha0);
  const bool side = inv.i_dom == inv.gamma;

  struct Item {
    const char* name;
    Complex complex;
    detail::ClassExpectation want;
  };
  const Complex ind = independence_complex(g);
  const Complex dom = dominance_complex(g);
  const Complex ec = edge_cover_complex(g);
  const Complex ed = edge_dominance_complex(g);
  const std::vector<Item> items{
      {"Ind", ind, detail::void_or_sphere(i, true)},
      {"Dom", dom, detail::sphere_only(a0)},
      {"EC", ec, detail::void_or_sphere(E - V + i, true)},
      {"ED", ed, detail::sphere_only(E - a0)},
      {"Ind*", alexander_dual(ind), detail::void_or_sphere(V - i - 1, true)},
      {"Dom*", alexander_dual(dom), detail::sphere_only(V - a0 - 1)},
      {"EC*", alexander_dual(ec), detail::void_or_sphere(V - i - 1, true)},
      {"ED*", alexander_dual(ed), detail::sphere_only(a0 - 1)},
  };

  nlohmann::json instance = {{"graph", json::to_json(g)}, {"invariants", json::to_json(inv)}};
  std::vector<VerificationReport> out;
  for (const auto& item : items) {
    VerificationReport r{"forest", item.name, instance, nullptr, nlohmann::json::object(), Status::pass, ""};
    const bool is_dual = std::string(item.name).back() == '*';
    // Duality of classes needs a nonempty ground set (edge complexes of edgeless forests).
    std::optional<detail::ClassExpectation> want = item.want;
    if (is_dual && item.complex.ground().size() == 0) want.reset();
    detail::check_strong_class(r, item.complex, want, side, options);
    out.push_back(std::move(r));
  }
  return out;
}

/// Path-free and path-missing complexes against their predicted classes, and PM = PF*.
inline std::vector<VerificationReport> verify_pfpm_theorem(const Digraph& d, const GrapeOptions& options = {}) {
  const Complex pf = pf_complex(d);
  const Complex pm = pm_complex(d);
  const nlohmann::json instance = {{"digraph", json::to_json(d)}};
  std::vector<VerificationReport> out;

  if (d.arcs().empty()) {
    VerificationReport r{"pfpm", "empty-arc conventions", instance, nullptr, nlohmann::json::object(), Status::pass, ""};
    const bool same = d.s() == d.t();
    r.expected = {{"PF", same ? "void" : "irrelevant"}, {"PM", same ? "irrelevant" : "void"}};
    auto kind = [](const Complex& c) { return c.is_void() ? "void" : c.is_irrelevant() ? "irrelevant" : "other"; };
    r.observed = {{"PF", kind(pf)}, {"PM", kind(pm)}};
    if (r.expected != r.observed) r.status = Status::fail;
    out.push_back(std::move(r));
    return out;
  }

  const bool degenerate = has_useless_arc(d) || has_cycle(d);
  const long E = static_cast<long>(d.arcs().size());
  const long Vp = static_cast<long>(nonsinks(d).size());
  nlohmann::json facts = instance;
  facts["useless_arcs"] = d.arc_ground().names_of(useless_arcs(d));
  facts["has_cycle"] = has_cycle(d);
  facts["nonsinks"] = Vp;

  auto want = [&](long n) {
    return degenerate ? detail::ClassExpectation{true, std::nullopt, false} : detail::sphere_only(n);
  };
  for (const auto& [name, c, expectation] :
       {std::tuple<const char*, const Complex&, detail::ClassExpectation>{"PF", pf, want(Vp - 1)},
        std::tuple<const char*, const Complex&, detail::ClassExpectation>{"PM", pm, want(E - Vp)}}) {
    VerificationReport r{"pfpm", name, facts, nullptr, nlohmann::json::object(), Status::pass, ""};
    detail::check_strong_class(r, c, expectation, true, options);
    if (std::string(name) == "PF") r.observed["is_cone"] = is_cone(pf);
    out.push_back(std::move(r));
  }

  VerificationReport dual{"pfpm", "PM = PF*", instance, true, nlohmann::json::object(), Status::pass, ""};
  const bool eq = equals(pm, alexander_dual(pf));
  dual.observed = eq;
  if (!eq) {
    dual.status = Status::fail;
    dual.observed = {{"PM", json::to_json(pm)}, {"PF*", json::to_json(alexander_dual(pf))}};
  }
  out.push_back(std::move(dual));
  return out;
}

/// Deletion/contraction identities for PF and the useless-arc implication,
/// checked for every arc of `d`.
inline std::vector<VerificationReport> verify_arc_operations(const Digraph& d) {
  const nlohmann::json instance = {{"digraph", json::to_json(d)}};
  const Complex pf = pf_complex(d);
  std::vector<VerificationReport> out;
  VerificationReport del{"arc-operations", "deletion identity", instance, true, true, Status::pass, ""};
  VerificationReport con{"arc-operations", "contraction identity", instance, true, true, Status::pass, ""};
  VerificationReport use{"arc-operations", "useless arc after deletion", instance, true, true, Status::pass, ""};
  std::size_t contractions = 0;
  std::size_t premises = 0;
  const Face useless = useless_arcs(d);
  for (std::size_t e = 0; e < d.arcs().size(); ++e) {
    const Arc& arc = d.arcs()[e];
    if (!equals(deletion_at(pf, e), pf_complex(delete_arc(d, e))) && del.status == Status::pass) {
      del.status = Status::fail;
      del.observed = {{"arc", arc.id}};
    }
    if (arc.source == d.s()) {
      ++contractions;
      if (!equals(link_at(pf, e), pf_complex(contract_arc(d, e))) && con.status == Status::pass) {
        con.status = Status::fail;
        con.observed = {{"arc", arc.id}};
        if (arc.target == d.s()) con.note = "arc is a loop at s";
      }
    }
    const bool lone_target = std::none_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& other) {
      return other.id != arc.id && other.target == arc.target;
    });
    if (!useless.contains(e) && arc.source == d.s() && d.arcs().size() > 1 && lone_target) {
      ++premises;
      if (!has_useless_arc(delete_arc(d, e)) && use.status == Status::pass) {
        use.status = Status::fail;
        use.observed = {{"arc", arc.id}};
      }
    }
  }
  con.note = con.note.empty() ? std::to_string(contractions) + " arcs leave s" : con.note;
  use.note = std::to_string(premises) + " arcs satisfy the premise";
  out.push_back(std::move(del));
  out.push_back(std::move(con));
  out.push_back(std::move(use));
  return out;
}

/// Grape property and class correspondence pass to the Alexander dual.
/// A complex that is not a grape satisfies the implication vacuously.
inline VerificationReport verify_duality_report(const Complex& c, GrapeVariant variant, const GrapeOptions& options = {}) {
  VerificationReport r{"dual-invariance", to_string(variant), {{"complex", json::to_json(c)}}, nullptr,
                       nlohmann::json::object(), Status::pass, ""};
  const GrapeVerdict original = check_grape(c, variant, options);
  r.observed["verdict"] = to_string(original.verdict);
  if (original.verdict != Verdict::yes) {
    r.status = original.verdict == Verdict::unknown ? Status::unknown : Status::pass;
    r.note = "complex is not recognized as a grape; nothing to transfer";
    return r;
  }
  r.expected = {{"dual_verdict", is_weak_variant(variant) ? "yes or unknown" : "yes"}};
  const DualInvarianceReport d = verify_dual_invariance(c, variant, options);
  r.observed["dual_verdict"] = to_string(d.dual_verdict);
  if (d.original_class) r.observed["class"] = json::to_json(*d.original_class);
  if (d.dual_class) r.observed["dual_class"] = json::to_json(*d.dual_class);
  if (d.expected_dual_class) r.expected["dual_class"] = json::to_json(*d.expected_dual_class);
  r.status = !d.pass ? Status::fail : d.unknown ? Status::unknown : Status::pass;
  r.note = d.detail;
  return r;
}

/// Reduced homology of c against reduced cohomology of its dual, index shifted by |X| - 3.
inline VerificationReport verify_cad_report(const Complex& c) {
  VerificationReport r{"alexander-duality", "betti/cobetti", {{"complex", json::to_json(c)}}, nullptr,
                       nlohmann::json::object(), Status::pass, ""};
  const DualityReport d = check_alexander_duality(c);
  r.expected = {{"shift", static_cast<long>(c.ground().size()) - 3}};
  r.observed = {{"homology", json::to_json(reduced_homology(c))},
                {"dual_cohomology", json::to_json(reduced_cohomology(alexander_dual(c)))}};
  if (!d.pass) {
    r.status = Status::fail;
    r.note = d.detail;
  }
  return r;
}

}  // namespace grapes
