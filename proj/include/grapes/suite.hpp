#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grapes/generate.hpp"
#include "grapes/verify.hpp"

namespace grapes {

namespace named {

/// Cycle on five vertices as a one-dimensional complex.
inline Complex five_cycle() {
  return Complex({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
}

/// Digraph with a cycle (C, D) between u and v and no useless arc.
inline Digraph cycle_digraph() {
  return Digraph({"s", "u", "v", "t"},
                 {{"A", "s", "u"}, {"E", "s", "v"}, {"C", "u", "v"}, {"D", "v", "u"}, {"B", "u", "t"}, {"F", "v", "t"}},
                 "s", "t");
}

}  // namespace named

enum class SuiteLevel { smoke, full };

inline SuiteLevel parse_level(std::string_view s) {
  if (s == "smoke") return SuiteLevel::smoke;
  if (s == "full") return SuiteLevel::full;
  throw InputError("unknown suite level '" + std::string(s) + "'");
}

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t unknown = 0;
  std::vector<VerificationReport> reports;

  void add(VerificationReport r) {
    switch (r.status) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::unknown: ++unknown; break;
    }
    reports.push_back(std::move(r));
  }
  void add(std::vector<VerificationReport> rs) {
    for (auto& r : rs) add(std::move(r));
  }
};

namespace json {

inline nlohmann::json to_json(const SuiteSummary& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"pass", s.pass}, {"fail", s.fail}, {"unknown", s.unknown}, {"reports", reports}};
}

}  // namespace json

/// Instance sizes for one suite level.
struct SuitePlan {
  std::size_t random_complexes;
  std::size_t max_random_ground;
  std::size_t exhaustive_ground;
  std::size_t weak_dual_ground;  // weak-variant dual checks only up to this ground size
  std::size_t max_tree;
  std::size_t forests;
  std::size_t exhaustive_vertices;
  std::size_t exhaustive_arcs;
  std::size_t random_digraphs;
  std::size_t arc_digraphs;

  static SuitePlan of(SuiteLevel level) {
    if (level == SuiteLevel::smoke) return {40, 5, 3, 4, 6, 20, 2, 3, 30, 20};
    return {500, 6, 4, 5, 8, 200, 3, 4, 300, 200};
  }
};

/// The complex instance set: seeded random complexes plus every complex on a small ground set.
inline std::vector<Complex> complex_instances(const SuitePlan& plan, std::uint64_t seed) {
  auto out = gen::random_complexes(plan.random_complexes, plan.max_random_ground, seed);
  for (std::size_t n = 0; n <= plan.exhaustive_ground; ++n) {
    for (auto& c : gen::all_complexes(n)) out.push_back(std::move(c));
  }
  return out;
}

/// Seeded forests: a random tree on 2..max_tree vertices minus one random edge.
inline std::vector<Graph> forest_instances(const SuitePlan& plan, std::uint64_t seed) {
  gen::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Graph> out;
  for (std::size_t k = 0; k < plan.forests; ++k) {
    const auto n = static_cast<std::size_t>(2 + rng.below(plan.max_tree - 1));
    out.push_back(gen::forest(n, rng.below(~std::uint64_t{0}), 1));
  }
  return out;
}

/// Seeded digraphs with 1..5 vertices and 1..7 arcs.
inline std::vector<Digraph> digraph_instances(std::size_t count, std::uint64_t seed) {
  gen::Rng rng(seed ^ 0xd1b54a32d192ed03ULL);
  std::vector<Digraph> out;
  for (std::size_t k = 0; k < count; ++k) {
    const auto v = static_cast<std::size_t>(1 + rng.below(5));
    const auto e = static_cast<std::size_t>(1 + rng.below(7));
    out.push_back(gen::digraph(v, e, rng.below(~std::uint64_t{0})));
  }
  return out;
}

namespace detail {

/// The four verdicts agree on c and on c with one extra non-vertex ground element.
inline VerificationReport restriction_report(const Complex& c) {
  VerificationReport r{"restriction", "verdicts", {{"complex", json::to_json(c)}}, "identical verdicts",
                       nlohmann::json::object(), Status::pass, ""};
  std::string fresh = "extra";
  while (c.ground().contains(fresh)) fresh += "'";
  const Complex padded = extend_ground(c, {fresh});
  for (auto v : {GrapeVariant::combinatorial, GrapeVariant::strong, GrapeVariant::weak, GrapeVariant::strong_weak}) {
    const auto a = check_grape(c, v).verdict;
    const auto b = check_grape(restrict_ground(c), v).verdict;
    const auto p = check_grape(padded, v).verdict;
    r.observed[to_string(v)] = {to_string(a), to_string(b), to_string(p)};
    if (a != b || a != p) r.status = Status::fail;
  }
  return r;
}

inline VerificationReport koenig_report(const Graph& g) {
  const GraphInvariants inv = invariants(g);
  VerificationReport r{"koenig", "alpha0 = beta1", {{"graph", json::to_json(g)}}, inv.alpha0, inv.beta1,
                       inv.alpha0 == inv.beta1 ? Status::pass : Status::fail, ""};
  return r;
}

inline std::vector<VerificationReport> named_reports() {
  std::vector<VerificationReport> out;

  const Complex c5 = named::five_cycle();
  VerificationReport cyc{"five-cycle", "comb no, weak yes", {{"complex", json::to_json(c5)}},
                         {{"comb", "no"}, {"weak", "yes"}, {"betti", {{"1", 1}}}}, nlohmann::json::object(),
                         Status::pass, ""};
  const auto comb = check_grape(c5, GrapeVariant::combinatorial);
  const auto weak = check_grape(c5, GrapeVariant::weak);
  cyc.observed["comb"] = to_string(comb.verdict);
  cyc.observed["weak"] = to_string(weak.verdict);
  bool ok = comb.verdict == Verdict::no && weak.verdict == Verdict::yes;
  if (weak.certificate) {
    ok = ok && verify_certificate(c5, *weak.certificate, GrapeVariant::weak).valid;
    const auto wedge = predicted_wedge(c5, *weak.certificate);
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [k, m] : wedge) w[std::to_string(k)] = m;
    cyc.observed["predicted_wedge"] = w;
    ok = ok && wedge == std::map<int, std::size_t>{{1, 1}};
  }
  const auto h = reduced_homology(c5);
  cyc.observed["betti1"] = h.betti_at(1);
  ok = ok && h.betti_at(1) == 1;
  if (!ok) cyc.status = Status::fail;
  out.push_back(std::move(cyc));

  for (auto& r : verify_pfpm_theorem(named::cycle_digraph())) out.push_back(std::move(r));
  return out;
}

}  // namespace detail

/// Run the acceptance matrix at the given level. Report order is fixed by the
/// instance order, so output is byte-stable for a given seed.
inline SuiteSummary run_suite(SuiteLevel level, std::uint64_t seed) {
  const SuitePlan plan = SuitePlan::of(level);
  SuiteSummary summary;

  for (auto& r : detail::named_reports()) summary.add(std::move(r));

  GrapeOptions weak_options;
  weak_options.exhaustive_gamma = true;
  for (const Complex& c : complex_instances(plan, seed)) {
    if (c.ground().size() > 0) {
      summary.add(verify_cad_report(c));
      summary.add(verify_duality_report(c, GrapeVariant::strong));
    }
    if (c.ground().size() > 0 && c.ground().size() <= plan.weak_dual_ground) {
      summary.add(verify_duality_report(c, GrapeVariant::combinatorial, weak_options));
      summary.add(verify_duality_report(c, GrapeVariant::weak, weak_options));
      summary.add(verify_duality_report(c, GrapeVariant::strong_weak, weak_options));
    }
    summary.add(detail::restriction_report(c));
  }

  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= plan.max_tree; ++n) {
    for (auto& t : gen::all_trees(n)) graphs.push_back(std::move(t));
  }
  for (auto& f : forest_instances(plan, seed)) graphs.push_back(std::move(f));
  for (const Graph& g : graphs) {
    summary.add(verify_forest_theorem(g));
    summary.add(detail::koenig_report(g));
  }

  auto digraphs = gen::all_digraphs(plan.exhaustive_vertices, plan.exhaustive_arcs);
  for (auto& d : digraph_instances(plan.random_digraphs, seed)) digraphs.push_back(std::move(d));
  for (const Digraph& d : digraphs) summary.add(verify_pfpm_theorem(d));
  for (const Digraph& d : digraph_instances(plan.arc_digraphs, seed + 1)) summary.add(verify_arc_operations(d));

  return summary;
}

}  // namespace grapes
