#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grapes/collapse.hpp"
#include "grapes/complex.hpp"
#include "grapes/digraph.hpp"
#include "grapes/grape.hpp"
#include "grapes/graph.hpp"
#include "grapes/homology.hpp"
#include "grapes/sh_class.hpp"

namespace grapes::json {

using nlohmann::json;

namespace detail {

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

inline json names_json(const GroundSet& g, Face f) { return g.names_of(f); }

inline json bigint_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace detail

// -- complexes ---------------------------------------------------------------

inline json to_json(const Complex& c) {
  json facets = json::array();
  for (Face f : c.facets()) facets.push_back(detail::names_json(c.ground(), f));
  return {{"ground", c.ground().names()}, {"facets", facets}};
}

inline Complex complex_from_json(const json& j) {
  return detail::guarded("complex", [&] {
    if (!j.is_object() || !j.contains("ground") || !j.contains("facets")) {
      throw InputError("complex JSON needs \"ground\" and \"facets\"");
    }
    return Complex(j.at("ground").get<std::vector<std::string>>(),
                   j.at("facets").get<std::vector<std::vector<std::string>>>());
  });
}

// -- collapse sequences --------------------------------------------------------

inline json to_json(const CollapseSequence& seq, const GroundSet& ground) {
  json steps = json::array();
  for (const auto& p : seq.steps) {
    steps.push_back({{"sigma", detail::names_json(ground, p.sigma)}, {"tau", detail::names_json(ground, p.tau)}});
  }
  return {{"steps", steps}};
}

inline CollapseSequence sequence_from_json(const json& j, const GroundSet& ground) {
  return detail::guarded("collapse sequence", [&] {
    CollapseSequence seq;
    for (const auto& step : j.at("steps")) {
      seq.steps.push_back({ground.face_of(step.at("sigma").get<std::vector<std::string>>()),
                           ground.face_of(step.at("tau").get<std::vector<std::string>>())});
    }
    return seq;
  });
}

inline json to_json(const GroundedSequence& g) {
  json out = to_json(g.sequence, g.ground);
  out["ground"] = g.ground.names();
  return out;
}

/// Parse a sequence carrying its own ground. Without a "ground" key the
/// elements are indexed in order of appearance.
inline GroundedSequence grounded_sequence_from_json(const json& j) {
  return detail::guarded("collapse sequence", [&] {
    if (j.contains("ground")) {
      GroundSet g(j.at("ground").get<std::vector<std::string>>());
      return GroundedSequence{g, sequence_from_json(j, g)};
    }
    std::vector<std::string> names;
    for (const auto& step : j.at("steps")) {
      for (const char* key : {"sigma", "tau"}) {
        for (const auto& n : step.at(key).get<std::vector<std::string>>()) {
          if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
        }
      }
    }
    GroundSet g(std::move(names));
    return GroundedSequence{g, sequence_from_json(j, g)};
  });
}

inline json to_json(const ShvResult& r, const GroundSet& ground) {
  json out = {{"verdict", to_string(r.verdict)}, {"budget_spent", r.budget_spent}};
  if (r.verdict == Verdict::yes) out["sequence"] = to_json(r.sequence, ground);
  return out;
}

// -- homology ------------------------------------------------------------------

inline json to_json(const HomologyProfile& p) {
  json betti = json::object();
  json torsion = json::object();
  for (int k = -1; k <= p.top; ++k) {
    betti[std::to_string(k)] = p.betti_at(k);
    json t = json::array();
    for (const auto& v : p.torsion_at(k)) t.push_back(detail::bigint_json(v));
    torsion[std::to_string(k)] = t;
  }
  return {{"betti", betti}, {"torsion", torsion}};
}

inline json to_json(const ShClass& c) {
  if (c.is_void()) return {{"class", "void"}};
  return {{"class", "cross-polytope-boundary"}, {"n", c.n}};
}

// -- certificates --------------------------------------------------------------

inline json to_json(const Witness& w) {
  return std::visit(
      [](const auto& wit) -> json {
        using T = std::decay_t<decltype(wit)>;
        if constexpr (std::is_same_v<T, StrongWitness>) {
          const char* side = wit.link_apex && wit.deletion_apex ? "both" : wit.link_apex ? "link" : "deletion";
          json out = {{"variant", "strong"}, {"cone_side", side}};
          out["link_apex"] = wit.link_apex ? json(*wit.link_apex) : json(nullptr);
          out["deletion_apex"] = wit.deletion_apex ? json(*wit.deletion_apex) : json(nullptr);
          return out;
        } else if constexpr (std::is_same_v<T, CombWitness>) {
          return {{"variant", "comb"}, {"apex", wit.apex}};
        } else if constexpr (std::is_same_v<T, WeakWitness>) {
          return {{"variant", "weak"},
                  {"gamma", to_json(wit.gamma)},
                  {"collapse", to_json(wit.collapse.sequence, wit.collapse.ground)}};
        } else {
          return {{"variant", "strong-weak"}, {"side", to_string(wit.side)}, {"collapse", to_json(wit.collapse)}};
        }
      },
      w);
}

inline json to_json(const Certificate& cert) {
  if (cert.is_base()) return {{"base", to_string(cert.base())}};
  const SplitNode& s = cert.split();
  return {{"pivot", s.pivot}, {"witness", to_json(s.witness)}, {"link", to_json(*s.link)}, {"deletion", to_json(*s.deletion)}};
}

inline Witness witness_from_json(const json& j) {
  const auto variant = parse_variant(j.at("variant").get<std::string>());
  switch (variant) {
    case GrapeVariant::strong: {
      StrongWitness w;
      if (j.contains("link_apex") && !j.at("link_apex").is_null()) w.link_apex = j.at("link_apex").get<std::string>();
      if (j.contains("deletion_apex") && !j.at("deletion_apex").is_null()) {
        w.deletion_apex = j.at("deletion_apex").get<std::string>();
      }
      return w;
    }
    case GrapeVariant::combinatorial:
      return CombWitness{j.at("apex").get<std::string>()};
    case GrapeVariant::weak: {
      Complex gamma = complex_from_json(j.at("gamma"));
      CollapseSequence seq = sequence_from_json(j.at("collapse"), gamma.ground());
      GroundSet g = gamma.ground();
      return WeakWitness{std::move(gamma), {std::move(g), std::move(seq)}};
    }
    case GrapeVariant::strong_weak: {
      const auto side = j.at("side").get<std::string>();
      if (side != "link" && side != "deletion") throw InputError("strong-weak side must be link or deletion");
      return StrongWeakWitness{side == "link" ? Side::link : Side::deletion,
                               grounded_sequence_from_json(j.at("collapse"))};
    }
  }
  throw InputError("unreachable witness variant");
}

inline CertPtr certificate_from_json(const json& j) {
  return detail::guarded("certificate", [&]() -> CertPtr {
    if (j.contains("base")) {
      const auto b = j.at("base").get<std::string>();
      BaseKind kind;
      if (b == "void") kind = BaseKind::void_complex;
      else if (b == "irrelevant") kind = BaseKind::irrelevant;
      else if (b == "point") kind = BaseKind::point;
      else throw InputError("unknown base kind '" + b + "'");
      return std::make_shared<const Certificate>(Certificate{kind});
    }
    SplitNode s{j.at("pivot").get<std::string>(), witness_from_json(j.at("witness")),
                certificate_from_json(j.at("link")), certificate_from_json(j.at("deletion"))};
    return std::make_shared<const Certificate>(Certificate{std::move(s)});
  });
}

// -- graphs --------------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.vertices()[a], g.vertices()[b]});
  return {{"vertices", g.vertices().names()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  return detail::guarded("graph", [&] {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex names");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(j.at("vertices").get<std::vector<std::string>>(), edges);
  });
}

inline json to_json(const Digraph& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs()) {
    arcs.push_back({{"id", a.id}, {"src", d.vertices()[a.source]}, {"tgt", d.vertices()[a.target]}});
  }
  return {{"vertices", d.vertices().names()}, {"arcs", arcs}, {"s", d.vertices()[d.s()]}, {"t", d.vertices()[d.t()]}};
}

inline Digraph digraph_from_json(const json& j) {
  return detail::guarded("digraph", [&] {
    std::vector<Digraph::NamedArc> arcs;
    for (const auto& a : j.at("arcs")) {
      arcs.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(), a.at("tgt").get<std::string>()});
    }
    return Digraph(j.at("vertices").get<std::vector<std::string>>(), arcs, j.at("s").get<std::string>(),
                   j.at("t").get<std::string>());
  });
}

// -- files -----------------------------------------------------------------------

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace grapes::json
