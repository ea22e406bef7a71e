#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grapes/suite.hpp"

namespace {

using Json = nlohmann::json;
using namespace grapes;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kUnknown = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int exit_for(Verdict v) { return v == Verdict::yes ? kPass : v == Verdict::no ? kFail : kUnknown; }

int exit_for(Status s) { return s == Status::pass ? kPass : s == Status::fail ? kFail : kUnknown; }

int emit_reports(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(grapes::json::to_json(r));
  emit(out);
  return exit_for(overall(reports));
}

Complex load_complex(const std::string& path) { return grapes::json::complex_from_json(grapes::json::read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grapes: simplicial complexes, collapses and grape recognition"};
  app.require_subcommand(1);

  std::string complex_path;
  std::string other_path;
  std::string element;
  std::uint64_t budget = kDefaultCollapseBudget;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  bool exhaustive_gamma = false;
  bool dual = false;
  std::string variant = "strong";
  std::string which;
  std::string level = "smoke";
  std::size_t n = 1;
  std::size_t arcs = 1;
  double density = 0.2;

  std::function<int()> action;

  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual of a complex");
  dual_cmd->add_option("complex", complex_path)->required();
  dual_cmd->callback([&] { action = [&] { return emit(grapes::json::to_json(alexander_dual(load_complex(complex_path)))), kPass; }; });

  auto* link_cmd = app.add_subcommand("link", "link of a ground element");
  link_cmd->add_option("complex", complex_path)->required();
  link_cmd->add_option("element", element)->required();
  link_cmd->callback([&] { action = [&] { return emit(grapes::json::to_json(link(load_complex(complex_path), element))), kPass; }; });

  auto* del_cmd = app.add_subcommand("del", "deletion of a ground element");
  del_cmd->add_option("complex", complex_path)->required();
  del_cmd->add_option("element", element)->required();
  del_cmd->callback([&] { action = [&] { return emit(grapes::json::to_json(deletion(load_complex(complex_path), element))), kPass; }; });

  auto* hom_cmd = app.add_subcommand("homology", "reduced integral homology");
  hom_cmd->add_option("complex", complex_path)->required();
  hom_cmd->callback([&] {
    action = [&] { return emit(grapes::json::to_json(reduced_homology(load_complex(complex_path)))), kPass; };
  });

  auto* col_cmd = app.add_subcommand("collapse", "search for a collapse to the void complex");
  col_cmd->add_option("complex", complex_path)->required();
  col_cmd->add_option("--budget", budget);
  col_cmd->add_flag("--exhaustive", exhaustive);
  col_cmd->callback([&] {
    action = [&] {
      const Complex c = load_complex(complex_path);
      const auto r = collapse_search(c, budget, exhaustive ? SearchMode::exhaustive : SearchMode::greedy);
      emit(grapes::json::to_json(r, c.ground()));
      return exit_for(r.verdict);
    };
  });

  auto* grape_cmd = app.add_subcommand("grape", "grape recognition");
  grape_cmd->require_subcommand(1);
  auto* check_cmd = grape_cmd->add_subcommand("check", "decide a grape variant");
  check_cmd->add_option("complex", complex_path)->required();
  check_cmd->add_option("--variant", variant)->required();
  check_cmd->add_option("--budget", budget);
  check_cmd->add_flag("--exhaustive-gamma", exhaustive_gamma);
  check_cmd->callback([&] {
    action = [&] {
      const Complex c = load_complex(complex_path);
      const auto v = check_grape(c, parse_variant(variant), {budget, exhaustive_gamma});
      Json out = {{"verdict", to_string(v.verdict)}};
      if (v.certificate) out["certificate"] = grapes::json::to_json(*v.certificate);
      if (!v.reason.empty()) out["reason"] = v.reason;
      emit(out);
      return exit_for(v.verdict);
    };
  });
  auto* classify_cmd = grape_cmd->add_subcommand("classify", "simple-homotopy class of a strong grape");
  classify_cmd->add_option("complex", complex_path)->required();
  classify_cmd->add_option("--budget", budget);
  classify_cmd->callback([&] {
    action = [&] {
      const Complex c = load_complex(complex_path);
      const auto v = check_grape(c, GrapeVariant::strong, {budget, false});
      if (v.verdict != Verdict::yes) {
        emit({{"verdict", to_string(v.verdict)}, {"reason", v.reason}});
        return exit_for(v.verdict);
      }
      const ShClass cls = classify_strong(restrict_ground(c), *v.certificate);
      Json out = grapes::json::to_json(cls);
      out["homology_consistent"] = matches_sphere(c, cls);
      out["certificate"] = grapes::json::to_json(*v.certificate);
      emit(out);
      return out["homology_consistent"].get<bool>() ? kPass : kFail;
    };
  });
  auto* cert_cmd = grape_cmd->add_subcommand("verify-cert", "replay a certificate without searching");
  cert_cmd->add_option("complex", complex_path)->required();
  cert_cmd->add_option("certificate", other_path)->required();
  cert_cmd->callback([&] {
    action = [&] {
      const Complex c = load_complex(complex_path);
      const CertPtr cert = grapes::json::certificate_from_json(grapes::json::read_file(other_path));
      const auto r = verify_certificate(restrict_ground(c), *cert);
      Json out = {{"valid", r.valid}};
      if (!r.valid) out["reason"] = r.reason;
      emit(out);
      return r.valid ? kPass : kFail;
    };
  });

  auto* graph_cmd = app.add_subcommand("from-graph", "build a graph complex");
  graph_cmd->add_option("graph", complex_path)->required();
  graph_cmd->add_option("--complex", which)->required()->check(CLI::IsMember({"ind", "dom", "ec", "ed"}));
  graph_cmd->add_flag("--dual", dual);
  graph_cmd->callback([&] {
    action = [&] {
      const Graph g = grapes::json::graph_from_json(grapes::json::read_file(complex_path));
      Complex c = which == "ind"   ? independence_complex(g)
                  : which == "dom" ? dominance_complex(g)
                  : which == "ec"  ? edge_cover_complex(g)
                                   : edge_dominance_complex(g);
      if (dual) c = alexander_dual(c);
      emit(grapes::json::to_json(c));
      return kPass;
    };
  });

  auto* digraph_cmd = app.add_subcommand("from-digraph", "build a path complex");
  digraph_cmd->add_option("digraph", complex_path)->required();
  digraph_cmd->add_option("--complex", which)->required()->check(CLI::IsMember({"pf", "pm"}));
  digraph_cmd->callback([&] {
    action = [&] {
      const Digraph d = grapes::json::digraph_from_json(grapes::json::read_file(complex_path));
      emit(grapes::json::to_json(which == "pf" ? pf_complex(d) : pm_complex(d)));
      return kPass;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem on one instance");
  verify_cmd->require_subcommand(1);
  auto* vf = verify_cmd->add_subcommand("forest", "graph complexes of a forest");
  vf->add_option("graph", complex_path)->required();
  vf->callback([&] {
    action = [&] {
      return emit_reports(verify_forest_theorem(grapes::json::graph_from_json(grapes::json::read_file(complex_path))));
    };
  });
  auto* vp = verify_cmd->add_subcommand("pfpm", "path-free and path-missing complexes");
  vp->add_option("digraph", complex_path)->required();
  vp->callback([&] {
    action = [&] {
      return emit_reports(verify_pfpm_theorem(grapes::json::digraph_from_json(grapes::json::read_file(complex_path))));
    };
  });
  auto* vd = verify_cmd->add_subcommand("duality", "grape property of the Alexander dual");
  vd->add_option("complex", complex_path)->required();
  vd->add_option("--variant", variant)->required();
  vd->add_option("--budget", budget);
  vd->add_flag("--exhaustive-gamma", exhaustive_gamma);
  vd->callback([&] {
    action = [&] {
      return emit_reports(
          {verify_duality_report(load_complex(complex_path), parse_variant(variant), {budget, exhaustive_gamma})});
    };
  });
  auto* vc = verify_cmd->add_subcommand("cad", "combinatorial Alexander duality");
  vc->add_option("complex", complex_path)->required();
  vc->callback([&] { action = [&] { return emit_reports({verify_cad_report(load_complex(complex_path))}); }; });

  auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
  gen_cmd->require_subcommand(1);
  auto* gf = gen_cmd->add_subcommand("forest", "random forest");
  gf->add_option("--n", n)->required();
  gf->add_option("--seed", seed)->required();
  gf->add_option("--deletions", arcs, "edges removed after growing the tree")->default_val(0);
  gf->callback([&] { action = [&] { return emit(grapes::json::to_json(gen::forest(n, seed, arcs))), kPass; }; });
  auto* gc = gen_cmd->add_subcommand("complex", "random complex");
  gc->add_option("--ground", n)->required();
  gc->add_option("--density", density)->required()->check(CLI::Range(0.0, 1.0));
  gc->add_option("--seed", seed)->required();
  gc->callback([&] { action = [&] { return emit(grapes::json::to_json(gen::complex(n, density, seed))), kPass; }; });
  auto* gd = gen_cmd->add_subcommand("digraph", "random digraph");
  gd->add_option("--v", n)->required();
  gd->add_option("--arcs", arcs)->required();
  gd->add_option("--seed", seed)->required();
  gd->callback([&] { action = [&] { return emit(grapes::json::to_json(gen::digraph(n, arcs, seed))), kPass; }; });

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance matrix");
  suite_cmd->add_option("--level", level)->check(CLI::IsMember({"smoke", "full"}));
  suite_cmd->add_option("--seed", seed);
  suite_cmd->callback([&] {
    action = [&] {
      const SuiteSummary s = run_suite(parse_level(level), seed);
      emit(grapes::json::to_json(s));
      return s.fail ? kFail : s.unknown ? kUnknown : kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    return action ? action() : kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
}
