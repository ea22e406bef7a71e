#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

using Json = nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(GRAPES_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Outcome r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

std::string temp_file(const std::string& tag, const std::string& contents) {
  const std::string path = ::testing::TempDir() + "grapes_cli_" + tag + ".json";
  std::ofstream(path) << contents;
  return path;
}

const Json* find_subject(const Json& reports, const std::string& subject) {
  for (const Json& r : reports) {
    if (r["subject"] == subject) return &r;
  }
  return nullptr;
}

Json sphere(int n) { return {{"class", "cross-polytope-boundary"}, {"n", n}}; }

}  // namespace

TEST(Cli, GrapeCheckOnFiveCycle) {
  const Outcome comb = run("grape check " + sample("five_cycle.json") + " --variant comb");
  EXPECT_EQ(comb.code, 1);
  EXPECT_EQ(comb.json()["verdict"], "no");
  EXPECT_EQ(run("grape check " + sample("five_cycle.json") + " --variant strong").code, 1);
  const Outcome weak = run("grape check " + sample("five_cycle.json") + " --variant weak");
  EXPECT_EQ(weak.code, 0);
  EXPECT_EQ(weak.json()["verdict"], "yes");
  EXPECT_TRUE(weak.json().contains("certificate"));
}

TEST(Cli, CertificateFromCheckReplays) {
  const Outcome r = run("grape check " + sample("cone.json") + " --variant strong");
  ASSERT_EQ(r.code, 0);
  const std::string cert = temp_file("cert", r.json()["certificate"].dump());
  const Outcome ok = run("grape verify-cert " + sample("cone.json") + " " + cert);
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.json()["valid"], true);
  // The same certificate does not fit the 5-cycle.
  EXPECT_EQ(run("grape verify-cert " + sample("five_cycle.json") + " " + cert).code, 1);
  std::remove(cert.c_str());
}

TEST(Cli, ClassifyAndHomology) {
  const Outcome cls = run("grape classify " + sample("triangle_boundary.json"));
  EXPECT_EQ(cls.code, 0);
  EXPECT_EQ(cls.json()["class"], "cross-polytope-boundary");
  EXPECT_EQ(cls.json()["homology_consistent"], true);

  const Outcome h = run("homology " + sample("five_cycle.json"));
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.json()["betti"]["1"], 1);
  EXPECT_EQ(h.json()["betti"]["0"], 0);
}

TEST(Cli, ComplexOperations) {
  const Outcome d = run("dual " + sample("five_cycle.json"));
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["ground"].size(), 5u);
  EXPECT_EQ(d.json()["facets"].size(), 5u);

  const Outcome l = run("link " + sample("five_cycle.json") + " 1");
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.json()["facets"].size(), 2u);
  EXPECT_EQ(run("del " + sample("five_cycle.json") + " 1").code, 0);
  EXPECT_EQ(run("link " + sample("five_cycle.json") + " nine").code, 2);

  const Outcome c = run("collapse " + sample("cone.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.json()["verdict"], "yes");
  EXPECT_EQ(run("collapse " + sample("five_cycle.json") + " --exhaustive").code, 1);
}

TEST(Cli, GraphAndDigraphBuilders) {
  const Outcome ind = run("from-graph " + sample("path3.json") + " --complex ind");
  EXPECT_EQ(ind.code, 0);
  EXPECT_EQ(ind.json()["facets"].size(), 2u);
  const Outcome ec = run("from-graph " + sample("path3.json") + " --complex ec");
  EXPECT_EQ(ec.json()["facets"], Json::parse("[[]]"));
  EXPECT_EQ(run("from-graph " + sample("path3.json") + " --complex dom --dual").code, 0);
  EXPECT_EQ(run("from-graph " + sample("path3.json") + " --complex xyz").code, 2);

  const Outcome pf = run("from-digraph " + sample("cycle_digraph.json") + " --complex pf");
  EXPECT_EQ(pf.code, 0);
  EXPECT_EQ(pf.json()["facets"].size(), 4u);
  const Outcome pm = run("from-digraph " + sample("parallel_arcs.json") + " --complex pm");
  EXPECT_EQ(pm.json()["facets"].size(), 2u);
}

TEST(Cli, VerifyExamples) {
  const Outcome forest = run("verify forest " + sample("path3.json"));
  EXPECT_EQ(forest.code, 0);
  const Json forest_reports = forest.json();
  const Json* dom = find_subject(forest_reports, "Dom");
  ASSERT_NE(dom, nullptr);
  EXPECT_EQ((*dom)["status"], "pass");
  EXPECT_EQ((*dom)["observed"]["class"], sphere(1));

  const Outcome pfpm = run("verify pfpm " + sample("cycle_digraph.json"));
  EXPECT_EQ(pfpm.code, 0);
  const Json pfpm_reports = pfpm.json();
  const Json* pf = find_subject(pfpm_reports, "PF");
  ASSERT_NE(pf, nullptr);
  EXPECT_EQ((*pf)["observed"]["class"], Json({{"class", "void"}}));
  EXPECT_EQ((*pf)["observed"]["is_cone"], false);

  const Outcome cad = run("verify cad " + sample("five_cycle.json"));
  EXPECT_EQ(cad.code, 0);
  EXPECT_EQ(run("verify duality " + sample("five_cycle.json") + " --variant comb").code, 0);
  EXPECT_EQ(run("verify forest " + sample("triangle_boundary.json")).code, 2);
}

TEST(Cli, Generators) {
  const Outcome f = run("gen forest --n 1 --seed 3");
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.json()["vertices"].size(), 1u);
  EXPECT_EQ(f.json()["edges"].size(), 0u);
  EXPECT_EQ(run("gen forest --n 7 --seed 3").out, run("gen forest --n 7 --seed 3").out);

  for (int seed = 0; seed < 5; ++seed) {
    const Json c = run("gen complex --ground 0 --density 0.5 --seed " + std::to_string(seed)).json();
    EXPECT_TRUE(c["facets"] == Json::array() || c["facets"] == Json::parse("[[]]"));
  }

  const Json d = run("gen digraph --v 2 --arcs 1 --seed 9").json();
  ASSERT_EQ(d["arcs"].size(), 1u);
  EXPECT_NE(d["arcs"][0]["src"], d["arcs"][0]["tgt"]);
}

TEST(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(run("homology /nonexistent/complex.json").code, 2);
  const std::string bad = temp_file("bad", "{\"ground\": [\"a\"], \"facets\": [[\"b\"]]}");
  EXPECT_EQ(run("homology " + bad).code, 2);
  std::remove(bad.c_str());
  const std::string junk = temp_file("junk", "{not json");
  EXPECT_EQ(run("dual " + junk).code, 2);
  std::remove(junk.c_str());
  EXPECT_EQ(run("grape check " + sample("five_cycle.json") + " --variant fuzzy").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("suite --level enormous").code, 2);
}

TEST(Cli, SmokeSuite) {
  const Outcome s = run("suite --level smoke --seed 1");
  EXPECT_EQ(s.code, 0);
  const Json j = s.json();
  EXPECT_EQ(j["fail"], 0);
  EXPECT_GT(j["pass"].get<int>(), 0);
  EXPECT_EQ(s.out, run("suite --level smoke --seed 1").out);
}
