#include <gtest/gtest.h>

#include "grapes/collapse.hpp"
#include "grapes/generate.hpp"
#include "grapes/homology.hpp"

using namespace grapes;
using Facets = std::vector<std::vector<std::string>>;

namespace {

Complex cx(std::vector<std::string> ground, Facets facets) { return Complex(std::move(ground), facets); }

CollapsePair pair(const Complex& c, std::vector<std::string> sigma, std::vector<std::string> tau) {
  return {c.ground().face_of(sigma), c.ground().face_of(tau)};
}

Complex cycle_digraph_pf() {
  return cx({"A", "E", "C", "D", "B", "F"}, {{"A", "E", "C", "D"}, {"F", "B", "C", "D"}, {"A", "F", "D"}, {"B", "E", "C"}});
}

}  // namespace

TEST(FreePairs, Examples) {
  const Complex point = cx({"v"}, {{"v"}});
  const auto p = free_pairs(point);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].sigma, Face::singleton(0));
  EXPECT_TRUE(p[0].tau.empty());

  EXPECT_TRUE(free_pairs(cx({"a", "b"}, {{"a"}, {"b"}})).empty());

  const Complex edge = cx({"a", "b"}, {{"a", "b"}});
  const auto e = free_pairs(edge);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].tau, Face::singleton(0));
  EXPECT_EQ(e[1].tau, Face::singleton(1));
  EXPECT_TRUE(free_pairs(Complex::irrelevant(GroundSet({"a"}))).empty());
  EXPECT_TRUE(free_pairs(Complex::void_complex(GroundSet({"a"}))).empty());
}

TEST(FreePairs, OrderIsLargestSigmaFirst) {
  // A triangle with a pendant edge: the 2-face pairs come before the edge pairs.
  const Complex c = cx({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
  const auto p = free_pairs(c);
  ASSERT_FALSE(p.empty());
  EXPECT_EQ(p.front().sigma.size(), 3u);
  for (std::size_t k = 1; k < p.size(); ++k) EXPECT_GE(p[k - 1].sigma.size(), p[k].sigma.size());
}

TEST(ApplyCollapse, Examples) {
  const Complex edge = cx({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(apply_collapse(edge, pair(edge, {"a", "b"}, {"b"})), cx({"a", "b"}, {{"a"}}));
  const Complex point = cx({"v"}, {{"v"}});
  EXPECT_TRUE(apply_collapse(point, pair(point, {"v"}, {})).is_void());
  const Complex path = cx({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(apply_collapse(path, pair(path, {"a", "b"}, {"a"})), cx({"a", "b", "c"}, {{"b", "c"}}));
}

TEST(ApplyCollapse, NonFreePairIsContractViolation) {
  const Complex path = cx({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_THROW(apply_collapse(path, pair(path, {"a", "b"}, {"b"})), ContractViolation);
  EXPECT_THROW(apply_collapse(path, pair(path, {"a"}, {})), ContractViolation);
}

TEST(CollapseSearch, ConesCollapse) {
  const auto cs = gen::random_complexes(80, 7, 3);
  for (const Complex& base : cs) {
    if (base.is_void()) continue;
    const Complex cone = cone_over(base, "apex");
    const auto budget = 10 * faces(cone).size();
    const ShvResult r = collapse_search(cone, budget);
    ASSERT_EQ(r.verdict, Verdict::yes) << "cone over complex with " << base.facets().size() << " facets";
    EXPECT_TRUE(replays_to_void(cone, r.sequence));
    EXPECT_LE(r.budget_spent, budget);
  }
}

TEST(CollapseSearch, TwoPointsIsNoOnlyWhenExhaustive) {
  const Complex s0 = cx({"a", "b"}, {{"a"}, {"b"}});
  EXPECT_EQ(collapse_search(s0, 100, SearchMode::exhaustive).verdict, Verdict::no);
  EXPECT_EQ(collapse_search(s0, 100, SearchMode::greedy).verdict, Verdict::unknown);
}

TEST(CollapseSearch, CycleDigraphComplexCollapses) {
  const Complex pf = cycle_digraph_pf();
  EXPECT_FALSE(is_cone(pf));
  const auto r = collapse_search(pf);
  ASSERT_EQ(r.verdict, Verdict::yes);
  EXPECT_TRUE(replays_to_void(pf, r.sequence));
}

TEST(CollapseSearch, BudgetExhaustionGivesUnknown) {
  const Complex pf = cycle_digraph_pf();
  const auto r = collapse_search(pf, 1, SearchMode::exhaustive);
  EXPECT_EQ(r.verdict, Verdict::unknown);
  EXPECT_LE(r.budget_spent, 1u);
}

TEST(CollapseSearch, Deterministic) {
  const Complex pf = cycle_digraph_pf();
  const auto a = collapse_search(pf);
  const auto b = collapse_search(pf);
  EXPECT_EQ(a.sequence.steps, b.sequence.steps);
}

TEST(CollapseSearch, YesImpliesAcyclicAndNoImpliesNotCollapsible) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Complex& c : gen::all_complexes(n)) {
      const auto r = collapse_search(c, kDefaultCollapseBudget, SearchMode::exhaustive);
      ASSERT_NE(r.verdict, Verdict::unknown);
      if (r.verdict == Verdict::yes) {
        EXPECT_TRUE(replays_to_void(c, r.sequence));
        EXPECT_TRUE(reduced_homology(c).acyclic());
      }
      // On at most four elements, collapsible and acyclic coincide.
      EXPECT_EQ(r.verdict == Verdict::yes, reduced_homology(c).acyclic());
      const auto g = collapse_search(c);
      EXPECT_NE(g.verdict, Verdict::no);
      if (r.verdict == Verdict::yes) {
        EXPECT_EQ(g.verdict, Verdict::yes);
      }
    }
  }
}

TEST(Replay, RejectsIllegalStep) {
  const Complex edge = cx({"a", "b"}, {{"a", "b"}});
  CollapseSequence seq{{pair(edge, {"a"}, {})}};
  EXPECT_THROW(replay(edge, seq), ContractViolation);
  EXPECT_FALSE(replays_to_void(edge, seq));
}

TEST(LiftedCollapse, Examples) {
  const Complex edge = cx({"a", "v"}, {{"a", "v"}});
  const Complex lk = link(edge, "a");
  const auto lifted = lifted_collapse(edge, "a", {{pair(lk, {"v"}, {})}});
  ASSERT_EQ(lifted.steps.size(), 1u);
  EXPECT_EQ(lifted.steps[0].sigma, edge.ground().face_of({"a", "v"}));
  EXPECT_EQ(lifted.steps[0].tau, edge.ground().face_of({"a"}));
  EXPECT_EQ(replay(edge, lifted), cx({"a", "v"}, {{"v"}}));

  const Complex ind_p3 = cx({"a", "b", "c"}, {{"a", "c"}, {"b"}});
  const Complex lk_c = link(ind_p3, "c");
  const auto r = collapse_search(lk_c);
  ASSERT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(replay(ind_p3, lifted_collapse(ind_p3, "c", r.sequence)), cx({"a", "b", "c"}, {{"a"}, {"b"}}));

  const Complex tri = Complex::simplex(GroundSet({"a", "b", "c"}));
  const auto t = collapse_search(link(tri, "a"));
  ASSERT_EQ(t.verdict, Verdict::yes);
  const auto lt = lifted_collapse(tri, "a", t.sequence);
  EXPECT_EQ(lt.steps.size(), t.sequence.steps.size());
  EXPECT_EQ(replay(tri, lt), cx({"a", "b", "c"}, {{"b", "c"}}));
}

TEST(LiftedCollapse, InvalidLinkSequenceIsContractViolation) {
  const Complex edge = cx({"a", "v"}, {{"a", "v"}});
  const Complex lk = link(edge, "a");
  EXPECT_THROW(lifted_collapse(edge, "a", {}), ContractViolation);
  EXPECT_THROW(lifted_collapse(edge, "a", {{pair(lk, {}, {})}}), ContractViolation);
}

TEST(LiftedCollapse, ReplaysToDeletionWheneverLinkCollapses) {
  std::vector<Complex> cs = gen::random_complexes(120, 6, 11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& c : gen::all_complexes(n)) cs.push_back(std::move(c));
  }
  std::size_t lifted = 0;
  for (const Complex& c : cs) {
    for (std::size_t a = 0; a < c.ground().size(); ++a) {
      const auto r = collapse_search(link_at(c, a));
      if (r.verdict != Verdict::yes) continue;
      const auto seq = lifted_collapse(c, a, r.sequence);
      const Complex end = replay(c, seq);
      // The end state is dl_a(c) seen on the original ground.
      std::vector<Face> gens;
      const Complex del = deletion_at(c, a);
      for (Face f : del.facets()) gens.push_back(f.insert_index(a));
      EXPECT_EQ(end, Complex(c.ground(), gens));
      ++lifted;
    }
  }
  EXPECT_GT(lifted, 200u);
}

TEST(SuspensionTransport, Examples) {
  const Complex point = cx({"v"}, {{"v"}});
  auto s = suspension_transport(point, collapse_search(point), "x", "y");
  EXPECT_EQ(s.result.verdict, Verdict::yes);
  EXPECT_TRUE(replays_to_void(s.suspension, s.result.sequence));

  const Complex edge = cx({"a", "b"}, {{"a", "b"}});
  s = suspension_transport(edge, collapse_search(edge), "x", "y");
  EXPECT_TRUE(replays_to_void(s.suspension, s.result.sequence));

  const Complex c5 = cx({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
  const Complex cone = cone_over(c5, "p");
  s = suspension_transport(cone, collapse_search(cone), "x", "y");
  EXPECT_TRUE(replays_to_void(s.suspension, s.result.sequence));

  const Complex s0 = cx({"a", "b"}, {{"a"}, {"b"}});
  EXPECT_THROW(suspension_transport(s0, collapse_search(s0), "x", "y"), ContractViolation);
}

TEST(Transport, RenamesAcrossGroundOrders) {
  const Complex edge = cx({"a", "b"}, {{"a", "b"}});
  const auto r = collapse_search(edge);
  const Complex flipped = reorder_ground(edge, GroundSet({"b", "a"}));
  EXPECT_TRUE(replays_to_void(flipped, transport(r.sequence, edge.ground(), flipped.ground())));
}
