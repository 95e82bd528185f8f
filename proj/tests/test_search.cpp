#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace vtube;

namespace {
const GaussCode kVT = parse("(O1+ O2+ U1+ U2+)");
}

TEST(Budget, RejectsInvalid) {
  EXPECT_THROW(SearchBudget(-1, 10), DomainError);
  EXPECT_THROW(SearchBudget(3, 0), DomainError);
}

TEST(Search, IdenticalCodesNeedNoMoves) {
  const auto r = search_equivalence(GaussCode::unknot(), GaussCode::unknot(), MoveSet::virtual_moves(), SearchBudget(0, 10));
  EXPECT_EQ(r.verdict, Verdict::Found);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(r.certificate->path.empty());
  EXPECT_TRUE(replays(*r.certificate));
}

TEST(Search, RelabeledCodesAreEqual) {
  const auto r = search_equivalence(parse("(U1+ O2+ U2+ O1+)"), parse("(O7+ U7+ O3+ U3+)"), MoveSet::virtual_moves(), SearchBudget(0, 10));
  EXPECT_EQ(r.verdict, Verdict::Found);
}

TEST(Search, VirtualTrefoilIsWeldedTrivial) {
  const auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::welded(), SearchBudget(10, 1000000));
  ASSERT_EQ(r.verdict, Verdict::Found);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(replays(*r.certificate));
  EXPECT_EQ(r.certificate->path.size(), 3U);
  std::multiset<MoveFamily> families;
  for (const auto& s : r.certificate->path) families.insert(family_of(s.move.kind));
  EXPECT_EQ(families.count(MoveFamily::OC), 1U);
  EXPECT_EQ(families.count(MoveFamily::R1), 2U);
}

TEST(Search, VirtualTrefoilIsVirtuallyKnotted) {
  const auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::virtual_moves(), SearchBudget(10, 1000000));
  EXPECT_EQ(r.verdict, Verdict::DistinctByInvariant);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->name, "f-polynomial");
  EXPECT_NE(r.witness->source_value, r.witness->target_value);
}

TEST(Search, ExhaustsWithoutInvariantHelp) {
  SearchOptions opts;
  opts.check_invariants = false;
  const auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::virtual_moves(), SearchBudget(2, 100000), opts);
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_FALSE(r.certificate);
}

TEST(Search, NodeBudgetIsHonoured) {
  SearchOptions opts;
  opts.check_invariants = false;
  const auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::virtual_moves(), SearchBudget(10, 50), opts);
  EXPECT_EQ(r.verdict, Verdict::Exhausted);
  EXPECT_LE(r.nodes_visited, 50U);
}

TEST(Search, KinkedTrefoilReducesToTrefoil) {
  const GaussCode t = parse("(O1+ U2+ O3+ U1+ O2+ U3+)");
  const GaussCode kinked = parse("(O1+ U2+ O3+ U1+ O4- U4- O2+ U3+)");
  const auto r = search_equivalence(kinked, t, MoveSet::virtual_moves(), SearchBudget(4, 100000));
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_TRUE(replays(*r.certificate));
  EXPECT_EQ(r.certificate->path.size(), 1U);
}

TEST(Search, R2BigonFoundFromBothSides) {
  const GaussCode bigon = parse("(O1+ O2- U1+ U2-)");
  for (const auto& [a, b] : {std::pair{bigon, GaussCode::unknot()}, std::pair{GaussCode::unknot(), bigon}}) {
    const auto r = search_equivalence(a, b, MoveSet::virtual_moves(), SearchBudget(3, 100000));
    ASSERT_EQ(r.verdict, Verdict::Found);
    EXPECT_TRUE(replays(*r.certificate));
    EXPECT_EQ(r.certificate->path.size(), 1U);
  }
}

TEST(Search, ParallelExpansionIsDeterministic) {
  SearchOptions serial, parallel;
  parallel.threads = 4;
  const auto a = search_equivalence(kVT, GaussCode::unknot(), MoveSet::welded(), SearchBudget(10, 1000000), serial);
  const auto b = search_equivalence(kVT, GaussCode::unknot(), MoveSet::welded(), SearchBudget(10, 1000000), parallel);
  ASSERT_TRUE(a.certificate && b.certificate);
  EXPECT_EQ(a.nodes_visited, b.nodes_visited);
  ASSERT_EQ(a.certificate->path.size(), b.certificate->path.size());
  for (std::size_t i = 0; i < a.certificate->path.size(); ++i) {
    EXPECT_EQ(a.certificate->path[i].move, b.certificate->path[i].move);
    EXPECT_EQ(a.certificate->path[i].result, b.certificate->path[i].result);
  }
}

TEST(Certificate, TamperedPathFailsReplay) {
  auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::welded(), SearchBudget(10, 1000000));
  ASSERT_TRUE(r.certificate);
  auto broken = *r.certificate;
  broken.path.pop_back();
  EXPECT_FALSE(replays(broken));
  auto wrong = *r.certificate;
  wrong.path.front().move.locus.front().position += 1;
  EXPECT_FALSE(replays(wrong));
}

TEST(Certificate, JsonRoundTrip) {
  const auto r = search_equivalence(kVT, GaussCode::unknot(), MoveSet::welded(), SearchBudget(10, 1000000));
  ASSERT_TRUE(r.certificate);
  const json j = *r.certificate;
  const auto back = j.get<EquivalenceCertificate>();
  EXPECT_TRUE(replays(back));
  EXPECT_EQ(json(back), j);
}

TEST(Orbit, DepthZeroIsTheStart) {
  const auto o = orbit(kVT, MoveSet::welded(), SearchBudget(0, 10));
  ASSERT_EQ(o.size(), 1U);
  EXPECT_EQ(*o.begin(), canonical_form(kVT));
}

TEST(Orbit, WeldedOrbitReachesUnknot) {
  const auto o = orbit(kVT, MoveSet{MoveFamily::OC, MoveFamily::R1}, SearchBudget(3, 100000));
  EXPECT_TRUE(o.count(GaussCode::unknot()));
}

TEST(Orbit, NodeCap) { EXPECT_LE(orbit(GaussCode::unknot(), MoveSet::virtual_moves(), SearchBudget(5, 40)).size(), 40U); }

TEST(Linkoid, UnderEndSlidesOff) {
  const auto r = search_equivalence(parse("[U1+] (O1+)"), parse("[] ()"), MoveSet{MoveFamily::EndUnder}, SearchBudget(2, 1000));
  ASSERT_EQ(r.verdict, Verdict::Found);
  EXPECT_EQ(r.certificate->path.size(), 1U);
  EXPECT_EQ(r.certificate->path[0].move.kind, MoveKind::End_remove);
}

TEST(Linkoid, OverEndIsSeparatedByColorings) {
  const auto r = search_equivalence(parse("[O1+] (U1+)"), parse("[] ()"), MoveSet::linkoid(), SearchBudget(4, 100000));
  EXPECT_EQ(r.verdict, Verdict::DistinctByInvariant);
}
