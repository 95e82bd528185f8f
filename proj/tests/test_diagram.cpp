#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace vtube;

TEST(Parse, Unknot) {
  const GaussCode k = parse("()");
  EXPECT_EQ(k.component_count(), 1);
  EXPECT_EQ(k.crossing_count(), 0);
  EXPECT_TRUE(k.component(0).closed());
}

TEST(Parse, VirtualTrefoil) {
  const GaussCode k = parse("(O1+ O2+ U1+ U2+)");
  EXPECT_EQ(k.component_count(), 1);
  EXPECT_EQ(k.crossing_count(), 2);
  EXPECT_EQ(serialize(k), "(O1+ O2+ U1+ U2+)");
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse("  ( O1+  U1+ )\t[ ]  ( )"), parse("(O1+ U1+) [] ()"));
  EXPECT_EQ(serialize(parse("(O1+ U1+)()")), "(O1+ U1+) ()");
}

TEST(Parse, OpenComponents) {
  const GaussCode k = parse("[U1+] (O1+)");
  EXPECT_EQ(k.open_count(), 1);
  EXPECT_EQ(k.closed_count(), 1);
  EXPECT_FALSE(k.all_closed());
}

TEST(Parse, MismatchedSigns) {
  try {
    parse("(O1+ U1-)");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.crossing(), 1);
    EXPECT_NE(std::string(e.what()).find("crossing 1 has mismatched signs"), std::string::npos);
  }
}

TEST(Parse, SingleOccurrence) {
  try {
    parse("(O1+)");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("crossing 1 appears once"), std::string::npos);
  }
}

TEST(Parse, SameRoleTwice) {
  EXPECT_THROW(parse("(O1+ O1+)"), ValidationError);
  EXPECT_THROW(parse("(U2- U2-)"), ValidationError);
  EXPECT_THROW(parse("(O1+ U1+ O1+)"), ValidationError);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  struct Case {
    const char* text;
    std::size_t position;
  };
  for (const Case& c : {Case{"", 0}, Case{"(O1+", 4}, Case{"(X1+)", 1}, Case{"(O0+)", 2}, Case{"(O1*)", 3}, Case{"(O1+) x", 6}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text;
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
    }
  }
}

TEST(Serialize, RoundTripsCorpus) {
  for (const auto& k : oracle::corpus()) EXPECT_EQ(parse(serialize(k)), k);
}

TEST(Canonical, GoldenRotation) { EXPECT_EQ(serialize(canonical_form(parse("(U1+ O2+ U2+ O1+)"))), "(O1+ U1+ O2+ U2+)"); }

TEST(Canonical, UnknotIsFixed) { EXPECT_EQ(serialize(canonical_form(parse("()"))), "()"); }

TEST(Canonical, LabelsAreConsecutive) {
  for (const auto& k : oracle::corpus()) {
    const GaussCode c = canonical_form(k);
    for (int i = 0; i < c.crossing_count(); ++i) EXPECT_EQ(c.crossings()[static_cast<std::size_t>(i)].label, i + 1);
  }
}

TEST(Canonical, MatchesBruteForceOnCorpus) {
  for (const auto& k : oracle::corpus())
    if (k.component_count() <= 3) EXPECT_EQ(canonical_form(k), oracle::brute_canonical(k)) << serialize(k);
}

namespace {

// Random valid code: crossings with random signs placed at random positions.
GaussCode random_code(std::mt19937& rng, int crossings, int components) {
  std::vector<Component> comps(static_cast<std::size_t>(components));
  for (auto& c : comps) c.kind = rng() % 4 == 0 ? ComponentKind::Open : ComponentKind::Closed;
  auto place = [&](Passage p) {
    auto& c = comps[rng() % comps.size()].passages;
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(rng() % (c.size() + 1)), p);
  };
  for (int i = 1; i <= crossings; ++i) {
    const int s = rng() % 2 ? 1 : -1;
    const int label = 3 * i + static_cast<int>(rng() % 3);
    place({label, Role::Over, s});
    place({label, Role::Under, s});
  }
  return GaussCode(std::move(comps));
}

}  // namespace

TEST(Canonical, MatchesBruteForceOnRandomCodes) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const GaussCode k = random_code(rng, static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3));
    EXPECT_EQ(canonical_form(k), oracle::brute_canonical(k)) << serialize(k);
  }
}

TEST(Canonical, Idempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const GaussCode c = canonical_form(random_code(rng, static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3)));
    EXPECT_EQ(canonical_form(c), c);
    EXPECT_TRUE(is_canonical(c));
  }
}

TEST(Canonical, InvariantUnderSymmetries) {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const GaussCode k = random_code(rng, static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3));
    std::vector<Component> comps = k.components();
    std::shuffle(comps.begin(), comps.end(), rng);
    for (auto& c : comps)
      if (c.closed() && c.size() > 0) std::rotate(c.passages.begin(), c.passages.begin() + static_cast<std::ptrdiff_t>(rng() % static_cast<unsigned>(c.size())), c.passages.end());
    for (auto& c : comps)
      for (auto& p : c.passages) p.crossing = 100 - p.crossing;
    EXPECT_EQ(canonical_form(GaussCode(comps)), canonical_form(k));
  }
}

TEST(Mirror, InvolutionAndWrithe) {
  for (const auto& k : oracle::corpus()) {
    EXPECT_EQ(mirror_vertical(mirror_vertical(k)), k);
    EXPECT_EQ(writhe(mirror_vertical(k)), -writhe(k));
  }
}

TEST(Mirror, SwapsRolesAndSigns) { EXPECT_EQ(serialize(mirror_vertical(parse("(O1+ O2- U1+ U2-)"))), "(U1- U2+ O1- O2+)"); }

TEST(DimensionMeta, RejectsSmallN) {
  EXPECT_THROW(DimensionMeta(1, 1), DomainError);
  EXPECT_THROW(DimensionMeta(2, 3), DomainError);
  EXPECT_NO_THROW(DimensionMeta(2, 4));
}

TEST(Subcode, DropsMixedCrossings) {
  const GaussCode hopf = parse("(O1+ U2+) (U1+ O2+)");
  EXPECT_EQ(serialize(subcode(hopf, {0})), "()");
  EXPECT_EQ(serialize(subcode(hopf, {1, 0})), "(U1+ O2+) (O1+ U2+)");
}

TEST(Catalog, NamesResolve) {
  EXPECT_EQ(resolve("VT"), parse("(O1+ O2+ U1+ U2+)"));
  EXPECT_EQ(resolve("trefoil"), parse("(O1+ U2+ O3+ U1+ O2+ U3+)"));
  EXPECT_EQ(resolve("(O1+ U1+)"), parse("(O1+ U1+)"));
  for (const auto& [name, text] : catalog()) EXPECT_NO_THROW(parse(text)) << name;
}

TEST(Corpus, SizeAndCrossingBound) {
  const auto c = oracle::corpus();
  EXPECT_GE(c.size(), 20U);
  for (const auto& k : c) EXPECT_LE(k.crossing_count(), 8);
}

TEST(Corpus, BraidClosuresArePlanar) {
  int classical = 0;
  for (const auto& k : oracle::corpus()) classical += oracle::is_classical(k);
  EXPECT_GE(classical, 15);
  EXPECT_FALSE(oracle::is_classical(parse("(O1+ O2+ U1+ U2+)")));
  EXPECT_TRUE(oracle::is_classical(parse("(O1+ U2+ O3+ U1+ O2+ U3+)")));
}
