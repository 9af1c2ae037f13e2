#include <gtest/gtest.h>

#include <set>

#include "fc/chords.hpp"
#include "fc/noncrossing.hpp"
#include "oracle.hpp"

using namespace fc;

namespace {

NcPartition P(const char* s, int n = 0) { return NcPartition::parse(s, n); }
NcSum one(const NcPartition& p) { return NcSum::single(p, LaurentPoly::constant(1)); }

}  // namespace

TEST(Ncp, ParseAndPrint) {
  EXPECT_EQ(P("136/2/4/5/78").to_string(), "136/2/4/5/78");
  EXPECT_EQ(P("2/31").to_string(), "13/2");
  EXPECT_EQ(P("1,10/2/3/4/5/6/7/8/9").to_string(), "1,10/2/3/4/5/6/7/8/9");
  EXPECT_THROW(P("13/24"), DomainError);
  EXPECT_THROW(P("12/2"), DomainError);
  EXPECT_EQ(P("1/2", 2).n(), 2);
  EXPECT_THROW(P("1/2", 3), DomainError);
}

TEST(Ncp, EnumerateSmall) {
  std::set<std::string> got;
  for (const auto& p : enumerate_ncp(3)) got.insert(p.to_string());
  EXPECT_EQ(got, (std::set<std::string>{"123", "12/3", "13/2", "1/23", "1/2/3"}));
  ASSERT_EQ(enumerate_ncp(1).size(), 1u);
}

TEST(Ncp, EnumerateMatchesOracle) {
  for (int n = 1; n <= 7; ++n) {
    std::set<oracle::Blocks> got, want;
    for (const auto& p : enumerate_ncp(n)) got.insert(oracle::canonical(p.blocks()));
    for (const auto& b : oracle::noncrossing(n)) want.insert(b);
    EXPECT_EQ(got, want) << n;
    EXPECT_EQ(BigInt(got.size()), catalan(n));
  }
}

TEST(Poset, Examples) {
  EXPECT_EQ(P("134/2/56").rank(), 3);
  EXPECT_TRUE(covers(P("1/2/3"), P("13/2")));
  EXPECT_TRUE(leq(P("1/2/3/4"), P("14/23")));
  EXPECT_FALSE(covers(P("1/2/3/4"), P("14/23")));
}

TEST(Poset, LeqIsRefinement) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_ncp(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        EXPECT_EQ(leq(a, b), oracle::refines(a.blocks(), b.blocks()));
        EXPECT_EQ(covers(a, b), leq(a, b) && b.rank() == a.rank() + 1);
      }
  }
}

TEST(Kreweras, PaperExamples) {
  EXPECT_EQ(kreweras(P("136/2/4/5/78")).to_string(), "17/23/456/8");
  EXPECT_EQ(kreweras(P("12/35/4/69/78")).to_string(), "136/2/45/79/8");
}

TEST(Kreweras, OracleReproducesPaper) {
  EXPECT_EQ(oracle::kreweras(P("136/2/4/5/78").blocks(), 8), P("17/23/456/8").blocks());
}

TEST(Kreweras, MatchesOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ncp(n)) EXPECT_EQ(kreweras(p).blocks(), oracle::kreweras(p.blocks(), n));
}

TEST(Kreweras, SquareIsRotation) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ncp(n)) {
      EXPECT_EQ(kreweras_pow(p, 2), p.shifted(1));
      EXPECT_EQ(kreweras_pow(p, 2 * n), p);
      EXPECT_EQ(kreweras_inv(kreweras(p)), p);
      EXPECT_EQ(kreweras(p).rank(), n - 1 - p.rank());
    }
}

TEST(Kreweras, ReversesCovers) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_ncp(n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (covers(a, b)) EXPECT_TRUE(covers(kreweras(b), kreweras(a)));
  }
}

TEST(Psi, PaperExample) { EXPECT_EQ(matching_to_word(psi(P("12/3/4"))), "URUURURR"); }

TEST(Psi, Singletons) {
  // a singleton b joins 2b-1 to the point just before it, cyclically
  EXPECT_EQ(psi(NcPartition::singletons(3)).arches(), (std::vector<Arch>{{1, 6}, {2, 3}, {4, 5}}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<Arch> want;
    for (int k = 1; k <= n; ++k) want.push_back({2 * k - 1, 2 * k});
    EXPECT_EQ(psi(NcPartition::one_block(n)).arches(), want);
  }
}

TEST(Psi, BijectionOntoParityMatchings) {
  for (int n = 1; n <= 6; ++n) {
    std::set<ChordDiagram> img;
    for (const auto& p : enumerate_ncp(n)) {
      const ChordDiagram c = psi(p);
      EXPECT_TRUE(check_condA(c, 1));
      EXPECT_EQ(psi_inv(c), p);
      img.insert(c);
    }
    EXPECT_EQ(BigInt(img.size()), catalan(n));
  }
}

TEST(Psi, IntertwinesRotation) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_ncp(n)) EXPECT_EQ(psi(kreweras(p)), rotate_sigma(psi(p), 1));
}

TEST(GeneratorF, PaperExamples) {
  const NcPartition p = P("13/2/456/78");
  for (int k : {4, 5, 7}) EXPECT_EQ(small_f(k, p), NcSum::single(p, tau())) << k;
  EXPECT_EQ(small_f(1, p), one(P("123/456/78")));
  EXPECT_EQ(generator_F(5, P("1/2/3")), one(P("13/2")));
}

TEST(GeneratorF, TemperleyLiebRelations) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_ncp(n)) {
      const NcSum x = one(p);
      for (int i = 1; i <= 2 * n - 1; ++i) {
        const NcSum fi = generator_F(i, x);
        EXPECT_EQ(generator_F(i, fi), fi.scaled(tau()));
        if (i + 1 <= 2 * n - 1) {
          EXPECT_EQ(generator_F(i, generator_F(i + 1, fi)), fi);
          const NcSum fj = generator_F(i + 1, x);
          EXPECT_EQ(generator_F(i + 1, generator_F(i, fj)), fj);
        }
        for (int j = i + 2; j <= 2 * n - 1; ++j) EXPECT_EQ(generator_F(i, generator_F(j, x)), generator_F(j, fi));
      }
    }
}
