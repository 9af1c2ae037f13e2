#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "fc/chains.hpp"
#include "fc/chords.hpp"
#include "oracle.hpp"

using namespace fc;

namespace {

RChain C(const char* s) { return RChain::parse(s); }
ChainSum one(const RChain& c) { return ChainSum::single(c, LaurentPoly::constant(1)); }

long brute_chain_count(int n, int r) {
  const auto all = oracle::noncrossing(n);
  long count = 0;
  std::function<void(int, const oracle::Blocks*)> rec = [&](int depth, const oracle::Blocks* prev) {
    if (depth == r) {
      ++count;
      return;
    }
    for (const auto& b : all)
      if (!prev || oracle::refines(*prev, b)) rec(depth + 1, &b);
  };
  rec(0, nullptr);
  return count;
}

}  // namespace

TEST(Chains, TwelveListed) {
  std::set<std::string> got;
  for (const auto& c : enumerate_chains(3, 2)) got.insert(c.to_string());
  const std::set<std::string> want = {"[1/2/3;1/2/3]", "[1/2/3;12/3]", "[1/2/3;13/2]", "[1/2/3;1/23]",
                                      "[1/2/3;123]",   "[12/3;12/3]",  "[12/3;123]",   "[13/2;13/2]",
                                      "[13/2;123]",    "[1/23;1/23]",  "[1/23;123]",   "[123;123]"};
  EXPECT_EQ(got, want);
}

TEST(Chains, CountsMatchBruteForce) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto chains = enumerate_chains(n, r);
      EXPECT_EQ(static_cast<long>(chains.size()), brute_chain_count(n, r));
      EXPECT_EQ(BigInt(chains.size()), fuss_catalan(n, r));
    }
  EXPECT_EQ(enumerate_chains(2, 3).size(), 4u);
}

TEST(Chains, RejectsDecreasing) { EXPECT_THROW(C("[12/3;1/2/3]"), DomainError); }

TEST(Kappa, PaperExamples) {
  EXPECT_EQ(kappa(C("[1/2/3/4;14/23;1234]")).word(), expand_word("URU^2R^2UR^9"));
  EXPECT_EQ(kappa_inv(RDyckPath(expand_word("URU^2R^8"), 3)).to_string(), "[1/2/3;13/2;123]");
  for (int n = 1; n <= 6; ++n) {
    std::string w = "U";
    for (int k = 1; k < n; ++k) w += "UR";
    w += "R";
    EXPECT_EQ(kappa(RChain::constant(NcPartition::one_block(n), 1)).word(), w);
  }
}

TEST(Kappa, RoundTrip) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> img;
      for (const auto& c : enumerate_chains(n, r)) {
        const RDyckPath p = kappa(c);
        EXPECT_EQ(kappa_inv(p), c);
        img.insert(p.word());
      }
      EXPECT_EQ(BigInt(img.size()), fuss_catalan(n, r));
    }
}

TEST(ExtendedKreweras, PaperExamples) {
  EXPECT_EQ(extended_kreweras(C("[1/23/4;14/23;1234]")).to_string(), "[1/2/3/4;1/24/3;124/3]");
  EXPECT_EQ(extended_kreweras_inv(C("[1/23/4;1/23/4;14/23;1234]")).to_string(), "[1/2/3/4;13/2/4;134/2;134/2]");
}

TEST(ExtendedKreweras, Laws) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& c : enumerate_chains(n, r)) {
        EXPECT_EQ(extended_kreweras_inv(extended_kreweras(c)), c);
        EXPECT_EQ(extended_kreweras_pow(c, 2 * n), c);
      }
}

TEST(PsiR, FigureFive) {
  const std::vector<Arch> want = {{1, 32},  {2, 31},  {3, 22},  {4, 5},   {6, 19},  {7, 18},  {8, 17},  {9, 16},
                                  {10, 15}, {11, 14}, {12, 13}, {20, 21}, {23, 26}, {24, 25}, {27, 30}, {28, 29}};
  EXPECT_EQ(psi_r(C("[1/23/4;1/23/4;14/23;1234]")).arches(), want);
}

TEST(PsiR, Bijection) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4 && n * r <= 9; ++n) {
      std::set<ChordDiagram> img;
      for (const auto& c : enumerate_chains(n, r)) {
        const ChordDiagram d = psi_r(c);
        EXPECT_TRUE(check_condA(d, r));
        EXPECT_EQ(psi_r_inv(d, r), c);
        img.insert(d);
      }
      EXPECT_EQ(BigInt(img.size()), fuss_catalan(n, r));
    }
}

TEST(Phi, RotationAndTiling) {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : enumerate_chains(n, r)) {
        EXPECT_EQ(phi(c), rotate_sigma_r(psi_r(c), r));
        EXPECT_EQ(phi(c), path_to_matching(tiling_top_path(build_tiling(c))));
        EXPECT_EQ(phi(c), phi_superposed(c));
      }
}

TEST(Tiling, WorkedExample) {
  const auto t = build_tiling(C("[14/23;1234]"));
  EXPECT_EQ(t.anchors.size(), 5u);
  EXPECT_EQ(tiling_top_path(t), "UUUURUUURRRURRRR");
}

TEST(Tiling, EmptyMerge) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      const auto t = build_tiling(RChain::constant(NcPartition::singletons(n), r));
      EXPECT_TRUE(t.anchors.empty());
      EXPECT_EQ(tiling_top_path(t), base_path(n, r));
    }
}

TEST(Tiling, TwelveDistinct) {
  std::set<std::vector<std::pair<int, int>>> tilings;
  for (const auto& c : enumerate_chains(3, 2)) {
    auto a = build_tiling(c).anchors;
    std::sort(a.begin(), a.end());
    tilings.insert(a);
  }
  EXPECT_EQ(tilings.size(), 12u);
  EXPECT_EQ(base_path(3, 2), "UURRUURRUURR");
}

TEST(StructureMaps, XiSigmaRho) {
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n)
      for (const auto& c : enumerate_chains(n, r)) {
        const RDyckPath p = kappa(c);
        RDyckPath x = p;
        for (int k = 0; k <= r; ++k) x = jdt_rotate(x);
        EXPECT_EQ(x, kappa(extended_kreweras_pow(c, 2)));
        EXPECT_EQ(gen_chord_to_path(rotate_tilde(path_to_gen_chord(p), r + 1)), x);
      }
}

TEST(StructureMaps, SigmaKappa) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_ncp(n)) {
      const auto lhs = rotate_sigma(path_to_matching(kappa(RChain::constant(p, 1)).word()));
      EXPECT_EQ(lhs, path_to_matching(kappa(RChain::constant(kreweras(p), 1)).word()));
    }
}

TEST(GeneratorFs, Examples) {
  for (int r = 1; r <= 3; ++r)
    EXPECT_EQ(generator_Fs(1, r, RChain::constant(NcPartition::singletons(2), r)),
              one(RChain::constant(NcPartition::one_block(2), r)));
  EXPECT_EQ(generator_Fs(1, 1, C("[1/2;1/2]")), one(C("[1/2;12]")));
}

TEST(GeneratorFs, IdempotentUpToTau) {
  for (int r = 1; r <= 2; ++r)
    for (int n = 2; n <= 3; ++n)
      for (const auto& c : enumerate_chains(n, r))
        for (int i = 1; i <= 2 * n - 1; ++i) {
          const ChainSum x = generator_Fs(i, r, c);
          EXPECT_EQ(generator_Fs(i, r, x), x.scaled(tau().pow(r)));
        }
}
