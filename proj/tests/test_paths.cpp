#include <gtest/gtest.h>

#include <set>

#include "fc/paths.hpp"
#include "oracle.hpp"

using namespace fc;

TEST(FussCatalan, PaperValues) {
  EXPECT_EQ(fuss_catalan(2, 3), 4);
  const long expected[] = {1, 1, 2, 5, 14, 42};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(fuss_catalan(n, 1), expected[n]);
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(fuss_catalan(0, r), 1);
}

TEST(FussCatalan, MatchesBruteForce) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 5 && r * n <= 10; ++n)
      EXPECT_EQ(fuss_catalan(n, r), static_cast<long>(oracle::dyck_words(n, r).size())) << n << "," << r;
}

TEST(Paths, EnumerateListed) {
  std::set<std::string> got;
  for (const auto& p : enumerate_paths(2, 3)) got.insert(p.word());
  EXPECT_EQ(got, (std::set<std::string>{"URRRURRR", "URRURRRR", "URURRRRR", "UURRRRRR"}));
  ASSERT_EQ(enumerate_paths(1, 2).size(), 1u);
  EXPECT_EQ(enumerate_paths(1, 2).front().word(), "URR");
}

TEST(Paths, EnumerateMatchesOracle) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> got, want;
      for (const auto& p : enumerate_paths(n, r)) got.insert(p.word());
      for (const auto& w : oracle::dyck_words(n, r)) want.insert(w);
      EXPECT_EQ(got, want);
    }
  EXPECT_EQ(enumerate_paths(3, 2).size(), 12u);
}

TEST(Paths, Validation) {
  EXPECT_THROW(RDyckPath("RU", 1), DomainError);
  EXPECT_THROW(RDyckPath("URRR", 2), DomainError);
  EXPECT_EQ(expand_word("UR^3"), "URRR");
  EXPECT_EQ(expand_word("U^2R^4"), "UURRRR");
}

TEST(Tableau, PaperExamples) {
  const auto t = path_to_tableau(RDyckPath("URURRR", 2));
  EXPECT_EQ(t.first_row, (std::vector<int>{1, 3}));
  EXPECT_EQ(t.second_row, (std::vector<int>{2, 4, 5, 6}));
  const auto u = path_to_tableau(RDyckPath(expand_word("U^2R^4"), 2));
  EXPECT_EQ(u.first_row, (std::vector<int>{1, 2}));
  EXPECT_EQ(u.second_row, (std::vector<int>{3, 4, 5, 6}));
}

TEST(Tableau, RoundTrip) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : enumerate_paths(n, r)) EXPECT_EQ(tableau_to_path(path_to_tableau(p)), p);
}

TEST(Jdt, PaperExample) { EXPECT_EQ(jdt_rotate(RDyckPath("URURRR", 2)).word(), "URRURR"); }

TEST(Jdt, SizeOne) {
  for (int r = 1; r <= 4; ++r) {
    const RDyckPath p("U" + std::string(r, 'R'), r);
    EXPECT_EQ(jdt_rotate(p), p);
  }
}

TEST(Jdt, OrbitCloses) {
  RDyckPath p("URURRR", 2);
  for (int k = 0; k < 6; ++k) p = jdt_rotate(p);
  EXPECT_EQ(p.word(), "URURRR");
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& x : enumerate_paths(n, r)) {
        RDyckPath y = x;
        for (int k = 0; k < (r + 1) * n; ++k) y = jdt_rotate(y);
        EXPECT_EQ(y, x);
      }
}

TEST(Jdt, Bijective) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> img;
      const auto all = enumerate_paths(n, r);
      for (const auto& p : all) img.insert(jdt_rotate(p).word());
      EXPECT_EQ(img.size(), all.size());
    }
}
