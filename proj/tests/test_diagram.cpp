#include <gtest/gtest.h>

#include <random>

#include "fc/boundary.hpp"
#include "fc/chains.hpp"
#include "fc/diagram.hpp"
#include "fc/paths.hpp"

using namespace fc;

namespace {

LaurentElement E(int i, int s, int m, int r, Boundary b = Boundary::none) { return element(generator_E(i, s, m, r, b)); }

}  // namespace

TEST(Generators, CapCup) {
  const Diagram d = generator_E(1, 1, 2, 1, Boundary::none);
  EXPECT_EQ(d.link(0), 1);
  EXPECT_EQ(d.link(2), 3);
  EXPECT_EQ(d.num_through(), 0);
}

TEST(Generators, RightWallStubs) {
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= r; ++s) {
      const Diagram d = generator_E(2, s, 2, r, Boundary::right);
      int bottom_odd = 0, top_even = 0;
      for (int v = 0; v < d.num_nodes(); ++v) {
        const int l = d.link(v);
        if (!is_stub(l)) continue;
        EXPECT_FALSE(stub_left(l));
        if (!d.is_top(v) && stub_odd(l)) ++bottom_odd;
        if (d.is_top(v) && !stub_odd(l)) ++top_even;
      }
      EXPECT_EQ(bottom_odd, s);
      EXPECT_EQ(top_even, s);
      EXPECT_EQ(d.num_stubs(), 2 * s);
    }
}

TEST(Generators, LeftWall) {
  const Diagram d = generator_E(0, 1, 2, 2, Boundary::both);
  int left = 0;
  for (int v = 0; v < d.num_nodes(); ++v) left += is_stub(d.link(v)) && stub_left(d.link(v));
  EXPECT_EQ(left, 2);
  EXPECT_EQ(d.num_through(), 3);
}

TEST(Generators, IndexErrors) {
  EXPECT_THROW(generator_E(2, 1, 2, 1, Boundary::none), DomainError);
  EXPECT_THROW(generator_E(0, 1, 2, 1, Boundary::right), DomainError);
  EXPECT_THROW(generator_E(1, 3, 2, 2, Boundary::none), DomainError);
}

TEST(Multiply, RelationExample) {
  EXPECT_EQ(word_product("E2^2,E3^1,E1^2,E2^2", 4, 2, Boundary::none),
            word_product("E2^2,E3^2,E1^1,E2^2", 4, 2, Boundary::none));
}

TEST(Multiply, BoundaryLoop) {
  const auto lhs = word_product("E1^2,E2^2,E1^2", 2, 2, Boundary::right);
  EXPECT_EQ(lhs, E(1, 2, 2, 2, Boundary::right).scaled(tau_odd() * tau_odd()));
}

TEST(Multiply, Identity) {
  const auto w = laurent_weights();
  for (const auto& d : enumerate_basis(3, 2, Boundary::right)) {
    const auto x = element(d), one = element(Diagram::identity(3, 2, Boundary::right));
    EXPECT_EQ(one.times(x, w), x);
    EXPECT_EQ(x.times(one, w), x);
  }
}

TEST(Multiply, Associative) {
  const auto w = laurent_weights();
  std::mt19937 g(42);
  int checked = 0;
  for (int r = 1; r <= 2; ++r)
    for (int m = 1; m <= 3; ++m)
      for (Boundary b : {Boundary::none, Boundary::right, Boundary::both}) {
        const auto basis = enumerate_basis(m, r, b);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int k = 0; k < 15; ++k) {
          const auto x = element(basis[pick(g)]), y = element(basis[pick(g)]), z = element(basis[pick(g)]);
          EXPECT_EQ(x.times(y, w).times(z, w), x.times(y.times(z, w), w));
          ++checked;
        }
      }
  EXPECT_GE(checked, 200);
}

TEST(Relations, AllFamilies) {
  for (auto [m, r] : {std::pair{3, 1}, {4, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    const auto rep = verify_relations(m, r);
    EXPECT_TRUE(rep.ok()) << m << "," << r << ": " << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_GT(rep.checked, 0);
  }
}

TEST(Relations, SquareAndCommute) {
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) {
      const auto x = E(1, s, 4, 2).times(E(1, t, 4, 2), laurent_weights());
      EXPECT_EQ(x, E(1, std::max(s, t), 4, 2).scaled(tau().pow(std::min(s, t))));
      EXPECT_EQ(E(1, s, 4, 2).times(E(3, t, 4, 2), laurent_weights()),
                E(3, t, 4, 2).times(E(1, s, 4, 2), laurent_weights()));
    }
}

TEST(Action, TemperleyLiebOnPaths) {
  const Diagram st = state_from_chord(path_to_matching(expand_word("URU^2R^2")), 6, 1, Boundary::none);
  const auto y = act_on_state(E(2, 1, 6, 1), element(st));
  ASSERT_EQ(y.terms().size(), 1u);
  EXPECT_EQ(matching_to_word(chord_from_state(y.terms().begin()->first)), expand_word("U^2RUR^2"));
  EXPECT_EQ(y.terms().begin()->second, LaurentPoly::constant(1));
}

TEST(Action, LoopOnShortArch) {
  const Diagram st = state_from_chord(path_to_matching("URUR"), 4, 1, Boundary::none);
  EXPECT_EQ(act_on_state(E(1, 1, 4, 1), element(st)), element(st).scaled(tau()));
}

TEST(Action, FussCatalanTransport) {
  const auto st = element(fc_state(RChain::parse("[1/2;1/2]")));
  EXPECT_EQ(act_on_state(E(1, 2, 4, 2), st), element(fc_state(RChain::parse("[12;12]"))));
}

TEST(Dimension, NoBoundary) {
  EXPECT_EQ(dimension(2, 2, Boundary::none), 3);
  EXPECT_EQ(dimension(3, 2, Boundary::none), 12);
  for (int r = 1; r <= 4; ++r)
    for (int m = 1; r * m <= 8; ++m) EXPECT_EQ(dimension(m, r, Boundary::none), fuss_catalan(m, r)) << m << "," << r;
}

TEST(Dimension, RightWall) {
  EXPECT_EQ(dimension(2, 2, Boundary::right), 17);
  for (int r = 1; r <= 2; ++r)
    for (int m = 1; m <= 3; ++m) EXPECT_EQ(dimension(m, r, Boundary::right), count_B(2 * m, r));
}

TEST(Dimension, TwoBoundaryClosureMatchesEnumeration) {
  for (int r = 1; r <= 2; ++r)
    for (int m = 1; m <= 3; ++m)
      EXPECT_EQ(BigInt(closure_basis(m, r, Boundary::both).size()), dimension(m, r, Boundary::both));
}

TEST(Dimension, ThetaModeRequired) { EXPECT_THROW(enumerate_basis(2, 1, Boundary::both, false), DomainError); }

TEST(Counts, VAndGamma) {
  EXPECT_EQ(count_VK(2, 2).V_direct, 9);
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 3; ++n) {
      const auto c = count_VK(n, r);
      EXPECT_EQ(c.V_direct, c.V_weighted);
      EXPECT_EQ(count_gamma(n, r), count_B(n + 1, r));
    }
}

TEST(Counts, KAgreesWithDimensionWhereItHolds) {
  EXPECT_EQ(count_VK(1, 1).K, dimension(1, 1, Boundary::both));
  EXPECT_EQ(count_VK(2, 1).K, dimension(2, 1, Boundary::both));
  EXPECT_EQ(count_VK(1, 2).K, dimension(1, 2, Boundary::both));
}

TEST(Words, Parse) {
  EXPECT_EQ(parse_word("E2^2,E3^1,E1"), (std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {1, 0}}));
  EXPECT_THROW(parse_word("F2"), DomainError);
}
