#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace otype;
using otype::testing::check_expected_delta;
using otype::testing::pres;
using otype::testing::pw;
using otype::testing::two;

TEST(Families, TorusKnotInstances) {
  auto b3 = torus_knot(2, 1, 1);
  EXPECT_EQ(b3.presentation, two("b a^2 b"));
  EXPECT_EQ(b3.expected.delta, pw(b3.presentation, "a^3"));
  EXPECT_EQ(b3.expected.delta_kind, DeltaKind::Central);
  auto klein = torus_knot(1, 1, 1);
  EXPECT_EQ(klein.presentation, two("b a b"));
  EXPECT_EQ(klein.expected.delta, pw(klein.presentation, "a^2"));
  auto qc = torus_knot(2, 1, 2);
  EXPECT_EQ(qc.presentation, two("b a^2 b^2"));
  EXPECT_EQ(qc.expected.delta_kind, DeltaKind::QuasiCentral);
  ASSERT_EQ(qc.expected.phi.size(), 2u);
  EXPECT_EQ(qc.expected.phi[1].second, pw(qc.presentation, "b^2 a b^2"));
  EXPECT_THROW((void)torus_knot(0, 1, 1), FamilyParameterError);
}

TEST(Families, TorusKnotWithUnitExponentIsPalindromic) {
  for (long p = 1; p <= 4; ++p)
    for (long q = 1; q <= 4; ++q) {
      auto f = torus_knot(p, q, 1);
      EXPECT_EQ(opposite(f.presentation), f.presentation) << f.name;
    }
}

TEST(Families, ChainFamilyDegeneratesToTorusKnot) {
  for (long p = 1; p <= 3; ++p)
    for (long q = 1; q <= 3; ++q) EXPECT_EQ(chain_family(2, {p}, {q}).presentation, torus_knot(p, q, 1).presentation);
}

TEST(Families, ChainFamilyWithEqualParameters) {
  for (long p = 1; p <= 3; ++p) {
    auto f = chain_family(3, {p, p}, {p, p});
    const auto& P = f.presentation;
    const PositiveWord A = pw(P, "a"), B = pw(P, "b"), C = pw(P, "c");
    const PositiveWord apb = A.power(p) * B;
    std::vector<Relation> expected{{A, B * apb.power(p)}, {B, C * (apb.power(p) * A.power(p) * C).power(p)}};
    EXPECT_EQ(P.relations(), expected);
  }
}

TEST(Families, ChainWordLengthsFollowTheRecursion) {
  std::vector<long> m{2, 1, 3};
  auto w = chain_family_words(4, m);
  ASSERT_EQ(w.size(), 4u);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t len = 1;
    for (std::size_t k = 0; k < i; ++k) len += static_cast<std::size_t>(m[k]) * w[k].size();
    EXPECT_EQ(w[i].size(), len);
    EXPECT_EQ(w[i].back(), Letter{static_cast<std::uint16_t>(i)});
  }
}

TEST(Families, ChainExponentIsLeastValid) {
  EXPECT_EQ(chain_family_exponent({1}, {1}), 2);
  EXPECT_EQ(chain_family_exponent({1, 1}, {1, 1}), 2);
  EXPECT_EQ(chain_family_exponent({2, 1}, {1, 1}), 3);
  EXPECT_EQ(chain_family_exponent({1, 3}, {1, 1}), 4);
  EXPECT_THROW((void)chain_family(3, {1}, {1, 1}), FamilyParameterError);
}

TEST(Families, ThreeGenerators) {
  auto no = three_gen(2, 1, 1, 1);
  EXPECT_EQ(no.expected.right, Status::NotRightOType);
  auto yes = three_gen(1, 1, 2, 1);
  EXPECT_EQ(yes.expected.right, Status::RightOType);
  EXPECT_EQ(yes.expected.left, Status::RightOType);
  auto flat = three_gen(2, 0, 1, 1);
  EXPECT_EQ(flat.expected.right, Status::RightOType);
  EXPECT_EQ(flat.presentation.relations()[0].rhs, pw(flat.presentation, "b"));
}

TEST(Families, SplitFamily) {
  auto f = split_family(0, 0, 0);
  EXPECT_EQ(f.presentation, pres("gens: a b c\nrel: a = b a a c\nrel: b = c b a\n"));
  auto g = split_family(0, 1, 1);
  EXPECT_EQ(g.expected.delta, pw(g.presentation, "a^2 b").power(6));
  auto open = split_family(0, 0, 2);
  EXPECT_FALSE(open.expected.right);
  EXPECT_FALSE(open.expected.left);
}

TEST(Families, Cycling) {
  auto f = cycling(4);
  ASSERT_EQ(f.presentation.relations().size(), 3u);
  EXPECT_EQ(f.presentation.relations()[0].rhs, pw(f.presentation, "b c d"));
  EXPECT_EQ(f.presentation.relations()[2].rhs, pw(f.presentation, "d a b"));
  EXPECT_EQ(f.expected.ceiling_period, pw(f.presentation, "c b a"));
  EXPECT_THROW((void)cycling(2), FamilyParameterError);
}

TEST(Families, CatalogIsWellFormed) {
  auto all = fixture_catalog();
  EXPECT_GE(all.size(), 40u);
  std::set<std::string> names;
  for (const auto& f : all) {
    EXPECT_TRUE(names.insert(f.name).second) << "duplicate " << f.name;
    EXPECT_EQ(detect_right_triangular(f.presentation).has_value(), f.expected.right_triangular) << f.name;
    if (f.expected.cycle) {
      EXPECT_FALSE(f.expected.cycle->u.empty()) << f.name;
    }
  }
}

TEST(Families, ExpectedDeltasHold) {
  for (const auto& f : fixture_catalog()) {
    if (f.expected.delta_kind == DeltaKind::Dominating) continue;
    EXPECT_EQ(check_expected_delta(f), "") << f.name;
  }
  for (long p = 1; p <= 3; ++p)
    for (long q = 1; q <= 3; ++q)
      for (long r = 1; r <= 2; ++r) {
        auto f = torus_knot(p, q, r);
        EXPECT_EQ(check_expected_delta(f), "") << f.name;
      }
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(check_expected_delta(cycling(n)), "");
}

TEST(Families, WrongDeltasAreCaught) {
  auto klein = torus_knot(1, 1, 1);
  klein.expected.delta = pw(klein.presentation, "a");
  EXPECT_NE(check_expected_delta(klein), "");
  auto qc = torus_knot(2, 1, 2);
  qc.expected.delta_kind = DeltaKind::Central;
  EXPECT_NE(check_expected_delta(qc), "");
  auto phi = torus_knot(2, 1, 2);
  phi.expected.phi[1].second = pw(phi.presentation, "b a b");
  EXPECT_NE(check_expected_delta(phi), "");
}

TEST(Families, SmallFixturesMatchTheirVerdicts) {
  for (auto f : {torus_knot(1, 1, 1), torus_knot(2, 1, 1), torus_knot(2, 1, 2), three_gen(2, 1, 1, 1),
                 three_gen(1, 1, 2, 1), cycling(3)}) {
    auto v = analyze_otype(f.presentation);
    if (f.expected.right) {
      EXPECT_EQ(v.right.status, *f.expected.right) << f.name;
    }
    if (f.expected.left) {
      EXPECT_EQ(v.left.status, *f.expected.left) << f.name;
    }
  }
}
