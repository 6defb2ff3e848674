#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "garside/garside.hpp"
#include "oracles.hpp"

using namespace garside;
using fixtures::braid;
using fixtures::factors_of;

namespace {

Braid ussa(int i, int j) { return Braid::from_factors(4, 0, factors_of(fixtures::kUssA[i - 1][j - 1], 4)); }

void expect_witness(const ConjugacyResult& r, const Braid& x, const Braid& y) {
  ASSERT_TRUE(r.conjugate);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->source, x);
  EXPECT_EQ(r.witness->target, y);
  EXPECT_EQ(r.witness->conjugator.inverse() * x * r.witness->conjugator, y);
}

}  // namespace

TEST(Solve, SelfConjugate) {
  for (const auto* f : {&fixtures::kA, &fixtures::kB, &fixtures::kC, &fixtures::kD, &fixtures::kU}) {
    Braid x = braid(*f);
    expect_witness(solve(x, x), x, x);
  }
}

TEST(Solve, WithinExampleA) {
  expect_witness(solve(ussa(1, 1), ussa(2, 2)), ussa(1, 1), ussa(2, 2));
  Braid x = parse_braid("1 2 3 2 2 1 3 1 3", 4);
  Braid y = parse_braid("1 3 2 1 2 1 3 1 3", 4);
  expect_witness(solve(x, y), x, y);
}

TEST(Solve, NonConjugate) {
  ConjugacyResult r = solve(braid(fixtures::kA), fixtures::delta_n(4));
  EXPECT_FALSE(r.conjugate);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.basis, ConjugacyResult::Basis::invariants_differ);
  Braid x = braid(fixtures::kA);
  EXPECT_FALSE(solve(x, x * Braid::atom(4, 1)).conjugate);
}

TEST(Solve, TauImage) {
  std::mt19937 rng(51);
  for (int k = 0; k < 20; ++k) {
    Braid x = oracle::random_braid(rng, 4 + k % 2, 4);
    expect_witness(solve(x, x.tau_power(1)), x, x.tau_power(1));
  }
}

TEST(Solve, StrandMismatch) { EXPECT_THROW(solve(Braid::identity(3), Braid::identity(4)), std::invalid_argument); }

TEST(Solve, AgreesWithFullGraph) {
  std::mt19937 rng(52);
  for (int k = 0; k < 100; ++k) {
    int n = 3 + k % 4;
    Braid x = oracle::random_braid(rng, n, 4);
    Braid c = oracle::from_letters(n, oracle::random_letters(rng, n, 8));
    Braid y = c.inverse() * x * c;
    ConjugacyResult a = solve(x, y), b = solve_full_uss(x, y);
    expect_witness(a, x, y);
    expect_witness(b, x, y);
  }
  for (int k = 0; k < 100; ++k) {
    int n = 3 + k % 4;
    Braid x = oracle::random_braid(rng, n, 4);
    Braid y = oracle::random_braid(rng, n, 4);
    ConjugacyResult a = solve(x, y), b = solve_full_uss(x, y);
    EXPECT_EQ(a.conjugate, b.conjugate) << to_string(x) << " vs " << to_string(y);
    if (a.conjugate) expect_witness(a, x, y);
    if (b.conjugate) expect_witness(b, x, y);
    if (!a.conjugate)
      EXPECT_TRUE(a.basis == ConjugacyResult::Basis::invariants_differ ||
                  a.basis == ConjugacyResult::Basis::components_disjoint);
  }
}

TEST(Solve, Deterministic) {
  Braid x = braid(fixtures::kB);
  Braid y = parse_braid("3 1 -2", 6) * x * parse_braid("3 1 -2", 6).inverse();
  ConjugacyResult a = solve(x, y), b = solve(x, y);
  ASSERT_TRUE(a.conjugate && b.conjugate);
  EXPECT_EQ(a.witness->conjugator, b.witness->conjugator);
}

TEST(Oracle, AllSimpleElements) {
  EXPECT_EQ(all_simple_elements(4).size(), 24u);
  EXPECT_TRUE(all_simple_elements(4).front().is_identity());
}

TEST(Oracle, SuperSummitSizes) {
  auto a = brute_force_sss(braid(fixtures::kA));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(oracle::brute_uss(braid(fixtures::kA)).size(), 6u);
  EXPECT_EQ(oracle::brute_uss(braid(fixtures::kD)).size(), 2u);
}

TEST(Oracle, Decisions) {
  Braid x = braid(fixtures::kA);
  auto r = brute_force_conjugate(x, ussa(2, 2));
  ASSERT_TRUE(r.has_value());
  expect_witness(*r, x, ussa(2, 2));
  auto n = brute_force_conjugate(x, x * Braid::atom(4, 1));
  ASSERT_TRUE(n.has_value());
  EXPECT_FALSE(n->conjugate);
}

TEST(Oracle, BudgetIsInconclusive) {
  Braid x = braid(fixtures::kC);
  UssGraph g = build_graph(x);
  int inconclusive = 0;
  for (const auto& y : g.vertices) {
    if (!brute_force_conjugate(x, y, 2)) ++inconclusive;
    auto full = brute_force_conjugate(x, y);
    ASSERT_TRUE(full.has_value());
    EXPECT_TRUE(full->conjugate);
  }
  EXPECT_GT(inconclusive, 0);
}
