#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "garside/garside.hpp"
#include "oracles.hpp"

using namespace garside;

TEST(Braid, ExampleANormalForm) {
  Braid a = parse_braid("1 2 3 2 2 1 3 1 3", 4);
  EXPECT_EQ(to_string(a), "D^0 . 1 2 3 2 . 2 1 3 . 1 3");
  EXPECT_EQ(a.inf(), 0);
  EXPECT_EQ(a.sup(), 3);
  EXPECT_EQ(a, fixtures::braid(fixtures::kA));
}

TEST(Braid, NormalFormIsLeftWeightedAndProper) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 4;
    Braid x = oracle::random_braid(rng, n, 6);
    const auto& f = x.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_FALSE(f[i].is_identity());
      EXPECT_FALSE(f[i].is_delta());
      if (i + 1 < f.size()) EXPECT_TRUE(left_weighted(f[i], f[i + 1]));
    }
  }
}

TEST(Braid, MatchesFreeGroupAction) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 3;
    auto letters = oracle::random_letters(rng, n, 1 + trial % 14);
    Braid x = oracle::from_letters(n, letters);
    EXPECT_TRUE(oracle::same_element(x, letters));
  }
}

TEST(Braid, EqualityIsGroupEquality) {
  // braid relations give equal normal forms
  EXPECT_EQ(parse_braid("1 2 1", 3), parse_braid("2 1 2", 3));
  EXPECT_EQ(parse_braid("1 3", 4), parse_braid("3 1", 4));
  EXPECT_EQ(parse_braid("1 -1 2 -2", 3), Braid::identity(3));
  EXPECT_FALSE(parse_braid("1 2", 3) == parse_braid("2 1", 3));
}

TEST(Braid, InverseAndProduct) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 4;
    Braid x = oracle::random_braid(rng, n, 5);
    Braid y = oracle::random_braid(rng, n, 5);
    Braid z = oracle::random_braid(rng, n, 5);
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_TRUE((x.inverse() * x).is_identity());
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x * y).inverse(), y.inverse() * x.inverse());
    EXPECT_EQ(x.inverse().inverse(), x);
    // inf/sup of the inverse
    EXPECT_EQ(x.inverse().inf(), -x.sup());
    EXPECT_EQ(x.inverse().sup(), -x.inf());
  }
}

TEST(Braid, PowersAndDelta) {
  for (int n = 3; n <= 7; ++n) {
    Braid d = fixtures::delta_n(n);
    EXPECT_EQ(power(d, n), Braid::delta_power(n, 2));
    Braid e = fixtures::epsilon_n(n);
    EXPECT_EQ(power(e, n - 1), Braid::delta_power(n, 2));
    EXPECT_EQ(power(d, -n), Braid::delta_power(n, -2));
    EXPECT_EQ(power(d, 0), Braid::identity(n));
  }
  Braid a = fixtures::braid(fixtures::kA);
  EXPECT_EQ(power(a, 3), a * a * a);
  EXPECT_EQ(power(a, -2), a.inverse() * a.inverse());
}

TEST(Braid, TauIsConjugationByDelta) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + trial % 4;
    Braid x = oracle::random_braid(rng, n, 5);
    Braid d = Braid::delta_power(n, 1);
    EXPECT_EQ(x.tau_power(1), d.inverse() * x * d);
    EXPECT_EQ(x.tau_power(2), x);
    EXPECT_EQ(conjugate(x, d), x.tau_power(1));
    EXPECT_EQ(tau_element(x, 3), x.tau_power(1));
    EXPECT_EQ(multiply(x, d), x * d);
  }
  // the two cycling orbits of Example A are swapped by tau
  for (int j = 0; j < 3; ++j)
    EXPECT_EQ(tau_element(Braid::from_factors(4, 0, fixtures::factors_of(fixtures::kUssA[0][j], 4)), 1),
              Braid::from_factors(4, 0, fixtures::factors_of(fixtures::kUssA[1][j], 4)));
  EXPECT_THROW(multiply(Braid::identity(3), Braid::identity(4)), std::invalid_argument);
}

TEST(Braid, PositiveMeetAndSimpleMeet) {
  std::mt19937 rng(15);
  const int n = 4;
  auto all = all_simple_elements(n);
  for (int trial = 0; trial < 200; ++trial) {
    Braid w = oracle::from_letters(n, oracle::random_letters(rng, n, 1 + trial % 8, true));
    const auto& s = all[trial % all.size()];
    SimpleElement m = simple_meet(s, w);
    EXPECT_TRUE(is_prefix(m, s));
    // m is a prefix of w: m^{-1} w is positive
    EXPECT_TRUE((Braid::from_simple(m).inverse() * w).is_positive());
    // and maximal: no longer prefix of s divides w
    for (const auto& t : all)
      if (is_prefix(t, s) && (Braid::from_simple(t).inverse() * w).is_positive())
        EXPECT_TRUE(is_prefix(t, m));
  }
}

TEST(Braid, AsSimple) {
  EXPECT_EQ(as_simple(parse_braid("1 2", 3)), parse_simple("1 2", 3));
  EXPECT_THROW(as_simple(parse_braid("1 1", 3)), std::domain_error);
  EXPECT_THROW(as_simple(parse_braid("-1", 3)), std::domain_error);
}

TEST(Word, ParseAndSerialise) {
  EXPECT_EQ(to_string(parse_braid("D", 4)), "D^1");
  EXPECT_EQ(to_string(parse_braid("D^-2 1", 4)), "D^-2 . 1");
  EXPECT_EQ(to_string(parse_braid("-1", 3)), "D^-1 . 1 2");
  EXPECT_EQ(to_string(Braid::identity(3)), "D^0");
  EXPECT_THROW(parse_braid("4", 4), ParseError);
  EXPECT_THROW(parse_braid("0", 4), ParseError);
  EXPECT_THROW(parse_braid("x", 4), ParseError);
}

TEST(Word, RoundTrip) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    Braid x = n == 2 ? oracle::from_letters(2, oracle::random_letters(rng, 2, 6)) : oracle::random_braid(rng, n, 5);
    std::string s = to_string(x);
    EXPECT_EQ(parse_braid(s, n), x);
    EXPECT_EQ(to_string(parse_braid(s, n)), s);
  }
}

TEST(Braid, HashConsistent) {
  Braid a = parse_braid("1 2 1", 3), b = parse_braid("2 1 2", 3);
  EXPECT_EQ(std::hash<Braid>{}(a), std::hash<Braid>{}(b));
}
