#include <gtest/gtest.h>

#include <random>

#include "semiprimary/valuation/valuation.hpp"

using namespace semiprimary;

namespace {

OrderedGroup G(const std::string& s) { return OrderedGroup::parse(s); }
ValIdealDesc D(const std::string& s) { return ValIdealDesc::parse(s); }

}  // namespace

TEST(Valuation, PowerExamples) {
  EXPECT_EQ(vd_power(D("Z cut=1"), 3), D("Z cut=3"));
  auto m = ValIdealDesc::maximal(G("Q+Q"));
  EXPECT_EQ(m, D("Q+Q cut=0,0 strict"));
  EXPECT_EQ(vd_power(m, 2), m);
  auto p = D("Z+Q cut=1/2,0 strict");
  EXPECT_EQ(p, ValIdealDesc::middle_prime(G("Z+Q")));
  auto p2 = vd_power(p, 2);
  EXPECT_TRUE(p2.contains({2, -100}));
  EXPECT_FALSE(p2.contains({1, 100}));
  EXPECT_EQ(p2, D("Z+Q cut=2,-inf"));
  EXPECT_EQ(vd_power(ValIdealDesc::middle_prime(G("Q+Q")), 5), ValIdealDesc::middle_prime(G("Q+Q")));
}

TEST(Valuation, RadicalExamples) {
  EXPECT_EQ(vd_sqrt(D("Z cut=5")), D("Z cut=1/2 strict"));
  EXPECT_EQ(vd_sqrt(D("Z+Z cut=2,3")), ValIdealDesc::middle_prime(G("Z+Z")));
  EXPECT_EQ(vd_sqrt(D("Q cut=1")), D("Q cut=0 strict"));
  EXPECT_EQ(vd_sqrt(D("Q+Z cut=0,7")), ValIdealDesc::maximal(G("Q+Z")));
  for (const auto& g : OrderedGroup::catalog())
    for (const auto& d : sample_ideals(g))
      if (!d.is_zero()) {
        EXPECT_TRUE(vd_is_prime(vd_sqrt(d))) << d.to_string();
      }
}

TEST(Valuation, SemiprimaryExamples) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(vd_is_n_semiprimary(vd_power(D("Z cut=1"), k), n), n >= k);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_FALSE(vd_is_n_semiprimary(D("Q cut=1"), n));
  EXPECT_TRUE(vd_is_n_semiprimary(D("Q cut=0 strict"), 1));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_FALSE(vd_is_n_semiprimary(D("Z+Q cut=0,1"), n));
  EXPECT_EQ(vd_delta(D("Z+Z cut=2,3")), Extended(3));
  EXPECT_EQ(vd_delta(D("Q+Z cut=0,4")), Extended(4));
  EXPECT_FALSE(vd_delta(D("Q+Q cut=1,0")).has_value());
  EXPECT_THROW(vd_is_n_semiprimary(D("Z unit"), 1), InvalidParameter);
}

TEST(Valuation, TableMatchesFamilies) {
  struct Expect {
    std::string group;
    std::vector<std::string> verdicts;
  };
  std::vector<Expect> rows{{"Z+Z", {"yes", "yes", "yes", "yes", "yes"}}, {"Q+Q", {"yes", "no", "yes", "no", "yes"}},
                           {"Z+Q", {"yes", "yes", "yes", "no", "yes"}}, {"Q+Z", {"yes", "no", "yes", "yes", "yes"}},
                           {"Z", {"yes", "yes", "yes"}},                 {"Q", {"yes", "no", "yes"}}};
  for (const auto& e : rows) {
    auto t = vd_example_table(G(e.group));
    ASSERT_EQ(t.rows.size(), e.verdicts.size());
    for (std::size_t i = 0; i < e.verdicts.size(); ++i) {
      EXPECT_EQ(t.rows[i].verdict, e.verdicts[i]) << e.group << " " << t.rows[i].family;
      EXPECT_EQ(t.rows[i].powerful_verdict, t.rows[i].verdict);
      EXPECT_GT(t.rows[i].samples, 0u) << e.group << " " << t.rows[i].family;
    }
  }
}

TEST(Valuation, IdempotentPrimesOnlyTheirOwnRadical) {
  for (const auto& g : OrderedGroup::catalog()) {
    auto samples = sample_ideals(g);
    for (const auto& d : samples) {
      if (d.is_zero()) continue;
      auto p = vd_sqrt(d);
      if (!(vd_power(p, 2) == p)) continue;
      for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(vd_is_n_semiprimary(d, n), d == p) << d.to_string();
    }
  }
}

TEST(Valuation, OperationsAgreeWithWindow) {
  for (const auto& g : OrderedGroup::catalog())
    for (const auto& d : sample_ideals(g))
      for (unsigned n : {1u, 2u, 3u}) {
        auto rep = window_check(d, n);
        EXPECT_TRUE(rep.agree) << rep.first_mismatch;
      }
}

TEST(Valuation, SubsetAgreesWithWindow) {
  for (const auto& g : OrderedGroup::catalog()) {
    auto s = sample_ideals(g);
    for (std::size_t i = 0; i < s.size(); i += 2)
      for (std::size_t j = 1; j < s.size(); j += 3) EXPECT_EQ(vd_subset(s[i], s[j]), window_subset(s[i], s[j])) << s[i].to_string() << " vs " << s[j].to_string();
  }
}

TEST(Valuation, CanonicalFormPreservesSemantics) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-12, 30), den(1, 3), pick(0, 9);
  for (const auto& g : OrderedGroup::catalog()) {
    auto pts = window_points(g, 10, 6);
    for (int t = 0; t < 40; ++t) {
      Rational x(num(rng), 2 * den(rng));
      CutCoord y = pick(rng) == 0 ? CutCoord::neg_inf() : pick(rng) == 1 ? CutCoord::pos_inf() : CutCoord::fin(Rational(num(rng), den(rng)));
      bool strict = pick(rng) % 2;
      auto d = ValIdealDesc::cut(g, x, y, strict);
      for (const auto& h : pts) {
        bool raw = window_nonneg(g, h) && ValIdealDesc::raw_above(g, x, g.rank() == 1 ? CutCoord::fin(0) : y, strict, h);
        ASSERT_EQ(d.contains(h), raw) << d.to_string();
      }
      EXPECT_EQ(ValIdealDesc::parse(d.to_string()), d);
    }
  }
}

TEST(Valuation, ParseErrors) {
  EXPECT_THROW(OrderedGroup::parse("Z+Z+Z"), InvalidParameter);
  EXPECT_THROW(D("Z+Q cut=1"), ParseError);
  EXPECT_THROW(D("Q cut=1,2"), ParseError);
  EXPECT_THROW(D("Z cut=x"), ParseError);
  EXPECT_THROW(D("Z P"), InvalidParameter);
  EXPECT_EQ(OrderedGroup::parse("Z⊕Q").name(), "Z+Q");
}
