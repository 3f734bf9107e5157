#include <gtest/gtest.h>

#include <random>

#include "semiprimary/monomial/monomial_ideal.hpp"

using namespace semiprimary;

namespace {

MonomialIdeal mi(std::vector<std::string> g, std::size_t k = 2, std::uint32_t p = 2) { return MonomialIdeal::parse(p, k, g); }

Polynomial poly(const std::string& s, std::size_t k = 2, std::uint32_t p = 2) { return Polynomial::parse(s, p, k); }

// Naive membership: a monomial in I iff the expansion of every generator multiple hits it.
bool naive_member(const MonomialIdeal& i, const Exponent& e) {
  for (const auto& g : i.gens()) {
    bool ok = true;
    for (std::size_t v = 0; v < e.size(); ++v) ok &= e[v] >= g[v];
    if (ok) return true;
  }
  return false;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t k, int maxdeg) {
  std::uniform_int_distribution<int> ng(1, 3), ex(0, maxdeg);
  std::vector<Exponent> g;
  int count = ng(rng);
  for (int c = 0; c < count; ++c) {
    Exponent e(k);
    for (auto& x : e) x = ex(rng);
    if (total_degree(e) == 0) e[0] = 1;
    g.push_back(e);
  }
  return MonomialIdeal(2, k, g);
}

std::vector<Exponent> box(std::size_t k, int d) {
  std::vector<Exponent> out;
  Exponent e(k, 0);
  while (true) {
    out.push_back(e);
    std::size_t v = 0;
    while (v < k && ++e[v] > d) e[v++] = 0;
    if (v == k) break;
  }
  return out;
}

}  // namespace

TEST(MonomialIdeal, Basics) {
  auto i = mi({"X^2", "Y^2"});
  EXPECT_FALSE(i.contains(poly("Y*X")));
  EXPECT_TRUE(i.contains(poly("X^2*Y + Y^3")));
  EXPECT_FALSE(i.contains(poly("X^2 + X")));
  EXPECT_EQ(i.radical(), mi({"X", "Y"}));
  EXPECT_TRUE(i.radical().is_prime());
  EXPECT_FALSE(mi({"X", "Y"}).power(2).subset_of(i));
  EXPECT_EQ(mi({"X", "X^2*Y", "Y^3"}).gens().size(), 2u);
  EXPECT_EQ(mi({"X*Y", "Y^2"}).to_string(), "(X*Y, Y^2)");
  EXPECT_THROW(mi({"X + Y"}), ParseError);
  for (unsigned n = 2; n <= 5; ++n) {
    auto j = MonomialIdeal(2, 2, {{1, 1}, {0, static_cast<int>(n)}});
    EXPECT_TRUE(mi({"Y"}).power(n).subset_of(j));
    EXPECT_EQ(j.radical(), mi({"Y"}));
    EXPECT_FALSE(MonomialIdeal(2, 2, {{0, static_cast<int>(n) - 1}}).subset_of(j));
  }
}

TEST(MonomialIdeal, ArithmeticAgreesWithExpansion) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_ideal(rng, 2, 3), b = random_ideal(rng, 2, 3);
    auto prod = a * b, sum = a + b, rad = a.radical();
    for (const auto& e : box(2, 7)) {
      bool in_prod = false;
      for (const auto& g : a.gens())
        for (const auto& h : b.gens()) in_prod |= divides(add_exponents(g, h), e);
      EXPECT_EQ(prod.contains_monomial(e), in_prod);
      EXPECT_EQ(sum.contains_monomial(e), naive_member(a, e) || naive_member(b, e));
      // radical: some power of e lies in a
      Exponent big = e;
      for (auto& x : big) x *= 8;
      EXPECT_EQ(rad.contains_monomial(e), naive_member(a, big));
      EXPECT_EQ(a.contains_monomial(e), naive_member(a, e));
    }
    EXPECT_EQ(a.subset_of(sum), true);
    EXPECT_EQ(prod.subset_of(a), true);
  }
}

TEST(MonomialIdeal, Certificates) {
  auto i = mi({"X^2", "Y^2"});
  EXPECT_EQ(certify_n_semiprimary(i, 3).kind, Cert::CertifiedTrue);
  EXPECT_EQ(certify_n_semiprimary(i, 2).kind, Cert::Unknown);
  EXPECT_EQ(certify_n_semiprimary(mi({"X*Y"}), 4).kind, Cert::CertifiedFalse);
  // in characteristic 2 every radical element squares into (X^2, Y^2)
  EXPECT_EQ(certify_frobenius(i, 2).kind, Cert::CertifiedTrue);
  EXPECT_EQ(certify_frobenius(mi({"X^2", "Y^2"}, 2, 3), 2).kind, Cert::Unknown);
  EXPECT_THROW(certify_n_semiprimary(mi({"1"}), 2), InvalidParameter);
  for (unsigned n = 2; n <= 4; ++n) {
    auto j = MonomialIdeal(3, 2, {{1, 1}, {0, static_cast<int>(n)}});
    EXPECT_EQ(certify_n_semiprimary(j, n).kind, Cert::CertifiedTrue);
    EXPECT_EQ(certify_n_semiprimary(j, n - 1).kind, Cert::Unknown);
  }
  // (X^a, Y^b) with radical (X,Y): certificate true exactly at n >= a+b-1
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (unsigned n = 1; n <= 6; ++n) {
        MonomialIdeal j(3, 2, {{a, 0}, {0, b}});
        EXPECT_EQ(certify_n_semiprimary(j, n).kind == Cert::CertifiedTrue, static_cast<int>(n) >= a + b - 1);
      }
}

TEST(MonomialIdeal, CounterexampleSearch) {
  auto r = mono_counterexample_search(mi({"X^2", "Y^2"}), 2, 3, 3);
  EXPECT_FALSE(r.found);
  auto w = mono_counterexample_search(mi({"X*Y", "Y^2"}), 1, 2, 2);
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.witness->first.to_string(), "X");
  EXPECT_EQ(w.witness->second.to_string(), "Y");
  auto c = mono_counterexample_search(mi({"X^2", "Y^2"}, 2, 3), 2, 2, 2);
  EXPECT_TRUE(c.found);
  EXPECT_THROW(mono_counterexample_search(mi({"X^9"}, 2, 3), 2, 8, 8, 1000), BudgetExceeded);
}

TEST(MonomialIdeal, SearchIsDeterministicAndExhaustive) {
  auto a = search_candidates(3, 2, {2, 2}, kMonomialSearchBudget);
  auto b = search_candidates(3, 2, {2, 2}, kMonomialSearchBudget);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  // 6 monomials of degree <= 2: 6*2 single terms plus C(6,2)*4 binomials
  EXPECT_EQ(a.size(), 12u + 15u * 4u);
  EXPECT_EQ(a.front().to_string(), "1");
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].degree(), a[i].degree());
}

TEST(MonomialIdeal, PrimaryWitness) {
  for (int n = 2; n <= 4; ++n) {
    MonomialIdeal i(2, 2, {{1, 1}, {0, n}});
    auto w = mono_primary_witness(i, 1, 1);
    ASSERT_EQ(w.kind, Cert::CertifiedFalse);
    EXPECT_EQ(w.witness->first.to_string(), "Y");
    EXPECT_EQ(w.witness->second.to_string(), "X");
    for (unsigned m = 1; m <= 10; ++m) EXPECT_FALSE(i.contains(w.witness->second.pow(m)));
  }
  EXPECT_EQ(mono_primary_witness(mi({"X^2", "Y^3"}), 2, 2).kind, Cert::Unknown);
}

TEST(MonomialIdeal, AbsorbingSearch) {
  auto r = mono_absorbing_search(mi({"X^2", "Y^2"}), 2, 1, 2);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_FALSE(mono_absorbing_search(mi({"X", "Y"}), 1, 2, 2).found);
}
