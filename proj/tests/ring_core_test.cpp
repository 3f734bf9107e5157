#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "semiprimary/ring/constructions.hpp"

using namespace semiprimary;

namespace {

// Naive fixpoint closure: keep adding sums and ring multiples until nothing changes.
ElementSet naive_ideal(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElementSet s(r.order());
  s.insert(0);
  for (Elem g : gens) s.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    auto m = s.elements();
    for (Elem a : m) {
      for (Elem b : m)
        if (!s.contains(r.add(a, b))) s.insert(r.add(a, b)), grew = true;
      for (Elem x = 0; x < r.order(); ++x)
        if (!s.contains(r.mul(a, x))) s.insert(r.mul(a, x)), grew = true;
    }
  }
  return s;
}

ElementSet naive_radical(const FiniteRing& r, const Ideal& i) {
  ElementSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    Elem y = x;
    for (std::size_t k = 1; k <= r.order(); ++k, y = r.mul(y, x))
      if (i.contains(y)) {
        s.insert(x);
        break;
      }
  }
  return s;
}

std::set<Elem> as_set(const Ideal& i) {
  auto v = i.members().elements();
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Zn, BasicArithmetic) {
  auto f2 = mk_zn(2);
  EXPECT_EQ(f2->order(), 2u);
  EXPECT_EQ(f2->add(1, 1), 0u);
  auto z4 = mk_zn(4);
  EXPECT_EQ(as_set(nilradical(z4)), (std::set<Elem>{0, 2}));
  auto z12 = mk_zn(12);
  EXPECT_EQ(z12->units().elements(), (std::vector<Elem>{1, 5, 7, 11}));
  EXPECT_THROW(mk_zn(1), InvalidParameter);
  EXPECT_EQ(z12->characteristic(), 12u);
  EXPECT_EQ(z12->parse("-1"), 11u);
}

TEST(Zn, UnitsMatchGcd) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    auto r = mk_zn(n);
    for (Elem x = 0; x < n; ++x) EXPECT_EQ(r->is_unit(x), std::gcd<std::uint64_t>(x, n) == 1);
  }
}

TEST(Product, Z4xZ2) {
  auto r = mk_product(mk_zn(4), mk_zn(2));
  EXPECT_EQ(r->order(), 8u);
  auto nil = nilradical(r);
  EXPECT_EQ(as_set(nil), (std::set<Elem>{r->parse("(0,0)"), r->parse("(2,0)")}));
  auto i = ideal_generated(r, {r->parse("(0,1)")});
  EXPECT_EQ(as_set(i), (std::set<Elem>{r->parse("(0,0)"), r->parse("(0,1)")}));
  auto rad = radical(i);
  EXPECT_EQ(rad.size(), 4u);
  for (const char* s : {"(0,0)", "(0,1)", "(2,0)", "(2,1)"}) EXPECT_TRUE(rad.contains(r->parse(s)));
}

TEST(Product, SmallCounts) {
  EXPECT_EQ(enumerate_ideals(mk_product(mk_zn(3), mk_zn(3))).size(), 4u);
  auto f2f2 = mk_product(mk_zn(2), mk_zn(2));
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(f2f2->mul(x, x), x);
}

TEST(PolyQuotient, Orders) {
  auto r = mk_poly_quotient(2, {4, 4}, {"X^2*Y^2"});
  EXPECT_EQ(r->order(), std::size_t{1} << 12);
  EXPECT_EQ(r->dimension(), 12u);
  EXPECT_EQ(r->parse("X^3*Y^2"), 0u);
  EXPECT_NE(r->parse("X^3*Y"), 0u);
  auto f2 = mk_poly_quotient(2, {1});
  EXPECT_EQ(f2->order(), 2u);
  auto z3x = mk_poly_quotient(3, {2});
  EXPECT_EQ(z3x->order(), 9u);
  EXPECT_EQ(as_set(nilradical(z3x)), as_set(ideal_generated(z3x, {z3x->parse("X")})));
  EXPECT_THROW(mk_poly_quotient(4, {2}), InvalidParameter);
  EXPECT_THROW(mk_poly_quotient(2, {2}, {"1 + X"}), InvalidParameter);
  EXPECT_THROW(mk_poly_quotient(2, {2}, {"1"}), InvalidParameter);
  // monomial relations prune before the size limit applies
  auto big = mk_poly_quotient(2, {8, 8}, {"X^2*Y^2", "X^3", "Y^5"});
  EXPECT_EQ(big->dimension(), 12u);
  EXPECT_THROW(mk_poly_quotient(2, {5, 4}), InvalidParameter);
}

TEST(PolyQuotient, FormatParseRoundTrip) {
  auto r = mk_poly_quotient(3, {3, 2}, {"X^2 - X*Y"});
  for (Elem e = 0; e < r->order(); ++e) EXPECT_EQ(r->parse(r->format(e)), e);
  EXPECT_EQ(r->parse("X^2"), r->parse("X*Y"));
}

TEST(PolyQuotient, AxiomsOfQuotients) {
  for (auto caps : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}, {5}})
    EXPECT_NO_THROW(mk_poly_quotient(2, caps, {})->verify_axioms());
  EXPECT_NO_THROW(mk_poly_quotient(3, {3, 3}, {"X^2 + Y^2"})->verify_axioms());
}

TEST(Ideals, GeneratedMatchesNaiveClosure) {
  std::mt19937 rng(7);
  std::vector<RingPtr> rings{mk_zn(12), mk_zn(36), mk_product(mk_zn(4), mk_zn(2)), mk_poly_quotient(2, {2, 2}),
                             mk_poly_quotient(3, {3}), mk_poly_quotient(2, {3, 2}, {"X*Y"})};
  for (const auto& r : rings)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> g;
      for (int k = 0; k < 1 + trial % 3; ++k) g.push_back(static_cast<Elem>(rng() % r->order()));
      auto i = ideal_generated(r, g);
      EXPECT_EQ(i.members(), naive_ideal(*r, g)) << r->name();
      // idempotent and monotone
      EXPECT_EQ(ideal_generated(r, i.members().elements()), i);
      g.push_back(static_cast<Elem>(rng() % r->order()));
      EXPECT_TRUE(i.subset_of(ideal_generated(r, g)));
    }
  auto z = mk_zn(7);
  EXPECT_TRUE(ideal_generated(z, {}).is_zero());
}

TEST(Ideals, Arithmetic) {
  auto z12 = mk_zn(12);
  EXPECT_EQ(ideal_product(principal_ideal(z12, 2), principal_ideal(z12, 3)), principal_ideal(z12, 6));
  EXPECT_EQ(ideal_sum(principal_ideal(z12, 4), principal_ideal(z12, 6)), principal_ideal(z12, 2));
  auto z8 = mk_zn(8);
  EXPECT_TRUE(ideal_power(principal_ideal(z8, 2), 3).is_zero());
  auto r = mk_poly_quotient(2, {3, 3});
  auto m = ideal_generated(r, {r->parse("X"), r->parse("Y")});
  auto m2 = ideal_generated(r, {r->parse("X^2"), r->parse("X*Y"), r->parse("Y^2")});
  EXPECT_EQ(ideal_power(m, 2), m2);
  EXPECT_THROW(ideal_sum(m, principal_ideal(z8, 2)), RingMismatch);
}

TEST(Ideals, RadicalMatchesNaive) {
  std::vector<RingPtr> rings{mk_zn(8), mk_zn(72), mk_product(mk_zn(4), mk_zn(2)), mk_poly_quotient(2, {3, 3}, {"X*Y^2"})};
  for (const auto& r : rings)
    for (const auto& i : enumerate_ideals(r)) {
      auto rad = radical(i);
      EXPECT_EQ(rad.members(), naive_radical(*r, i));
      EXPECT_EQ(radical(rad), rad);
      EXPECT_TRUE(i.subset_of(rad));
    }
  auto z8 = mk_zn(8);
  EXPECT_EQ(as_set(radical(principal_ideal(z8, 4))), (std::set<Elem>{0, 2, 4, 6}));
  auto z12 = mk_zn(12);
  EXPECT_EQ(radical(principal_ideal(z12, 6)), principal_ideal(z12, 6));
}

TEST(Ideals, PrimeMatchesDefinition) {
  std::vector<RingPtr> rings{mk_zn(30), mk_zn(16), mk_product(mk_zn(3), mk_zn(4)), mk_poly_quotient(3, {2, 2})};
  for (const auto& r : rings)
    for (const auto& i : enumerate_ideals(r)) {
      bool naive = i.is_proper();
      for (Elem a = 0; a < r->order() && naive; ++a)
        for (Elem b = 0; b < r->order() && naive; ++b)
          if (i.contains(r->mul(a, b)) && !i.contains(a) && !i.contains(b)) naive = false;
      auto pc = check_prime(i);
      EXPECT_EQ(pc.prime, naive) << r->name() << " " << i.to_string();
      if (pc.witness) {
        EXPECT_FALSE(i.contains(pc.witness->first));
        EXPECT_FALSE(i.contains(pc.witness->second));
        EXPECT_TRUE(i.contains(r->mul(pc.witness->first, pc.witness->second)));
      }
    }
}

TEST(Ideals, EnumerationCounts) {
  // ideals of Z_n correspond to divisors of n
  for (std::uint64_t n : {2, 12, 36, 60, 64, 97}) {
    std::size_t divisors = 0;
    for (std::uint64_t d = 1; d <= n; ++d) divisors += n % d == 0;
    EXPECT_EQ(enumerate_ideals(mk_zn(n)).size(), divisors);
  }
  auto z12 = enumerate_ideals(mk_zn(12));
  EXPECT_EQ(z12.front().size(), 1u);
  EXPECT_EQ(z12.back().size(), 12u);
  EXPECT_EQ(enumerate_ideals(mk_product(mk_zn(2), mk_zn(2))).size(), 4u);
  auto r = mk_poly_quotient(2, {2, 2});
  auto all = enumerate_ideals(r);
  auto has = [&](std::vector<std::string> g) {
    std::vector<Elem> e;
    for (auto& s : g) e.push_back(r->parse(s));
    auto i = ideal_generated(r, e);
    return std::find(all.begin(), all.end(), i) != all.end();
  };
  EXPECT_TRUE(has({"X", "Y"}));
  EXPECT_TRUE(has({"X"}));
  EXPECT_TRUE(has({"Y"}));
  EXPECT_TRUE(has({"X*Y"}));
  EXPECT_TRUE(has({"X + Y"}));
  // every ideal found is closed, and every subset closed under the ring operations is found
  std::set<ElementSet> found;
  for (const auto& i : all) found.insert(i.members());
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    if (!(mask & 1U)) continue;
    ElementSet s(16);
    for (Elem e = 0; e < 16; ++e)
      if (mask >> e & 1U) s.insert(e);
    if (naive_ideal(*r, s.elements()) == s) {
      EXPECT_TRUE(found.count(s));
    }
  }
  EXPECT_THROW(enumerate_ideals(mk_zn(64), 3), BudgetExceeded);
}

TEST(Ideals, FieldHasTwoIdeals) {
  // F_4 as a quotient of the truncated algebra would need a non-local relation; build it as a table ring
  std::vector<std::string> labels{"0", "1", "a", "a+1"};
  auto mul = [](Elem x, Elem y) {
    // GF(4) with a^2 = a + 1, elements as bit pairs
    Elem r = 0;
    for (int i = 0; i < 2; ++i)
      if (y >> i & 1U) r ^= x << i;
    if (r & 4U) r ^= 7U;
    return r;
  };
  auto f4 = FiniteRing::table("F4", 4, [](Elem x, Elem y) { return x ^ y; }, mul, 1, labels, {{"kind", "gf"}});
  f4->verify_axioms();
  EXPECT_EQ(enumerate_ideals(f4).size(), 2u);
  EXPECT_TRUE(is_prime(zero_ideal(f4)));
}

TEST(Quotient, TablesAndTransport) {
  auto z12 = mk_zn(12);
  auto q = quotient_ring(principal_ideal(z12, 4));
  auto z4 = mk_zn(4);
  ASSERT_EQ(q.ring->order(), 4u);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      EXPECT_EQ(q.ring->add(a, b), z4->add(a, b));
      EXPECT_EQ(q.ring->mul(a, b), z4->mul(a, b));
    }
  auto r = mk_product(mk_zn(4), mk_zn(2));
  EXPECT_EQ(quotient_ring(ideal_generated(r, {r->parse("(0,1)")})).ring->order(), 4u);
  EXPECT_THROW(quotient_ring(unit_ideal(r)), InvalidParameter);
  for (const auto& ring : {mk_zn(72), mk_product(mk_zn(4), mk_zn(6)), mk_poly_quotient(2, {3, 3})}) {
    auto red = quotient_ring(nilradical(ring));
    EXPECT_TRUE(nilradical(red.ring).is_zero());
    for (Elem a = 0; a < ring->order(); a += 3)
      for (Elem b = 0; b < ring->order(); b += 5) {
        EXPECT_EQ(red.projection[ring->mul(a, b)], red.ring->mul(red.projection[a], red.projection[b]));
        EXPECT_EQ(red.projection[ring->add(a, b)], red.ring->add(red.projection[a], red.projection[b]));
      }
  }
}

TEST(Localization, IdempotentModel) {
  auto z12 = mk_zn(12);
  auto l = localize(z12, {4});
  EXPECT_EQ(l.idempotent, 4u);
  EXPECT_EQ(l.ring->order(), 3u);
  auto same = localize(z12, {1});
  EXPECT_EQ(same.ring->order(), 12u);
  auto r = mk_product(mk_zn(4), mk_zn(2));
  auto l2 = localize(r, {r->parse("(1,0)")});
  EXPECT_EQ(l2.ring->order(), 4u);
  EXPECT_EQ(l2.ring->characteristic(), 4u);
  auto z8 = mk_zn(8);
  EXPECT_THROW(localize(z8, {2}), InvalidParameter);
}

TEST(Idealization, Examples) {
  auto f2 = mk_zn(2);
  auto a = mk_idealization(f2, natural_module(f2, {2}));
  EXPECT_EQ(a.ring->order(), 4u);
  auto nil = nilradical(a.ring);
  EXPECT_EQ(nil.size(), 2u);
  EXPECT_TRUE(nil.contains(a.embed(0, 1)));
  auto z4 = mk_zn(4);
  auto b = mk_idealization(z4, natural_module(z4, {2}));
  EXPECT_EQ(b.ring->order(), 8u);
  std::size_t maximal = 0;
  for (const auto& i : enumerate_ideals(b.ring)) maximal += is_prime(i);
  EXPECT_EQ(maximal, 1u);
  auto f3 = mk_zn(3);
  auto c = mk_idealization(f3, natural_module(f3, {3}));
  std::size_t max_size = 0;
  for (const auto& i : enumerate_ideals(c.ring))
    if (is_prime(i)) max_size = i.size();
  EXPECT_EQ(max_size, 3u);
  // (0(+)M)^2 = 0
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y) EXPECT_EQ(b.ring->mul(b.embed(0, x), b.embed(0, y)), 0u);
  auto i = idealization_ideal(b, principal_ideal(z4, 2), {1});
  EXPECT_EQ(i.size(), 4u);
  EXPECT_THROW(natural_module(z4, {3}), InvalidParameter);
}

TEST(Axioms, RejectNonAssociativeTable) {
  std::vector<std::string> labels{"0", "1", "2"};
  auto bad = FiniteRing::table(
      "bad", 3, [](Elem x, Elem y) { return (x + y) % 3; }, [](Elem x, Elem y) { return x == 2 && y == 2 ? 2u : x * y % 3; }, 1,
      labels, {});
  EXPECT_THROW(bad->verify_axioms(), InvalidParameter);
}

TEST(Associates, ProductsAreClassInvariant) {
  for (const auto& r : {mk_zn(36), mk_product(mk_zn(4), mk_zn(3)), mk_poly_quotient(3, {2, 2})}) {
    const auto& cls = r->associates();
    for (Elem x = 0; x < r->order(); ++x) {
      EXPECT_LE(cls.rep[x], x);
      // x = u * rep for some unit u
      bool found = false;
      r->units().for_each([&](Elem u) { found |= r->mul(u, cls.rep[x]) == x; });
      EXPECT_TRUE(found);
    }
  }
}
