#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "semiprimary/classify/classify.hpp"
#include "semiprimary/pid/pid_model.hpp"
#include "semiprimary/ring/constructions.hpp"

using namespace semiprimary;

namespace {

// Trial division oracle: exponent of the only prime, or 0 when m has several primes.
unsigned naive_prime_power_exponent(std::uint64_t m) {
  std::uint64_t p = 0;
  unsigned k = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (p && p != d) return 0;
      p = d, m /= d, ++k;
    }
  if (m > 1) {
    if (p && p != m) return 0;
    ++k;
  }
  return k;
}

// All monic polynomials of a given degree over a small prime field.
std::vector<FqPoly> monics(const FieldPtr& f, int deg) {
  std::vector<FqPoly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= f->order();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<FiniteField::Elem> c(deg + 1);
    std::uint64_t t = idx;
    for (int i = 0; i < deg; ++i) c[i] = static_cast<FiniteField::Elem>(t % f->order()), t /= f->order();
    c[deg] = 1;
    out.emplace_back(f, c);
  }
  return out;
}

bool naive_irreducible(const FqPoly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (const auto& h : monics(g.field(), d))
      if ((g % h).is_zero()) return false;
  return true;
}

}  // namespace

TEST(FiniteField, AxiomsOnSmallFields) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {2, 4}, {5, 2}}) {
    FiniteField f(p, k);
    ASSERT_EQ(f.order(), static_cast<std::uint32_t>(std::pow(p, k)));
    for (FiniteField::Elem a = 0; a < f.order(); ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (FiniteField::Elem b = 0; b < f.order(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        FiniteField::Elem c = (a * 7 + b * 3 + 1) % f.order();
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      }
    }
    EXPECT_EQ(f.multiplicative_order(f.primitive()), f.order() - 1);
    // Frobenius is additive
    for (FiniteField::Elem a = 0; a < f.order(); ++a)
      for (FiniteField::Elem b = 0; b < f.order(); ++b) EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    for (unsigned d : f.subfield_degrees()) EXPECT_EQ(f.subfield_elements(d).size(), static_cast<std::size_t>(std::pow(p, d)));
  }
  EXPECT_EQ(FiniteField::parse("F4")->order(), 4u);
  EXPECT_EQ(FiniteField::parse("GF(9)")->degree(), 2u);
  EXPECT_EQ(FiniteField::parse("Z3")->degree(), 1u);
  EXPECT_THROW(FiniteField::parse("F6"), ParseError);
  EXPECT_THROW(FiniteField(4, 1), InvalidParameter);
}

TEST(Integer, PrimalityAndFactoring) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) naive &= n % d != 0;
    EXPECT_EQ(is_prime_u64(n), naive) << n;
  }
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t n = rng() >> (rng() % 40);
    if (n < 2) continue;
    unsigned __int128 prod = 1;
    for (auto [p, e] : factor_u64(n)) {
      EXPECT_TRUE(is_prime_u64(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(static_cast<std::uint64_t>(prod), n);
  }
  EXPECT_EQ(integer_root(std::uint64_t{1} << 63, 63), 2u);
  EXPECT_EQ(integer_root(999, 3), 9u);
  EXPECT_EQ(prime_power(4611686018427387904ull)->second, 62u);
  EXPECT_FALSE(prime_power(36).has_value());
}

TEST(PidDelta, Examples) {
  auto d8 = pid_delta(PidIdeal::integer(8));
  EXPECT_EQ(d8.delta, Extended(3));
  EXPECT_EQ(*d8.prime_base, "(2)");
  EXPECT_FALSE(pid_delta(PidIdeal::integer(6)).delta.has_value());
  auto f2 = FiniteField::make(2);
  auto t2 = pid_delta(PidIdeal::polynomial(FqPoly::parse("t^2", f2)));
  EXPECT_EQ(t2.delta, Extended(2));
  EXPECT_EQ(*t2.prime_base, "(t)");
  EXPECT_FALSE(pid_delta(PidIdeal::parse("F2[t]:t^2+t")).delta.has_value());
  EXPECT_EQ(pid_delta(PidIdeal::parse("F2[t]:t^4+t^2+1")).delta, Extended(2));  // (t^2+t+1)^2
  EXPECT_EQ(pid_delta(PidIdeal::parse("Z:1024")).delta, Extended(10));
  EXPECT_EQ(pid_delta(PidIdeal::parse("F4[t]:t+[2]")).delta, Extended(1));
  EXPECT_THROW(PidIdeal::parse("Z:1"), InvalidParameter);
  EXPECT_THROW(PidIdeal::parse("Q:4"), ParseError);
  EXPECT_THROW(PidIdeal::parse("F2[t]:1"), InvalidParameter);
}

TEST(PidDelta, IntegersAgreeWithTrialDivision) {
  for (std::uint64_t m = 2; m < 3000; ++m) {
    unsigned k = naive_prime_power_exponent(m);
    auto d = pid_delta(PidIdeal::integer(m));
    if (k) EXPECT_EQ(d.delta, Extended(k)) << m;
    else EXPECT_FALSE(d.delta.has_value()) << m;
  }
}

TEST(PidDelta, PolynomialsAgreeWithBruteFactoring) {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = FiniteField::make(p);
    std::vector<FqPoly> irr;
    for (int d = 1; d <= 3; ++d)
      for (auto& g : monics(f, d))
        if (naive_irreducible(g)) irr.push_back(g);
    for (int deg = 1; deg <= (p == 2 ? 6 : 4); ++deg)
      for (const auto& g : monics(f, deg)) {
        Extended expect;
        for (const auto& h : irr)
          for (unsigned k = 1; static_cast<int>(k) * h.degree() <= deg; ++k)
            if (h.pow(k) == g) expect = k;
        if (!expect && naive_irreducible(g)) expect = 1;
        EXPECT_EQ(pid_delta(PidIdeal::polynomial(g)).delta, expect) << g.to_string();
      }
  }
}

TEST(PidDelta, AgreesWithFiniteQuotient) {
  // (m) in Z corresponds to (m)/(m^2) in Z_{m^2}
  for (std::uint64_t m = 2; m <= 60; ++m) {
    auto r = mk_zn(m * m);
    auto i = principal_ideal(r, static_cast<Elem>(m));
    EXPECT_EQ(pid_delta(PidIdeal::integer(m)).delta, delta(i)) << m;
  }
}

TEST(FqPoly, ParseRoundTripAndDivision) {
  auto f = FiniteField::make(3, 2);
  auto a = FqPoly::parse("[4]*t^3 + 2*t + [5]", f);
  EXPECT_EQ(FqPoly::parse(a.to_string(), f), a);
  auto b = FqPoly::parse("t^2 - 1", f);
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(FqPoly::parse("t^", f), ParseError);
  EXPECT_THROW(FqPoly::parse("[9]*t", f), ParseError);
}
