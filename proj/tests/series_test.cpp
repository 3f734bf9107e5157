#include <gtest/gtest.h>

#include <random>

#include "semiprimary/series/checks.hpp"
#include "semiprimary/series/constructions.hpp"

using namespace semiprimary;

namespace {

FieldPtr F(const std::string& s) { return FiniteField::parse(s); }

// F + F X^2 + X^4 F[[X]], the semigroup ring of <2, 5>
SeriesRingSpec semigroup25(const std::string& f = "F2") { return SeriesRingSpec::from_degrees(F(f), {1, 0, 1, 0}); }
// Z2 + X^2 Z2[[X]]
SeriesRingSpec cusp() { return SeriesRingSpec::from_degrees(F("F2"), {1, 0}); }
// F + X^N F[[X]]
SeriesRingSpec rn(unsigned N, const std::string& f = "F2") {
  std::vector<unsigned> d(N, 0);
  d[0] = 1;
  return SeriesRingSpec::from_degrees(F(f), d);
}
// Z3 + Z3 X^9 + X^12 Z3[[X]]
SeriesRingSpec conductor12() {
  std::vector<unsigned> d(12, 0);
  d[0] = d[9] = 1;
  return SeriesRingSpec::from_degrees(F("F3"), d);
}
// Z_p + Z_p X + X^2 F_{p^k}[[X]]
SeriesRingSpec tower_ring(std::uint32_t p, unsigned k) { return SeriesRingSpec::from_degrees(FiniteField::make(p, k), {1, 1}); }

TruncatedLaurent mono(const SeriesRingSpec& r, int e, std::uint32_t a = 1) { return TruncatedLaurent::monomial(r.field(), a, e); }

}  // namespace

TEST(SeriesSpec, Validation) {
  EXPECT_FALSE(validate_spec(cusp()));
  EXPECT_FALSE(validate_spec(SeriesRingSpec::from_degrees(F("F4"), {1, 2})));
  // F4 * (F2 X) has coefficients outside F2 at X
  auto wide = validate_spec(SeriesRingSpec::from_degrees(F("F4"), {2, 1}));
  ASSERT_TRUE(wide);
  EXPECT_EQ(wide->e, 0);
  EXPECT_EQ(wide->e2, 1);
  SeriesRingSpec no_one(F("F2"), {slot::zero(*F("F2"))});
  auto v = validate_spec(no_one);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->e, 0);
  // X in R but X^2 not
  auto bad = validate_spec(SeriesRingSpec::from_degrees(F("F2"), {1, 1, 0}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->e, 1);
  EXPECT_EQ(bad->e2, 1);
  // F2 X times F4 X lands at X^2 in an F2 slot
  EXPECT_TRUE(validate_spec(SeriesRingSpec::from_degrees(F("F4"), {1, 2, 1})));
  EXPECT_TRUE(validate_spec(SeriesIdealSpec(cusp(), {slot::full(*F("F2"))})));
  EXPECT_FALSE(validate_spec(SeriesIdealSpec::maximal(conductor12())));
}

TEST(SeriesSpec, CanonicalAndJson) {
  auto r = SeriesRingSpec::from_degrees(F("F4"), {1, 0, 2, 2});
  EXPECT_EQ(r.conductor(), 2u);
  EXPECT_EQ(r.to_string(), "F2 + X^2 F4[[X]]");
  EXPECT_EQ(SeriesRingSpec::from_json(r.to_json()), r);
  EXPECT_EQ(conductor12().to_string(), "F3 + F3 X^9 + X^12 F3[[X]]");
  auto m = SeriesIdealSpec::maximal(semigroup25());
  EXPECT_EQ(m.to_string(), "F2 X^2 + X^4 F2[[X]]");
  EXPECT_EQ(SeriesIdealSpec::from_json(m.to_json()), m);
  auto j = nlohmann::json::parse(R"({"field":"F4","conductor":4,"slots":{"0":"F2","1":"0","2":"F4","3":"0"}})");
  auto s = SeriesRingSpec::from_json(j);
  EXPECT_EQ(s.conductor(), 4u);
  EXPECT_FALSE(validate_spec(s));
  auto basis = nlohmann::json::parse(R"({"ring":{"field":"F4","conductor":1,"slots":{"0":"F2"}},"conductor":2,"slots":{"1":[1]}})");
  auto i = SeriesIdealSpec::from_json(basis);
  EXPECT_EQ(i.to_string(), "F2 X + X^2 F4[[X]]");
  EXPECT_FALSE(validate_spec(i));
  EXPECT_THROW(SeriesRingSpec::from_json(nlohmann::json::parse(R"({"field":"F4","conductor":1,"slots":{"3":"0"}})")),
               ParseError);
  EXPECT_THROW(SeriesRingSpec::from_json(nlohmann::json::parse(R"({"field":"F4","conductor":1,"slots":{"0":"F8"}})")),
               ParseError);
}

TEST(Laurent, Arithmetic) {
  auto f2 = F("F2");
  auto x = TruncatedLaurent::monomial(f2, 1, 1);
  EXPECT_EQ(x.inv(), TruncatedLaurent::monomial(f2, 1, -1));
  auto one_x = TruncatedLaurent::polynomial(f2, 0, {1, 1});
  EXPECT_EQ(one_x * one_x, TruncatedLaurent::polynomial(f2, 0, {1, 0, 1}));
  EXPECT_EQ(TruncatedLaurent::monomial(f2, 1, 3).pow(2), TruncatedLaurent::monomial(f2, 1, 6));
  // (1 + X)^-1 = 1 + X + X^2 + ... over F2
  auto inv = one_x.inv(5);
  EXPECT_FALSE(inv.exact());
  EXPECT_EQ(inv.precision(), 5);
  for (int e = 0; e < 5; ++e) EXPECT_EQ(inv.coeff(e), 1u);
  EXPECT_THROW(inv.coeff(5), PrecisionError);
  auto back = inv * one_x;
  EXPECT_EQ(back.coeff(0), 1u);
  for (int e = 1; e < 5; ++e) EXPECT_EQ(back.coeff(e), 0u);
  EXPECT_THROW(TruncatedLaurent(f2).inv(), InvalidParameter);
  EXPECT_THROW(one_x.inv(), PrecisionError);
  EXPECT_EQ(one_x.to_string(), "1 + X");
  EXPECT_EQ(inv.to_string(), "1 + X + X^2 + X^3 + X^4 + O(X^5)");
}

TEST(Laurent, InverseAgreesWithProduct) {
  std::mt19937 rng(7);
  for (auto name : {"F2", "F3", "F4", "F9"}) {
    auto f = F(name);
    std::uniform_int_distribution<std::uint32_t> d(0, f->order() - 1);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::uint32_t> c(4);
      for (auto& x : c) x = d(rng);
      if (!c[0]) c[0] = 1;
      auto a = TruncatedLaurent::polynomial(f, t % 5 - 2, c);
      auto prod = a * a.inv(12);
      EXPECT_EQ(prod.order(), 0);
      for (int e = 0; e < 12; ++e) EXPECT_EQ(prod.coeff(e), e == 0 ? 1u : 0u);
      EXPECT_EQ(a.pow(-3, 10) * a.pow(3), a.pow(0) * prod.pow(0) * (a.pow(-3, 10) * a.pow(3)));
    }
  }
}

TEST(Laurent, Membership) {
  auto r = semigroup25();
  auto M = SeriesIdealSpec::maximal(r);
  EXPECT_FALSE(member(mono(r, 3), M));
  EXPECT_TRUE(member(mono(r, 2), M));
  EXPECT_TRUE(member(TruncatedLaurent(r.field()), M));
  EXPECT_FALSE(member(mono(r, -1), r));
  auto Me = SeriesIdealSpec::maximal(conductor12());
  EXPECT_TRUE(in_En(mono(conductor12(), 2), Me, 3));
  EXPECT_TRUE(power_in_An(mono(conductor12(), 3), Me, 3));
  auto shallow = TruncatedLaurent::series(r.field(), 2, {1});
  EXPECT_THROW(member(shallow, M), PrecisionError);
  EXPECT_TRUE(member(TruncatedLaurent::series(r.field(), 4, {1}), M));
}

TEST(SeriesChecks, DeltaBarProfileOfSemigroup25) {
  auto r = semigroup25();
  auto p = delta_bar_profile(SeriesIdealSpec::maximal(r), 8, {8, 5});
  EXPECT_EQ(p.refuted(), (std::vector<unsigned>{1, 3}));
  for (const auto& v : p.per_n)
    if (!v.refuted()) {
      EXPECT_EQ(v.kind, Verdict::Kind::VerifiedAtBound) << v.to_string();
    }
  const auto& v3 = p.per_n[2];
  ASSERT_GE(v3.witness.size(), 3u);
  EXPECT_EQ(v3.witness[0].second, mono(r, 1));
  EXPECT_EQ(v3.witness[1].second, mono(r, 1));
  EXPECT_EQ(v3.witness[2].second, mono(r, 3));
  EXPECT_EQ(p.least_verified(), 2u);

  auto v = check_n_powerful_semiprimary(SeriesIdealSpec::tail(r, 4), 2);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness[2].second, mono(r, 2));
}

TEST(SeriesChecks, SemigroupOutsideCharTwo) {
  auto v = check_n_powerful_semiprimary(SeriesIdealSpec::maximal(semigroup25("F3")), 2, {4, 3});
  EXPECT_TRUE(v.refuted()) << v.to_string();
  EXPECT_TRUE(check_n_powerful_semiprimary(SeriesIdealSpec::maximal(semigroup25("F3")), 4, {4, 3}).holds());
}

TEST(SeriesChecks, ValuationDomain) {
  auto V = SeriesRingSpec::power_series(F("F2"));
  auto M = SeriesIdealSpec::maximal(V);
  EXPECT_EQ(M.to_string(), "X F2[[X]]");
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(check_n_powerful_semiprimary(M, n).kind, Verdict::Kind::VerifiedAtBound);
  EXPECT_EQ(check_nvd(V, 3).kind, Verdict::Kind::CertifiedTrue);
  EXPECT_EQ(check_strongly_prime(M).kind, Verdict::Kind::CertifiedTrue);
}

TEST(SeriesChecks, CuspVdAndPvd) {
  auto R = cusp();
  for (unsigned n = 1; n <= 6; ++n) {
    auto vd = check_nvd(R, n);
    EXPECT_EQ(vd.holds(), n % 2 == 0) << vd.to_string();
    auto pvd = check_npvd(R, n);
    EXPECT_EQ(pvd.holds(), n >= 2) << pvd.to_string();
  }
  // X and X^3 are never witnesses: X^3 lies in R; the first witness is the unit 1 + X
  auto v3 = check_nvd(R, 3);
  ASSERT_TRUE(v3.refuted());
  EXPECT_EQ(v3.witness[0].second, TruncatedLaurent::polynomial(R.field(), 0, {1, 1}));
}

TEST(SeriesChecks, RnPvdThreshold) {
  for (unsigned N = 2; N <= 4; ++N)
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(check_npvd(rn(N), n).holds(), n >= N) << N << " " << n;
  EXPECT_EQ(check_npvd(rn(1), 1).kind, Verdict::Kind::CertifiedTrue);
}

TEST(SeriesChecks, ConductorTwelveColon) {
  auto R = conductor12();
  auto V = colon_ring(SeriesIdealSpec::maximal(R));
  EXPECT_EQ(V, SeriesRingSpec::from_degrees(F("F3"), {1, 0, 0}));
  EXPECT_EQ(V.to_string(), "F3 + X^3 F3[[X]]");
  EXPECT_TRUE(check_nvd(V, 3).holds());
  auto v = check_npvd(R, 3);
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness[0].second, mono(R, 2));
  EXPECT_EQ(v.witness[1].second, mono(R, 2));
  auto cl = integral_closure(R);
  EXPECT_EQ(cl.closure, SeriesRingSpec::power_series(F("F3")));
}

TEST(SeriesChecks, PnvdAnalogAndPullback) {
  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n) {
      std::optional<Verdict> hit;
      for (unsigned k = 2; k <= 4 && !hit; ++k) {
        auto v = check_pnvd(tower_ring(p, k), n, {8, 3});
        if (v.refuted()) hit = v;
      }
      ASSERT_TRUE(hit) << p << " " << n;
      const auto& b = hit->witness[0].second;
      // the witness is a constant b with b^n and b^-n outside F_p
      EXPECT_EQ(b.order(), 0);
      ASSERT_EQ(b.unit_part().size(), 1u);
      const auto& f = *b.field();
      EXPECT_FALSE(f.in_subfield(f.pow(b.unit_part()[0], n), 1));
      EXPECT_FALSE(f.in_subfield(f.inv(f.pow(b.unit_part()[0], n)), 1));
    }
  // F4 has no such b at n = 3
  EXPECT_TRUE(check_pnvd(tower_ring(2, 2), 3, {8, 3}).holds());
  for (unsigned n = 2; n <= 4; ++n) EXPECT_TRUE(check_npvd(tower_ring(3, 2), n, {6, 3}).holds());
  EXPECT_TRUE(check_npvd(tower_ring(3, 2), 1, {6, 3}).refuted());

  for (std::uint32_t p : {2u, 3u}) {
    auto V = SeriesRingSpec::power_series(FiniteField::make(p, 2));
    auto R = pullback(V, 1);
    EXPECT_EQ(R, SeriesRingSpec::from_degrees(V.field(), {1}));
    for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(check_pnvd(R, n).holds());
    EXPECT_EQ(pullback(V, 2), V);
  }
  auto z2 = SeriesRingSpec::power_series(F("F2"));
  EXPECT_EQ(pullback(z2, 1), z2);
  EXPECT_THROW(pullback(z2, 2), InvalidParameter);
  EXPECT_THROW(pullback(SeriesRingSpec::from_degrees(F("F4"), {1, 0}), 1), InvalidParameter);
}

TEST(SeriesConstructions, ColonAndClosure) {
  auto V = SeriesRingSpec::power_series(F("F4"));
  EXPECT_EQ(colon_ring(SeriesIdealSpec::maximal(V)), V);
  for (unsigned N = 2; N <= 4; ++N) EXPECT_EQ(colon_ring(SeriesIdealSpec::maximal(rn(N))), SeriesRingSpec::power_series(F("F2")));
  auto cl = integral_closure(cusp(), 3);
  EXPECT_EQ(cl.closure.to_string(), "F2[[X]]");
  EXPECT_EQ(cl.maximal.to_string(), "X F2[[X]]");
  ASSERT_TRUE(cl.root_set);
  EXPECT_EQ(*cl.root_set, cl.maximal);
  EXPECT_TRUE(cl.root_set_is_radical);
  auto one = integral_closure(cusp(), 1);
  ASSERT_TRUE(one.root_set);
  EXPECT_FALSE(one.root_set_is_radical);
  EXPECT_EQ(integral_closure(V).closure, V);
}

TEST(SeriesChecks, RootClosedAndExtension) {
  auto R = cusp();
  auto Rbar = SeriesRingSpec::power_series(F("F2"));
  EXPECT_TRUE(check_n_root_closed(R, 1).holds());
  EXPECT_TRUE(check_n_root_closed(R, 2).refuted());  // X^2 in R, X not
  EXPECT_TRUE(check_n_root_extension(R, Rbar, 2).holds());
  EXPECT_TRUE(check_n_root_extension(R, Rbar, 3).refuted());
  EXPECT_THROW(check_n_root_extension(R, SeriesRingSpec::power_series(F("F3")), 2), RingMismatch);
  auto M = SeriesIdealSpec::maximal(R);
  EXPECT_TRUE(check_n_semiprimary(M, 1).holds());
  auto I = SeriesIdealSpec::tail(R, 3);
  EXPECT_TRUE(check_n_semiprimary(I, 1).refuted());
  EXPECT_TRUE(check_n_semiprimary(I, 2).holds());
  EXPECT_TRUE(check_n_powerful(M, 2).holds());
  EXPECT_TRUE(check_n_powerful(M, 1).refuted());
  EXPECT_THROW(check_strongly_prime(SeriesIdealSpec::tail(R, 3)), InvalidParameter);
}

TEST(SeriesChecks, DispatchAndThreadsAgree) {
  SeriesQuery q{SeriesProperty::NPVD, 3, conductor12(), std::nullopt, std::nullopt};
  SeriesBounds one{6, 3}, four{6, 3, 200'000'000, 4};
  auto a = bounded_check(q, one), b = bounded_check(q, four);
  EXPECT_EQ(a.to_json(), b.to_json());
  q.property = SeriesProperty::NVD;
  q.n = 3;
  EXPECT_EQ(bounded_check(q, one).to_json(), bounded_check(q, four).to_json());
  EXPECT_EQ(parse_property("PnVD"), SeriesProperty::PnVD);
  EXPECT_THROW(parse_property("nope"), ParseError);
}

TEST(SeriesChecks, BudgetGivesPartial) {
  SeriesBounds tiny{8, 5, 10};
  auto v = check_n_powerful_semiprimary(SeriesIdealSpec::maximal(SeriesRingSpec::power_series(F("F9"))), 2, tiny);
  EXPECT_EQ(v.kind, Verdict::Kind::Partial);
}

namespace {

// Random valid ring spec from a semigroup pattern with slots F_p or F_q.
SeriesRingSpec random_ring(std::mt19937& rng, const FieldPtr& f) {
  for (;;) {
    unsigned c = std::uniform_int_distribution<unsigned>(1, 5)(rng);
    std::vector<Subspace> s;
    for (unsigned e = 0; e < c; ++e) {
      int pick = std::uniform_int_distribution<int>(0, 2)(rng);
      s.push_back(pick == 0 ? slot::zero(*f) : pick == 1 ? slot::subfield(*f, 1) : slot::full(*f));
    }
    s[0] = std::uniform_int_distribution<int>(0, 1)(rng) ? slot::subfield(*f, 1) : slot::full(*f);
    SeriesRingSpec r(f, s);
    if (!validate_spec(r)) return r;
  }
}

SeriesIdealSpec random_ideal(std::mt19937& rng, const SeriesRingSpec& r) {
  for (;;) {
    unsigned c = std::uniform_int_distribution<unsigned>(1, 5)(rng);
    std::vector<Subspace> s;
    for (unsigned e = 0; e < c; ++e) s.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? r.slot(e) : slot::zero(*r.field()));
    s[0] = slot::zero(*r.field());
    SeriesIdealSpec i(r, s);
    if (!validate_spec(i)) return i;
  }
}

// All X^o * u with |o| <= B and deg u < W, straight from the definition.
std::vector<TruncatedLaurent> elements(const FieldPtr& f, int B, int W) {
  std::vector<TruncatedLaurent> out;
  std::vector<std::uint32_t> u(static_cast<std::size_t>(W), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == u.size()) {
      if (!u[0]) return;
      for (int o = -B; o <= B; ++o) out.push_back(TruncatedLaurent::polynomial(f, o, u));
      return;
    }
    for (std::uint32_t a = 0; a < f->order(); ++a) u[i] = a, rec(i + 1);
  };
  rec(0);
  return out;
}

}  // namespace

TEST(SeriesChecks, AgreesWithDefinitionOracle) {
  std::mt19937 rng(2024);
  for (auto name : {"F2", "F3", "F4"}) {
    auto f = F(name);
    int W = f->order() > 2 ? 2 : 3;
    auto xs = elements(f, 3, W);
    for (int t = 0; t < 10; ++t) {
      auto R = random_ring(rng, f);
      auto I = random_ideal(rng, R);
      for (unsigned n = 1; n <= 3; ++n) {
        int ni = static_cast<int>(n);
        bool psp = false, vd = false, rc = false;
        for (const auto& x : xs) {
          auto xn = x.pow(ni), xmn = x.pow(-ni, 40);
          vd |= !member(xn, R) && !member(xmn, R);
          rc |= !member(x, R) && member(xn, R);
          if (member(xn, I)) continue;
          for (const auto& y : xs) {
            auto yn = y.pow(ni);
            if (!member(yn, I) && member(xn * yn, I)) psp = true;
          }
        }
        SeriesBounds b{3, W};
        std::string ctx = R.to_string() + " / " + I.to_string() + " n=" + std::to_string(n);
        EXPECT_EQ(check_n_powerful_semiprimary(I, n, b).refuted(), psp) << ctx;
        EXPECT_EQ(check_nvd(R, n, b).refuted(), vd) << ctx;
        EXPECT_EQ(check_n_root_closed(R, n, b).refuted(), rc) << ctx;
      }
    }
  }
}
