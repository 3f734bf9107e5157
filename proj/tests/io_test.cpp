#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "semiprimary/classify/classify.hpp"
#include "semiprimary/io/fixture.hpp"

using namespace semiprimary;

TEST(RingText, Forms) {
  EXPECT_EQ(parse_ring("zn:12")->order(), 12u);
  auto p = parse_ring("poly:2:4x4:X^2*Y^2");
  EXPECT_EQ(p->order(), 4096u);
  EXPECT_EQ(p->spec(), mk_poly_quotient(2, {4, 4}, {"X^2*Y^2"})->spec());
  EXPECT_EQ(parse_ring("prod(zn:4,zn:2)")->order(), 8u);
  EXPECT_EQ(parse_ring("prod(zn:2,prod(zn:3,zn:2))")->order(), 12u);
  EXPECT_EQ(parse_ring("idz(zn:4,2)")->order(), 8u);
  EXPECT_EQ(parse_ring("idz(poly:2:2x2,2x2)")->order(), 64u);
  EXPECT_EQ(parse_ring("quo(zn:12,4)")->order(), 4u);
  EXPECT_EQ(parse_ring("loc(zn:12,4)")->order(), 3u);
  EXPECT_EQ(parse_ring("loc(prod(zn:4,zn:2),(1,0))")->order(), 4u);
  EXPECT_EQ(parse_ring("quo(prod(zn:4,zn:2),(2,0);(0,1))")->order(), 2u);
  EXPECT_THROW(parse_ring("zn:"), ParseError);
  EXPECT_THROW(parse_ring("prod(zn:4"), ParseError);
  EXPECT_THROW(parse_ring("ring"), ParseError);
  EXPECT_THROW(parse_ring("poly:4:2"), InvalidParameter);
}

TEST(RingJson, RoundTripsEveryKind) {
  std::vector<RingPtr> rings{mk_zn(36),
                             mk_product({mk_zn(2), mk_zn(3), mk_zn(4)}),
                             mk_poly_quotient(3, {3, 2}, {"X^2 - X*Y"}),
                             quotient_ring(ideal_generated(mk_zn(36), {6})).ring,
                             parse_ring("quo(poly:2:3x3,X*Y;X^2+Y)"),
                             localize(mk_product(mk_zn(4), mk_zn(6)), {5}).ring,
                             parse_ring("idz(zn:8,2x4)"),
                             parse_ring("idz(poly:2:2x2,2)")};
  for (const auto& r : rings) {
    auto back = ring_from_json(r->spec());
    EXPECT_EQ(back->spec(), r->spec());
    ASSERT_EQ(back->order(), r->order());
    // same multiplication up to the printed labels
    for (Elem a = 0; a < r->order(); a += 3)
      for (Elem b = 0; b < r->order(); b += 5)
        EXPECT_EQ(back->format(back->mul(back->parse(r->format(a)), back->parse(r->format(b)))), r->format(r->mul(a, b)));
  }
  EXPECT_THROW(ring_from_json({{"kind", "torus"}}), ParseError);
  EXPECT_THROW(ring_from_json({{"n", 3}}), ParseError);
}

TEST(IdealText, Forms) {
  auto r = mk_zn(12);
  EXPECT_EQ(parse_ideal(r, "gen:6").size(), 2u);
  EXPECT_EQ(parse_ideal(r, "gen:4;6").size(), 6u);
  EXPECT_TRUE(parse_ideal(r, "zero").is_zero());
  EXPECT_EQ(parse_ideal(r, "nil"), ideal_generated(r, {6}));
  EXPECT_EQ(parse_ideal(r, R"({"gens": ["3"]})").size(), 4u);
  EXPECT_THROW(parse_ideal(r, "gen:x"), ParseError);
  EXPECT_THROW(parse_ideal(r, "six"), ParseError);
  auto i = parse_ideal(mk_poly_quotient(2, {2, 2}), "gen:X;Y");
  EXPECT_EQ(ideal_from_json(i.ring_ptr(), ideal_to_json(i)), i);
}

TEST(Fixtures, RoundTripCanonically) {
  for (const auto& f : builtin_fixtures()) {
    SCOPED_TRACE(f.name);
    auto j = f.to_json();
    auto again = fixture_from_json(j).to_json();
    EXPECT_EQ(again, j);
    EXPECT_EQ(fixture_from_json(nlohmann::json::parse(j.dump())).to_json(), j);
  }
}

TEST(Fixtures, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& f : builtin_fixtures()) EXPECT_TRUE(names.insert(f.name).second) << f.name;
}

TEST(Fixtures, FilesMatchBuiltins) {
  const std::string dir = SEMIPRIMARY_FIXTURES;
  auto all = builtin_fixtures();
  std::set<std::string> seen;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    SCOPED_TRACE(entry.path().string());
    Fixture f = load_fixture(entry.path().string());
    EXPECT_EQ(f.name, entry.path().stem().string());
    EXPECT_EQ(f.to_json(), find_fixture(all, f.name).to_json());
    // parse, serialize, re-parse is stable
    EXPECT_EQ(fixture_from_json(f.to_json()).to_json(), f.to_json());
    seen.insert(f.name);
  }
  for (const auto& f : all) EXPECT_TRUE(seen.count(f.name)) << "missing file for " << f.name;
}

TEST(Fixtures, BareSpecsLoad) {
  auto sg = find_fixture(builtin_fixtures(), "z2_x2_x5");
  auto bare = fixture_from_json(sg.series_ideal->to_json(), "x");
  EXPECT_EQ(bare.kind, FixtureKind::SeriesIdeal);
  EXPECT_EQ(bare.series_ideal->to_json(), sg.series_ideal->to_json());
  auto ring = fixture_from_json(sg.series().to_json());
  EXPECT_EQ(ring.kind, FixtureKind::SeriesRing);
  auto zn = fixture_from_json(mk_zn(6)->spec());
  EXPECT_EQ(zn.ring->order(), 6u);
  EXPECT_THROW(fixture_from_json({{"monomial", {{"p", 2}}}}), ParseError);
}

TEST(Fixtures, FiniteIdealsAreWhatTheNamesSay) {
  auto all = builtin_fixtures();
  const auto& z = find_fixture(all, "z4xz2_zero_by_z2");
  EXPECT_EQ(z.ideal->size(), 2u);
  EXPECT_FALSE(is_prime(*z.ideal));
  const auto& six = find_fixture(all, "zn12_six");
  EXPECT_EQ(classify_ideal(*six.ideal).to_text().find("semiprimary: no; delta: ∞") != std::string::npos, true);
}
