#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "semiprimary/io/fixture.hpp"
#include "semiprimary/monomial/monomial_ideal.hpp"
#include "semiprimary/pid/pid_model.hpp"
#include "semiprimary/ring/constructions.hpp"
#include "semiprimary/series/spec.hpp"
#include "semiprimary/valuation/valuation.hpp"

namespace semiprimary {

enum class Profile { Small, Default, Large };

inline std::string profile_name(Profile p) {
  switch (p) {
    case Profile::Small: return "small";
    case Profile::Default: return "default";
    case Profile::Large: return "large";
  }
  return "";
}

inline Profile parse_profile(const std::string& s) {
  if (s == "small") return Profile::Small;
  if (s == "default") return Profile::Default;
  if (s == "large") return Profile::Large;
  throw InvalidParameter("unknown corpus profile '" + s + "'; expected small, default or large");
}

/// A finite ring under audit. Generated rings are audited over their whole ideal lattice;
/// fixture rings only at their named ideal.
struct FiniteItem {
  FiniteItem(std::string name_, std::string family_, RingPtr ring_)
      : name(std::move(name_)), family(std::move(family_)), ring(std::move(ring_)) {}

  std::string name;
  std::string family;  // zn, product, poly, idealization, fixture
  RingPtr ring;
  bool all_ideals = true;
  std::optional<Ideal> ideal;  // fixture ideal
  // idealizations: the base ring and the construction, for transporting ideals
  RingPtr base;
  std::optional<IdealizationResult> idz;
};

struct SeriesItem {
  std::string name;
  SeriesRingSpec ring;
  std::vector<SeriesIdealSpec> ideals;  // maximal ideal first, then tails inside the conductor
};

/// A monomial ideal containing X^a and Y^b, with the truncated ring F_p[X,Y]/(X^a, Y^b) it lives in.
struct MonomialItem {
  std::string name;
  MonomialIdeal ideal;
  std::vector<int> caps;
};

struct Corpus {
  Profile profile = Profile::Default;
  unsigned max_n = 4;       // exponents 1..max_n; upward checks reach max_n + 4
  std::size_t ideal_cap = 0;  // rings with more ideals are skipped per check
  std::vector<FiniteItem> rings;
  std::vector<SeriesItem> series;
  std::vector<MonomialItem> monomials;
  std::vector<PidIdeal> pid;
  std::vector<OrderedGroup> groups;
  std::vector<Fixture> fixtures;

  nlohmann::json manifest() const {
    nlohmann::json m{{"profile", profile_name(profile)}, {"max_n", max_n}};
    nlohmann::json r = nlohmann::json::array();
    for (const auto& it : rings) r.push_back({{"name", it.name}, {"family", it.family}, {"order", it.ring->order()}});
    m["rings"] = r;
    nlohmann::json s = nlohmann::json::array();
    for (const auto& it : series) s.push_back(it.name);
    m["series"] = s;
    nlohmann::json mo = nlohmann::json::array();
    for (const auto& it : monomials) mo.push_back(it.name);
    m["monomials"] = mo;
    nlohmann::json p = nlohmann::json::array();
    for (const auto& i : pid) p.push_back(i.to_string());
    m["pid"] = p;
    nlohmann::json g = nlohmann::json::array();
    for (const auto& x : groups) g.push_back(x.name());
    m["groups"] = g;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : fixtures) f.push_back(x.name);
    m["fixtures"] = f;
    return m;
  }
};

namespace corpus_detail {

inline std::string caps_text(const std::vector<int>& caps) {
  std::string s;
  for (std::size_t i = 0; i < caps.size(); ++i) s += (i ? "x" : "") + std::to_string(caps[i]);
  return s;
}

inline void add_poly(Corpus& c, std::uint32_t p, std::vector<int> caps, std::vector<std::string> extra = {}) {
  std::string name = "poly:" + std::to_string(p) + ":" + caps_text(caps);
  for (std::size_t i = 0; i < extra.size(); ++i) name += (i ? ";" : ":") + extra[i];
  c.rings.emplace_back(name, "poly", mk_poly_quotient(p, caps, extra));
}

inline void add_idealization(Corpus& c, const std::string& base_text, const RingPtr& base, std::vector<std::uint32_t> orders) {
  auto idz = mk_idealization(base, natural_module(base, orders));
  std::string o;
  for (std::size_t i = 0; i < orders.size(); ++i) o += (i ? "x" : "") + std::to_string(orders[i]);
  FiniteItem it{"idz(" + base_text + "," + o + ")", "idealization", idz.ring};
  it.base = base;
  it.idz = std::move(idz);
  c.rings.push_back(std::move(it));
}

inline std::vector<unsigned> subfield_choices(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

// All valid F_q coefficient-constraint rings with conductor <= cmax; slot choices are the
// zero space and the subfields of F_q.
inline void add_series_family(Corpus& c, std::uint32_t p, unsigned k, unsigned cmax, std::set<std::string>& seen) {
  FieldPtr f = FiniteField::make(p, k);
  auto subs = subfield_choices(k);
  std::vector<unsigned> opts{0};
  opts.insert(opts.end(), subs.begin(), subs.end());
  for (unsigned cond = 0; cond <= cmax; ++cond) {
    std::vector<std::size_t> idx(cond, 0);
    while (true) {
      std::vector<unsigned> d(cond);
      bool ok = true;
      for (unsigned e = 0; e < cond; ++e) {
        d[e] = e == 0 ? subs[idx[0] % subs.size()] : opts[idx[e]];
        if (e == 0 && idx[0] >= subs.size()) ok = false;
      }
      if (ok) {
        SeriesRingSpec r = SeriesRingSpec::from_degrees(f, d);
        if (!validate_spec(r) && seen.insert(r.to_string()).second) {
          SeriesItem it{r.to_string(), r, {SeriesIdealSpec::maximal(r)}};
          unsigned lo = std::max(r.conductor(), 1u);
          for (unsigned m = lo; m <= lo + 1; ++m) {
            auto t = SeriesIdealSpec::tail(r, m);
            if (!(t.slots() == it.ideals[0].slots())) it.ideals.push_back(t);
          }
          c.series.push_back(std::move(it));
        }
      }
      // odometer: slot 0 ranges over subfields, the rest over zero and subfields
      std::size_t e = 0;
      while (e < cond) {
        std::size_t lim = e == 0 ? subs.size() : opts.size();
        if (++idx[e] < lim) break;
        idx[e] = 0;
        ++e;
      }
      if (e == cond) break;
    }
  }
}

// Staircases inside the a x b box: h_0 >= h_1 >= ... >= h_{a-1}, h_0 >= 1.
inline void add_monomial_box(Corpus& c, std::uint32_t p, int a, int b) {
  std::vector<int> h(static_cast<std::size_t>(a), 0);
  auto emit = [&] {
    std::vector<std::string> gens{"X^" + std::to_string(a)};
    for (int i = 0; i < a; ++i) {
      std::string g = (i ? "X^" + std::to_string(i) + "*" : std::string()) + "Y^" + std::to_string(h[static_cast<std::size_t>(i)]);
      if (h[static_cast<std::size_t>(i)] == 0) g = i ? "X^" + std::to_string(i) : "1";
      gens.push_back(g);
    }
    MonomialIdeal m = MonomialIdeal::parse(p, 2, gens);
    if (!m.is_proper()) return;
    c.monomials.push_back({"F" + std::to_string(p) + "[X,Y] " + m.to_string(), m, {a, b}});
  };
  // enumerate non-increasing sequences with values in [0, b]
  std::function<void(int, int)> rec = [&](int i, int top) {
    if (i == a) {
      if (h[0] >= 1) emit();
      return;
    }
    for (int v = top; v >= 0; --v) {
      h[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, b);
}

}  // namespace corpus_detail

/// Deterministic corpus for a profile. Nothing here is random: every family is enumerated in
/// a fixed order, so two calls give identical manifests.
inline Corpus corpus_generate(Profile profile) {
  using namespace corpus_detail;
  Corpus c;
  c.profile = profile;
  const bool small = profile == Profile::Small, large = profile == Profile::Large;
  c.ideal_cap = large ? 4000 : 600;

  const unsigned zmax = small ? 16 : 64;
  for (unsigned n = 2; n <= zmax; ++n) c.rings.emplace_back("zn:" + std::to_string(n), "zn", mk_zn(n));

  const unsigned pmax = small ? 16 : 256, fmax = small ? 8 : large ? 128 : 16;
  for (unsigned a = 2; a <= fmax; ++a)
    for (unsigned b = a; b <= fmax && a * b <= pmax; ++b)
      c.rings.emplace_back("prod(zn:" + std::to_string(a) + ",zn:" + std::to_string(b) + ")", "product",
                             mk_product(mk_zn(a), mk_zn(b)));

  add_poly(c, 2, {2});
  add_poly(c, 2, {3});
  add_poly(c, 2, {2, 2});
  add_poly(c, 3, {2});
  if (!small) {
    add_poly(c, 2, {4});
    add_poly(c, 2, {2, 3});
    add_poly(c, 2, {2, 4});
    add_poly(c, 2, {3, 3}, {"X*Y"});
    add_poly(c, 2, {4, 4}, {"X*Y"});
    add_poly(c, 2, {3, 3}, {"X^2*Y^2"});
    add_poly(c, 2, {4, 4}, {"X^2*Y", "X*Y^2"});
    add_poly(c, 3, {3});
    add_poly(c, 3, {4});
    add_poly(c, 3, {2, 2});
    add_poly(c, 3, {3, 3}, {"X*Y"});
  }
  if (large) {
    add_poly(c, 2, {3, 4});
    add_poly(c, 2, {4, 4}, {"X^2*Y^2"});
    add_poly(c, 2, {4, 4}, {"X^3*Y", "X*Y^3"});
    add_poly(c, 3, {2, 3});
  }

  add_idealization(c, "zn:2", mk_zn(2), {2});
  add_idealization(c, "zn:4", mk_zn(4), {2});
  add_idealization(c, "zn:4", mk_zn(4), {4});
  add_idealization(c, "zn:6", mk_zn(6), {3});
  if (!small) {
    add_idealization(c, "zn:3", mk_zn(3), {3});
    add_idealization(c, "zn:4", mk_zn(4), {2, 2});
    add_idealization(c, "zn:6", mk_zn(6), {2});
    add_idealization(c, "zn:8", mk_zn(8), {2});
    add_idealization(c, "zn:8", mk_zn(8), {4});
    add_idealization(c, "zn:9", mk_zn(9), {3});
    add_idealization(c, "zn:12", mk_zn(12), {2});
    add_idealization(c, "zn:12", mk_zn(12), {6});
    add_idealization(c, "zn:16", mk_zn(16), {4});
    add_idealization(c, "zn:27", mk_zn(27), {3});
    add_idealization(c, "poly:2:2", mk_poly_quotient(2, {2}), {2});
    add_idealization(c, "poly:2:2x2", mk_poly_quotient(2, {2, 2}), {2});
    add_idealization(c, "poly:2:3", mk_poly_quotient(2, {3}), {2, 2});
    add_idealization(c, "poly:3:2", mk_poly_quotient(3, {2}), {3});
  }

  c.fixtures = builtin_fixtures();
  for (const auto& f : c.fixtures) {
    if (f.kind != FixtureKind::Finite) continue;
    FiniteItem it{"fixture:" + f.name, "fixture", f.ring};
    it.all_ideals = false;
    it.ideal = f.ideal;
    c.rings.push_back(std::move(it));
  }

  std::set<std::string> seen;
  add_series_family(c, 2, 1, small ? 3 : 4, seen);
  add_series_family(c, 3, 1, small ? 3 : 4, seen);
  add_series_family(c, 2, 2, small ? 2 : 3, seen);
  if (large) {
    add_series_family(c, 5, 1, 4, seen);
    add_series_family(c, 3, 2, 3, seen);
    add_series_family(c, 2, 3, 3, seen);
  }
  for (const auto& f : c.fixtures) {
    if (f.kind != FixtureKind::SeriesRing && f.kind != FixtureKind::SeriesIdeal) continue;
    const auto& r = f.series();
    if (!seen.insert(r.to_string()).second) continue;
    SeriesItem it{r.to_string(), r, {SeriesIdealSpec::maximal(r)}};
    if (f.kind == FixtureKind::SeriesIdeal && !f.series_ideal->is_maximal()) it.ideals.push_back(*f.series_ideal);
    c.series.push_back(std::move(it));
  }

  add_monomial_box(c, 2, 2, 2);
  add_monomial_box(c, 3, 2, 2);
  if (!small) {
    add_monomial_box(c, 2, 2, 3);
    add_monomial_box(c, 2, 3, 3);
  }
  if (large) add_monomial_box(c, 2, 3, 4);

  const unsigned zm = small ? 30 : large ? 200 : 60;
  for (unsigned m = 2; m <= zm; ++m) c.pid.push_back(PidIdeal::integer(m));
  // monic polynomials of degree <= 3 over F2 (<= 2 over F3)
  for (std::uint32_t p : {2u, 3u}) {
    FieldPtr f = FiniteField::make(p);
    int dmax = p == 2 ? 3 : 2;
    for (int d = 1; d <= dmax; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<FiniteField::Elem> cs(static_cast<std::size_t>(d) + 1, 0);
        std::uint64_t x = code;
        for (int i = 0; i < d; ++i, x /= p) cs[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(x % p);
        cs[static_cast<std::size_t>(d)] = 1;
        c.pid.push_back(PidIdeal::polynomial(FqPoly(f, cs)));
      }
    }
  }
  c.groups = OrderedGroup::catalog();
  return c;
}

}  // namespace semiprimary
