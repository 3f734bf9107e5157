#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "semiprimary/io/ring_spec.hpp"
#include "semiprimary/monomial/monomial_ideal.hpp"
#include "semiprimary/series/spec.hpp"
#include "semiprimary/valuation/valuation.hpp"

namespace semiprimary {

enum class FixtureKind { Finite, Monomial, Groups, SeriesRing, SeriesIdeal };

inline std::string fixture_kind_name(FixtureKind k) {
  switch (k) {
    case FixtureKind::Finite: return "finite";
    case FixtureKind::Monomial: return "monomial";
    case FixtureKind::Groups: return "groups";
    case FixtureKind::SeriesRing: return "series_ring";
    case FixtureKind::SeriesIdeal: return "series_ideal";
  }
  return "";
}

/// A named input: a finite ring with an ideal, a monomial ideal, a list of value groups,
/// or a series ring / ideal. `n` is the exponent the instance is usually examined at (0: none).
struct Fixture {
  Fixture(std::string name_, FixtureKind kind_) : name(std::move(name_)), kind(kind_) {}

  std::string name;
  FixtureKind kind = FixtureKind::Finite;
  RingPtr ring;
  std::optional<Ideal> ideal;
  std::optional<MonomialIdeal> monomial;
  std::vector<OrderedGroup> groups;
  std::optional<SeriesRingSpec> series_ring;
  std::optional<SeriesIdealSpec> series_ideal;
  unsigned n = 0;

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name}};
    switch (kind) {
      case FixtureKind::Finite:
        j["ring"] = ring->spec();
        j["ideal"] = ideal_to_json(*ideal);
        break;
      case FixtureKind::Monomial: {
        nlohmann::json g = nlohmann::json::array();
        auto names = default_variable_names(monomial->variables());
        for (const auto& e : monomial->gens()) g.push_back(monomial_to_string(e, names));
        j["monomial"] = {{"p", monomial->characteristic()}, {"vars", monomial->variables()}, {"gens", g}};
        break;
      }
      case FixtureKind::Groups: {
        nlohmann::json g = nlohmann::json::array();
        for (const auto& x : groups) g.push_back(x.name());
        j["groups"] = g;
        break;
      }
      case FixtureKind::SeriesRing: j["series_ring"] = series_ring->to_json(); break;
      case FixtureKind::SeriesIdeal: j["series_ideal"] = series_ideal->to_json(); break;
    }
    if (n) j["n"] = n;
    return j;
  }

  /// The series ring of a series fixture.
  const SeriesRingSpec& series() const {
    if (kind == FixtureKind::SeriesIdeal) return series_ideal->ring();
    if (kind == FixtureKind::SeriesRing) return *series_ring;
    throw InvalidParameter("fixture '" + name + "' is not a series fixture");
  }
};

inline Fixture finite_fixture(std::string name, RingPtr r, const std::vector<std::string>& gens, unsigned n) {
  std::vector<Elem> g;
  for (const auto& s : gens) g.push_back(r->parse(s));
  Fixture f{std::move(name), FixtureKind::Finite};
  f.ideal = ideal_generated(r, g);
  f.ring = std::move(r);
  f.n = n;
  return f;
}

inline Fixture monomial_fixture(std::string name, MonomialIdeal i, unsigned n) {
  Fixture f{std::move(name), FixtureKind::Monomial};
  f.monomial = std::move(i);
  f.n = n;
  return f;
}

inline Fixture series_ring_fixture(std::string name, SeriesRingSpec r, unsigned n = 0) {
  Fixture f{std::move(name), FixtureKind::SeriesRing};
  require_valid(r);
  f.series_ring = std::move(r);
  f.n = n;
  return f;
}

inline Fixture series_ideal_fixture(std::string name, SeriesIdealSpec i, unsigned n = 0) {
  Fixture f{std::move(name), FixtureKind::SeriesIdeal};
  require_valid(i);
  f.series_ideal = std::move(i);
  f.n = n;
  return f;
}

/// Accepts a fixture object, or a bare series ring / series ideal / finite ring spec.
inline Fixture fixture_from_json(const nlohmann::json& j, const std::string& fallback_name = "") {
  try {
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : fallback_name;
    unsigned n = j.contains("n") ? j.at("n").get<unsigned>() : 0;
    if (j.contains("field")) return series_ring_fixture(name, SeriesRingSpec::from_json(j), n);
    if (j.contains("ring") && j.at("ring").is_object() && j.at("ring").contains("field"))
      return series_ideal_fixture(name, SeriesIdealSpec::from_json(j), n);
    if (j.contains("series_ring")) return series_ring_fixture(name, SeriesRingSpec::from_json(j.at("series_ring")), n);
    if (j.contains("series_ideal")) return series_ideal_fixture(name, SeriesIdealSpec::from_json(j.at("series_ideal")), n);
    if (j.contains("monomial")) {
      const auto& m = j.at("monomial");
      return monomial_fixture(
          name,
          MonomialIdeal::parse(m.at("p").get<std::uint32_t>(), m.at("vars").get<std::size_t>(),
                               m.at("gens").get<std::vector<std::string>>()),
          n);
    }
    if (j.contains("groups")) {
      Fixture f{name, FixtureKind::Groups};
      for (const auto& g : j.at("groups")) f.groups.push_back(OrderedGroup::parse(g.get<std::string>()));
      f.n = n;
      return f;
    }
    if (j.contains("kind")) {
      Fixture f{name, FixtureKind::Finite};
      f.ring = ring_from_json(j);
      f.ideal = zero_ideal(f.ring);
      return f;
    }
    Fixture f{name, FixtureKind::Finite};
    f.ring = ring_from_json(j.at("ring"));
    f.ideal = j.contains("ideal") ? ideal_from_json(f.ring, j.at("ideal")) : zero_ideal(f.ring);
    f.n = n;
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixture: ") + e.what());
  }
}

inline Fixture load_fixture(const std::string& path) {
  return fixture_from_json(read_json_file(path), std::filesystem::path(path).stem().string());
}

namespace fixture_detail {

// d[e] is the subfield degree allowed at X^e, 0 for none
inline SeriesRingSpec degrees(std::uint32_t p, unsigned k, std::vector<unsigned> d) {
  return SeriesRingSpec::from_degrees(FiniteField::make(p, k), d);
}

// F_p + X^N F_p[[X]]
inline SeriesRingSpec r_n(std::uint32_t p, unsigned N) {
  std::vector<unsigned> d(N, 0);
  d[0] = 1;
  return degrees(p, 1, d);
}

}  // namespace fixture_detail

/// Every named instance the audit and acceptance suites refer to. The JSON files under
/// fixtures/ are these objects serialized.
inline std::vector<Fixture> builtin_fixtures() {
  using namespace fixture_detail;
  std::vector<Fixture> out;
  out.push_back(finite_fixture("z4xz2_zero_by_z2", mk_product(mk_zn(4), mk_zn(2)), {"(0,1)"}, 2));
  out.push_back(finite_fixture("zn12_six", mk_zn(12), {"6"}, 1));
  out.push_back(finite_fixture("xy_squares", mk_poly_quotient(2, {4, 4}, {"X^2*Y^2"}), {"X^2", "Y^2"}, 2));
  out.push_back(monomial_fixture("xy_squares_monomial", MonomialIdeal::parse(2, 2, {"X^2", "Y^2"}), 2));
  out.push_back(monomial_fixture("xy_cubes_monomial", MonomialIdeal::parse(3, 2, {"X^3", "Y^3"}), 3));
  for (unsigned n = 2; n <= 4; ++n)
    out.push_back(monomial_fixture("xy_yn_n" + std::to_string(n), MonomialIdeal::parse(2, 2, {"X*Y", "Y^" + std::to_string(n)}), n));
  {
    Fixture g{"value_groups", FixtureKind::Groups};
    g.groups = OrderedGroup::catalog();
    out.push_back(g);
  }
  SeriesRingSpec sg = degrees(2, 1, {1, 0, 1, 0});
  out.push_back(series_ideal_fixture("z2_x2_x5", SeriesIdealSpec::maximal(sg)));
  out.push_back(series_ideal_fixture("z2_x2_x5_tail", SeriesIdealSpec::tail(sg, 4), 2));
  out.push_back(series_ring_fixture("cusp_z2", degrees(2, 1, {1, 0})));
  out.push_back(series_ring_fixture("cusp_z3", degrees(3, 1, {1, 0})));
  for (unsigned N = 2; N <= 4; ++N) out.push_back(series_ring_fixture("conductor_n" + std::to_string(N), r_n(2, N)));
  {
    std::vector<unsigned> d(12, 0);
    d[0] = d[9] = 1;
    out.push_back(series_ring_fixture("z3_x9_x12", degrees(3, 1, d), 3));
  }
  for (std::uint32_t p : {2u, 3u})
    for (unsigned k = 2; k <= 4; ++k)
      out.push_back(series_ring_fixture("residue_tower_p" + std::to_string(p) + "_k" + std::to_string(k), degrees(p, k, {1, 1}), k));
  for (std::uint32_t p : {2u, 3u})
    out.push_back(series_ring_fixture("pullback_p" + std::to_string(p), degrees(p, 2, {1})));
  out.push_back(series_ring_fixture("wide_square_p3", degrees(3, 2, {1, 0, 2, 0}), 4));
  // cubic residue fields: some b has b^k and b^-k outside F_p for every k <= 4
  out.push_back(series_ring_fixture("split_gap_m3_p2", degrees(2, 3, {1, 0, 1}), 3));
  out.push_back(series_ring_fixture("split_gap_m3_p3", degrees(3, 3, {1, 0, 1}), 3));
  return out;
}

inline const Fixture& find_fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw InvalidParameter("no fixture named '" + name + "'");
}

}  // namespace semiprimary
