#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/ring/finite_ring.hpp"
#include "semiprimary/ring/ideal.hpp"

namespace semiprimary {

inline bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline RingPtr mk_zn(std::uint64_t n) { return FiniteRing::cyclic(n); }

namespace detail {

inline RingPtr product2(const RingPtr& a, const RingPtr& b, nlohmann::json spec) {
  const std::size_t nb = b->order();
  const std::size_t order = a->order() * nb;
  if (order > kMaxTableOrder) throw InvalidParameter("product order " + std::to_string(order) + " exceeds table limit");
  std::vector<std::string> labels;
  for (Elem x = 0; x < a->order(); ++x)
    for (Elem y = 0; y < nb; ++y) labels.push_back("(" + a->format(x) + "," + b->format(y) + ")");
  auto split = [nb](Elem e) { return std::pair<Elem, Elem>(static_cast<Elem>(e / nb), static_cast<Elem>(e % nb)); };
  auto join = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  auto r = FiniteRing::table(
      a->name() + "x" + b->name(), order,
      [&](Elem u, Elem v) {
        auto [x1, y1] = split(u);
        auto [x2, y2] = split(v);
        return join(a->add(x1, x2), b->add(y1, y2));
      },
      [&](Elem u, Elem v) {
        auto [x1, y1] = split(u);
        auto [x2, y2] = split(v);
        return join(a->mul(x1, x2), b->mul(y1, y2));
      },
      join(a->one(), b->one()), std::move(labels), std::move(spec));
  r->verify_axioms();
  return r;
}

}  // namespace detail

inline RingPtr mk_product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw InvalidParameter("product needs at least one factor");
  if (factors.size() == 1) return factors[0];
  nlohmann::json spec{{"kind", "product"}, {"factors", nlohmann::json::array()}};
  spec["factors"].push_back(factors[0]->spec());
  RingPtr r = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) {
    spec["factors"].push_back(factors[i]->spec());
    r = detail::product2(r, factors[i], spec);
  }
  return r;
}

inline RingPtr mk_product(const RingPtr& a, const RingPtr& b) { return mk_product(std::vector<RingPtr>{a, b}); }

struct QuotientResult {
  RingPtr ring;
  std::vector<Elem> projection;  // element of R -> element of R/J
};

namespace detail {

inline std::string ideal_suffix(const Ideal& j) { return "/" + j.to_string(); }

inline QuotientResult algebra_quotient(const Ideal& j) {
  const FiniteRing& r = j.ring();
  const AlgebraData& a = *r.algebra_data();
  const std::size_t d = a.basis.size();
  Subspace sub(a.p, d);
  for (Elem g : j.additive_gens()) sub.insert(r.digits(g));
  std::vector<bool> pivot(d, false);
  for (auto pv : sub.pivots()) pivot[pv] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d; ++i)
    if (!pivot[i]) keep.push_back(i);
  auto reduce = [&](Elem e) {
    Digits v = r.digits(e);
    sub.reduce(v);
    Elem out = 0, w = 1;
    for (std::size_t k = 0; k < keep.size(); ++k, w *= a.p) out += w * v[keep[k]];
    return out;
  };
  AlgebraData q;
  q.p = a.p;
  q.names = a.names;
  q.caps = a.caps;
  for (auto i : keep) q.basis.push_back(a.basis[i]);
  for (auto i : keep)
    for (auto k : keep) q.sc.push_back(reduce(a.sc[i * d + k]));
  for (Elem img : a.cap_image) q.cap_image.push_back(reduce(img));
  nlohmann::json spec{{"kind", "quotient"}, {"ring", r.spec()}, {"ideal", nlohmann::json::array()}};
  for (Elem g : j.generators()) spec["ideal"].push_back(r.format(g));
  auto ring = FiniteRing::algebra(std::move(q), r.name() + ideal_suffix(j), spec);
  std::vector<Elem> proj(r.order());
  for (Elem e = 0; e < r.order(); ++e) proj[e] = reduce(e);
  return {ring, std::move(proj)};
}

inline QuotientResult table_quotient(const Ideal& j) {
  const FiniteRing& r = j.ring();
  const auto jm = j.members().elements();
  std::vector<Elem> proj(r.order(), static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < r.order(); ++x) {
    if (proj[x] != static_cast<Elem>(-1)) continue;
    auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : jm) proj[r.add(x, m)] = id;
  }
  std::vector<std::string> labels;
  for (Elem x : reps) labels.push_back(r.format(x));
  nlohmann::json spec{{"kind", "quotient"}, {"ring", r.spec()}, {"ideal", nlohmann::json::array()}};
  for (Elem g : j.generators()) spec["ideal"].push_back(r.format(g));
  auto ring = FiniteRing::table(
      r.name() + ideal_suffix(j), reps.size(), [&](Elem u, Elem v) { return proj[r.add(reps[u], reps[v])]; },
      [&](Elem u, Elem v) { return proj[r.mul(reps[u], reps[v])]; }, proj[r.one()], std::move(labels), spec);
  return {ring, std::move(proj)};
}

}  // namespace detail

inline QuotientResult quotient_ring(const Ideal& j) {
  if (!j.is_proper()) throw InvalidParameter("cannot form the quotient by the unit ideal");
  if (j.ring().kind() == RingKind::Algebra) return detail::algebra_quotient(j);
  return detail::table_quotient(j);
}

/// Truncated polynomial algebra F_p[X_1..X_k]/(X_i^{d_i}), optionally modulo extra relations.
inline RingPtr mk_poly_quotient(std::uint32_t p, const std::vector<int>& caps, const std::vector<std::string>& extra = {}) {
  if (!is_small_prime(p) || p > 251) throw InvalidParameter("poly_quotient: p must be a prime below 256, got " + std::to_string(p));
  if (caps.empty()) throw InvalidParameter("poly_quotient: at least one variable cap is required");
  for (int c : caps)
    if (c < 1) throw InvalidParameter("poly_quotient: caps must be positive");
  const std::size_t k = caps.size();
  std::vector<Exponent> monomials;
  std::size_t total = 1;
  for (int c : caps) total *= static_cast<std::size_t>(c);
  if (total > 64) throw InvalidParameter("poly_quotient: more than 64 monomials below caps");
  for (std::size_t idx = 0; idx < total; ++idx) {
    Exponent e(k);
    std::size_t rest = idx;
    for (std::size_t v = k; v-- > 0;) {
      e[v] = static_cast<int>(rest % static_cast<std::size_t>(caps[v]));
      rest /= static_cast<std::size_t>(caps[v]);
    }
    monomials.push_back(e);
  }
  // monomial relations prune the basis directly; the rest go through a quotient
  std::vector<Exponent> killers;
  std::vector<std::string> rest;
  const auto names = default_variable_names(k);
  for (const auto& s : extra) {
    Polynomial f = Polynomial::parse(s, p, names);
    if (f.terms().size() == 1)
      killers.push_back(f.terms().begin()->first);
    else
      rest.push_back(s);
  }
  auto alive = [&](const Exponent& e) {
    for (std::size_t v = 0; v < k; ++v)
      if (e[v] >= caps[v]) return false;
    for (const auto& m : killers)
      if (divides(m, e)) return false;
    return true;
  };
  std::vector<Exponent> basis;
  for (const auto& e : monomials)
    if (alive(e)) basis.push_back(e);
  if (basis.empty()) throw InvalidParameter("poly_quotient: relations generate the unit ideal");
  std::sort(basis.begin(), basis.end(), MonomialLess{});
  std::map<Exponent, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  auto unit_vector = [&](std::size_t i) {
    Elem w = 1;
    for (std::size_t s = 0; s < i; ++s) w *= p;
    return w;
  };
  AlgebraData a;
  a.p = p;
  a.caps = caps;
  a.names = names;
  a.basis = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Exponent s = add_exponents(basis[i], basis[j]);
      a.sc.push_back(alive(s) ? unit_vector(pos[s]) : 0);
    }
  for (const auto& e : monomials) a.cap_image.push_back(alive(e) ? unit_vector(pos[e]) : 0);
  std::string name = "F" + std::to_string(p) + "[";
  for (std::size_t v = 0; v < k; ++v) name += (v ? "," : "") + a.names[v];
  name += "]/(";
  for (std::size_t v = 0; v < k; ++v) name += (v ? "," : "") + a.names[v] + "^" + std::to_string(caps[v]);
  nlohmann::json spec{{"kind", "poly_quotient"}, {"p", p}, {"caps", caps}, {"extra", extra}};
  for (const auto& s : extra) name += "," + s;
  auto base = FiniteRing::algebra(std::move(a), name + ")", spec);
  base->verify_axioms();
  if (rest.empty()) return base;
  std::vector<Elem> rels;
  for (const auto& s : rest) rels.push_back(base->parse(s));
  Ideal j = ideal_generated(base, rels);
  if (!j.is_proper()) throw InvalidParameter("poly_quotient: relations generate the unit ideal");
  auto q = quotient_ring(j).ring;
  // rebuild with the poly_quotient provenance so specs round-trip
  AlgebraData data = *q->algebra_data();
  auto out = FiniteRing::algebra(std::move(data), name + ")", spec);
  out->verify_axioms();
  return out;
}

struct LocalizationResult {
  RingPtr ring;
  std::vector<Elem> map;  // canonical map x -> x/1
  Elem idempotent = 0;
};

/// Multiplicative closure of a finite set of elements (always contains 1).
inline ElementSet multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& s) {
  ElementSet set(r.order());
  std::vector<Elem> members{r.one()};
  set.insert(r.one());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem g : s) {
      Elem y = r.mul(members[i], g);
      if (!set.contains(y)) {
        set.insert(y);
        members.push_back(y);
      }
    }
  return set;
}

inline LocalizationResult localize(const RingPtr& r, const std::vector<Elem>& s) {
  Elem e = r->one();
  for (Elem g : s) e = r->mul(e, r->idempotent_power(g));
  if (e == 0) throw InvalidParameter("localization: 0 lies in the multiplicative closure, the result is the zero ring");
  std::vector<Elem> image(r->order());
  std::map<Elem, Elem> index;
  for (Elem x = 0; x < r->order(); ++x) index.emplace(r->mul(e, x), 0);
  std::vector<Elem> values;
  for (auto& [v, id] : index) {
    id = static_cast<Elem>(values.size());
    values.push_back(v);
  }
  for (Elem x = 0; x < r->order(); ++x) image[x] = index[r->mul(e, x)];
  std::vector<std::string> labels;
  for (Elem v : values) labels.push_back(r->format(v));
  nlohmann::json spec{{"kind", "localization"}, {"ring", r->spec()}, {"s", nlohmann::json::array()}};
  for (Elem g : s) spec["s"].push_back(r->format(g));
  auto ring = FiniteRing::table(
      r->name() + "_S", values.size(), [&](Elem u, Elem v) { return index[r->add(values[u], values[v])]; },
      [&](Elem u, Elem v) { return index[r->mul(values[u], values[v])]; }, index[e], std::move(labels), spec);
  ring->verify_axioms();
  // every element of S becomes a unit, and the kernel is the S-torsion
  ElementSet closure = multiplicative_closure(*r, s);
  closure.for_each([&](Elem t) {
    if (!ring->is_unit(image[t])) throw Error("localization check failed: image of " + r->format(t) + " is not a unit");
  });
  auto sv = closure.elements();
  for (Elem x = 0; x < r->order(); ++x) {
    bool torsion = std::any_of(sv.begin(), sv.end(), [&](Elem t) { return r->mul(x, t) == 0; });
    if (torsion != (image[x] == 0)) throw Error("localization check failed: kernel mismatch at " + r->format(x));
  }
  return {ring, std::move(image), e};
}

/// Finite R-module on Z_{c_1} + ... + Z_{c_k} with action given on the generators.
struct ModuleSpec {
  std::vector<std::uint32_t> orders;
  // act(r, i) = coordinates of r * g_i
  std::function<std::vector<std::uint32_t>(Elem, std::size_t)> act;
  nlohmann::json spec;

  std::size_t size() const {
    std::size_t n = 1;
    for (auto c : orders) n *= c;
    return n;
  }
  std::vector<std::uint32_t> coords(Elem m) const {
    std::vector<std::uint32_t> v(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      v[i] = m % orders[i];
      m /= orders[i];
    }
    return v;
  }
  Elem index(const std::vector<std::uint32_t>& v) const {
    Elem m = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) m = m * orders[i] + v[i] % orders[i];
    return m;
  }
  Elem add(Elem a, Elem b) const {
    auto x = coords(a), y = coords(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return index(x);
  }
  Elem scale(Elem r, Elem m) const {
    auto c = coords(m);
    std::vector<std::uint64_t> acc(orders.size(), 0);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (!c[i]) continue;
      auto img = act(r, i);
      for (std::size_t j = 0; j < orders.size(); ++j) acc[j] = (acc[j] + std::uint64_t{c[i]} * img[j]) % orders[j];
    }
    std::vector<std::uint32_t> out(acc.begin(), acc.end());
    return index(out);
  }
  std::string label(Elem m) const {
    auto c = coords(m);
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ";" : "") + std::to_string(c[i]);
    return s + "]";
  }
};

/// The natural action: Z_n on Z_c with c | n by reduction, an F_p-algebra on F_p through
/// its constant coefficient, and any ring on Z_c through the integer it represents.
inline ModuleSpec natural_module(const RingPtr& r, std::vector<std::uint32_t> orders) {
  if (orders.empty()) throw InvalidParameter("module needs at least one cyclic factor");
  const std::uint64_t ch = r->characteristic();
  for (auto c : orders)
    if (c < 2 || ch % c != 0) throw InvalidParameter("cyclic order " + std::to_string(c) + " does not divide char R");
  ModuleSpec m;
  m.orders = orders;
  m.spec = {{"orders", orders}, {"action", "natural"}};
  if (r->kind() == RingKind::Cyclic) {
    m.act = [orders](Elem x, std::size_t i) {
      std::vector<std::uint32_t> v(orders.size(), 0);
      v[i] = x % orders[i];
      return v;
    };
  } else if (r->kind() == RingKind::Algebra) {
    const std::uint32_t p = r->algebra_data()->p;
    m.act = [orders, p](Elem x, std::size_t i) {
      std::vector<std::uint32_t> v(orders.size(), 0);
      v[i] = (x % p) % orders[i];
      return v;
    };
  } else {
    throw InvalidParameter("natural action is defined for zn and poly_quotient rings only; give an explicit action");
  }
  return m;
}

inline void validate_module(const FiniteRing& r, const ModuleSpec& m) {
  const std::size_t k = m.orders.size();
  for (Elem x = 0; x < r.order(); ++x)
    for (std::size_t i = 0; i < k; ++i) {
      auto img = m.act(x, i);
      if (img.size() != k) throw InvalidParameter("module action returns the wrong number of coordinates");
      Elem gi = m.index(img);
      // c_i g_i = 0 forces c_i (x g_i) = 0
      Elem t = 0;
      for (std::uint32_t s = 0; s < m.orders[i]; ++s) t = m.add(t, gi);
      if (t != 0) throw InvalidParameter("module action is incompatible with the cyclic order of a generator");
    }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> unit(k, 0);
    unit[i] = 1;
    Elem g = m.index(unit);
    if (m.scale(r.one(), g) != g) throw InvalidParameter("1 does not act as the identity");
    for (Elem x = 0; x < r.order(); ++x)
      for (Elem y = 0; y < r.order(); ++y) {
        if (m.scale(r.add(x, y), g) != m.add(m.scale(x, g), m.scale(y, g)))
          throw InvalidParameter("module action is not additive in the ring argument");
        if (m.scale(r.mul(x, y), g) != m.scale(x, m.scale(y, g))) throw InvalidParameter("module action is not associative");
      }
  }
}

struct IdealizationResult {
  RingPtr ring;
  ModuleSpec module;
  std::size_t module_order = 0;
  Elem embed(Elem r, Elem m) const { return static_cast<Elem>(r * module_order + m); }
};

inline IdealizationResult mk_idealization(const RingPtr& r, ModuleSpec m) {
  validate_module(*r, m);
  const std::size_t nm = m.size();
  const std::size_t order = r->order() * nm;
  if (order > kMaxTableOrder) throw InvalidParameter("idealization order " + std::to_string(order) + " exceeds table limit");
  // action tables keep construction quadratic in the order
  std::vector<Elem> act(r->order() * nm);
  for (Elem x = 0; x < r->order(); ++x)
    for (Elem y = 0; y < nm; ++y) act[x * nm + y] = m.scale(x, y);
  std::vector<Elem> madd(nm * nm);
  for (Elem x = 0; x < nm; ++x)
    for (Elem y = 0; y < nm; ++y) madd[x * nm + y] = m.add(x, y);
  std::vector<std::string> labels;
  for (Elem x = 0; x < r->order(); ++x)
    for (Elem y = 0; y < nm; ++y) labels.push_back("(" + r->format(x) + "," + m.label(y) + ")");
  nlohmann::json spec{{"kind", "idealization"}, {"ring", r->spec()}, {"module", m.spec}};
  auto ring = FiniteRing::table(
      r->name() + "(+)M", order,
      [&](Elem u, Elem v) {
        return static_cast<Elem>(r->add(u / nm, v / nm) * nm + madd[(u % nm) * nm + v % nm]);
      },
      [&](Elem u, Elem v) {
        Elem a = u / nm, b = v / nm, x = u % nm, y = v % nm;
        return static_cast<Elem>(r->mul(a, b) * nm + madd[act[b * nm + x] * nm + act[a * nm + y]]);
      },
      r->one() * static_cast<Elem>(nm), std::move(labels), spec);
  ring->verify_axioms();
  return {ring, std::move(m), nm};
}

/// The ideal I(+)N of R(+)M, for an ideal I of R and a submodule N given by generators.
inline Ideal idealization_ideal(const IdealizationResult& id, const Ideal& i, const std::vector<Elem>& submodule_gens) {
  std::vector<Elem> gens;
  for (Elem g : i.additive_gens()) gens.push_back(id.embed(g, 0));
  for (Elem n : submodule_gens) gens.push_back(id.embed(0, n));
  Ideal out = ideal_generated(id.ring, gens);
  std::vector<Elem> module_part;
  for (Elem n : submodule_gens) module_part.push_back(id.embed(0, n));
  Ideal n_ideal = ideal_generated(id.ring, module_part);
  if (out.size() != i.size() * n_ideal.size()) throw InvalidParameter("I(+)N requires IM inside N");
  return out;
}

}  // namespace semiprimary
