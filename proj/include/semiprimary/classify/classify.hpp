#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semiprimary/errors.hpp"
#include "semiprimary/ring/constructions.hpp"
#include "semiprimary/ring/ideal.hpp"

namespace semiprimary {

/// A positive integer or infinity (nullopt).
using Extended = std::optional<unsigned>;

inline std::string format_extended(const Extended& n) { return n ? std::to_string(*n) : "∞"; }
inline nlohmann::json extended_json(const Extended& n) { return n ? nlohmann::json(*n) : nlohmann::json("inf"); }

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;
  explicit operator bool() const { return holds; }
};

enum class Tri { True, False, Unknown };

inline std::string tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "";
}

inline void require_proper(const Ideal& i) {
  if (!i.is_proper()) throw InvalidParameter("ideal " + i.to_string() + " is not proper");
}

inline void require_positive(unsigned n) {
  if (n < 1) throw InvalidParameter("exponent n must be at least 1");
}

namespace detail {

/// Associate classes of n-th powers: maps the class of x^n to the least class rep x producing it.
inline std::map<Elem, Elem> power_classes(const FiniteRing& r, unsigned n) {
  const auto& cls = r.associates();
  std::map<Elem, Elem> out;
  for (Elem x : cls.reps) out.emplace(cls.rep[r.pow(x, n)], x);
  return out;
}

}  // namespace detail

/// x^n y^n in I implies x^n in I or y^n in I. The predicate only sees x^n and y^n, and
/// membership is invariant under unit multiples, so the scan runs over classes of n-th powers.
inline PairCheck is_n_semiprimary(const Ideal& i, unsigned n) {
  require_proper(i);
  require_positive(n);
  const FiniteRing& r = i.ring();
  std::vector<std::pair<Elem, Elem>> q;  // (power class rep, root)
  for (auto [pw, root] : detail::power_classes(r, n))
    if (!i.contains(pw)) q.emplace_back(pw, root);
  std::optional<std::pair<Elem, Elem>> best;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a; b < q.size(); ++b)
      if (i.contains(r.mul(q[a].first, q[b].first))) {
        std::pair<Elem, Elem> w{q[a].second, q[b].second};
        if (w.first > w.second) std::swap(w.first, w.second);
        if (!best || w < *best) best = w;
      }
  return {!best, best};
}

/// xy in I implies x in I or y^n in I.
inline PairCheck is_n_primary(const Ideal& i, unsigned n) {
  require_proper(i);
  require_positive(n);
  const FiniteRing& r = i.ring();
  std::vector<Elem> xs, ys;
  for (Elem c : r.associates().reps) {
    if (!i.contains(c)) xs.push_back(c);
    if (!i.contains(r.pow(c, n))) ys.push_back(c);
  }
  for (Elem x : xs)
    for (Elem y : ys)
      if (i.contains(r.mul(x, y))) return {false, std::make_pair(x, y)};
  return {true, std::nullopt};
}

/// Least N with radical(I)^N inside I.
inline unsigned radical_exponent(const Ideal& i) {
  Ideal rad = radical(i);
  Ideal pw = rad;
  unsigned k = 1;
  while (!pw.subset_of(i)) {
    pw = ideal_product(pw, rad);
    ++k;
  }
  return k;
}

/// Least n making I n-semiprimary, or infinity when the radical is not prime.
inline Extended delta(const Ideal& i) {
  require_proper(i);
  if (!is_prime(radical(i))) return std::nullopt;
  const unsigned bound = radical_exponent(i);
  for (unsigned n = 1; n <= bound; ++n)
    if (is_n_semiprimary(i, n)) return n;
  throw Error("delta search passed radical exponent " + std::to_string(bound) + " for " + i.to_string());
}

/// Least n making I n-primary, or infinity.
inline Extended n_primary_index(const Ideal& i) {
  require_proper(i);
  if (!is_prime(radical(i))) return std::nullopt;
  const unsigned bound = radical_exponent(i);
  for (unsigned n = 1; n <= bound; ++n)
    if (is_n_primary(i, n)) return n;
  return std::nullopt;
}

struct AbsorbingCheck {
  Tri verdict = Tri::True;
  std::vector<Elem> witness;  // n+1 factors whose product lies in I, no n of them do
  std::string note;
};

inline constexpr double kAbsorbingBudget = 1e9;

/// Any product of n+1 elements in I has n factors with product in I.
/// Factors are drawn from associate-class representatives; the property is unit invariant.
inline AbsorbingCheck is_n_absorbing(const Ideal& i, unsigned n, double budget = kAbsorbingBudget) {
  require_proper(i);
  require_positive(n);
  const FiniteRing& r = i.ring();
  std::vector<Elem> reps;
  for (Elem c : r.associates().reps)
    if (c != 0 && !r.is_unit(c)) reps.push_back(c);
  AbsorbingCheck out;
  if (reps.empty()) {
    out.note = "no nonunit nonzero classes";
    return out;
  }
  // units never matter: dropping a unit factor leaves a product of n factors in I
  const std::size_t k = n + 1;
  double tuples = 1;
  for (std::size_t j = 0; j < k; ++j) tuples = tuples * static_cast<double>(reps.size() + j) / static_cast<double>(j + 1);
  const double work = tuples * static_cast<double>(k);
  const bool exhaustive = work <= budget;
  std::uint64_t steps = 0;
  const auto limit = static_cast<std::uint64_t>(budget);
  std::vector<std::size_t> idx(k, 0);
  std::vector<Elem> prefix(k + 1), suffix(k + 1);
  // non-decreasing index tuples in lexicographic order
  while (true) {
    if (!exhaustive && steps >= limit) {
      out.verdict = Tri::Unknown;
      out.note = "stopped after " + std::to_string(steps) + " tuples of " + std::to_string(static_cast<long double>(tuples));
      return out;
    }
    ++steps;
    prefix[0] = r.one();
    for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = r.mul(prefix[j], reps[idx[j]]);
    if (i.contains(prefix[k])) {
      suffix[k] = r.one();
      for (std::size_t j = k; j-- > 0;) suffix[j] = r.mul(suffix[j + 1], reps[idx[j]]);
      bool some = false;
      for (std::size_t j = 0; j < k && !some; ++j) some = i.contains(r.mul(prefix[j], suffix[j + 1]));
      if (!some) {
        out.verdict = Tri::False;
        for (auto j : idx) out.witness.push_back(reps[j]);
        return out;
      }
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == reps.size()) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
  }
  return out;
}

struct StrongCheck {
  bool holds = true;
  std::optional<std::pair<Ideal, Ideal>> witness;  // ideals J, K with J^n K^n in I, neither power inside I
};

/// J^n K^n in I implies J^n in I or K^n in I, over all proper ideals J, K.
/// Powers of the radical and principal ideals are tried before the full lattice.
inline StrongCheck is_strongly_n_semiprimary(const Ideal& i, unsigned n, std::size_t ideal_budget = kDefaultIdealBudget) {
  require_proper(i);
  require_positive(n);
  const RingPtr& r = i.ring_ptr();
  auto scan = [&](const std::vector<Ideal>& cands) -> std::optional<std::pair<Ideal, Ideal>> {
    std::vector<std::pair<Ideal, Ideal>> powers;  // (source, source^n)
    for (const auto& j : cands) {
      if (!j.is_proper()) continue;
      Ideal p = ideal_power(j, n);
      if (p.subset_of(i)) continue;
      bool dup = false;
      for (const auto& q : powers) dup |= q.second == p;
      if (!dup) powers.emplace_back(j, p);
    }
    for (std::size_t a = 0; a < powers.size(); ++a)
      for (std::size_t b = a; b < powers.size(); ++b)
        if (ideal_product(powers[a].second, powers[b].second).subset_of(i))
          return std::make_pair(powers[a].first, powers[b].first);
    return std::nullopt;
  };
  std::vector<Ideal> quick;
  Ideal rad = radical(i);
  Ideal pw = rad;
  for (unsigned k = 0; k < nilpotency_bound(*r) && !pw.is_zero(); ++k) {
    if (std::find(quick.begin(), quick.end(), pw) != quick.end()) break;
    quick.push_back(pw);
    pw = ideal_product(pw, rad);
  }
  for (Elem c : r->associates().reps)
    if (c != 0 && !r->is_unit(c)) quick.push_back(principal_ideal(r, c));
  if (auto w = scan(quick)) return {false, w};
  auto all = enumerate_ideals(r, ideal_budget);
  std::reverse(all.begin(), all.end());
  if (auto w = scan(all)) return {false, w};
  return {true, std::nullopt};
}

/// x^n divides p^n for all x outside P and p in P.
inline PairCheck is_n_divided_prime(const Ideal& p, unsigned n) {
  require_positive(n);
  if (!is_prime(p)) throw InvalidParameter("ideal " + p.to_string() + " is not prime");
  const RingPtr& r = p.ring_ptr();
  const auto& reps = r->associates().reps;
  for (Elem x : reps) {
    if (p.contains(x)) continue;
    Ideal xn = principal_ideal(r, r->pow(x, n));
    for (Elem q : reps)
      if (p.contains(q) && !xn.contains(r->pow(q, n))) return {false, std::make_pair(x, q)};
  }
  return {true, std::nullopt};
}

struct RingClassification {
  bool dim0 = true;
  bool vnr = false;
  bool reduced = false;
  // every n-semiprimary ideal containing nil(R) is prime (dimension zero)
  bool n_semiprimary_implies_prime_above_nil = true;
  // every n-semiprimary ideal is prime
  bool n_semiprimary_implies_prime = false;
  std::optional<Elem> vnr_witness;
};

inline RingClassification classify_ring(const RingPtr& r) {
  RingClassification c;
  c.reduced = nilradical(r).is_zero();
  c.vnr = true;
  for (Elem x : r->associates().reps)
    if (!principal_ideal(r, r->mul(x, x)).contains(x)) {
      c.vnr = false;
      c.vnr_witness = x;
      break;
    }
  c.n_semiprimary_implies_prime = c.vnr;
  return c;
}

struct ClassificationReport {
  std::string ideal;
  bool proper = true, prime = false, maximal = false, radical = false, primary = false, semiprimary = false;
  bool vnr_ambient = false, contains_nil = false;
  Extended n_primary, delta;
  std::map<std::string, std::string> notes;

  nlohmann::json to_json() const {
    nlohmann::json j{{"ideal", ideal},         {"proper", proper},       {"prime", prime},
                     {"maximal", maximal},     {"radical", radical},     {"primary", primary},
                     {"semiprimary", semiprimary}, {"vnr_ambient", vnr_ambient}, {"contains_nil", contains_nil},
                     {"n_primary", extended_json(n_primary)}, {"delta", extended_json(delta)}};
    j["notes"] = notes;
    return j;
  }

  std::string to_text() const {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string s;
    s += "ideal: " + ideal + "\n";
    s += std::string("semiprimary: ") + yn(semiprimary) + "; delta: " + format_extended(delta) + "\n";
    s += std::string("prime: ") + yn(prime) + "; maximal: " + yn(maximal) + "; radical: " + yn(radical) + "\n";
    s += std::string("primary: ") + yn(primary) + "; n-primary index: " + format_extended(n_primary) + "\n";
    s += std::string("contains nil(R): ") + yn(contains_nil) + "; von Neumann regular ring: " + yn(vnr_ambient) + "\n";
    for (const auto& [k, v] : notes) s += "  " + k + ": " + v + "\n";
    return s;
  }
};

inline std::string pair_text(const FiniteRing& r, std::pair<Elem, Elem> w) {
  return "x = " + r.format(w.first) + ", y = " + r.format(w.second);
}

inline ClassificationReport classify_ideal(const Ideal& i) {
  require_proper(i);
  const FiniteRing& r = i.ring();
  ClassificationReport rep;
  rep.ideal = i.to_string();
  auto pc = check_prime(i);
  rep.prime = rep.maximal = pc.prime;
  if (pc.witness) rep.notes["prime"] = "ab in I with " + pair_text(r, *pc.witness) + " outside I";
  Ideal rad = radical(i);
  rep.radical = rad == i;
  if (!rep.radical)
    for (Elem x : rad.members().elements())
      if (!i.contains(x)) {
        rep.notes["radical"] = r.format(x) + " lies in the radical but not in I";
        break;
      }
  auto rpc = check_prime(rad);
  rep.semiprimary = rpc.prime;
  if (rpc.witness) rep.notes["semiprimary"] = "radical " + rad.to_string() + " is not prime: " + pair_text(r, *rpc.witness);
  rep.delta = delta(i);
  rep.n_primary = n_primary_index(i);
  rep.primary = rep.n_primary.has_value();
  if (rep.delta && *rep.delta > 1) {
    auto w = is_n_semiprimary(i, *rep.delta - 1);
    if (w.witness)
      rep.notes["delta"] = "not " + std::to_string(*rep.delta - 1) + "-semiprimary: " + pair_text(r, *w.witness);
  }
  rep.contains_nil = nilradical(i.ring_ptr()).subset_of(i);
  rep.vnr_ambient = classify_ring(i.ring_ptr()).vnr;
  return rep;
}

}  // namespace semiprimary
