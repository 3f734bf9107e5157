#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/monomial/polynomial.hpp"

namespace semiprimary {

/// Monomial ideal of F_p[X_1..X_k] with minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal(std::uint32_t p, std::size_t k, std::vector<Exponent> gens = {}) : p_(p), k_(k) {
    for (const auto& g : gens)
      if (g.size() != k) throw InvalidParameter("generator has the wrong number of variables");
    gens_ = minimalize(std::move(gens));
  }

  /// Generators given as monomial strings, e.g. {"X*Y", "Y^2"}.
  static MonomialIdeal parse(std::uint32_t p, std::size_t k, const std::vector<std::string>& gens) {
    std::vector<Exponent> es;
    for (const auto& s : gens) {
      Polynomial f = Polynomial::parse(s, p, k);
      if (f.terms().size() != 1) throw ParseError("monomial ideal generator '" + s + "' is not a monomial");
      es.push_back(f.terms().begin()->first);
    }
    return MonomialIdeal(p, k, es);
  }

  static MonomialIdeal variables(std::uint32_t p, std::size_t k, const std::vector<std::size_t>& which) {
    std::vector<Exponent> g;
    for (auto v : which) {
      Exponent e(k, 0);
      e[v] = 1;
      g.push_back(e);
    }
    return MonomialIdeal(p, k, g);
  }

  std::uint32_t characteristic() const { return p_; }
  std::size_t variables() const { return k_; }
  const std::vector<Exponent>& gens() const { return gens_; }

  bool is_proper() const {
    for (const auto& g : gens_)
      if (total_degree(g) == 0) return false;
    return true;
  }

  bool contains_monomial(const Exponent& e) const {
    for (const auto& g : gens_)
      if (divides(g, e)) return true;
    return false;
  }

  bool contains(const Polynomial& f) const {
    for (const auto& [e, c] : f.terms())
      if (!contains_monomial(e)) return false;
    return true;
  }

  bool subset_of(const MonomialIdeal& o) const {
    for (const auto& g : gens_)
      if (!o.contains_monomial(g)) return false;
    return true;
  }

  MonomialIdeal operator*(const MonomialIdeal& o) const {
    std::vector<Exponent> g;
    for (const auto& a : gens_)
      for (const auto& b : o.gens_) g.push_back(add_exponents(a, b));
    return MonomialIdeal(p_, k_, g);
  }

  MonomialIdeal operator+(const MonomialIdeal& o) const {
    auto g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(p_, k_, g);
  }

  MonomialIdeal power(unsigned n) const {
    if (n == 0) return MonomialIdeal(p_, k_, {Exponent(k_, 0)});
    MonomialIdeal r = *this;
    for (unsigned i = 1; i < n; ++i) r = r * *this;
    return r;
  }

  /// The radical of a monomial ideal is generated by the squarefree parts of its generators.
  MonomialIdeal radical() const {
    std::vector<Exponent> g;
    for (auto e : gens_) {
      for (auto& x : e) x = x > 0 ? 1 : 0;
      g.push_back(e);
    }
    return MonomialIdeal(p_, k_, g);
  }

  /// Prime exactly when generated by variables (the zero ideal included).
  bool is_prime() const {
    for (const auto& g : gens_)
      if (total_degree(g) != 1) return false;
    return true;
  }

  std::string to_string() const {
    if (gens_.empty()) return "(0)";
    auto names = default_variable_names(k_);
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + monomial_to_string(gens_[i], names);
    return s + ")";
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.p_ == b.p_ && a.gens_ == b.gens_; }

 private:
  static std::vector<Exponent> minimalize(std::vector<Exponent> g) {
    std::sort(g.begin(), g.end(), MonomialLess{});
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Exponent> out;
    for (const auto& e : g) {
      bool redundant = false;
      for (const auto& o : out) redundant |= divides(o, e);
      if (!redundant) out.push_back(e);
    }
    return out;
  }

  std::uint32_t p_;
  std::size_t k_;
  std::vector<Exponent> gens_;
};

enum class Cert { CertifiedTrue, CertifiedFalse, Unknown };

inline std::string cert_name(Cert c) {
  switch (c) {
    case Cert::CertifiedTrue: return "certified-true";
    case Cert::CertifiedFalse: return "certified-false";
    case Cert::Unknown: return "unknown";
  }
  return "";
}

struct Certificate {
  Cert kind = Cert::Unknown;
  std::string reason;
};

/// Radical prime and radical^n inside I is sufficient; a non-prime radical is fatal.
inline Certificate certify_n_semiprimary(const MonomialIdeal& i, unsigned n) {
  if (n < 1) throw InvalidParameter("exponent n must be at least 1");
  if (!i.is_proper()) throw InvalidParameter("ideal is not proper");
  MonomialIdeal rad = i.radical();
  if (!rad.is_prime()) return {Cert::CertifiedFalse, "radical " + rad.to_string() + " is not prime"};
  if (rad.power(n).subset_of(i))
    return {Cert::CertifiedTrue, "radical " + rad.to_string() + " is prime and its " + std::to_string(n) + "-th power lies in I"};
  return {Cert::Unknown, "radical^" + std::to_string(n) + " is not inside I"};
}

/// Sharper sufficient condition in characteristic p: write n = p^e m. Every x in the radical P
/// has x^(p^e) in the Frobenius power P^[p^e], so (P^[p^e])^m inside I forces x^n in I.
inline Certificate certify_frobenius(const MonomialIdeal& i, unsigned n) {
  Certificate base = certify_n_semiprimary(i, n);
  if (base.kind != Cert::Unknown) return base;
  const std::uint32_t p = i.characteristic();
  unsigned q = 1, m = n;
  while (m % p == 0) {
    q *= p;
    m /= p;
  }
  if (q == 1) return base;
  MonomialIdeal rad = i.radical();
  std::vector<Exponent> frob;
  for (auto e : rad.gens()) {
    for (auto& x : e) x *= static_cast<int>(q);
    frob.push_back(e);
  }
  MonomialIdeal f(p, i.variables(), frob);
  if (f.power(m).subset_of(i))
    return {Cert::CertifiedTrue, "every radical element has its " + std::to_string(q) + "-th power in " + f.to_string() +
                                     ", whose " + std::to_string(m) + "-th power lies in I"};
  return base;
}

struct SearchBounds {
  int degree = 3;
  int terms = 3;
};

/// Candidate polynomials of degree <= bound with at most `terms` monomials, ordered by
/// degree, then term count, then support and coefficients lexicographically.
inline std::vector<Polynomial> search_candidates(std::uint32_t p, std::size_t k, SearchBounds b, std::size_t budget) {
  std::vector<Exponent> monos;
  {
    Exponent e(k, 0);
    std::vector<Exponent> all;
    // enumerate all exponent vectors of total degree <= b.degree
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
      if (v == k) {
        all.push_back(e);
        return;
      }
      for (int a = 0; a <= left; ++a) {
        e[v] = a;
        rec(v + 1, left - a);
      }
      e[v] = 0;
    };
    rec(0, b.degree);
    std::sort(all.begin(), all.end(), MonomialLess{});
    monos = all;
  }
  struct Cand {
    int degree;
    std::size_t terms;
    std::vector<std::size_t> support;
    std::vector<std::uint32_t> coeffs;
  };
  std::vector<Cand> cands;
  std::vector<std::size_t> support;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (!support.empty()) {
      std::vector<std::uint32_t> c(support.size(), 1);
      while (true) {
        if (cands.size() >= budget) throw BudgetExceeded("polynomial search space exceeds " + std::to_string(budget) + " candidates");
        cands.push_back({total_degree(monos[support.back()]), support.size(), support, c});
        std::size_t pos = 0;
        while (pos < c.size() && ++c[pos] == p) c[pos++] = 1;
        if (pos == c.size()) break;
      }
    }
    if (support.size() == static_cast<std::size_t>(b.terms)) return;
    for (std::size_t s = start; s < monos.size(); ++s) {
      support.push_back(s);
      choose(s + 1);
      support.pop_back();
    }
  };
  choose(0);
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.terms != y.terms) return x.terms < y.terms;
    std::vector<std::size_t> rx(x.support.rbegin(), x.support.rend()), ry(y.support.rbegin(), y.support.rend());
    if (rx != ry) return rx < ry;
    return x.coeffs < y.coeffs;
  });
  std::vector<Polynomial> out;
  for (const auto& c : cands) {
    Polynomial f(p, k);
    for (std::size_t j = 0; j < c.support.size(); ++j) f.add_term(monos[c.support[j]], c.coeffs[j]);
    out.push_back(f);
  }
  return out;
}

inline constexpr std::size_t kMonomialSearchBudget = 200000;

struct MonoSearchResult {
  bool found = false;
  std::optional<std::pair<Polynomial, Polynomial>> witness;
  SearchBounds bounds;
  std::size_t candidates = 0;
};

/// Looks for f, g with f^n g^n in I while f^n, g^n lie outside I. A hit refutes;
/// no hit says nothing beyond the bounds.
inline MonoSearchResult mono_counterexample_search(const MonomialIdeal& i, unsigned n, int degree_bound, int terms_bound,
                                                   std::size_t budget = kMonomialSearchBudget) {
  if (n < 1 || degree_bound < 0 || terms_bound < 1) throw InvalidParameter("search bounds must be positive");
  MonoSearchResult out;
  out.bounds = {degree_bound, terms_bound};
  auto cands = search_candidates(i.characteristic(), i.variables(), out.bounds, budget);
  out.candidates = cands.size();
  // distinct n-th powers outside I, each with the first candidate that produced it
  std::vector<std::pair<Polynomial, std::size_t>> powers;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    Polynomial f = cands[c].pow(n);
    if (i.contains(f)) continue;
    bool dup = false;
    for (const auto& q : powers) dup |= q.first == f;
    if (!dup) powers.emplace_back(f, c);
  }
  for (std::size_t a = 0; a < powers.size(); ++a)
    for (std::size_t b = a; b < powers.size(); ++b)
      if (i.contains(powers[a].first * powers[b].first)) {
        out.found = true;
        out.witness = std::make_pair(cands[powers[a].second], cands[powers[b].second]);
        return out;
      }
  return out;
}

struct MonoPrimaryWitness {
  Cert kind = Cert::Unknown;  // CertifiedFalse when a witness shows I is not primary
  std::optional<std::pair<Polynomial, Polynomial>> witness;  // xy in I, x outside I, y outside the radical
  std::string reason;
};

/// Searches x, y with xy in I, x outside I and y outside the radical; then y^m is outside I
/// for every m, so I is not m-primary for any m.
inline MonoPrimaryWitness mono_primary_witness(const MonomialIdeal& i, int degree_bound, int terms_bound,
                                               std::size_t budget = kMonomialSearchBudget) {
  auto cands = search_candidates(i.characteristic(), i.variables(), {degree_bound, terms_bound}, budget);
  MonomialIdeal rad = i.radical();
  for (const auto& x : cands) {
    if (i.contains(x)) continue;
    for (const auto& y : cands) {
      if (rad.contains(y)) continue;
      if (i.contains(x * y))
        return {Cert::CertifiedFalse, std::make_pair(x, y),
                "xy lies in I, x is outside I, and y is outside the radical " + rad.to_string()};
    }
  }
  return {Cert::Unknown, std::nullopt, "no witness within bounds"};
}

struct MonoAbsorbingResult {
  bool found = false;
  std::vector<Polynomial> witness;
};

/// Searches n+1 nonconstant factors whose product lies in I while no n of them do.
inline MonoAbsorbingResult mono_absorbing_search(const MonomialIdeal& i, unsigned n, int degree_bound, int terms_bound,
                                                 std::size_t budget = kMonomialSearchBudget) {
  auto all = search_candidates(i.characteristic(), i.variables(), {degree_bound, terms_bound}, budget);
  std::vector<Polynomial> cands;
  for (auto& f : all)
    if (f.degree() > 0 && !i.contains(f)) cands.push_back(f);
  const std::size_t k = n + 1;
  std::vector<std::size_t> idx(k, 0);
  if (cands.empty()) return {};
  std::size_t steps = 0;
  while (true) {
    if (++steps > budget) throw BudgetExceeded("absorbing search exceeds " + std::to_string(budget) + " tuples");
    Polynomial prod = Polynomial::constant(i.characteristic(), i.variables(), 1);
    for (auto j : idx) prod = prod * cands[j];
    if (i.contains(prod)) {
      bool some = false;
      for (std::size_t skip = 0; skip < k && !some; ++skip) {
        Polynomial s = Polynomial::constant(i.characteristic(), i.variables(), 1);
        for (std::size_t j = 0; j < k; ++j)
          if (j != skip) s = s * cands[idx[j]];
        some = i.contains(s);
      }
      if (!some) {
        MonoAbsorbingResult r{true, {}};
        for (auto j : idx) r.witness.push_back(cands[j]);
        return r;
      }
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == cands.size()) --pos;
    if (pos == 0) return {};
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
  }
}

}  // namespace semiprimary
