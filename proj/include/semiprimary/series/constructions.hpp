#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/series/checks.hpp"
#include "semiprimary/series/laurent.hpp"
#include "semiprimary/series/spec.hpp"

namespace semiprimary {

/// (I:I) = {x in K : x I subset of I}. Graded: a X^e qualifies iff a D_e' subset of D_{e+e'} for all e'.
inline SeriesRingSpec colon_ring(const SeriesIdealSpec& I) {
  require_valid(I);
  const auto& f = *I.field();
  int c = static_cast<int>(I.conductor());
  auto D = [&](int s) { return s < 0 ? slot::zero(f) : I.slot(static_cast<unsigned>(s)); };
  Subspace all = slot::full(f);
  auto qualifies = [&](slot::Elem a, int e) {
    for (int e2 = 0; e2 < c; ++e2) {
      const Subspace& src = I.slots()[static_cast<std::size_t>(e2)];
      if (src.rank() && !slot::scaled(f, src, a).subset_of(D(e + e2))) return false;
    }
    // the unconstrained tail e' >= c needs D_s full for every s >= c + e
    for (int s = c + e; s < c; ++s)
      if (!(D(s) == all)) return false;
    return true;
  };
  for (int e = -c; e < 0; ++e)
    for (slot::Elem a = 1; a < f.order(); ++a)
      if (qualifies(a, e))
        throw Error("colon ring has an element of negative order " + std::to_string(e) + "; needs manual review");
  std::vector<Subspace> slots;
  for (int e = 0; e < c; ++e) {
    Subspace s = slot::zero(f);
    for (slot::Elem a = 1; a < f.order(); ++a)
      if (qualifies(a, e)) s.insert(f.digits(a));
    slots.push_back(s);
  }
  SeriesRingSpec out(I.field(), slots);
  require_valid(out);
  return out;
}

struct ClosureResult {
  SeriesRingSpec closure;
  SeriesIdealSpec maximal;
  std::vector<std::string> integrality;  // one monic relation per generator
  unsigned n = 1;
  std::optional<SeriesIdealSpec> root_set;  // {x : x^n in M} when it is X^e F_q[[X]] at bound
  bool root_set_is_radical = false;          // equals sqrt(M * closure) = X F_q[[X]] at bound
  std::string note;
};

/// The closure of R in K is F_q[[X]]: field elements satisfy T^q - T and X satisfies T^c - X^c.
inline ClosureResult integral_closure(const SeriesRingSpec& R, unsigned n = 1, const SeriesBounds& b = {}) {
  using namespace series_detail;
  require_valid(R);
  const auto& F = R.field();
  SeriesRingSpec V = SeriesRingSpec::power_series(F);
  ClosureResult out{V, SeriesIdealSpec::maximal(V), {}, n, std::nullopt, false, ""};
  for (unsigned i = 0; i < F->degree(); ++i) {
    Digits d(F->degree(), 0);
    d[i] = 1;
    Elem beta = F->from_digits(d);
    if (F->pow(beta, F->order()) != beta) throw Error("field element fails T^q - T");
    out.integrality.push_back(F->format(beta) + ": T^" + std::to_string(F->order()) + " - T");
  }
  unsigned c = std::max(R.conductor(), 1u);
  if (!member(TruncatedLaurent::monomial(F, 1, static_cast<int>(c)), R)) throw Error("X^c not in R");
  out.integrality.push_back("X: T^" + std::to_string(c) + " - X^" + std::to_string(c));

  SeriesIdealSpec M = SeriesIdealSpec::maximal(R);
  Target TM(*F, M.slots());
  int ni = static_cast<int>(n);
  // per order: do all, none or some candidates have x^n in M
  std::vector<int> state;  // 1 all, 0 none, -1 mixed
  Budget budget(b.budget);
  for (int o = 0; o <= b.order; ++o) {
    SeriesBounds one = b;
    one.threads = 1;
    bool any_in = false, any_out = false;
    int t = TM.need(ni * o);
    if (ni * o >= TM.c) any_in = true;
    else
      for (const auto& c2 : enumerate(*F, one, [&](int oo) { return oo == o ? std::max(t, 1) : 0; }, budget)) {
        if (ni * o >= 1 && TM.has(ni * o, pow(*F, c2.u, n, static_cast<std::size_t>(t)))) any_in = true;
        else any_out = true;
      }
    state.push_back(any_in && any_out ? -1 : any_in ? 1 : 0);
  }
  std::size_t e0 = 0;
  while (e0 < state.size() && state[e0] == 0) ++e0;
  bool clean = e0 < state.size();
  for (std::size_t o = e0; o < state.size(); ++o) clean = clean && state[o] == 1;
  if (budget.exhausted()) out.note = "budget exhausted";
  else if (clean) {
    out.root_set = SeriesIdealSpec::tail(V, static_cast<unsigned>(e0));
    out.root_set_is_radical = e0 == 1;
  } else {
    out.note = "{x : x^n in M} is not of the form X^e F[[X]] within the bound";
  }
  return out;
}

/// V x_F k: the residue constraint C_0 replaced by the subfield of degree d.
inline SeriesRingSpec pullback(const SeriesRingSpec& V, unsigned d) {
  require_valid(V);
  const auto& f = *V.field();
  if (!(V.slot(0) == slot::full(f))) throw InvalidParameter("pullback needs C_0 to be the full field");
  std::vector<Subspace> slots = V.slots();
  if (slots.empty()) slots.push_back(slot::full(f));
  slots[0] = slot::subfield(f, d);
  SeriesRingSpec out(V.field(), slots);
  require_valid(out);
  return out;
}

}  // namespace semiprimary
