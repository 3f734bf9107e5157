#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiprimary/audit/corpus.hpp"
#include "semiprimary/classify/classify.hpp"
#include "semiprimary/series/checks.hpp"
#include "semiprimary/series/constructions.hpp"

namespace semiprimary {

/// Counts for one check. Refutations and skips keep the first few details; the counts are exact.
struct Tally {
  static constexpr std::size_t kKeep = 20;

  struct Entry {
    std::string instance;
    std::string detail;
  };

  std::size_t tried = 0, passes = 0, refutation_count = 0, skip_count = 0;
  std::vector<Entry> refutations, skips;
  std::vector<Entry> found;    // expected witnesses that turned up
  std::vector<Entry> missing;  // expected witnesses that did not

  void pass() {
    ++tried;
    ++passes;
  }
  void refute(const std::string& inst, const std::string& witness) {
    ++tried;
    ++refutation_count;
    if (refutations.size() < kKeep) refutations.push_back({inst, witness});
  }
  void skip(const std::string& inst, const std::string& reason) {
    ++skip_count;
    if (skips.size() < kKeep) skips.push_back({inst, reason});
  }
  /// Expected-witness outcome: `ok` means the witness was found.
  void expect(bool ok, const std::string& inst, const std::string& detail) {
    ++tried;
    if (ok) {
      ++passes;
      found.push_back({inst, detail});
    } else {
      missing.push_back({inst, detail});
    }
  }
  void check(bool ok, const std::string& inst, const std::string& witness) {
    if (ok) pass();
    else refute(inst, witness);
  }

  void merge(const Tally& o) {
    tried += o.tried;
    passes += o.passes;
    refutation_count += o.refutation_count;
    skip_count += o.skip_count;
    for (const auto& e : o.refutations)
      if (refutations.size() < kKeep) refutations.push_back(e);
    for (const auto& e : o.skips)
      if (skips.size() < kKeep) skips.push_back(e);
    found.insert(found.end(), o.found.begin(), o.found.end());
    missing.insert(missing.end(), o.missing.begin(), o.missing.end());
  }
};

/// Everything the finite checks share about one ring: its proper ideals and their
/// n-semiprimary verdicts for n <= kMaxCachedN.
struct IdealData {
  static constexpr unsigned kMaxCachedN = 8;
  Ideal ideal;
  Ideal rad;
  bool prime = false;
  bool rad_prime = false;
  bool contains_nil = false;
  std::array<PairCheck, kMaxCachedN + 1> sp{};  // index n

  bool semiprimary(unsigned n) const { return sp.at(n).holds; }
};

struct RingData {
  const FiniteItem* item = nullptr;
  std::optional<std::string> skip;  // set when the ideal lattice is out of reach
  std::vector<IdealData> ideals;    // proper ideals (fixture rings: the fixture ideal only)
  std::vector<Ideal> all_ideals;    // including the unit ideal; empty for fixture rings
  std::optional<Ideal> nil;
  bool vnr = false;
};

inline RingData build_ring_data(const FiniteItem& it, std::size_t ideal_cap) {
  RingData d;
  d.item = &it;
  const RingPtr& r = it.ring;
  std::vector<Ideal> cands;
  try {
    if (it.all_ideals) {
      d.all_ideals = enumerate_ideals(r, ideal_cap);
      cands = d.all_ideals;
    } else {
      cands = {*it.ideal};
    }
  } catch (const BudgetExceeded& e) {
    d.skip = e.what();
    return d;
  }
  d.nil = nilradical(r);
  d.vnr = classify_ring(r).vnr;
  for (const auto& i : cands) {
    if (!i.is_proper()) continue;
    IdealData x{i, radical(i)};
    x.prime = is_prime(i);
    x.rad_prime = is_prime(x.rad);
    x.contains_nil = d.nil->subset_of(i);
    for (unsigned n = 1; n <= IdealData::kMaxCachedN; ++n) x.sp[n] = is_n_semiprimary(i, n);
    d.ideals.push_back(std::move(x));
  }
  return d;
}

struct AuditContext {
  const Corpus& corpus;
  std::vector<RingData> rings;  // parallel to corpus.rings
};

/// A schedulable piece of one check; writes only into its own Tally.
struct Unit {
  std::string instance;
  std::function<void(Tally&)> run;
};

struct TheoremCheck {
  std::string id;
  std::string statement;   // what is checked, in one line
  std::string quantifier;  // shape of the quantified property
  std::string filter;      // which corpus items apply
  bool expected_witness = false;
  std::function<std::vector<Unit>(const AuditContext&)> units;
};

// ---- helpers shared by the checks ----

namespace audit_detail {

inline std::string ideal_label(const FiniteItem& it, const Ideal& i) { return it.name + " " + i.to_string(); }

inline std::string n_label(const std::string& inst, unsigned n) { return inst + " n=" + std::to_string(n); }

inline std::string pair_witness(const FiniteRing& r, const PairCheck& c) {
  if (!c.witness) return "(none)";
  return "x=" + r.format(c.witness->first) + ", y=" + r.format(c.witness->second);
}

/// Finite checks run over rings with a usable ideal lattice; others are skipped with the reason.
inline std::vector<Unit> per_ring(const AuditContext& ctx, const std::function<bool(const RingData&)>& applies,
                                  const std::function<void(const RingData&, Tally&)>& body) {
  std::vector<Unit> out;
  for (const auto& d : ctx.rings) {
    if (!applies(d)) continue;
    const RingData* dp = &d;
    out.push_back({d.item->name, [dp, body](Tally& t) {
                     if (dp->skip) {
                       t.skip(dp->item->name, *dp->skip);
                       return;
                     }
                     body(*dp, t);
                   }});
  }
  return out;
}

inline bool any_ring(const RingData&) { return true; }
inline bool generated_ring(const RingData& d) { return d.item->all_ideals; }
inline std::function<bool(const RingData&)> order_at_most(std::size_t n) {
  return [n](const RingData& d) { return d.item->all_ideals && d.item->ring->order() <= n; };
}

// Series bounds: order 6 and the widest unit part (<= 3) with at most 10^3 candidates per order.
inline SeriesBounds audit_bounds(std::uint32_t q) {
  SeriesBounds b;
  b.order = 6;
  b.width = 1;
  double qd = q;
  while (b.width < 3 && std::pow(qd, b.width + 1) <= 1e3) ++b.width;
  b.budget = 50'000'000;
  b.threads = 1;
  return b;
}

inline SeriesBounds escalated(const SeriesBounds& b, std::uint32_t q) {
  SeriesBounds e = b;
  e.order = b.order + 4;
  if (std::pow(static_cast<double>(q), b.width + 1) <= 1e5) e.width = b.width + 1;
  e.budget = b.budget * 4;
  return e;
}

using Query = std::function<Verdict(const SeriesBounds&)>;

/// premise holds at bound => conclusion not refuted. A conclusion refuted while the premise
/// holds is re-examined with the premise at escalated bounds before it counts.
inline void implication(Tally& t, const std::string& inst, std::uint32_t q, const Query& premise, const Query& conclusion) {
  SeriesBounds b = audit_bounds(q);
  Verdict p = premise(b);
  if (p.kind == Verdict::Kind::Partial) return t.skip(inst, "premise: " + p.to_string());
  if (p.refuted()) return t.pass();
  Verdict c = conclusion(b);
  if (c.kind == Verdict::Kind::Partial) return t.skip(inst, "conclusion: " + c.to_string());
  if (!c.refuted()) return t.pass();
  Verdict p2 = premise(escalated(b, q));
  if (p2.refuted()) return t.skip(inst, "premise refuted only at escalated bounds: " + p2.to_string());
  if (p2.kind == Verdict::Kind::Partial) return t.skip(inst, "escalated premise: " + p2.to_string());
  t.refute(inst, p.to_string() + " but " + c.to_string());
}

/// The query evaluated once per bound; for premises shared by several implications.
inline Query memoize(Query q) {
  auto cache = std::make_shared<std::map<std::pair<int, int>, Verdict>>();
  return [q = std::move(q), cache](const SeriesBounds& b) {
    auto key = std::make_pair(b.order, b.width);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    return cache->emplace(key, q(b)).first->second;
  };
}

/// Exact sample elements X^o (u0 + u1 X) of K with o in [lo, hi] and u0 != 0.
inline std::vector<TruncatedLaurent> sample_elements(const FieldPtr& f, int lo, int hi) {
  std::vector<TruncatedLaurent> out;
  const std::uint32_t q = f->order(), cap = std::min<std::uint32_t>(q, 9);
  for (int o = lo; o <= hi; ++o)
    for (std::uint32_t a = 1; a < cap; ++a)
      for (std::uint32_t b = 0; b < cap; ++b) out.push_back(TruncatedLaurent::polynomial(f, o, {a, b}));
  return out;
}

}  // namespace audit_detail

}  // namespace semiprimary
