#pragma once

#include <string>
#include <vector>

#include "semiprimary/audit/checks_finite.hpp"

namespace semiprimary {

namespace audit_detail {

inline Verdict as_verdict(bool holds, const std::string& property, const std::string& reason) {
  Verdict v;
  v.kind = holds ? Verdict::Kind::VerifiedAtBound : Verdict::Kind::Refuted;
  v.property = property;
  v.reason = reason;
  return v;
}

/// Both premises must hold; the first refuted or partial one is reported.
inline Query both(Query a, Query b) {
  return [a, b](const SeriesBounds& bd) {
    Verdict x = a(bd);
    if (!x.holds()) return x;
    return b(bd);
  };
}

/// Every sample x of K with order in [lo, hi] satisfying `when` also satisfies `then`.
inline Query on_samples(const FieldPtr& f, int lo, int hi, const std::string& what,
                        std::function<bool(const TruncatedLaurent&)> when, std::function<bool(const TruncatedLaurent&)> then) {
  return [=](const SeriesBounds&) {
    for (const auto& x : sample_elements(f, lo, hi)) {
      try {
        if (when(x) && !then(x)) return as_verdict(false, what, "x=" + x.to_string());
      } catch (const PrecisionError& e) {
        Verdict v = as_verdict(true, what, e.what());
        v.kind = Verdict::Kind::Partial;
        return v;
      }
    }
    return as_verdict(true, what, "all samples");
  };
}

using SeriesBody = std::function<void(const SeriesItem&, Tally&)>;

inline std::vector<Unit> per_series(const AuditContext& ctx, SeriesBody body) {
  std::vector<Unit> out;
  for (const auto& s : ctx.corpus.series) {
    const SeriesItem* sp = &s;
    out.push_back({s.name, [sp, body](Tally& t) { body(*sp, t); }});
  }
  return out;
}

inline std::uint32_t q_of(const SeriesRingSpec& r) { return r.field()->order(); }

inline std::string s_label(const SeriesItem& s, unsigned n) { return n_label(s.name, n); }

inline std::vector<TheoremCheck> series_checks() {
  std::vector<TheoremCheck> out;
  const unsigned N = kMaxN;

  out.push_back({"powerful-implies-semiprimary", "n-powerful semiprimary implies n-semiprimary",
                 "forall series ring, ideal I, n <= 4", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (const auto& i : s.ideals)
                       for (unsigned n = 1; n <= N; ++n)
                         implication(
                             t, n_label(i.to_string(), n), q_of(s.ring),
                             [&](const SeriesBounds& b) { return check_n_powerful_semiprimary(i, n, b); },
                             [&](const SeriesBounds& b) { return check_n_semiprimary(i, n, b); });
                   });
                 }});

  out.push_back({"strongly-prime-radical", "n-semiprimary with strongly prime radical implies n-powerful semiprimary",
                 "forall series ring with M strongly prime, ideal I, n <= 4", "series corpus", false,
                 [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     SeriesIdealSpec m = SeriesIdealSpec::maximal(s.ring);
                     for (const auto& i : s.ideals)
                       for (unsigned n = 1; n <= N; ++n)
                         implication(
                             t, n_label(i.to_string(), n), q_of(s.ring),
                             both([&](const SeriesBounds& b) { return check_strongly_prime(m, b); },
                                  [&](const SeriesBounds& b) { return check_n_semiprimary(i, n, b); }),
                             [&](const SeriesBounds& b) { return check_n_powerful_semiprimary(i, n, b); });
                   });
                 }});

  out.push_back({"powerful-descends", "an ideal inside an n-powerful ideal is n-powerful",
                 "forall series ring, ideal I inside M, n <= 4", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     const SeriesIdealSpec& m = s.ideals.front();
                     for (std::size_t k = 1; k < s.ideals.size(); ++k)
                       for (unsigned n = 1; n <= N; ++n)
                         implication(
                             t, n_label(s.ideals[k].to_string(), n), q_of(s.ring),
                             [&](const SeriesBounds& b) { return check_n_powerful(m, n, b); },
                             [&](const SeriesBounds& b) { return check_n_powerful(s.ideals[k], n, b); });
                   });
                 }});

  out.push_back({"prime-powerful-agree", "for the maximal ideal n-powerful semiprimary and n-powerful agree",
                 "forall series ring, n <= 4", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     SeriesIdealSpec m = SeriesIdealSpec::maximal(s.ring);
                     for (unsigned n = 1; n <= N; ++n) {
                       Query a = memoize([&](const SeriesBounds& b) { return check_n_powerful_semiprimary(m, n, b); });
                       Query p = memoize([&](const SeriesBounds& b) { return check_n_powerful(m, n, b); });
                       implication(t, s_label(s, n) + " forward", q_of(s.ring), a, p);
                       implication(t, s_label(s, n) + " backward", q_of(s.ring), p, a);
                     }
                   });
                 }});

  out.push_back({"powerful-multiples",
                 "an n-powerful semiprimary maximal ideal is 2n-powerful semiprimary and x^m in M gives x^n in M",
                 "forall series ring, n <= 4, sample x of K, m <= 6", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     SeriesIdealSpec m = SeriesIdealSpec::maximal(s.ring);
                     for (unsigned n = 1; n <= N; ++n) {
                       Query a = memoize([&](const SeriesBounds& b) { return check_n_powerful_semiprimary(m, n, b); });
                       implication(t, s_label(s, n), q_of(s.ring), a,
                                   [&](const SeriesBounds& b) { return check_n_powerful_semiprimary(m, 2 * n, b); });
                       for (int e = 1; e <= 6; ++e)
                         implication(t, s_label(s, n) + " m=" + std::to_string(e), q_of(s.ring), a,
                                     on_samples(
                                         s.ring.field(), -2, 4, "x^m in M gives x^n in M",
                                         [&](const TruncatedLaurent& x) { return member(x.pow(e), m); },
                                         [&](const TruncatedLaurent& x) { return member(x.pow(static_cast<int>(n)), m); }));
                     }
                   });
                 }});

  out.push_back({"root-closed-pvd", "for an n-root closed domain n-PVD equals PVD", "forall series ring, n in 2..4",
                 "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (unsigned n = 2; n <= N; ++n) {
                       Query rc = memoize([&](const SeriesBounds& b) { return check_n_root_closed(s.ring, n, b); });
                       Query pn = memoize([&](const SeriesBounds& b) { return check_npvd(s.ring, n, b); });
                       Query p1 = memoize([&](const SeriesBounds& b) { return check_npvd(s.ring, 1, b); });
                       implication(t, s_label(s, n) + " forward", q_of(s.ring), both(rc, pn), p1);
                       implication(t, s_label(s, n) + " backward", q_of(s.ring), both(rc, p1), pn);
                     }
                   });
                 }});

  out.push_back({"nvd-integral-powers", "in an n-VD the n-th power of every integral element lies in R",
                 "forall series ring, n <= 4, sample x of F_q[[X]]", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (unsigned n = 1; n <= N; ++n)
                       implication(
                           t, s_label(s, n), q_of(s.ring), [&](const SeriesBounds& b) { return check_nvd(s.ring, n, b); },
                           on_samples(
                               s.ring.field(), 0, 4, "integral x has x^n in R", [](const TruncatedLaurent&) { return true; },
                               [&](const TruncatedLaurent& x) { return member(x.pow(static_cast<int>(n)), s.ring); }));
                   });
                 }});

  out.push_back({"nvd-closure-root-extension", "an n-VD has a valuation closure that is an n-root extension",
                 "forall series ring, n <= 4", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (unsigned n = 1; n <= N; ++n)
                       implication(
                           t, s_label(s, n), q_of(s.ring), [&](const SeriesBounds& b) { return check_nvd(s.ring, n, b); },
                           [&](const SeriesBounds& b) {
                             ClosureResult c = integral_closure(s.ring, n, b);
                             if (!c.closure.is_valuation_type())
                               return as_verdict(false, "closure is a valuation ring", c.closure.to_string());
                             return check_n_root_extension(s.ring, c.closure, n, b);
                           });
                   });
                 }});

  out.push_back({"vd-chain", "n-VD implies pseudo n-VD implies n-PVD", "forall series ring, n <= 4", "series corpus",
                 false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (unsigned n = 1; n <= N; ++n) {
                       Query nvd = memoize([&](const SeriesBounds& b) { return check_nvd(s.ring, n, b); });
                       Query pnvd = memoize([&](const SeriesBounds& b) { return check_pnvd(s.ring, n, b); });
                       Query npvd = memoize([&](const SeriesBounds& b) { return check_npvd(s.ring, n, b); });
                       implication(t, s_label(s, n) + " nvd", q_of(s.ring), nvd, pnvd);
                       implication(t, s_label(s, n) + " pnvd", q_of(s.ring), pnvd, npvd);
                     }
                   });
                 }});

  out.push_back({"pvd-integral-closure", "R is an n-PVD iff {x : x^n in M} is the maximal ideal of the closure",
                 "forall series ring, n <= 4", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     for (unsigned n = 1; n <= N; ++n) {
                       Query pv = memoize([&](const SeriesBounds& b) { return check_npvd(s.ring, n, b); });
                       Query rs = memoize([&](const SeriesBounds& b) {
                         ClosureResult c = integral_closure(s.ring, n, b);
                         return as_verdict(c.root_set_is_radical, "root set is the closure's maximal ideal", c.note);
                       });
                       implication(t, s_label(s, n) + " forward", q_of(s.ring), pv, rs);
                       implication(t, s_label(s, n) + " backward", q_of(s.ring), rs, pv);
                     }
                   });
                 }});

  out.push_back({"pullback-pnvd", "pulling an n-VD back along a residue subfield gives a pseudo n-VD",
                 "forall series ring with full residue slot, proper subfield degree d, n <= 4",
                 "series corpus over non-prime fields", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     const auto& f = *s.ring.field();
                     if (f.degree() == 1 || !(s.ring.slot(0) == slot::full(f))) return;
                     for (unsigned d = 1; d < f.degree(); ++d) {
                       if (f.degree() % d) continue;
                       SeriesRingSpec pb = pullback(s.ring, d);
                       for (unsigned n = 1; n <= N; ++n)
                         implication(
                             t, s_label(s, n) + " d=" + std::to_string(d), q_of(s.ring),
                             [&](const SeriesBounds& b) { return check_nvd(s.ring, n, b); },
                             [&](const SeriesBounds& b) { return check_pnvd(pb, n, b); });
                     }
                   });
                 }});

  out.push_back({"colon-of-pnvd",
                 "a pseudo n-VD has an n-VD colon ring V whose nonunits have n-th powers in M",
                 "forall series ring, n <= 4, samples of V", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     SeriesIdealSpec m = SeriesIdealSpec::maximal(s.ring);
                     SeriesRingSpec v = colon_ring(m);
                     for (unsigned n = 1; n <= N; ++n) {
                       Query pnvd = memoize([&](const SeriesBounds& b) { return check_pnvd(s.ring, n, b); });
                       implication(t, s_label(s, n) + " nvd", q_of(s.ring), pnvd,
                                   [&](const SeriesBounds& b) { return check_nvd(v, n, b); });
                       implication(t, s_label(s, n) + " nonunits", q_of(s.ring), pnvd,
                                   on_samples(
                                       s.ring.field(), 1, 4, "nonunit x of the closure has x^n in M",
                                       [](const TruncatedLaurent&) { return true; },
                                       [&](const TruncatedLaurent& x) { return member(x.pow(static_cast<int>(n)), m); }));
                     }
                   });
                 }});

  out.push_back({"witness-replay", "every refutation witness replays under independent arithmetic",
                 "forall series ring, ideal I, n <= 4, refuted check", "series corpus", false, [N](const AuditContext& ctx) {
                   return per_series(ctx, [N](const SeriesItem& s, Tally& t) {
                     SeriesBounds b = audit_bounds(q_of(s.ring));
                     auto get = [](const Verdict& v, const std::string& key) {
                       for (const auto& [k, x] : v.witness)
                         if (k == key) return x;
                       throw InvalidParameter("witness has no " + key);
                     };
                     for (unsigned n = 1; n <= N; ++n) {
                       const int ni = static_cast<int>(n);
                       for (const auto& i : s.ideals) {
                         Verdict v = check_n_semiprimary(i, n, b);
                         if (!v.refuted()) continue;
                         std::string inst = n_label(i.to_string(), n);
                         try {
                           TruncatedLaurent x = get(v, "x"), y = get(v, "y");
                           TruncatedLaurent xn = x.pow(ni), yn = y.pow(ni);
                           bool ok = member(x, s.ring) && member(y, s.ring) && member(xn * yn, i) && !member(xn, i) &&
                                     !member(yn, i);
                           t.check(ok, inst, v.witness_text());
                         } catch (const PrecisionError& e) {
                           t.skip(inst, e.what());
                         }
                       }
                       Verdict rc = check_n_root_closed(s.ring, n, b);
                       if (rc.refuted()) {
                         try {
                           TruncatedLaurent x = get(rc, "x");
                           t.check(!member(x, s.ring) && member(x.pow(ni), s.ring), s_label(s, n) + " root-closed",
                                   rc.witness_text());
                         } catch (const PrecisionError& e) {
                           t.skip(s_label(s, n), e.what());
                         }
                       }
                     }
                   });
                 }});

  return out;
}

// ---- named instances whose counterexamples must be found ----

inline const Fixture& fx(const AuditContext& ctx, const std::string& name) { return find_fixture(ctx.corpus.fixtures, name); }

inline Unit single(std::string inst, std::function<void(Tally&)> f) { return {std::move(inst), std::move(f)}; }

inline std::optional<TruncatedLaurent> witness_entry(const Verdict& v, const std::string& key) {
  for (const auto& [k, x] : v.witness)
    if (k == key) return x;
  return std::nullopt;
}

inline std::string verdict_note(const Verdict& v) { return v.kind_name(v.kind) + (v.witness.empty() ? "" : " " + v.witness_text()); }

inline std::vector<TheoremCheck> witness_checks() {
  std::vector<TheoremCheck> out;

  out.push_back({"zero-dim-nonprime", "an n-semiprimary ideal not containing nil(R) need not be prime",
                 "exists ideal", "fixture z4xz2_zero_by_z2", true, [](const AuditContext& ctx) {
                   const Fixture* f = &fx(ctx, "z4xz2_zero_by_z2");
                   return std::vector<Unit>{single(f->name, [f](Tally& t) {
                     const Ideal& i = *f->ideal;
                     bool ok = is_n_semiprimary(i, 2).holds && !is_prime(i) && !nilradical(f->ring).subset_of(i);
                     t.expect(ok, f->name, "2-semiprimary, not prime, nil not inside " + i.to_string());
                   })};
                 }});

  out.push_back({"semiprimary-not-absorbing", "an n-semiprimary ideal need not be n-absorbing", "exists ideal",
                 "monomial squares and cubes", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (const char* name : {"xy_squares_monomial", "xy_cubes_monomial"}) {
                     const Fixture* f = &fx(ctx, name);
                     units.push_back(single(f->name, [f](Tally& t) {
                       const MonomialIdeal& i = *f->monomial;
                       auto cert = certify_frobenius(i, f->n);
                       auto w = mono_absorbing_search(i, f->n, 1, 2);
                       std::string detail;
                       for (const auto& p : w.witness) detail += (detail.empty() ? "" : " * ") + p.to_string();
                       t.expect(cert.kind == Cert::CertifiedTrue && w.found, n_label(f->name, f->n),
                                cert_name(cert.kind) + "; absorbing witness " + detail);
                     }));
                   }
                   return units;
                 }});

  out.push_back({"strong-vs-plain", "an n-semiprimary ideal need not be strongly n-semiprimary", "exists ideal",
                 "fixture xy_squares", true, [](const AuditContext& ctx) {
                   const Fixture* f = &fx(ctx, "xy_squares");
                   return std::vector<Unit>{single(f->name, [f](Tally& t) {
                     const Ideal& i = *f->ideal;
                     auto s = is_strongly_n_semiprimary(i, 2);
                     std::string w = s.witness ? s.witness->first.to_string() + ", " + s.witness->second.to_string() : "none";
                     t.expect(is_n_semiprimary(i, 2).holds && !s.holds, n_label(f->name, 2), "J, K = " + w);
                   })};
                 }});

  out.push_back({"semiprimary-not-primary", "(XY, Y^n) is n-semiprimary and not primary", "exists ideal, n in 2..4",
                 "fixtures xy_yn_n2..4", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (unsigned n = 2; n <= 4; ++n) {
                     const Fixture* f = &fx(ctx, "xy_yn_n" + std::to_string(n));
                     units.push_back(single(f->name, [f](Tally& t) {
                       const MonomialIdeal& i = *f->monomial;
                       auto cert = certify_n_semiprimary(i, f->n);
                       auto w = mono_primary_witness(i, 1, 1);
                       std::string detail = cert_name(cert.kind);
                       if (w.witness) detail += "; x=" + w.witness->first.to_string() + ", y=" + w.witness->second.to_string();
                       t.expect(cert.kind == Cert::CertifiedTrue && w.kind == Cert::CertifiedFalse, n_label(f->name, f->n), detail);
                     }));
                   }
                   return units;
                 }});

  out.push_back({"powerful-gap", "M of F_2[[X^2, X^5]] is refuted exactly at n = 1, 3; its tail X^4 at n = 2",
                 "exists x", "fixtures z2_x2_x5, z2_x2_x5_tail", true, [](const AuditContext& ctx) {
                   const Fixture* m = &fx(ctx, "z2_x2_x5");
                   const Fixture* tl = &fx(ctx, "z2_x2_x5_tail");
                   return std::vector<Unit>{
                       single(m->name, [m](Tally& t) {
                         auto prof = delta_bar_profile(*m->series_ideal, 8, audit_bounds(2));
                         bool ok = prof.refuted() == std::vector<unsigned>{1, 3} &&
                                   witness_entry(prof.per_n[2], "x^n") == TruncatedLaurent::monomial(m->series().field(), 1, 3);
                         t.expect(ok, m->name, "refuted at " + nlohmann::json(prof.refuted()).dump() + ", n=3 " +
                                                   prof.per_n[2].witness_text());
                       }),
                       single(tl->name, [tl](Tally& t) {
                         Verdict v = check_n_powerful_semiprimary(*tl->series_ideal, 2, audit_bounds(2));
                         bool ok = v.refuted() && witness_entry(v, "x^n") == TruncatedLaurent::monomial(tl->series().field(), 1, 2);
                         t.expect(ok, n_label(tl->name, 2), verdict_note(v));
                       })};
                 }});

  out.push_back({"cusp-parity", "F_p[[X^2, X^3]] is an n-VD iff p divides n and an n-PVD iff n >= 2",
                 "forall n <= 4", "fixtures cusp_z2, cusp_z3", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (const char* name : {"cusp_z2", "cusp_z3"}) {
                     const Fixture* f = &fx(ctx, name);
                     units.push_back(single(f->name, [f](Tally& t) {
                       const auto& r = f->series();
                       const unsigned p = r.field()->characteristic();
                       SeriesBounds b = audit_bounds(q_of(r));
                       for (unsigned n = 1; n <= 4; ++n) {
                         Verdict nvd = check_nvd(r, n, b), pvd = check_npvd(r, n, b);
                         // in characteristic p the unit 1 + X is the obstruction unless p | n
                         t.expect(nvd.holds() == (n % p == 0) && nvd.refuted() == (n % p != 0), n_label(f->name, n) + " nvd",
                                  verdict_note(nvd));
                         t.expect(pvd.holds() == (n >= 2) && pvd.refuted() == (n < 2), n_label(f->name, n) + " npvd",
                                  verdict_note(pvd));
                       }
                     }));
                   }
                   return units;
                 }});

  out.push_back({"conductor-threshold", "F_2 + X^N F_2[[X]] is an n-PVD iff n >= N", "forall N in 2..4, n <= 5",
                 "fixtures conductor_n2..4", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (unsigned N = 2; N <= 4; ++N) {
                     const Fixture* f = &fx(ctx, "conductor_n" + std::to_string(N));
                     units.push_back(single(f->name, [f, N](Tally& t) {
                       for (unsigned n = 1; n <= 5; ++n) {
                         Verdict v = check_npvd(f->series(), n, audit_bounds(2));
                         t.expect(v.holds() == (n >= N) && v.refuted() == (n < N), n_label(f->name, n), verdict_note(v));
                       }
                     }));
                   }
                   return units;
                 }});

  out.push_back({"colon-not-pvd", "F_3 + F_3 X^9 + X^12 F_3[[X]] has colon F_3 + X^3 F_3[[X]], a 3-VD, yet is not a 3-PVD",
                 "exists x, y", "fixture z3_x9_x12", true, [](const AuditContext& ctx) {
                   const Fixture* f = &fx(ctx, "z3_x9_x12");
                   return std::vector<Unit>{single(f->name, [f](Tally& t) {
                     const auto& r = f->series();
                     SeriesBounds b = audit_bounds(3);
                     SeriesRingSpec v = colon_ring(SeriesIdealSpec::maximal(r));
                     t.expect(v == SeriesRingSpec::from_degrees(r.field(), {1, 0, 0}), f->name + " colon", v.to_string());
                     Verdict nvd = check_nvd(v, 3, b);
                     t.expect(nvd.holds(), f->name + " colon nvd n=3", verdict_note(nvd));
                     Verdict p = check_npvd(r, 3, b);
                     auto x2 = TruncatedLaurent::monomial(r.field(), 1, 2);
                     bool pair = p.refuted() && p.witness.size() >= 2 && p.witness[0].second == x2 && p.witness[1].second == x2;
                     t.expect(pair, n_label(f->name, 3) + " npvd", verdict_note(p));
                   })};
                 }});

  out.push_back({"residue-tower", "F_p + F_{p^k} X + X^2 F_{p^k}[[X]] is not a pseudo k-VD", "exists b",
                 "fixtures residue_tower_p{2,3}_k{2..4}", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (const auto& f : ctx.corpus.fixtures) {
                     if (f.name.rfind("residue_tower_", 0) != 0) continue;
                     const Fixture* fp = &f;
                     units.push_back(single(f.name, [fp](Tally& t) {
                       Verdict v = check_pnvd(fp->series(), fp->n, audit_bounds(q_of(fp->series())));
                       t.expect(v.refuted() && !v.witness.empty(), n_label(fp->name, fp->n), verdict_note(v));
                     }));
                   }
                   return units;
                 }});

  out.push_back({"pullback-pnvd-not-nvd", "F_p + X F_{p^2}[[X]] is a pseudo n-VD for n <= 4 but not a VD",
                 "forall n <= 4", "fixtures pullback_p2, pullback_p3", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (const char* name : {"pullback_p2", "pullback_p3"}) {
                     const Fixture* f = &fx(ctx, name);
                     units.push_back(single(f->name, [f](Tally& t) {
                       const auto& r = f->series();
                       SeriesBounds b = audit_bounds(q_of(r));
                       for (unsigned n = 1; n <= 4; ++n) {
                         Verdict v = check_pnvd(r, n, b);
                         t.expect(v.holds(), n_label(f->name, n) + " pnvd", verdict_note(v));
                       }
                       Verdict v1 = check_nvd(r, 1, b);
                       t.expect(v1.refuted(), n_label(f->name, 1) + " nvd", verdict_note(v1));
                     }));
                   }
                   return units;
                 }});

  out.push_back({"pvd-not-pnvd", "an n-PVD need not be a pseudo n-VD", "exists b",
                 "fixtures wide_square_p3, split_gap_m3_p{2,3}", true, [](const AuditContext& ctx) {
                   std::vector<Unit> units;
                   for (const char* name : {"wide_square_p3", "split_gap_m3_p2", "split_gap_m3_p3"}) {
                     const Fixture* f = &fx(ctx, name);
                     units.push_back(single(f->name, [f](Tally& t) {
                       const auto& r = f->series();
                       SeriesBounds b = audit_bounds(q_of(r));
                       Verdict pv = check_npvd(r, f->n, b), pn = check_pnvd(r, f->n, b);
                       t.expect(pv.holds() && pn.refuted(), n_label(f->name, f->n),
                                "npvd " + verdict_note(pv) + "; pnvd " + verdict_note(pn));
                     }));
                   }
                   return units;
                 }});

  return out;
}

}  // namespace audit_detail

/// The registered checks, in report order.
inline std::vector<TheoremCheck> all_checks() {
  std::vector<TheoremCheck> out;
  for (auto part : {audit_detail::finite_checks(), audit_detail::pid_checks(), audit_detail::valuation_checks(),
                    audit_detail::monomial_checks(), audit_detail::series_checks(), audit_detail::witness_checks()})
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

}  // namespace semiprimary
