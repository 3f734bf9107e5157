#pragma once

#include <string>
#include <vector>

#include "semiprimary/audit/registry.hpp"

namespace semiprimary {

namespace audit_detail {

constexpr unsigned kMaxN = 4;

// I(+)S for S = IM (scale the additive generators of I over the module generators) or S = M.
inline Ideal idealization_of(const IdealizationResult& z, const Ideal& i, bool whole_module) {
  std::vector<Elem> gens;
  const auto& m = z.module;
  for (std::size_t k = 0; k < m.orders.size(); ++k) {
    std::vector<std::uint32_t> unit(m.orders.size(), 0);
    unit[k] = 1;
    Elem g = m.index(unit);
    if (whole_module) gens.push_back(g);
    else
      for (Elem a : i.additive_gens()) gens.push_back(m.scale(a, g));
  }
  return idealization_ideal(z, i, gens);
}

inline std::vector<TheoremCheck> finite_checks() {
  std::vector<TheoremCheck> out;

  out.push_back({"power-scaling", "n-semiprimary implies mn-semiprimary", "forall ring, proper I, n, m: mn <= 8",
                 "generated finite rings and fixture ideals", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n) {
                         if (!x.semiprimary(n)) continue;
                         for (unsigned m = 2; m * n <= IdealData::kMaxCachedN; ++m)
                           t.check(x.semiprimary(m * n), n_label(ideal_label(*d.item, x.ideal), n),
                                   "not " + std::to_string(m * n) + "-semiprimary: " +
                                       pair_witness(*d.item->ring, x.sp[m * n]));
                       }
                   });
                 }});

  out.push_back({"quotient-transport", "I is n-semiprimary in R iff I/J is n-semiprimary in R/J",
                 "forall ring, proper ideals J <= I, n <= 3", "generated rings of order <= 64", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, order_at_most(64), [](const RingData& d, Tally& t) {
                     for (const auto& jd : d.ideals) {
                       if (jd.ideal.is_zero()) continue;
                       auto q = quotient_ring(jd.ideal);
                       for (const auto& x : d.ideals) {
                         if (!jd.ideal.subset_of(x.ideal)) continue;
                         Ideal img = map_ideal(x.ideal, q.ring, q.projection);
                         for (unsigned n = 1; n <= 3; ++n) {
                           auto c = is_n_semiprimary(img, n);
                           t.check(c.holds == x.semiprimary(n),
                                   n_label(ideal_label(*d.item, x.ideal) + " mod " + jd.ideal.to_string(), n),
                                   std::string("in R: ") + (x.semiprimary(n) ? "yes" : "no") + ", in R/J: " +
                                       (c.holds ? "yes" : "no") + " " + pair_witness(*q.ring, c));
                         }
                       }
                     }
                   });
                 }});

  out.push_back({"localization", "n-semiprimary ideals stay n-semiprimary in a localization missing them",
                 "forall ring, proper I, s with I disjoint from <s>, n", "generated rings of order <= 128", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, order_at_most(128), [](const RingData& d, Tally& t) {
                     const RingPtr& r = d.item->ring;
                     for (Elem s : r->associates().reps) {
                       if (s == 0 || r->is_unit(s) || r->idempotent_power(s) == 0) continue;
                       ElementSet closure = multiplicative_closure(*r, {s});
                       auto loc = localize(r, {s});
                       for (const auto& x : d.ideals) {
                         bool meets = false;
                         for (Elem e : closure.elements()) meets = meets || x.ideal.contains(e);
                         if (meets) continue;
                         Ideal img = map_ideal(x.ideal, loc.ring, loc.map);
                         for (unsigned n = 1; n <= kMaxN; ++n) {
                           if (!x.semiprimary(n)) continue;
                           auto c = is_n_semiprimary(img, n);
                           t.check(c.holds, n_label(ideal_label(*d.item, x.ideal) + " at s=" + r->format(s), n),
                                   pair_witness(*loc.ring, c));
                         }
                       }
                     }
                   });
                 }});

  out.push_back({"radical-powers", "n-semiprimary implies a prime radical whose elements have n-th powers in I",
                 "forall ring, proper I, n, x in sqrt(I)", "all finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     const auto& r = *d.item->ring;
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n) {
                         if (!x.semiprimary(n)) continue;
                         std::string bad;
                         if (!x.rad_prime) bad = "radical " + x.rad.to_string() + " is not prime";
                         for (Elem e : x.rad.members().elements())
                           if (bad.empty() && !x.ideal.contains(r.pow(e, n))) bad = "x=" + r.format(e) + " has x^n outside I";
                         t.check(bad.empty(), n_label(ideal_label(*d.item, x.ideal), n), bad);
                       }
                   });
                 }});

  out.push_back({"radical-power-containment", "a prime radical P with P^n inside I makes I m-semiprimary for m >= n",
                 "forall ring, proper I, n, m in [n, 8]", "all finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals) {
                       if (!x.rad_prime) continue;
                       for (unsigned n = 1; n <= kMaxN; ++n) {
                         if (!ideal_power(x.rad, n).subset_of(x.ideal)) continue;
                         for (unsigned m = n; m <= IdealData::kMaxCachedN; ++m)
                           t.check(x.semiprimary(m), n_label(ideal_label(*d.item, x.ideal), m),
                                   pair_witness(*d.item->ring, x.sp[m]));
                       }
                     }
                   });
                 }});

  out.push_back({"eventually-semiprimary", "a semiprimary ideal is m-semiprimary for all large m",
                 "forall ring, proper I with prime radical: exists n, forall m >= n", "all finite rings", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals) {
                       if (!x.rad_prime) continue;
                       unsigned k = radical_exponent(x.ideal);
                       bool ok = true;
                       for (unsigned m = k; m <= std::max(k, IdealData::kMaxCachedN); ++m)
                         ok = ok && (m <= IdealData::kMaxCachedN ? x.semiprimary(m) : is_n_semiprimary(x.ideal, m).holds);
                       t.check(ok, ideal_label(*d.item, x.ideal), "not m-semiprimary for some m >= " + std::to_string(k));
                     }
                   });
                 }});

  out.push_back({"absorbing-semiprimary", "n-absorbing with prime radical implies m-semiprimary for m >= n",
                 "forall ring, proper I, n <= 3, m in [n, 8]", "generated rings of order <= 64", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, order_at_most(64), [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals) {
                       if (!x.rad_prime) continue;
                       for (unsigned n = 1; n <= 3; ++n) {
                         auto a = is_n_absorbing(x.ideal, n, 2e7);
                         std::string inst = n_label(ideal_label(*d.item, x.ideal), n);
                         if (a.verdict == Tri::Unknown) {
                           t.skip(inst, "absorbing search budget: " + a.note);
                           continue;
                         }
                         if (a.verdict != Tri::True) continue;
                         for (unsigned m = n; m <= IdealData::kMaxCachedN; ++m)
                           t.check(x.semiprimary(m), inst, "m=" + std::to_string(m) + " " + pair_witness(*d.item->ring, x.sp[m]));
                       }
                     }
                   });
                 }});

  out.push_back({"prime-chain-products", "P1^a P2^b for primes P1 <= P2 is m-semiprimary for m >= a + b",
                 "forall ring, primes P1 <= P2, a + b <= 4, m in [a + b, 8]", "generated finite rings", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, generated_ring, [](const RingData& d, Tally& t) {
                     std::vector<const IdealData*> primes;
                     for (const auto& x : d.ideals)
                       if (x.prime) primes.push_back(&x);
                     for (auto* p1 : primes)
                       for (auto* p2 : primes) {
                         if (!p1->ideal.subset_of(p2->ideal)) continue;
                         for (unsigned a = 1; a <= 3; ++a)
                           for (unsigned b = (p1 == p2 ? 0 : 1); a + b <= kMaxN; ++b) {
                             Ideal i = b ? ideal_product(ideal_power(p1->ideal, a), ideal_power(p2->ideal, b))
                                         : ideal_power(p1->ideal, a);
                             if (!i.is_proper()) continue;
                             for (unsigned m = a + b; m <= IdealData::kMaxCachedN; ++m) {
                               auto c = is_n_semiprimary(i, m);
                               t.check(c.holds,
                                       n_label(d.item->name + " " + p1->ideal.to_string() + "^" + std::to_string(a) + " " +
                                                   p2->ideal.to_string() + "^" + std::to_string(b),
                                               m),
                                       pair_witness(*d.item->ring, c));
                             }
                           }
                       }
                   });
                 }});

  out.push_back({"primary-implies-semiprimary", "n-primary implies n-semiprimary", "forall ring, proper I, n",
                 "all finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n)
                         if (is_n_primary(x.ideal, n).holds)
                           t.check(x.semiprimary(n), n_label(ideal_label(*d.item, x.ideal), n), pair_witness(*d.item->ring, x.sp[n]));
                   });
                 }});

  out.push_back({"upward-closure", "n-semiprimary implies m-semiprimary for m in [n, n+4]",
                 "forall ring, proper I, n, m in [n, n+4]", "all finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n) {
                         if (!x.semiprimary(n)) continue;
                         for (unsigned m = n; m <= n + 4; ++m)
                           t.check(x.semiprimary(m), n_label(ideal_label(*d.item, x.ideal), n),
                                   "not " + std::to_string(m) + "-semiprimary: " + pair_witness(*d.item->ring, x.sp[m]));
                       }
                   });
                 }});

  out.push_back({"power-pair-absorption", "x^m y^k in an n-semiprimary I forces x^n or y^n into I",
                 "forall ring, proper I, n, x, y, m, k <= 3", "generated rings of order <= 64", false,
                 [](const AuditContext& ctx) {
                   return per_ring(ctx, order_at_most(64), [](const RingData& d, Tally& t) {
                     const auto& r = *d.item->ring;
                     const auto& reps = r.associates().reps;
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n) {
                         if (!x.semiprimary(n)) continue;
                         std::string bad;
                         for (Elem a : reps)
                           for (Elem b : reps) {
                             if (!bad.empty() || x.ideal.contains(r.pow(a, n)) || x.ideal.contains(r.pow(b, n))) continue;
                             for (unsigned m = 1; m <= 3 && bad.empty(); ++m)
                               for (unsigned k = 1; k <= 3 && bad.empty(); ++k)
                                 if (x.ideal.contains(r.mul(r.pow(a, m), r.pow(b, k))))
                                   bad = "x=" + r.format(a) + ", y=" + r.format(b) + ", m=" + std::to_string(m) +
                                         ", k=" + std::to_string(k);
                           }
                         t.check(bad.empty(), n_label(ideal_label(*d.item, x.ideal), n), bad);
                       }
                   });
                 }});

  out.push_back({"strong-implies-plain", "strongly n-semiprimary implies n-semiprimary", "forall ring, proper I, n <= 3",
                 "generated rings of order <= 32", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, order_at_most(32), [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= 3; ++n)
                         if (is_strongly_n_semiprimary(x.ideal, n).holds)
                           t.check(x.semiprimary(n), n_label(ideal_label(*d.item, x.ideal), n), pair_witness(*d.item->ring, x.sp[n]));
                   });
                 }});

  out.push_back({"dim-zero-above-nil", "in dimension zero an ideal containing nil(R) is n-semiprimary iff prime",
                 "forall ring, proper I containing nil(R), n", "all finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     for (const auto& x : d.ideals) {
                       if (!x.contains_nil) continue;
                       for (unsigned n = 1; n <= kMaxN; ++n)
                         t.check(x.semiprimary(n) == x.prime, n_label(ideal_label(*d.item, x.ideal), n),
                                 std::string(x.prime ? "prime but not n-semiprimary" : "n-semiprimary but not prime ") +
                                     pair_witness(*d.item->ring, x.sp[n]));
                     }
                   });
                 }});

  out.push_back({"vnr-prime", "in a von Neumann regular ring n-semiprimary equals prime", "forall VNR ring, proper I, n",
                 "reduced finite rings", false, [](const AuditContext& ctx) {
                   return per_ring(ctx, any_ring, [](const RingData& d, Tally& t) {
                     if (!d.vnr) return;
                     for (const auto& x : d.ideals)
                       for (unsigned n = 1; n <= kMaxN; ++n)
                         t.check(x.semiprimary(n) == x.prime, n_label(ideal_label(*d.item, x.ideal), n),
                                 pair_witness(*d.item->ring, x.sp[n]));
                   });
                 }});

  out.push_back({"idealization-shift",
                 "I n-semiprimary gives I(+)IM (n+1)-semiprimary; I(+)IM n-semiprimary gives I n-semiprimary",
                 "forall idealization R(+)M, proper I of R, n <= 3", "idealization rings", false,
                 [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& it : ctx.corpus.rings) {
                     if (!it.idz) continue;
                     const FiniteItem* ip = &it;
                     out.push_back({it.name, [ip](Tally& t) {
                                      for (const auto& i : enumerate_ideals(ip->base)) {
                                        if (!i.is_proper()) continue;
                                        Ideal j = idealization_of(*ip->idz, i, false);
                                        std::string inst = ip->name + " I=" + i.to_string();
                                        for (unsigned n = 1; n <= 3; ++n) {
                                          bool in_r = is_n_semiprimary(i, n).holds;
                                          if (in_r) {
                                            auto up = is_n_semiprimary(j, n + 1);
                                            t.check(up.holds, n_label(inst, n), "I(+)IM not (n+1)-semiprimary: " + pair_witness(*ip->ring, up));
                                          }
                                          if (is_n_semiprimary(j, n).holds)
                                            t.check(in_r, n_label(inst, n), "I(+)IM n-semiprimary but I is not");
                                        }
                                      }
                                    }});
                   }
                   return out;
                 }});

  out.push_back({"idealization-characteristic", "with char R = n, I(+)S is n-semiprimary iff I is",
                 "forall idealization with char R = n >= 2, proper I, S in {IM, M}", "idealization rings with char <= 8",
                 false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& it : ctx.corpus.rings) {
                     if (!it.idz || it.base->characteristic() > IdealData::kMaxCachedN) continue;
                     const FiniteItem* ip = &it;
                     out.push_back({it.name, [ip](Tally& t) {
                                      const unsigned n = static_cast<unsigned>(ip->base->characteristic());
                                      for (const auto& i : enumerate_ideals(ip->base)) {
                                        if (!i.is_proper()) continue;
                                        bool in_r = is_n_semiprimary(i, n).holds;
                                        for (bool whole : {false, true}) {
                                          Ideal j = idealization_of(*ip->idz, i, whole);
                                          auto c = is_n_semiprimary(j, n);
                                          t.check(c.holds == in_r,
                                                  n_label(ip->name + " I=" + i.to_string() + (whole ? " S=M" : " S=IM"), n),
                                                  std::string("in R: ") + (in_r ? "yes" : "no") + ", in R(+)M: " + (c.holds ? "yes" : "no"));
                                        }
                                      }
                                    }});
                   }
                   return out;
                 }});

  return out;
}

// ---- Dedekind domains: Z and F_q[t] ----

// Independent prime-power test: trial division for integers, brute-force irreducible
// search for polynomials.
inline std::optional<unsigned> prime_power_exponent(const PidIdeal& i) {
  if (i.is_integer()) {
    std::uint64_t m = i.generator_integer(), p = 2;
    while (p * p <= m && m % p) ++p;
    if (p * p > m) p = m;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    return m == 1 ? std::optional<unsigned>(k) : std::nullopt;
  }
  const FqPoly& f = i.generator_polynomial();
  const FieldPtr& F = f.field();
  const std::uint32_t q = F->order();
  auto monic_of_degree = [&](int d) {
    std::vector<FqPoly> out;
    std::uint64_t count = 1;
    for (int j = 0; j < d; ++j) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<FiniteField::Elem> c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t x = code;
      for (int j = 0; j < d; ++j, x /= q) c[static_cast<std::size_t>(j)] = static_cast<FiniteField::Elem>(x % q);
      c[static_cast<std::size_t>(d)] = 1;
      out.emplace_back(F, c);
    }
    return out;
  };
  auto irreducible = [&](const FqPoly& g) {
    for (int d = 1; 2 * d <= g.degree(); ++d)
      for (const auto& h : monic_of_degree(d))
        if (g.divmod(h).second.is_zero()) return false;
    return true;
  };
  for (int d = 1; d <= f.degree(); ++d)
    for (const auto& g : monic_of_degree(d)) {
      if (!f.divmod(g).second.is_zero()) continue;
      if (!irreducible(g)) continue;
      FqPoly rest = f;
      unsigned k = 0;
      while (rest.degree() > 0 && rest.divmod(g).second.is_zero()) {
        rest = rest.divmod(g).first;
        ++k;
      }
      return rest.degree() == 0 ? std::optional<unsigned>(k) : std::nullopt;
    }
  return std::nullopt;
}

inline std::vector<TheoremCheck> pid_checks() {
  std::vector<TheoremCheck> out;
  out.push_back({"dedekind-prime-power", "in a Dedekind domain I is n-semiprimary iff I = P^k with k <= n",
                 "forall (m) in Z, (f) in F_q[t], n <= 8", "PID instances", false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& i : ctx.corpus.pid) {
                     out.push_back({i.to_string(), [i](Tally& t) {
                                      auto k = prime_power_exponent(i);
                                      auto got = pid_delta(i);
                                      Extended want = k ? Extended(*k) : std::nullopt;
                                      t.check(got.delta == want, i.to_string(),
                                              "delta " + format_extended(got.delta) + ", prime-power oracle " + format_extended(want));
                                      // the finite shadow: (m) inside Z_{m^2}
                                      if (i.is_integer() && i.generator_integer() <= 60) {
                                        std::uint64_t m = i.generator_integer();
                                        Extended fin = delta(principal_ideal(mk_zn(m * m), static_cast<Elem>(m)));
                                        t.check(fin == want, i.to_string() + " in Z_{m^2}", "finite delta " + format_extended(fin));
                                      }
                                    }});
                   }
                   return out;
                 }});
  out.push_back({"dedekind-delta-two", "in a Dedekind domain delta(I) = 2 only for I = M^2", "forall PID instance",
                 "PID instances", false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& i : ctx.corpus.pid) {
                     out.push_back({i.to_string(), [i](Tally& t) {
                                      auto got = pid_delta(i).delta;
                                      if (got != Extended(2)) return t.pass();
                                      t.check(prime_power_exponent(i) == std::optional<unsigned>(2), i.to_string(), "delta 2 but not a prime square");
                                    }});
                   }
                   return out;
                 }});
  return out;
}

// ---- valuation domains ----

inline std::vector<TheoremCheck> valuation_checks() {
  std::vector<TheoremCheck> out;
  out.push_back({"valuation-power-criterion",
                 "in a valuation domain I is n-semiprimary iff P^n lies in I; window oracles agree",
                 "forall group, sampled cut ideal I, n <= 4, window point h", "value-group catalog", false,
                 [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& g : ctx.corpus.groups) {
                     out.push_back({g.name(), [g](Tally& t) {
                                      auto points = window_points(g, 10, 12);
                                      // the same points shrunk on Q components, to reach below small cuts
                                      for (std::size_t k = 0, m = points.size(); k < m; ++k) {
                                        GroupElem h = points[k];
                                        if (!g.discrete(0)) h.a = h.a / Rational(1000);
                                        if (g.rank() == 2 && !g.discrete(1)) h.b = h.b / Rational(1000);
                                        points.push_back(h);
                                      }
                                      for (const auto& d : sample_ideals(g)) {
                                        if (d.is_zero()) continue;
                                        ValIdealDesc p = vd_sqrt(d);
                                        for (unsigned n = 1; n <= kMaxN; ++n) {
                                          std::string inst = n_label(d.to_string(), n);
                                          auto w = window_check(d, n);
                                          t.check(w.agree, inst, w.first_mismatch);
                                          // elementwise: every h in P has n*h in I
                                          bool brute = true;
                                          for (const auto& h : points)
                                            if (window_nonneg(g, h) && p.contains(h) && !d.contains(scale(n, h))) brute = false;
                                          t.check(brute == vd_is_n_semiprimary(d, n), inst,
                                                  std::string("criterion ") + (vd_is_n_semiprimary(d, n) ? "yes" : "no") +
                                                      ", elementwise oracle " + (brute ? "yes" : "no"));
                                        }
                                      }
                                    }});
                   }
                   return out;
                 }});
  out.push_back({"valuation-idempotent-radical", "with P idempotent, I is n-semiprimary iff I = P",
                 "forall group, sampled I with sqrt(I)^2 = sqrt(I), n <= 4", "value-group catalog", false,
                 [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& g : ctx.corpus.groups) {
                     out.push_back({g.name(), [g](Tally& t) {
                                      for (const auto& d : sample_ideals(g)) {
                                        if (d.is_zero()) continue;
                                        ValIdealDesc p = vd_sqrt(d);
                                        if (!(vd_power(p, 2) == p)) continue;
                                        for (unsigned n = 1; n <= kMaxN; ++n)
                                          t.check(vd_is_n_semiprimary(d, n) == (d == p), n_label(d.to_string(), n),
                                                  "radical " + p.to_string());
                                      }
                                    }});
                   }
                   return out;
                 }});
  out.push_back({"valuation-finite-delta", "with P not idempotent, delta(I) is finite", "forall group, sampled I",
                 "value-group catalog", false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& g : ctx.corpus.groups) {
                     out.push_back({g.name(), [g](Tally& t) {
                                      for (const auto& d : sample_ideals(g)) {
                                        if (d.is_zero()) continue;
                                        ValIdealDesc p = vd_sqrt(d);
                                        if (vd_power(p, 2) == p) continue;
                                        auto k = vd_delta(d);
                                        t.check(k.has_value() && vd_subset(vd_power(p, *k), d), d.to_string(),
                                                "delta " + format_extended(k));
                                      }
                                    }});
                   }
                   return out;
                 }});
  out.push_back({"valuation-powerful-labels", "in a valuation domain n-semiprimary and n-powerful semiprimary agree",
                 "forall group, ideal family", "value-group catalog", false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& g : ctx.corpus.groups) {
                     out.push_back({g.name(), [g](Tally& t) {
                                      for (const auto& row : vd_example_table(g).rows)
                                        t.check(row.verdict == row.powerful_verdict, g.name() + " " + row.family,
                                                row.verdict + " vs " + row.powerful_verdict);
                                    }});
                   }
                   return out;
                 }});
  return out;
}

// ---- monomial ideals ----

inline Ideal monomial_image(const MonomialItem& m, const RingPtr& r) {
  auto names = default_variable_names(m.ideal.variables());
  std::vector<Elem> gens;
  for (const auto& e : m.ideal.gens()) {
    bool inside_box = true;
    for (std::size_t v = 0; v < e.size(); ++v) inside_box = inside_box && e[v] < m.caps[v];
    if (inside_box) gens.push_back(r->parse(monomial_to_string(e, names)));
  }
  return ideal_generated(r, gens);
}

inline std::vector<TheoremCheck> monomial_checks() {
  std::vector<TheoremCheck> out;
  out.push_back({"monomial-certificate-sound",
                 "a certified n-semiprimary monomial ideal has no bounded counterexample, and agrees with its finite quotient",
                 "forall monomial I containing X^a, Y^b, n <= 4", "monomial staircases", false, [](const AuditContext& ctx) {
                   std::vector<Unit> out;
                   for (const auto& m : ctx.corpus.monomials) {
                     const MonomialItem* mp = &m;
                     out.push_back({m.name, [mp](Tally& t) {
                                      RingPtr r = mk_poly_quotient(mp->ideal.characteristic(), mp->caps);
                                      Ideal img = monomial_image(*mp, r);
                                      for (unsigned n = 1; n <= kMaxN; ++n) {
                                        std::string inst = n_label(mp->name, n);
                                        auto cert = certify_frobenius(mp->ideal, n);
                                        bool fin = is_n_semiprimary(img, n).holds;
                                        if (cert.kind == Cert::CertifiedTrue) {
                                          auto s = mono_counterexample_search(mp->ideal, n, 2, 2);
                                          t.check(!s.found, inst, "certified but search found a witness");
                                          t.check(fin, inst, "certified but the finite quotient is not n-semiprimary");
                                        } else if (cert.kind == Cert::CertifiedFalse) {
                                          t.check(!fin, inst, "certified false but the finite quotient is n-semiprimary");
                                        }
                                      }
                                    }});
                   }
                   return out;
                 }});
  return out;
}

}  // namespace audit_detail

}  // namespace semiprimary
