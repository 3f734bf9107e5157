// semiprimary: command-line front end. Each subcommand fills one JSON object and a text
// rendering with the same fields; --json picks which one is printed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiprimary/audit/report.hpp"
#include "semiprimary/classify/classify.hpp"
#include "semiprimary/io/fixture.hpp"
#include "semiprimary/io/ring_spec.hpp"
#include "semiprimary/monomial/monomial_ideal.hpp"
#include "semiprimary/pid/pid_model.hpp"
#include "semiprimary/series/checks.hpp"
#include "semiprimary/series/constructions.hpp"
#include "semiprimary/valuation/valuation.hpp"

using namespace semiprimary;
using nlohmann::json;

namespace {

constexpr int kExitRefuted = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct Result {
  json j;
  std::string text;
  int status = 0;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string verdict_line(const json& v) {
  std::string s = v.at("property").get<std::string>() + "(" + std::to_string(v.at("n").get<unsigned>()) +
                  "): " + v.at("kind").get<std::string>();
  if (v.contains("witness")) {
    std::string w;
    for (const auto& [k, x] : v.at("witness").items()) w += (w.empty() ? "" : ", ") + k + " = " + x.get<std::string>();
    s += " (" + w + ")";
  } else if (v.contains("reason")) {
    s += " (" + v.at("reason").get<std::string>() + ")";
  }
  const auto& b = v.at("bounds");
  s += " [q=" + std::to_string(b.at("q").get<unsigned>()) + ", B_o=" + std::to_string(b.at("order").get<int>()) +
       ", B_d=" + std::to_string(b.at("width").get<int>()) + "]";
  return s;
}

int verdict_status(const Verdict& v) {
  if (v.refuted()) return kExitRefuted;
  if (v.kind == Verdict::Kind::Partial) return kExitBudget;
  return 0;
}

// ---- series inputs ----

struct SeriesInput {
  SeriesRingSpec ring;
  SeriesIdealSpec ideal;  // the maximal ideal when the spec is a ring
};

SeriesInput load_series(const std::string& path) {
  Fixture f = load_fixture(path);
  if (f.kind == FixtureKind::SeriesIdeal) return {f.series_ideal->ring(), *f.series_ideal};
  if (f.kind == FixtureKind::SeriesRing) return {*f.series_ring, SeriesIdealSpec::maximal(*f.series_ring)};
  throw InvalidParameter("'" + path + "' is not a series ring or series ideal spec");
}

struct BoundFlags {
  int order = 8;
  int width = 5;
  double budget = 2e8;

  void add(CLI::App* app) {
    app->add_option("--order", order, "largest order B_o searched")->check(CLI::Range(1, 64));
    app->add_option("--width", width, "unit-part coefficients B_d")->check(CLI::Range(1, 16));
    app->add_option("--budget", budget, "evaluation budget")->check(CLI::PositiveNumber);
  }
  SeriesBounds get(unsigned threads) const {
    SeriesBounds b;
    b.order = order;
    b.width = width;
    b.budget = static_cast<std::uint64_t>(budget);
    b.threads = threads;
    return b;
  }
};

// ---- finite inputs: --ring/--ideal text, or a finite fixture file ----

struct FiniteInput {
  RingPtr ring;
  Ideal ideal;
};

FiniteInput load_finite(const std::string& fixture_path, const std::string& ring_text, const std::string& ideal_text) {
  if (!fixture_path.empty()) {
    Fixture f = load_fixture(fixture_path);
    if (f.kind != FixtureKind::Finite) throw InvalidParameter("'" + fixture_path + "' is not a finite-ring fixture");
    return {f.ring, *f.ideal};
  }
  if (ring_text.empty()) throw CLI::ValidationError("--ring", "give --ring or --fixture");
  RingPtr r = parse_ring(ring_text);
  return {r, parse_ideal(r, ideal_text)};
}

// ---- subcommands ----

Result cmd_classify(const FiniteInput& in, unsigned n, bool strong) {
  const RingPtr& r = in.ring;
  const Ideal& i = in.ideal;
  ClassificationReport rep = classify_ideal(i);
  Result out;
  out.j = rep.to_json();
  out.j["ring"] = r->name();
  out.text = "ring: " + r->name() + "\n" + rep.to_text();
  if (n) {
    auto sp = is_n_semiprimary(i, n);
    json c{{"n", n}, {"n_semiprimary", sp.holds}};
    std::string t = std::to_string(n) + "-semiprimary: " + yn(sp.holds);
    if (sp.witness) {
      c["witness"] = {{"x", r->format(sp.witness->first)}, {"y", r->format(sp.witness->second)}};
      t += " (x = " + r->format(sp.witness->first) + ", y = " + r->format(sp.witness->second) + ")";
    }
    t += "\n";
    auto ab = is_n_absorbing(i, n);
    c["n_absorbing"] = tri_name(ab.verdict);
    t += std::to_string(n) + "-absorbing: " + tri_name(ab.verdict);
    if (!ab.witness.empty()) {
      json w = json::array();
      std::string ws;
      for (Elem e : ab.witness) {
        w.push_back(r->format(e));
        ws += (ws.empty() ? "" : " * ") + r->format(e);
      }
      c["absorbing_witness"] = w;
      t += " (" + ws + ")";
    }
    t += "\n";
    if (strong) {
      auto st = is_strongly_n_semiprimary(i, n);
      c["strongly_n_semiprimary"] = st.holds;
      t += "strongly " + std::to_string(n) + "-semiprimary: " + yn(st.holds);
      if (st.witness) {
        c["strong_witness"] = {{"J", st.witness->first.to_string()}, {"K", st.witness->second.to_string()}};
        t += " (J = " + st.witness->first.to_string() + ", K = " + st.witness->second.to_string() + ")";
      }
      t += "\n";
    }
    out.j["at_n"] = c;
    out.text += t;
  }
  return out;
}

Result cmd_delta(const std::string& fixture_path, const std::string& ring_text, const std::string& ideal_text,
                 const std::string& pid, const std::string& vd) {
  Result out;
  if (!pid.empty()) {
    PidIdeal i = PidIdeal::parse(pid);
    PidDelta d = pid_delta(i);
    out.j = {{"ideal", i.to_string()}, {"delta", extended_json(d.delta)}, {"factorization", d.factorization}};
    if (d.prime_base) out.j["base"] = *d.prime_base;
    out.text = "ideal: " + i.to_string() + "\n" + d.to_string() + "\n";
  } else if (!vd.empty()) {
    ValIdealDesc d = ValIdealDesc::parse(vd);
    Extended k = vd_delta(d);
    out.j = {{"ideal", d.to_string()}, {"family", family_of(d)}, {"delta", extended_json(k)}};
    out.text = "ideal: " + d.to_string() + "\nfamily: " + family_of(d) + "\ndelta: " + format_extended(k) + "\n";
  } else {
    if (ring_text.empty() && fixture_path.empty())
      throw CLI::ValidationError("delta", "give --ring with --ideal, --fixture, --pid or --vd");
    auto [r, i] = load_finite(fixture_path, ring_text, ideal_text);
    Extended k = delta(i);
    out.j = {{"ring", r->name()}, {"ideal", i.to_string()}, {"delta", extended_json(k)}};
    out.text = "ring: " + r->name() + "\nideal: " + i.to_string() + "\ndelta: " + format_extended(k) + "\n";
  }
  return out;
}

Result cmd_delta_bar(const std::string& spec, unsigned nmax, const SeriesBounds& b) {
  SeriesInput in = load_series(spec);
  DeltaBarProfile prof = delta_bar_profile(in.ideal, nmax, b);
  Result out;
  json refuted = prof.refuted();
  auto least = prof.least_verified();
  out.j = {{"ideal", in.ideal.to_string()}, {"nmax", nmax}, {"refuted", refuted}, {"profile", prof.to_json()}};
  out.j["least_verified"] = least ? json(*least) : json(nullptr);
  std::string rs;
  for (unsigned n : prof.refuted()) rs += (rs.empty() ? "" : ",") + std::to_string(n);
  out.text = "ideal: " + in.ideal.to_string() + "\nrefuted: {" + rs + "}\nleast verified: " +
             (least ? std::to_string(*least) : std::string("none")) + "\n";
  for (const auto& v : prof.to_json()) out.text += "  " + verdict_line(v) + "\n";
  for (const auto& v : prof.per_n)
    if (v.kind == Verdict::Kind::Partial) out.status = kExitBudget;
  return out;
}

Result cmd_check(const std::string& spec, const std::string& property, unsigned n, const std::string& super,
                 const SeriesBounds& b) {
  SeriesInput in = load_series(spec);
  SeriesQuery q;
  q.property = parse_property(property);
  q.n = n;
  q.ring = in.ring;
  q.ideal = in.ideal;
  if (!super.empty()) q.super = load_series(super).ring;
  Verdict v = bounded_check(q, b);
  Result out;
  out.j = {{"ring", in.ring.to_string()}, {"ideal", in.ideal.to_string()}, {"verdict", v.to_json()}};
  out.text = "ring: " + in.ring.to_string() + "\nideal: " + in.ideal.to_string() + "\n" + verdict_line(v.to_json()) + "\n";
  out.status = verdict_status(v);
  return out;
}

Result cmd_colon(const std::string& spec) {
  SeriesInput in = load_series(spec);
  SeriesRingSpec v = colon_ring(in.ideal);
  Result out;
  out.j = {{"ideal", in.ideal.to_string()}, {"colon", v.to_string()}, {"colon_spec", v.to_json()}};
  out.text = "ideal: " + in.ideal.to_string() + "\ncolon: " + v.to_string() + "\ncolon spec: " + v.to_json().dump() + "\n";
  return out;
}

Result cmd_closure(const std::string& spec, unsigned n, const SeriesBounds& b) {
  SeriesInput in = load_series(spec);
  ClosureResult c = integral_closure(in.ring, n, b);
  Result out;
  out.j = {{"ring", in.ring.to_string()},
           {"closure", c.closure.to_string()},
           {"maximal", c.maximal.to_string()},
           {"integrality", c.integrality},
           {"n", c.n},
           {"root_set", c.root_set ? json(c.root_set->to_string()) : json(nullptr)},
           {"root_set_is_radical", c.root_set_is_radical}};
  if (!c.note.empty()) out.j["note"] = c.note;
  out.text = "ring: " + in.ring.to_string() + "\nclosure: " + c.closure.to_string() + "\nmaximal ideal: " +
             c.maximal.to_string() + "\n";
  for (const auto& rel : c.integrality) out.text += "  integral: " + rel + "\n";
  out.text += "{x : x^" + std::to_string(c.n) + " in M}: " + (c.root_set ? c.root_set->to_string() : std::string("not a tail at bound")) +
              "\nequals the closure's maximal ideal: " + yn(c.root_set_is_radical) + "\n";
  if (!c.note.empty()) out.text += "note: " + c.note + "\n";
  return out;
}

Result cmd_table(const std::string& group) {
  std::vector<OrderedGroup> groups;
  if (group.empty()) groups = OrderedGroup::catalog();
  else groups.push_back(OrderedGroup::parse(group));
  Result out;
  out.j = json::array();
  for (const auto& g : groups) {
    ValuationTable t = vd_example_table(g);
    for (const auto& r : t.rows) {
      out.j.push_back({{"group", g.name()},
                       {"family", r.family},
                       {"samples", r.samples},
                       {"n_semiprimary", r.verdict},
                       {"n_powerful_semiprimary", r.powerful_verdict},
                       {"example", r.example},
                       {"example_delta", extended_json(r.example_delta)}});
      out.text += g.name() + " | " + r.family + " | n-semiprimary: " + r.verdict + " | n-powerful semiprimary: " +
                  r.powerful_verdict + " | e.g. " + r.example + ", delta " + format_extended(r.example_delta) + "\n";
    }
  }
  return out;
}

std::string poly_text(const Polynomial& p, std::size_t vars) { return p.to_string(default_variable_names(vars)); }

Result cmd_search(const std::string& fixture_path, const std::string& ring_text, const std::string& ideal_text,
                  const std::string& monomial,
                  const std::string& kind, unsigned n, int degree, int terms) {
  Result out;
  if (!monomial.empty()) {
    // p:vars:gen;gen
    auto a = monomial.find(':'), b = monomial.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos) throw ParseError("monomial ideal is p:vars:gen;gen;...");
    std::vector<std::string> gens;
    std::stringstream ss(monomial.substr(b + 1));
    for (std::string g; std::getline(ss, g, ';');) gens.push_back(g);
    MonomialIdeal i = MonomialIdeal::parse(static_cast<std::uint32_t>(std::stoul(monomial.substr(0, a))),
                                           std::stoul(monomial.substr(a + 1, b - a - 1)), gens);
    const std::size_t k = i.variables();
    out.j = {{"ideal", i.to_string()}, {"kind", kind}, {"n", n}, {"degree", degree}, {"terms", terms}};
    out.text = "ideal: " + i.to_string() + "\n";
    if (kind == "semiprimary") {
      auto cert = certify_n_semiprimary(i, n);
      auto s = mono_counterexample_search(i, n, degree, terms);
      out.j["certificate"] = cert_name(cert.kind);
      out.j["found"] = s.found;
      out.text += "certificate: " + cert_name(cert.kind) + "\n";
      if (s.found) {
        out.j["witness"] = {{"x", poly_text(s.witness->first, k)}, {"y", poly_text(s.witness->second, k)}};
        out.text += "counterexample: x = " + poly_text(s.witness->first, k) + ", y = " + poly_text(s.witness->second, k) + "\n";
        out.status = kExitRefuted;
      } else {
        out.text += "no counterexample within degree " + std::to_string(degree) + ", " + std::to_string(terms) + " terms\n";
      }
    } else if (kind == "absorbing") {
      auto s = mono_absorbing_search(i, n, degree, terms);
      out.j["found"] = s.found;
      if (s.found) {
        json w = json::array();
        std::string ws;
        for (const auto& p : s.witness) {
          w.push_back(poly_text(p, k));
          ws += (ws.empty() ? "" : " * ") + poly_text(p, k);
        }
        out.j["witness"] = w;
        out.text += "not " + std::to_string(n) + "-absorbing: " + ws + "\n";
        out.status = kExitRefuted;
      } else {
        out.text += "no absorbing counterexample within bounds\n";
      }
    } else if (kind == "primary") {
      auto s = mono_primary_witness(i, degree, terms);
      out.j["found"] = s.witness.has_value();
      if (s.witness) {
        out.j["witness"] = {{"x", poly_text(s.witness->first, k)}, {"y", poly_text(s.witness->second, k)}};
        out.text += "not primary: x = " + poly_text(s.witness->first, k) + ", y = " + poly_text(s.witness->second, k) +
                    " (xy in I, x outside I, y outside the radical)\n";
        out.status = kExitRefuted;
      } else {
        out.text += "no primary counterexample within bounds\n";
      }
    } else {
      throw CLI::ValidationError("--kind", "one of semiprimary, absorbing, primary");
    }
    return out;
  }
  if (ring_text.empty() && fixture_path.empty())
    throw CLI::ValidationError("search", "give --monomial, --fixture or --ring with --ideal");
  auto [r, i] = load_finite(fixture_path, ring_text, ideal_text);
  out.j = {{"ring", r->name()}, {"ideal", i.to_string()}, {"kind", kind}, {"n", n}};
  out.text = "ring: " + r->name() + "\nideal: " + i.to_string() + "\n";
  if (kind == "semiprimary") {
    auto c = is_n_semiprimary(i, n);
    out.j["found"] = !c.holds;
    if (c.witness) {
      out.j["witness"] = {{"x", r->format(c.witness->first)}, {"y", r->format(c.witness->second)}};
      out.text += "not " + std::to_string(n) + "-semiprimary: x = " + r->format(c.witness->first) + ", y = " +
                  r->format(c.witness->second) + "\n";
      out.status = kExitRefuted;
    } else {
      out.text += std::to_string(n) + "-semiprimary (exhaustive)\n";
    }
  } else if (kind == "absorbing") {
    auto c = is_n_absorbing(i, n);
    out.j["verdict"] = tri_name(c.verdict);
    out.j["found"] = c.verdict == Tri::False;
    if (c.verdict == Tri::False) {
      json w = json::array();
      std::string ws;
      for (Elem e : c.witness) {
        w.push_back(r->format(e));
        ws += (ws.empty() ? "" : " * ") + r->format(e);
      }
      out.j["witness"] = w;
      out.text += "not " + std::to_string(n) + "-absorbing: " + ws + "\n";
      out.status = kExitRefuted;
    } else if (c.verdict == Tri::Unknown) {
      out.j["note"] = c.note;
      out.text += "undecided: " + c.note + "\n";
      out.status = kExitBudget;
    } else {
      out.text += std::to_string(n) + "-absorbing (exhaustive)\n";
    }
  } else if (kind == "strong") {
    auto c = is_strongly_n_semiprimary(i, n);
    out.j["found"] = !c.holds;
    if (c.witness) {
      out.j["witness"] = {{"J", c.witness->first.to_string()}, {"K", c.witness->second.to_string()}};
      out.text += "not strongly " + std::to_string(n) + "-semiprimary: J = " + c.witness->first.to_string() +
                  ", K = " + c.witness->second.to_string() + "\n";
      out.status = kExitRefuted;
    } else {
      out.text += "strongly " + std::to_string(n) + "-semiprimary (exhaustive)\n";
    }
  } else {
    throw CLI::ValidationError("--kind", "one of semiprimary, absorbing, strong for finite rings");
  }
  return out;
}

Result cmd_audit(const std::string& profile, const std::vector<std::string>& checks, unsigned threads, bool strict,
                 bool timing, const std::string& out_path) {
  Corpus c = corpus_generate(parse_profile(profile));
  AuditReport rep = run_audit(c, checks, threads);
  Result out;
  out.j = rep.to_json(timing);
  out.text = rep.to_text(timing);
  out.status = rep.exit_status(strict);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw InvalidParameter("cannot write '" + out_path + "'");
    f << out.j.dump(2) << "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiprimary: n-semiprimary ideals and n-valuation-type domains, decided by exact search"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned threads = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads (THREADS overrides)")->check(CLI::Range(1u, 256u));

  std::string ring, ideal = "zero", fixture_path, spec, pid, vd, group, monomial, kind = "semiprimary", property, super, profile = "default",
                    out_path;
  unsigned n = 0, nmax = 8;
  int degree = 2, terms = 2;
  bool strong = false, strict = false, no_timing = false;
  std::vector<std::string> checks;
  BoundFlags bounds;

  auto* classify = app.add_subcommand("classify", "classify a finite-ring ideal");
  classify->add_option("--ring", ring, "ring text or JSON path");
  classify->add_option("--ideal", ideal, "gen:a;b, zero, nil or a JSON path");
  classify->add_option("--fixture", fixture_path, "finite-ring fixture with ring and ideal")->check(CLI::ExistingFile);
  classify->add_option("--n", n, "also decide n-semiprimary and n-absorbing")->check(CLI::Range(1u, 64u));
  classify->add_flag("--strong", strong, "with --n, also decide strongly n-semiprimary");

  auto* delta_cmd = app.add_subcommand("delta", "delta of an ideal: finite ring, PID or valuation domain");
  delta_cmd->add_option("--ring", ring, "ring text or JSON path");
  delta_cmd->add_option("--ideal", ideal, "ideal of --ring");
  delta_cmd->add_option("--fixture", fixture_path, "finite-ring fixture")->check(CLI::ExistingFile);
  delta_cmd->add_option("--pid", pid, "Z:m or F_q[t]:f, e.g. F2[t]:t^3");
  delta_cmd->add_option("--vd", vd, "valuation ideal, e.g. \"Z+Q cut=1/2,0 strict\"");

  auto* bar = app.add_subcommand("delta-bar", "n-powerful semiprimary profile of a series ideal");
  bar->add_option("--spec", spec, "series ring or ideal JSON")->required()->check(CLI::ExistingFile);
  bar->add_option("--nmax", nmax, "largest n")->check(CLI::Range(1u, 64u));
  bounds.add(bar);

  auto* audit = app.add_subcommand("audit", "run the theorem audit");
  audit->add_option("--profile", profile, "small, default or large");
  audit->add_option("--checks", checks, "check ids (comma separated)")->delimiter(',');
  audit->add_flag("--strict", strict, "budget skips fail with exit 3");
  audit->add_flag("--no-timing", no_timing, "omit timings (reproducible output)");
  audit->add_option("--out", out_path, "also write the JSON report here");

  auto* search = app.add_subcommand("search", "bounded counterexample search");
  search->add_option("--ring", ring, "finite ring text or JSON path");
  search->add_option("--ideal", ideal, "ideal of --ring");
  search->add_option("--fixture", fixture_path, "finite-ring fixture")->check(CLI::ExistingFile);
  search->add_option("--monomial", monomial, "monomial ideal p:vars:gen;gen, e.g. 2:2:X^2;Y^2");
  search->add_option("--kind", kind, "semiprimary, absorbing, primary (monomial) or strong (finite)");
  search->add_option("--n", n, "exponent")->check(CLI::Range(1u, 64u));
  search->add_option("--degree", degree, "monomial search degree bound")->check(CLI::Range(0, 12));
  search->add_option("--terms", terms, "monomial search term bound")->check(CLI::Range(1, 6));

  auto* table = app.add_subcommand("table", "valuation-domain family table");
  table->add_option("--group", group, "catalog group, e.g. Z+Q; all groups when omitted");

  auto* colon = app.add_subcommand("colon", "colon ring (I : I) of a series ideal");
  colon->add_option("--spec", spec, "series ring or ideal JSON")->required()->check(CLI::ExistingFile);

  auto* closure = app.add_subcommand("closure", "integral closure of a series ring");
  closure->add_option("--spec", spec, "series ring JSON")->required()->check(CLI::ExistingFile);
  closure->add_option("--n", n, "exponent for {x : x^n in M}")->check(CLI::Range(1u, 64u));
  bounds.add(closure);

  auto* check = app.add_subcommand("check", "bounded check of a series property");
  check->add_option("--spec", spec, "series ring or ideal JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--property", property, "n-semiprimary, n-powerful, n-powerful-semiprimary, strongly-prime, n-VD, n-PVD, PnVD, pseudo-n-strongly-prime, n-root-closed, n-root-extension")
      ->required();
  check->add_option("--n", n, "exponent")->check(CLI::Range(1u, 64u));
  check->add_option("--super", super, "super ring JSON for n-root-extension")->check(CLI::ExistingFile);
  bounds.add(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const unsigned workers = resolve_threads(threads);
  const unsigned exponent = n ? n : 1;
  Result res;
  try {
    if (*classify) res = cmd_classify(load_finite(fixture_path, ring, ideal), n, strong);
    else if (*delta_cmd) res = cmd_delta(fixture_path, ring, ideal, pid, vd);
    else if (*bar) res = cmd_delta_bar(spec, nmax, bounds.get(workers));
    else if (*audit) res = cmd_audit(profile, checks, workers, strict, !no_timing, out_path);
    else if (*search) res = cmd_search(fixture_path, ring, ideal, monomial, kind, exponent, degree, terms);
    else if (*table) res = cmd_table(group);
    else if (*colon) res = cmd_colon(spec);
    else if (*closure) res = cmd_closure(spec, exponent, bounds.get(workers));
    else if (*check) res = cmd_check(spec, property, exponent, super, bounds.get(workers));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PrecisionError& e) {
    std::cerr << "bounds too small: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (as_json) std::cout << res.j.dump(2) << "\n";
  else std::cout << res.text;
  return res.status;
}
