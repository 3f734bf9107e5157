#pragma once

#include <chrono>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "semiprimary/audit/checks_series.hpp"
#include "semiprimary/audit/pool.hpp"

namespace semiprimary {

struct CheckResult {
  std::string id;
  std::string statement;
  std::string quantifier;
  std::string filter;
  bool expected_witness = false;
  Tally tally;
  double seconds = 0;  // summed over units

  bool refuted() const { return tally.refutation_count > 0 || !tally.missing.empty(); }
};

struct AuditReport {
  Profile profile = Profile::Default;
  unsigned threads = 1;
  nlohmann::json manifest;
  std::vector<CheckResult> checks;
  double build_seconds = 0;
  double total_seconds = 0;

  std::size_t refutations() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.tally.refutation_count + c.tally.missing.size();
    return n;
  }
  std::size_t skips() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.tally.skip_count;
    return n;
  }

  /// 0 pass, 2 any refutation or missing witness, 3 budget skips when strict.
  int exit_status(bool strict) const {
    if (refutations()) return 2;
    if (strict && skips()) return 3;
    return 0;
  }

  nlohmann::json to_json(bool include_timing = true) const {
    auto entries = [](const std::vector<Tally::Entry>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& e : v) a.push_back({{"instance", e.instance}, {"detail", e.detail}});
      return a;
    };
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"id", c.id},
                       {"statement", c.statement},
                       {"quantifier", c.quantifier},
                       {"filter", c.filter},
                       {"expected_witness", c.expected_witness},
                       {"tried", c.tally.tried},
                       {"passes", c.tally.passes},
                       {"refutations", c.tally.refutation_count},
                       {"skips", c.tally.skip_count},
                       {"refutation_details", entries(c.tally.refutations)},
                       {"skip_details", entries(c.tally.skips)}};
      if (c.expected_witness) {
        j["found"] = entries(c.tally.found);
        j["missing"] = entries(c.tally.missing);
      }
      if (include_timing) j["seconds"] = c.seconds;
      cs.push_back(j);
    }
    nlohmann::json out{{"profile", profile_name(profile)},
                       {"manifest", manifest},
                       {"checks", cs},
                       {"refutations", refutations()},
                       {"skips", skips()}};
    if (include_timing) out["timing"] = {{"threads", threads}, {"build_seconds", build_seconds}, {"total_seconds", total_seconds}};
    return out;
  }

  std::string to_text(bool include_timing = true) const {
    std::ostringstream os;
    os << "audit profile " << profile_name(profile) << ": " << manifest["rings"].size() << " finite rings, "
       << manifest["series"].size() << " series rings, " << manifest["monomials"].size() << " monomial ideals, "
       << manifest["pid"].size() << " PID ideals, " << manifest["groups"].size() << " value groups, "
       << manifest["fixtures"].size() << " fixtures\n";
    for (const auto& c : checks) {
      os << (c.refuted() ? "FAIL " : "ok   ") << c.id << "  tried " << c.tally.tried << "  passes " << c.tally.passes
         << "  refutations " << c.tally.refutation_count << "  skips " << c.tally.skip_count;
      if (c.expected_witness) os << "  witnesses " << c.tally.found.size() << "/" << c.tally.found.size() + c.tally.missing.size();
      if (include_timing) {
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(2);
        t << c.seconds;
        os << "  " << t.str() << "s";
      }
      os << "\n    " << c.statement << "\n";
      for (const auto& e : c.tally.refutations) os << "    refuted: " << e.instance << ": " << e.detail << "\n";
      for (const auto& e : c.tally.missing) os << "    missing witness: " << e.instance << ": " << e.detail << "\n";
      for (const auto& e : c.tally.skips) os << "    skipped: " << e.instance << ": " << e.detail << "\n";
    }
    os << "total: " << refutations() << " refutations, " << skips() << " skips";
    if (include_timing) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(1);
      t << total_seconds;
      os << ", " << t.str() << "s on " << threads << " thread" << (threads == 1 ? "" : "s");
    }
    os << "\n";
    return os.str();
  }
};

/// Runs the selected checks (all when `ids` is empty). Unknown ids are an error.
inline AuditReport run_audit(const Corpus& corpus, const std::vector<std::string>& ids = {}, unsigned threads = 1) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  std::vector<TheoremCheck> registry = all_checks();
  std::vector<const TheoremCheck*> chosen;
  if (ids.empty()) {
    for (const auto& c : registry) chosen.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const TheoremCheck* hit = nullptr;
      for (const auto& c : registry)
        if (c.id == id) hit = &c;
      if (!hit) throw InvalidParameter("unknown check id '" + id + "'");
      chosen.push_back(hit);
    }
  }

  AuditReport rep;
  rep.profile = corpus.profile;
  rep.threads = threads;
  rep.manifest = corpus.manifest();
  WorkStealingPool pool(threads);

  // finite ring data is only needed by checks over corpus rings
  AuditContext ctx{corpus, std::vector<RingData>(corpus.rings.size())};
  {
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < corpus.rings.size(); ++k)
      tasks.push_back([&, k] { ctx.rings[k] = build_ring_data(corpus.rings[k], corpus.ideal_cap); });
    pool.run(tasks);
  }
  rep.build_seconds = std::chrono::duration<double>(clock::now() - t0).count();

  std::vector<std::vector<Unit>> units(chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) units[c] = chosen[c]->units(ctx);
  std::vector<std::vector<Tally>> tallies(chosen.size());
  std::vector<std::vector<double>> secs(chosen.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    tallies[c].resize(units[c].size());
    secs[c].resize(units[c].size());
    for (std::size_t u = 0; u < units[c].size(); ++u)
      tasks.push_back([&, c, u] {
        auto s = clock::now();
        units[c][u].run(tallies[c][u]);
        secs[c][u] = std::chrono::duration<double>(clock::now() - s).count();
      });
  }
  pool.run(tasks);

  for (std::size_t c = 0; c < chosen.size(); ++c) {
    CheckResult r{chosen[c]->id, chosen[c]->statement, chosen[c]->quantifier, chosen[c]->filter, chosen[c]->expected_witness, {}, 0};
    for (std::size_t u = 0; u < units[c].size(); ++u) {
      r.tally.merge(tallies[c][u]);
      r.seconds += secs[c][u];
    }
    rep.checks.push_back(std::move(r));
  }
  rep.total_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return rep;
}

/// Statements the audit must cover, each with the check that covers it.
struct AuditedStatement {
  std::string statement;
  std::string check_id;
};

inline std::vector<AuditedStatement> audited_statements() {
  return {
      {"n-semiprimary scales to multiples of n", "power-scaling"},
      {"n-semiprimary passes to quotients", "quotient-transport"},
      {"n-semiprimary passes to localizations", "localization"},
      {"radical elements have n-th powers in I", "radical-powers"},
      {"P^n inside I gives m-semiprimary for m >= n", "radical-power-containment"},
      {"Noetherian semiprimary ideals are eventually n-semiprimary", "eventually-semiprimary"},
      {"n-absorbing with prime radical gives m-semiprimary", "absorbing-semiprimary"},
      {"products along a prime chain", "prime-chain-products"},
      {"n-primary gives n-semiprimary", "primary-implies-semiprimary"},
      {"power pairs x^m y^k", "power-pair-absorption"},
      {"upward closure in n", "upward-closure"},
      {"strongly n-semiprimary gives n-semiprimary", "strong-implies-plain"},
      {"dimension zero above nil", "dim-zero-above-nil"},
      {"von Neumann regular rings", "vnr-prime"},
      {"idealization shifts n by one", "idealization-shift"},
      {"idealization in characteristic n", "idealization-characteristic"},
      {"Dedekind domains: prime powers", "dedekind-prime-power"},
      {"Dedekind domains: delta two", "dedekind-delta-two"},
      {"valuation domains: P^n inside I", "valuation-power-criterion"},
      {"valuation domains: idempotent radical", "valuation-idempotent-radical"},
      {"valuation domains: finite delta", "valuation-finite-delta"},
      {"valuation example labels", "valuation-powerful-labels"},
      {"monomial certificate soundness", "monomial-certificate-sound"},
      {"n-powerful semiprimary gives n-semiprimary", "powerful-implies-semiprimary"},
      {"strongly prime radical gives n-powerful semiprimary", "strongly-prime-radical"},
      {"n-powerful descends to smaller ideals", "powerful-descends"},
      {"primes: n-powerful semiprimary equals n-powerful", "prime-powerful-agree"},
      {"n-powerful semiprimary primes and multiples of n", "powerful-multiples"},
      {"n-root closed: n-PVD equals PVD", "root-closed-pvd"},
      {"n-VD: integral elements have n-th powers in R", "nvd-integral-powers"},
      {"n-VD: closure is an n-root extension", "nvd-closure-root-extension"},
      {"n-VD, pseudo n-VD, n-PVD chain", "vd-chain"},
      {"n-PVD via the integral closure", "pvd-integral-closure"},
      {"pullbacks of n-VDs", "pullback-pnvd"},
      {"pseudo n-VD via the colon ring", "colon-of-pnvd"},
      {"refutation witnesses replay", "witness-replay"},
      {"zero-dimensional non-prime example", "zero-dim-nonprime"},
      {"semiprimary but not absorbing", "semiprimary-not-absorbing"},
      {"semiprimary but not strongly semiprimary", "strong-vs-plain"},
      {"semiprimary but not primary", "semiprimary-not-primary"},
      {"n-semiprimary but not n-powerful semiprimary", "powerful-gap"},
      {"cusp parity", "cusp-parity"},
      {"conductor threshold", "conductor-threshold"},
      {"colon ring a VD without PVD", "colon-not-pvd"},
      {"residue tower", "residue-tower"},
      {"pullback pseudo VD without VD", "pullback-pnvd-not-nvd"},
      {"n-PVD without pseudo n-VD", "pvd-not-pnvd"},
  };
}

}  // namespace semiprimary
