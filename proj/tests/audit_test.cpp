#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <set>

#include "semiprimary/audit/report.hpp"

using namespace semiprimary;

namespace {

const Corpus& small_corpus() {
  static const Corpus c = corpus_generate(Profile::Small);
  return c;
}

const AuditReport& small_report() {
  static const AuditReport r = run_audit(small_corpus(), {}, 1);
  return r;
}

const CheckResult& result(const AuditReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw InvalidParameter("no result for " + id);
}

}  // namespace

TEST(Corpus, SmallShape) {
  const Corpus& c = small_corpus();
  EXPECT_GE(c.rings.size(), 30u);
  std::set<std::string> names;
  for (const auto& r : c.rings) EXPECT_TRUE(names.insert(r.name).second) << r.name;
  for (const auto& f : builtin_fixtures()) {
    bool present = false;
    for (const auto& g : c.fixtures) present = present || g.name == f.name;
    EXPECT_TRUE(present) << f.name;
  }
  EXPECT_TRUE(names.count("fixture:xy_squares"));
}

TEST(Corpus, Deterministic) {
  EXPECT_EQ(corpus_generate(Profile::Small).manifest(), small_corpus().manifest());
  EXPECT_EQ(corpus_generate(Profile::Default).manifest(), corpus_generate(Profile::Default).manifest());
}

TEST(Corpus, LargeReachesOrder4096) {
  Corpus c = corpus_generate(Profile::Large);
  std::size_t big = 0;
  for (const auto& r : c.rings)
    if (r.ring->order() == 4096 && r.family == "poly") ++big;
  EXPECT_GE(big, 2u);
  EXPECT_GT(c.rings.size(), corpus_generate(Profile::Default).rings.size());
}

TEST(Corpus, ProfileNames) {
  EXPECT_EQ(parse_profile("default"), Profile::Default);
  EXPECT_EQ(profile_name(parse_profile("large")), "large");
  EXPECT_THROW(parse_profile("huge"), InvalidParameter);
}

TEST(Audit, SmallHasNoRefutations) {
  const AuditReport& r = small_report();
  EXPECT_EQ(r.refutations(), 0u) << r.to_text(false);
  EXPECT_EQ(r.exit_status(false), 0);
  for (const auto& c : r.checks) EXPECT_GT(c.tally.tried, 0u) << c.id;
}

TEST(Audit, ExpectedWitnessesFound) {
  const AuditReport& r = small_report();
  std::size_t witness_checks = 0;
  for (const auto& c : r.checks) {
    if (!c.expected_witness) continue;
    ++witness_checks;
    EXPECT_TRUE(c.tally.missing.empty()) << c.id;
    EXPECT_FALSE(c.tally.found.empty()) << c.id;
  }
  EXPECT_GE(witness_checks, 10u);
}

TEST(Audit, StrongAndIdealizationChecksPass) {
  const AuditReport& r = small_report();
  for (const char* id : {"strong-vs-plain", "strong-implies-plain", "idealization-shift", "idealization-characteristic"}) {
    const auto& c = result(r, id);
    EXPECT_GT(c.tally.passes, 0u) << id;
    EXPECT_FALSE(c.refuted()) << id;
  }
}

TEST(Audit, ReportIsReproducible) {
  AuditReport again = run_audit(small_corpus(), {"power-scaling", "cusp-parity", "dedekind-prime-power"}, 1);
  AuditReport threaded = run_audit(small_corpus(), {"power-scaling", "cusp-parity", "dedekind-prime-power"}, 3);
  EXPECT_EQ(again.to_json(false), threaded.to_json(false));
  EXPECT_EQ(again.to_text(false), threaded.to_text(false));
  auto j = again.to_json(false);
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_TRUE(again.to_json(true).contains("timing"));
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["id"], "power-scaling");
}

TEST(Audit, UnknownIdThrows) { EXPECT_THROW(run_audit(small_corpus(), {"no-such-check"}, 1), InvalidParameter); }

TEST(Registry, EveryAuditedStatementHasACheck) {
  std::set<std::string> ids;
  for (const auto& c : all_checks()) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
    EXPECT_FALSE(c.statement.empty()) << c.id;
    EXPECT_FALSE(c.quantifier.empty()) << c.id;
  }
  std::set<std::string> covered;
  for (const auto& s : audited_statements()) {
    EXPECT_TRUE(ids.count(s.check_id)) << s.statement << " -> " << s.check_id;
    covered.insert(s.check_id);
  }
  EXPECT_EQ(covered, ids);
}

TEST(Tally, MergeKeepsCountsExact) {
  Tally a, b;
  for (int i = 0; i < 30; ++i) a.refute("x", "w");
  b.pass();
  b.skip("y", "budget");
  a.merge(b);
  EXPECT_EQ(a.tried, 31u);
  EXPECT_EQ(a.refutation_count, 30u);
  EXPECT_EQ(a.refutations.size(), Tally::kKeep);
  EXPECT_EQ(a.skip_count, 1u);
}

TEST(Pool, RunsEveryTaskOnce) {
  std::vector<int> hits(500, 0);
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < hits.size(); ++i) tasks.push_back([&hits, i] { ++hits[i]; });
  WorkStealingPool(4).run(tasks);
  for (int h : hits) EXPECT_EQ(h, 1);
  std::vector<std::function<void()>> bad{[] {}, [] { throw InvalidParameter("boom"); }, [] {}};
  EXPECT_THROW(WorkStealingPool(2).run(bad), InvalidParameter);
}

TEST(Pool, ThreadsEnvOverrides) {
  ::setenv("THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(1), 3u);
  ::setenv("THREADS", "junk", 1);
  EXPECT_EQ(resolve_threads(2), 2u);
  ::unsetenv("THREADS");
  EXPECT_EQ(resolve_threads(0), 1u);
}
