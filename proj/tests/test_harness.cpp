#include "spv/harness.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace spv;

namespace {

SuiteConfig small(SuiteId suite, int n, int m) {
  SuiteConfig c;
  c.suite = suite;
  c.n = n;
  c.m = m;
  c.samples = 12;
  c.k_max = 3;
  c.seed = 42;
  c.failure_dir.clear();
  return c;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("spv-test-" + name)).string();
}

}  // namespace

TEST_CASE("suite names and manifest") {
  for (SuiteId id : all_suites()) {
    CHECK(suite_from_string(to_string(id)) == id);
    CHECK_FALSE(suite_manifest(id).empty());
  }
  CHECK_THROWS_AS(suite_from_string("nope"), ConfigError);
  CHECK(format_from_string("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(format_from_string("xml"), ConfigError);
}

TEST_CASE("configuration errors") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  auto bad = [&](auto mutate) {
    SuiteConfig d;
    mutate(d);
    CHECK_THROWS_AS(run_suite(d), ConfigError);
  };
  bad([](SuiteConfig& d) { d.n = 0; });
  bad([](SuiteConfig& d) { d.m = 5; });
  bad([](SuiteConfig& d) { d.samples = 0; });
  bad([](SuiteConfig& d) { d.k_max = 9; });
  bad([](SuiteConfig& d) { d.tol = -1.0; });
  bad([](SuiteConfig& d) { d.suite = SuiteId::disk; });
  bad([](SuiteConfig& d) {
    d.suite = SuiteId::sharpness;
    d.sweep.radii = {0.9, 0.5};
  });
  bad([](SuiteConfig& d) {
    d.suite = SuiteId::sharpness;
    d.sweep.xi_norms = {0.0};
  });
}

TEST_CASE("suites exercise their manifest and pass") {
  const std::vector<std::tuple<SuiteId, int, int>> runs{
      {SuiteId::main, 2, 2}, {SuiteId::disk, 1, 1},   {SuiteId::partials, 2, 1},
      {SuiteId::radial, 3, 1}, {SuiteId::origin, 2, 1}, {SuiteId::equality, 2, 2},
      {SuiteId::sharpness, 1, 1}};
  for (const auto& [suite, n, m] : runs) {
    CAPTURE(to_string(suite));
    SuiteConfig c = small(suite, n, m);
    if (suite == SuiteId::sharpness) c.sweep.radii = {0.5, 0.9, 0.99};
    const Report r = run_suite(c);
    CHECK(r.passed());
    CHECK(r.summary.records == r.records.size());
    std::set<InequalityId> seen;
    for (const Record& rec : r.records) seen.insert(rec.report.id);
    for (InequalityId id : suite_manifest(suite)) CHECK(seen.count(id) == 1);
  }
}

TEST_CASE("record count is samples times contexts") {
  SuiteConfig c = small(SuiteId::main, 2, 3);
  const Report r = run_suite(c);
  // Two points, three directions, 1.3 once and 1.4 for each k.
  CHECK(r.records.size() == static_cast<std::size_t>(c.samples * 2 * 3 * (1 + c.k_max)));
  c.boundary_pass = false;
  CHECK(run_suite(c).records.size() == static_cast<std::size_t>(c.samples * 3 * (1 + c.k_max)));
}

TEST_CASE("reports are deterministic") {
  SuiteConfig c = small(SuiteId::main, 2, 2);
  const std::string a = report_to_json(run_suite(c));
  CHECK(a == report_to_json(run_suite(c)));
  c.exec = Execution::serial;
  CHECK(a == report_to_json(run_suite(c)));
  c.seed = 43;
  CHECK(a != report_to_json(run_suite(c)));
}

TEST_CASE("records are sorted by sample then inequality") {
  const Report r = run_suite(small(SuiteId::partials, 2, 1));
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const Record& p = r.records[i - 1];
    const Record& q = r.records[i];
    CHECK((p.sample < q.sample || (p.sample == q.sample && static_cast<int>(p.report.id) <= static_cast<int>(q.report.id))));
  }
}

TEST_CASE("summary") {
  BoundContext ctx{CVec::Zero(1), std::nullopt, 1, std::nullopt, ""};
  std::vector<Record> rs{{0, BoundReport::make(InequalityId::schwarz_pick, 1.0, 2.0, ctx), std::nullopt},
                         {1, BoundReport::make(InequalityId::schwarz_pick, 2.0 + 1e-10, 2.0, ctx), std::nullopt},
                         {2, BoundReport::make(InequalityId::schwarz_pick, 3.0, 2.0, ctx), std::nullopt}};
  const Summary s = summarize(rs, {{"ok", 0.5, 1.0}, {"bad", 0.5, 1.0, true}}, 1e-8);
  CHECK(s.records == 3);
  CHECK(s.failures == 1);
  CHECK(s.tight == 1);
  CHECK(*s.min_slack == -1.0);
  CHECK(*s.min_ratio == 0.5);
  CHECK(*s.max_ratio == 1.5);
  CHECK(s.failed_certificates == 1);

  const Summary e = summarize({}, {}, 1e-8);
  CHECK(e.records == 0);
  CHECK_FALSE(e.min_slack.has_value());
}

TEST_CASE("json and csv output") {
  SuiteConfig c = small(SuiteId::sharpness, 1, 1);
  c.sweep.radii = {0.5, 0.9};
  c.k_max = 2;
  const Report r = run_suite(c);
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK(count_lines(report_to_csv(r)) == r.records.size() + 1);

  const Report eq = run_suite(small(SuiteId::equality, 2, 2));
  CHECK(report_from_json(report_to_json(eq)) == eq);

  Report empty{small(SuiteId::main, 2, 2), {}, {}, summarize({}, {}, 1e-8), {}};
  CHECK(report_from_json(report_to_json(empty)) == empty);
  CHECK(report_to_csv(empty) == "suite,sample,inequality,k_or_v,z,beta,lhs,rhs,slack,ratio\n");

  const std::string path = temp_path("report.json");
  emit(r, ReportFormat::json, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == report_to_json(r));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit(r, ReportFormat::csv, "/nonexistent-dir/x.csv"), IoError);
  CHECK_THROWS_AS(report_from_json("{"), IoError);
}

TEST_CASE("sweep certificates") {
  SuiteConfig c = small(SuiteId::sharpness, 1, 1);
  c.sweep.families = {RemarkKind::remark2};
  c.sweep.xi_norms = {0.5};
  c.sweep.radii = {0.9, 0.99, 0.999};
  c.sweep.k = 3;
  const Report r = run_suite(c);
  CHECK(r.passed());
  // Modulus ratio at |w| = 0.9 (the first radius) is (1.4/1.5)^2.
  std::vector<double> ratios;
  for (const Record& rec : r.records)
    if (rec.report.id == InequalityId::disk_scalar) ratios.push_back(rec.report.ratio);
  REQUIRE(ratios.size() == 3);
  CHECK(ratios[0] == doctest::Approx(1.96 / 2.25).epsilon(1e-10));
  CHECK(ratios[0] < ratios[1]);
  CHECK(ratios[1] < ratios[2]);

  c.sweep.k = 1;
  for (const Record& rec : run_suite(c).records) CHECK(rec.report.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("failing samples are persisted and replay") {
  SuiteConfig c = small(SuiteId::main, 2, 1);
  c.samples = 3;
  c.failure_dir = temp_path("failures");
  std::filesystem::remove_all(c.failure_dir);
  Report r = run_suite(c);
  REQUIRE(r.passed());
  CHECK(r.persisted.empty());
  CHECK(persist_failures(r).empty());

  // Fake a violation in sample 1; replay recomputes it from the stored context.
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < r.records.size(); ++i)
    if (r.records[i].sample == 1) {
      r.records[i].report.slack = -1.0;
      touched.push_back(i);
    }
  const std::vector<std::string> paths = persist_failures(r);
  REQUIRE(paths.size() == 1);
  CHECK(std::filesystem::exists(paths[0]));

  const Report replayed = replay_failure(paths[0]);
  REQUIRE(replayed.records.size() == touched.size());
  CHECK(replayed.passed());
  for (std::size_t i = 0; i < touched.size(); ++i) {
    const BoundReport& want = r.records[touched[i]].report;
    CHECK(replayed.records[i].report.lhs == doctest::Approx(want.lhs).epsilon(1e-12));
    CHECK(replayed.records[i].report.rhs == doctest::Approx(want.rhs).epsilon(1e-12));
  }
  std::filesystem::remove_all(c.failure_dir);
  CHECK_THROWS_AS(replay_failure(temp_path("missing.json")), IoError);
}
