// spv: sampling checks for Schwarz-Pick type derivative bounds on the unit ball.
//
//   spv check --suite main --n 2 --m 2 --samples 100 --kmax 3 --seed 42 --out report.json
//   spv sharpness --family remark2 --xi 0.5 --k 3 --radii 0.9,0.99,0.999
//   spv equality --n 2 --m 2
//   spv replay --file spv-failures/main-seed42-sample7.json
//
// Exit status: 0 when every check passes, 1 on violations, 2 on bad
// configuration or I/O errors.

#include "spv/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

struct Options {
  std::string suite = "main";
  std::string format = "json";
  std::string out;
  bool serial = false;
  bool no_boundary = false;
  std::vector<std::string> families;
  std::vector<double> xi;
  std::vector<double> radii;
  int k = 0;
  std::string replay_file;
};

void add_common(CLI::App* cmd, spv::SuiteConfig& c, Options& o) {
  cmd->add_option("--n", c.n, "domain dimension")->capture_default_str();
  cmd->add_option("--m", c.m, "target dimension")->capture_default_str();
  cmd->add_option("--samples", c.samples, "number of sampled maps")->capture_default_str();
  cmd->add_option("--degree", c.degree, "degree cap for random polynomial maps")->capture_default_str();
  cmd->add_option("--kmax", c.k_max, "largest derivative order")->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_option("--tol", c.tol, "slack below -tol counts as a violation")->capture_default_str();
  cmd->add_option("--out", o.out, "write the report here ('-' for stdout)");
  cmd->add_option("--format", o.format, "json or csv")->capture_default_str();
  cmd->add_option("--failures", c.failure_dir, "directory for failing samples")->capture_default_str();
  cmd->add_flag("--serial", o.serial, "use the serial reference kernels");
  cmd->add_flag("--no-boundary", o.no_boundary, "skip the near-boundary pass");
}

void print_summary(const spv::Report& r) {
  const spv::Summary& s = r.summary;
  auto opt = [](const std::optional<double>& x) { return x ? *x : 0.0; };
  std::printf("suite=%s records=%zu failures=%d tight=%d min_slack=%.6g min_ratio=%.6g max_ratio=%.6g\n",
              spv::to_string(r.config.suite).c_str(), s.records, s.failures, s.tight, opt(s.min_slack),
              opt(s.min_ratio), opt(s.max_ratio));
  for (const spv::Certificate& c : r.certificates)
    if (!c.passed())
      std::printf("certificate failed: %s value=%.6g %s %.6g\n", c.name.c_str(), c.value, c.at_least ? ">=" : "<=",
                  c.bound);
  for (const std::string& p : r.persisted) std::printf("failing sample written to %s\n", p.c_str());
  std::printf("%s\n", r.passed() ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks Schwarz-Pick type derivative bounds on random and extremal maps of the unit ball"};
  app.require_subcommand(1);
  spv::SuiteConfig config;
  Options o;

  auto* check = app.add_subcommand("check", "run a sampling suite");
  add_common(check, config, o);
  check->add_option("--suite", o.suite, "main|disk|partials|radial|origin|equality|sharpness")->capture_default_str();

  auto* sharp = app.add_subcommand("sharpness", "sweep the remark families toward the boundary");
  add_common(sharp, config, o);
  sharp->add_option("--family", o.families, "remark2 and/or remark4")->delimiter(',');
  sharp->add_option("--xi", o.xi, "|xi| values")->delimiter(',');
  sharp->add_option("--radii", o.radii, "increasing |w| values")->delimiter(',');
  sharp->add_option("--k", o.k, "single derivative order (default 1..kmax)");

  auto* eq = app.add_subcommand("equality", "certify the extremal constructions");
  add_common(eq, config, o);

  auto* replay = app.add_subcommand("replay", "re-evaluate a persisted failing sample");
  replay->add_option("--file", o.replay_file, "failure file")->required();
  replay->add_option("--out", o.out, "write the report here ('-' for stdout)");
  replay->add_option("--format", o.format, "json or csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const spv::ReportFormat format = spv::format_from_string(o.format);
    config.exec = o.serial ? spv::Execution::serial : spv::Execution::parallel;
    config.boundary_pass = !o.no_boundary;

    spv::Report report;
    if (*check) {
      config.suite = spv::suite_from_string(o.suite);
      report = spv::run_suite(config);
    } else if (*sharp) {
      config.suite = spv::SuiteId::sharpness;
      if (!o.families.empty()) {
        config.sweep.families.clear();
        for (const std::string& f : o.families) {
          if (f == "remark2") config.sweep.families.push_back(spv::RemarkKind::remark2);
          else if (f == "remark4") config.sweep.families.push_back(spv::RemarkKind::remark4);
          else throw spv::ConfigError("unknown family '" + f + "' (expected remark2 or remark4)");
        }
      }
      if (!o.xi.empty()) config.sweep.xi_norms = o.xi;
      if (!o.radii.empty()) config.sweep.radii = o.radii;
      if (o.k != 0) config.sweep.k = o.k;
      report = spv::run_suite(config);
    } else if (*eq) {
      config.suite = spv::SuiteId::equality;
      report = spv::run_suite(config);
    } else {
      report = spv::replay_failure(o.replay_file);
    }

    if (o.out == "-") {
      std::cout << (format == spv::ReportFormat::json ? spv::report_to_json(report) : spv::report_to_csv(report));
    } else {
      if (!o.out.empty()) spv::emit(report, format, o.out);
      print_summary(report);
    }
    return report.passed() ? 0 : 1;
  } catch (const spv::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const spv::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
