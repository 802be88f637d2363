#pragma once

// Sampling campaigns over the bounds: suites of random maps and contexts,
// sharpness sweeps along the remark families, and equality certification.

#include "spv/bounds.hpp"
#include "spv/execution.hpp"
#include "spv/families.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spv {

enum class SuiteId { main, disk, partials, radial, origin, equality, sharpness };

std::string to_string(SuiteId id);
SuiteId suite_from_string(const std::string& s);
const std::vector<SuiteId>& all_suites();

/// Inequalities each suite evaluates. Never empty.
const std::vector<InequalityId>& suite_manifest(SuiteId id);

enum class ReportFormat { json, csv };
ReportFormat format_from_string(const std::string& s);

struct SweepOptions {
  std::vector<RemarkKind> families{RemarkKind::remark2, RemarkKind::remark4};
  std::vector<double> xi_norms{0.25, 0.5, 0.75};
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999, 0.9999};
  /// Orders 1..k_max are swept unless this is set.
  std::optional<int> k;

  friend bool operator==(const SweepOptions&, const SweepOptions&) = default;
};

struct SuiteConfig {
  SuiteId suite = SuiteId::main;
  int n = 2;
  int m = 2;
  int samples = 100;
  int degree = 4;
  int k_max = 3;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  /// Adds a second point per sample with |z| up to 0.99.
  bool boundary_pass = true;
  SweepOptions sweep;

  // Not part of the report body.
  Execution exec = Execution::parallel;
  std::string failure_dir = "spv-failures";

  friend bool operator==(const SuiteConfig& a, const SuiteConfig& b) {
    return a.suite == b.suite && a.n == b.n && a.m == b.m && a.samples == b.samples &&
           a.degree == b.degree && a.k_max == b.k_max && a.seed == b.seed && a.tol == b.tol &&
           a.boundary_pass == b.boundary_pass && a.sweep == b.sweep;
  }
};

/// Throws ConfigError describing the first invalid field.
void validate(const SuiteConfig& config);

struct Record {
  int sample;
  BoundReport report;
  /// Closed-form ratio the family should attain (sweeps only).
  std::optional<double> predicted;
};

/// A scalar fact the suite certifies: value <= bound, or value >= bound
/// when `at_least` is set.
struct Certificate {
  std::string name;
  double value;
  double bound;
  bool at_least = false;

  bool passed() const { return at_least ? value >= bound : value <= bound; }
};

struct Summary {
  std::size_t records = 0;
  std::optional<double> min_slack;
  std::optional<double> min_ratio;
  std::optional<double> max_ratio;
  int failures = 0;  // slack < -tol
  int tight = 0;     // -tol <= slack < 0
  int failed_certificates = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<Record> records;
  std::vector<Certificate> certificates;
  Summary summary;
  /// Files written for failing samples.
  std::vector<std::string> persisted;

  bool passed() const { return summary.failures == 0 && summary.failed_certificates == 0; }
};

inline constexpr const char* kReportSchema = "spv-report/1";

Summary summarize(const std::vector<Record>& records, const std::vector<Certificate>& certificates,
                  double tol);

/// Dispatches on config.suite (equality and sharpness included).
Report run_suite(const SuiteConfig& config);

/// Records the attained ratio along each remark family as |w| increases,
/// certifying monotonicity and the closed-form limit.
Report sharpness_sweep(const SuiteConfig& config);

/// Extremal constructions: extremal origin maps over a grid, the remark1 example,
/// off-lattice coefficient vanishing, and k = 1 extremal maps.
Report equality_suite(const SuiteConfig& config);

/// The map a suite uses for one sample.
HoloMap sample_map(const SuiteConfig& config, int sample);

/// Writes one file per sample with a slack below -tol into
/// config.failure_dir (nothing when it is empty). Returns the paths.
std::vector<std::string> persist_failures(const Report& report);

/// Re-evaluates a persisted failing sample.
Report replay_failure(const std::string& path);

// Serialization (report.cpp).
nlohmann::json config_to_json(const SuiteConfig& config);
SuiteConfig config_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const Record& record);
Record record_from_json(const nlohmann::json& j);
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);
std::string report_to_csv(const Report& report);
/// Writes the report; throws IoError naming the path on failure.
void emit(const Report& report, ReportFormat format, const std::string& path);

bool operator==(const Record& a, const Record& b);
bool operator==(const Report& a, const Report& b);

}  // namespace spv
