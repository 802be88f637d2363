#include "spv/harness.hpp"

#include "spv/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace spv {

namespace {

struct SuiteName {
  SuiteId id;
  const char* name;
};

constexpr SuiteName kSuites[] = {
    {SuiteId::main, "main"},         {SuiteId::disk, "disk"},         {SuiteId::partials, "partials"},
    {SuiteId::radial, "radial"},     {SuiteId::origin, "origin"},     {SuiteId::equality, "equality"},
    {SuiteId::sharpness, "sharpness"},
};

// Independent streams per (seed, sample, purpose).
std::mt19937_64 stream(std::uint64_t seed, int sample, std::uint32_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), purpose};
  return std::mt19937_64(seq);
}

CVec gaussian_vec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = cplx(g(rng), g(rng));
  return z;
}

CVec unit_vec(std::mt19937_64& rng, int n) {
  CVec z = gaussian_vec(rng, n);
  return z / z.norm();
}

// Uniform in the ball of the given radius.
CVec ball_point(std::mt19937_64& rng, int n, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return unit_vec(rng, n) * (radius * std::pow(u(rng), 1.0 / (2 * n)));
}

// Uniform direction, |z| uniform in [lo, hi].
CVec shell_point(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double r = u(rng);
  return unit_vec(rng, n) * r;
}

CMat random_isometry(std::mt19937_64& rng, int m, int n) {
  CMat a(m, n);
  for (int j = 0; j < n; ++j) a.col(j) = gaussian_vec(rng, m);
  Eigen::HouseholderQR<CMat> qr(a);
  return qr.householderQ() * CMat::Identity(m, n);
}

MultiIndex random_multi_index(std::mt19937_64& rng, int n, int max_degree) {
  std::vector<MultiIndex> pool;
  for (const MultiIndex& v : enumerate_up_to(n, max_degree))
    if (!v.is_zero()) pool.push_back(v);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

std::vector<MultiIndex> nonzero_indices(int n, int max_degree) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& v : enumerate_up_to(n, max_degree))
    if (!v.is_zero()) out.push_back(v);
  return out;
}

CVec unit_axis(int n, int j) {
  CVec e = CVec::Zero(n);
  e(j) = 1.0;
  return e;
}

struct Check {
  InequalityId id;
  BoundContext context;
};

struct PointChecks {
  CVec z;
  std::vector<Check> checks;
};

std::vector<CVec> sample_points(const SuiteConfig& c, std::mt19937_64& rng) {
  std::vector<CVec> points;
  if (c.suite == SuiteId::origin) {
    points.push_back(CVec::Zero(c.n));
    return points;
  }
  if (c.suite == SuiteId::radial) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CVec z = CVec::Zero(c.n);
    z(0) = std::polar(0.9 * std::sqrt(u(rng)), angle(rng));
    points.push_back(z);
    if (c.boundary_pass) {
      std::uniform_real_distribution<double> r(0.9, 0.99);
      CVec w = CVec::Zero(c.n);
      w(0) = std::polar(r(rng), angle(rng));
      points.push_back(w);
    }
    return points;
  }
  points.push_back(ball_point(rng, c.n, 0.9));
  if (c.boundary_pass) points.push_back(shell_point(rng, c.n, 0.9, 0.99));
  return points;
}

std::vector<PointChecks> sample_checks(const SuiteConfig& c, int sample, const std::string& label) {
  auto rng = stream(c.seed, sample, 2);
  std::vector<PointChecks> out;
  const auto vs = nonzero_indices(c.n, c.k_max);
  for (const CVec& z : sample_points(c, rng)) {
    PointChecks pc{z, {}};
    auto add = [&](InequalityId id, std::optional<CVec> beta, int k, std::optional<MultiIndex> v) {
      pc.checks.push_back({id, BoundContext{z, std::move(beta), k, std::move(v), label}});
    };
    switch (c.suite) {
      case SuiteId::main: {
        const double zn = z.norm();
        const std::vector<CVec> betas{unit_vec(rng, c.n), unit_axis(c.n, 0),
                                      zn > 0.0 ? CVec(z / zn) : unit_axis(c.n, c.n - 1)};
        for (const CVec& b : betas) add(InequalityId::schwarz_pick, b, 1, std::nullopt);
        for (int k = 1; k <= c.k_max; ++k)
          for (const CVec& b : betas) add(InequalityId::high_order, b, k, std::nullopt);
        break;
      }
      case SuiteId::disk:
        for (int k = 1; k <= c.k_max; ++k) {
          add(InequalityId::disk_quadratic, std::nullopt, k, std::nullopt);
          if (c.m == 1) add(InequalityId::disk_scalar, std::nullopt, k, std::nullopt);
        }
        break;
      case SuiteId::partials:
        for (const MultiIndex& v : vs) {
          add(InequalityId::partial_quadratic, std::nullopt, 0, v);
          if (c.m == 1) {
            add(InequalityId::partial_scalar, std::nullopt, 0, v);
            add(InequalityId::chen_liu, std::nullopt, 0, v);
          }
        }
        break;
      case SuiteId::radial:
        for (const MultiIndex& v : vs) add(InequalityId::radial_quadratic, std::nullopt, 0, v);
        break;
      case SuiteId::origin: {
        const std::vector<CVec> betas{unit_vec(rng, c.n), unit_axis(c.n, 0)};
        for (int k = 1; k <= c.k_max; ++k)
          for (const CVec& b : betas) add(InequalityId::origin_graded, b, k, std::nullopt);
        for (const MultiIndex& v : vs) add(InequalityId::origin_partial, std::nullopt, 0, v);
        break;
      }
      case SuiteId::equality:
      case SuiteId::sharpness: break;
    }
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<Record> evaluate_checks(const HoloMap& f, const std::vector<PointChecks>& points, int sample,
                                    Execution exec) {
  std::vector<Record> records;
  for (const PointChecks& pc : points) {
    int order = 1;
    for (const Check& ch : pc.checks) order = std::max(order, required_order(ch.id, ch.context));
    const DerivativeTable table = derivative_table(f, pc.z, order, exec);
    for (const Check& ch : pc.checks)
      records.push_back({sample, check_inequality(f, ch.id, ch.context, &table), std::nullopt});
  }
  return records;
}

void sort_records(std::vector<Record>& records) {
  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    if (a.sample != b.sample) return a.sample < b.sample;
    return static_cast<int>(a.report.id) < static_cast<int>(b.report.id);
  });
}

// Runs body(s) for every sample, in parallel when requested, and
// concatenates the per-sample outputs in sample order.
template <typename Body>
std::vector<Record> fan_out(int samples, Execution exec, const Body& body) {
  std::vector<std::vector<Record>> per(static_cast<std::size_t>(samples));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(samples));
  auto run = [&](int s) {
    try {
      per[static_cast<std::size_t>(s)] = body(s);
    } catch (...) {
      errors[static_cast<std::size_t>(s)] = std::current_exception();
    }
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < samples; ++s) run(s);
  } else {
    for (int s = 0; s < samples; ++s) run(s);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Record> out;
  for (auto& v : per) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

Report finish(const SuiteConfig& config, std::vector<Record> records, std::vector<Certificate> certificates) {
  sort_records(records);
  Report r{config, std::move(records), std::move(certificates), {}, {}};
  r.summary = summarize(r.records, r.certificates, config.tol);
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool on_lattice(const MultiIndex& alpha, const MultiIndex& v) {
  int j = -1;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) {
      if (alpha[i] != 0) return false;
      continue;
    }
    if (alpha[i] % v[i] != 0) return false;
    const int q = alpha[i] / v[i];
    if (j >= 0 && q != j) return false;
    j = q;
  }
  return true;
}

// Largest |a_alpha| with alpha not a multiple of v, for |alpha| <= max_degree.
double off_lattice_max(const HoloMap& f, const MultiIndex& v, int max_degree) {
  const QuadratureSpec spec{std::vector<double>(static_cast<std::size_t>(f.n()), 0.4), 32};
  double worst = 0.0;
  for (const auto& [alpha, a] : taylor_coefficients(f, max_degree, spec, Execution::parallel))
    if (!on_lattice(alpha, v)) worst = std::max(worst, a.norm());
  return worst;
}

}  // namespace

std::string to_string(SuiteId id) {
  for (const auto& e : kSuites)
    if (e.id == id) return e.name;
  return "?";
}

SuiteId suite_from_string(const std::string& s) {
  for (const auto& e : kSuites)
    if (s == e.name) return e.id;
  throw ConfigError("unknown suite '" + s + "'");
}

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> out;
    for (const auto& e : kSuites) out.push_back(e.id);
    return out;
  }();
  return ids;
}

const std::vector<InequalityId>& suite_manifest(SuiteId id) {
  using I = InequalityId;
  static const std::vector<I> main{I::schwarz_pick, I::high_order};
  static const std::vector<I> disk{I::disk_scalar, I::disk_quadratic};
  static const std::vector<I> partials{I::chen_liu, I::partial_quadratic, I::partial_scalar};
  static const std::vector<I> radial{I::radial_quadratic};
  static const std::vector<I> origin{I::origin_graded, I::origin_partial};
  static const std::vector<I> equality{I::schwarz_pick, I::origin_partial};
  static const std::vector<I> sharpness{I::disk_scalar, I::disk_quadratic, I::partial_scalar};
  switch (id) {
    case SuiteId::main: return main;
    case SuiteId::disk: return disk;
    case SuiteId::partials: return partials;
    case SuiteId::radial: return radial;
    case SuiteId::origin: return origin;
    case SuiteId::equality: return equality;
    case SuiteId::sharpness: return sharpness;
  }
  throw ConfigError("unknown suite");
}

ReportFormat format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw ConfigError("unknown format '" + s + "' (expected json or csv)");
}

void validate(const SuiteConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  require(c.n >= 1 && c.n <= 4, "n must be in [1, 4]");
  require(c.m >= 1 && c.m <= 4, "m must be in [1, 4]");
  require(c.samples >= 1, "samples must be >= 1");
  require(c.degree >= 1 && c.degree <= 12, "degree must be in [1, 12]");
  require(c.k_max >= 1 && c.k_max <= 8, "kmax must be in [1, 8]");
  require(std::isfinite(c.tol) && c.tol > 0.0, "tol must be a positive number");
  require(c.suite != SuiteId::disk || c.n == 1, "suite disk needs n = 1");
  if (c.suite == SuiteId::sharpness) {
    const SweepOptions& s = c.sweep;
    require(!s.families.empty(), "sweep needs at least one family");
    require(!s.xi_norms.empty() && !s.radii.empty(), "sweep needs xi values and radii");
    for (double x : s.xi_norms) require(x > 0.0 && x < 1.0, "sweep |xi| values must lie in (0, 1)");
    for (std::size_t i = 0; i < s.radii.size(); ++i) {
      require(s.radii[i] > 0.0 && s.radii[i] < 1.0, "sweep radii must lie in (0, 1)");
      require(i == 0 || s.radii[i] > s.radii[i - 1], "sweep radii must be strictly increasing");
    }
    require(!s.k || (*s.k >= 1 && *s.k <= 8), "sweep order must be in [1, 8]");
  }
}

Summary summarize(const std::vector<Record>& records, const std::vector<Certificate>& certificates,
                  double tol) {
  Summary s;
  s.records = records.size();
  for (const Record& r : records) {
    const BoundReport& b = r.report;
    s.min_slack = s.min_slack ? std::min(*s.min_slack, b.slack) : b.slack;
    s.min_ratio = s.min_ratio ? std::min(*s.min_ratio, b.ratio) : b.ratio;
    s.max_ratio = s.max_ratio ? std::max(*s.max_ratio, b.ratio) : b.ratio;
    if (b.slack < -tol) ++s.failures;
    else if (b.slack < 0.0) ++s.tight;
  }
  for (const Certificate& c : certificates)
    if (!c.passed()) ++s.failed_certificates;
  return s;
}

HoloMap sample_map(const SuiteConfig& c, int sample) {
  auto rng = stream(c.seed, sample, 1);
  std::uniform_int_distribution<std::uint64_t> seeds;
  const int kind = c.suite == SuiteId::origin ? 3 * (sample % 2) : sample % 4;
  switch (kind) {
    case 0: return random_polymap(c.n, c.m, c.degree, seeds(rng));
    case 1: {
      const CVec a = ball_point(rng, c.m, 0.7);
      return compose_ball_automorphism(a, random_polymap(c.n, c.m, c.degree, seeds(rng)));
    }
    case 2:
      if (c.n == c.m) return automorphism_map(ball_point(rng, c.n, 0.8));
      if (c.n < c.m) {
        const CVec xi = ball_point(rng, c.n, 0.7);
        const CVec w0 = ball_point(rng, c.m, 0.7);
        return extremal_k1_map(xi, w0, isometric_jacobian(xi, w0, random_isometry(rng, c.m, c.n)));
      }
      [[fallthrough]];
    default: {
      const MultiIndex v = random_multi_index(rng, c.n, std::min(c.k_max, 3));
      const CVec a0 = ball_point(rng, c.m, 0.7);
      return extremal_origin_map(a0, extremal_coefficient(a0, unit_vec(rng, c.m), v), v);
    }
  }
}

Report run_suite(const SuiteConfig& config) {
  validate(config);
  if (config.suite == SuiteId::equality) return equality_suite(config);
  if (config.suite == SuiteId::sharpness) return sharpness_sweep(config);

  std::vector<Record> records = fan_out(config.samples, config.exec, [&](int s) {
    const HoloMap f = sample_map(config, s);
    // Inner kernels stay serial; the fan-out already owns the threads.
    return evaluate_checks(f, sample_checks(config, s, f.describe()), s, Execution::serial);
  });
  Report report = finish(config, std::move(records), {});
  report.persisted = persist_failures(report);
  return report;
}

Report sharpness_sweep(const SuiteConfig& config) {
  SuiteConfig c = config;
  c.suite = SuiteId::sharpness;
  validate(c);
  const SweepOptions& opt = c.sweep;
  std::vector<int> orders;
  if (opt.k) orders.push_back(*opt.k);
  else
    for (int k = 1; k <= c.k_max; ++k) orders.push_back(k);

  struct Series {
    RemarkKind family;
    double xi;
    int k;
  };
  std::vector<Series> series;
  for (RemarkKind fam : opt.families)
    for (double xi : opt.xi_norms)
      for (int k : orders) series.push_back({fam, xi, k});

  const int count = static_cast<int>(series.size());
  std::vector<Record> records = fan_out(count, c.exec, [&](int s) {
    const Series& se = series[static_cast<std::size_t>(s)];
    const cplx xi = std::polar(se.xi, 0.7);
    std::vector<Record> out;
    for (double wn : opt.radii) {
      const double base = (wn + se.xi) / (1.0 + se.xi);
      if (se.family == RemarkKind::remark2) {
        const CVec w = CVec::Constant(c.m, std::polar(wn / std::sqrt(static_cast<double>(c.m)), -0.4));
        const HoloMap f = remark2_map(xi, w);
        const CVec z = CVec::Constant(1, xi);
        const DerivativeTable t = derivative_table(f, z, se.k, Execution::serial);
        const BoundContext ctx{z, std::nullopt, se.k, std::nullopt, f.describe()};
        out.push_back({s, check_inequality(f, InequalityId::disk_quadratic, ctx, &t), ipow(base, 2 * (se.k - 1))});
        if (c.m == 1)
          out.push_back({s, check_inequality(f, InequalityId::disk_scalar, ctx, &t), ipow(base, se.k - 1)});
      } else {
        const HoloMap f = remark4_map(c.n, xi, std::polar(wn, -0.4));
        CVec z = CVec::Zero(c.n);
        z(0) = xi;
        const DerivativeTable t = derivative_table(f, z, se.k, Execution::serial);
        MultiIndex v = MultiIndex::unit(c.n, 0, se.k);
        const BoundContext ctx{z, std::nullopt, 0, v, f.describe()};
        out.push_back({s, check_inequality(f, InequalityId::partial_scalar, ctx, &t), ipow(base, se.k - 1)});
      }
    }
    return out;
  });

  // Certificates per (series, inequality), in record order.
  std::vector<Certificate> certs;
  for (int s = 0; s < count; ++s) {
    const Series& se = series[static_cast<std::size_t>(s)];
    for (InequalityId id : {InequalityId::disk_quadratic, InequalityId::disk_scalar, InequalityId::partial_scalar}) {
      std::vector<const Record*> rs;
      for (const Record& r : records)
        if (r.sample == s && r.report.id == id) rs.push_back(&r);
      if (rs.empty()) continue;
      std::ostringstream name;
      name << (se.family == RemarkKind::remark2 ? "remark2" : "remark4") << " xi=" << fmt(se.xi) << " k=" << se.k
           << " " << to_string(id);
      double drop = 0.0;
      double law = 0.0;
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i > 0) drop = std::max(drop, rs[i - 1]->report.ratio - rs[i]->report.ratio);
        law = std::max(law, std::abs(rs[i]->report.ratio - *rs[i]->predicted));
      }
      certs.push_back({name.str() + " monotone", drop, 1e-12});
      certs.push_back({name.str() + " final", rs.back()->report.ratio, *rs.back()->predicted - 1e-6, true});
      certs.push_back({name.str() + " law", law, 1e-8});
    }
  }
  return finish(c, std::move(records), std::move(certs));
}

Report equality_suite(const SuiteConfig& config) {
  SuiteConfig c = config;
  c.suite = SuiteId::equality;
  validate(c);

  // Extremal origin maps over v (|v| <= 4) and |a0| in {0, 0.3, 0.7}.
  struct GridPoint {
    MultiIndex v;
    double a0_norm;
  };
  std::vector<GridPoint> grid;
  for (const MultiIndex& v : nonzero_indices(c.n, 4))
    for (double a : {0.0, 0.3, 0.7}) grid.push_back({v, a});
  const int g = static_cast<int>(grid.size());

  auto origin_map = [&](int s) {
    const GridPoint& gp = grid[static_cast<std::size_t>(s)];
    auto rng = stream(c.seed, s, 3);
    const CVec a0 = unit_vec(rng, c.m) * gp.a0_norm;
    return extremal_origin_map(a0, extremal_coefficient(a0, unit_vec(rng, c.m), gp.v), gp.v);
  };

  const int kn = std::min(c.n, c.m);
  const int km = std::max(c.n, c.m);
  const int k1_first = g + 1;
  const int total = k1_first + c.samples;

  std::vector<Record> records = fan_out(total, c.exec, [&](int s) -> std::vector<Record> {
    if (s < g) {
      const GridPoint& gp = grid[static_cast<std::size_t>(s)];
      const HoloMap f = origin_map(s);
      const BoundContext ctx{CVec::Zero(c.n), std::nullopt, 0, gp.v, f.describe()};
      return {{s, check_inequality(f, InequalityId::origin_partial, ctx), std::nullopt}};
    }
    if (s == g) {
      const HoloMap f = remark1_map();
      const BoundContext ctx{CVec::Zero(2), std::nullopt, 0, MultiIndex{1, 0}, "remark1"};
      return {{s, check_inequality(f, InequalityId::origin_partial, ctx), std::nullopt}};
    }
    auto rng = stream(c.seed, s, 4);
    const CVec xi = ball_point(rng, kn, 0.8);
    const CVec w0 = ball_point(rng, km, 0.8);
    const HoloMap f = extremal_k1_map(xi, w0, isometric_jacobian(xi, w0, random_isometry(rng, km, kn)));
    const DerivativeTable t = derivative_table(f, xi, 1, Execution::serial);
    std::vector<Record> out;
    for (int b = 0; b < 50; ++b) {
      const BoundContext ctx{xi, unit_vec(rng, kn), 1, std::nullopt, f.describe()};
      out.push_back({s, check_inequality(f, InequalityId::schwarz_pick, ctx, &t), std::nullopt});
    }
    return out;
  });

  double origin_gap = 0.0;
  double k1_gap = 0.0;
  double remark1_gap = 0.0;
  for (const Record& r : records) {
    const double gap = std::abs(r.report.slack);
    if (r.sample < g) origin_gap = std::max(origin_gap, gap);
    else if (r.sample == g) remark1_gap = gap;
    else k1_gap = std::max(k1_gap, gap);
  }
  std::vector<Certificate> certs;
  certs.push_back({"extremal_origin max |slack|", origin_gap, 1e-9});
  certs.push_back({"remark1 equality |slack|", remark1_gap, 1e-12});
  {
    // The remark1 example is not of the extremal origin form for v = (1,0).
    const HoloMap r1 = remark1_map();
    certs.push_back({"remark1 off-form coefficient", off_lattice_max(r1, MultiIndex{1, 0}, 2), 1e-9, true});
  }
  certs.push_back({"extremal_k1 max |slack|", k1_gap, 1e-9});

  // Off-lattice coefficients vanish for extremal origin maps.
  std::vector<MultiIndex> lattice_vs;
  if (c.n <= 2) {
    lattice_vs = nonzero_indices(c.n, 4);
  } else {
    for (const MultiIndex& base : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{2, 2}}) {
      std::vector<int> e(static_cast<std::size_t>(c.n), 0);
      e[0] = base[0];
      e[1] = base[1];
      lattice_vs.emplace_back(e);
    }
  }
  for (const MultiIndex& v : lattice_vs) {
    int s = 0;
    while (s < g && !(grid[static_cast<std::size_t>(s)].v == v && grid[static_cast<std::size_t>(s)].a0_norm == 0.3)) ++s;
    certs.push_back({"extremal_origin off-lattice max |a| v=" + v.str(), off_lattice_max(origin_map(s), v, 8), 1e-9});
  }
  return finish(c, std::move(records), std::move(certs));
}

std::vector<std::string> persist_failures(const Report& report) {
  std::vector<int> failing;
  for (const Record& r : report.records)
    if (r.report.slack < -report.config.tol && (failing.empty() || failing.back() != r.sample))
      failing.push_back(r.sample);
  std::vector<std::string> paths;
  if (failing.empty() || report.config.failure_dir.empty()) return paths;
  std::filesystem::create_directories(report.config.failure_dir);
  for (int s : failing) {
    const HoloMap f = sample_map(report.config, s);
    nlohmann::json j;
    j["schema"] = "spv-failure/1";
    j["config"] = config_to_json(report.config);
    j["sample"] = s;
    j["map"] = f.describe();
    if (const PolyMap* p = f.as_poly()) j["poly"] = *p;
    j["records"] = nlohmann::json::array();
    for (const Record& r : report.records)
      if (r.sample == s) j["records"].push_back(record_to_json(r));
    const std::string path = report.config.failure_dir + "/" + to_string(report.config.suite) + "-seed" +
                             std::to_string(report.config.seed) + "-sample" + std::to_string(s) + ".json";
    std::ofstream out(path);
    if (!out) throw IoError("cannot write failing sample to '" + path + "'");
    out << j.dump(2) << '\n';
    paths.push_back(path);
  }
  return paths;
}


Report replay_failure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read failing sample '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
  SuiteConfig config = config_from_json(j.at("config"));
  config.failure_dir.clear();
  const int sample = j.at("sample").get<int>();
  const HoloMap f = j.contains("poly") ? HoloMap(polymap_from_json(j.at("poly"))) : sample_map(config, sample);
  std::vector<Record> records;
  for (const auto& rj : j.at("records")) {
    const Record stored = record_from_json(rj);
    records.push_back({sample, check_inequality(f, stored.report.id, stored.report.context), std::nullopt});
  }
  return finish(config, std::move(records), {});
}

}  // namespace spv
