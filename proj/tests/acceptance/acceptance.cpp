// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "spv/bounds.hpp"
#include "spv/cauchy.hpp"
#include "spv/families.hpp"
#include "spv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace spv;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

CVec gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  CVec z(n);
  for (int i = 0; i < n; ++i) z(i) = cplx(g(rng), g(rng));
  return z;
}

CVec unit(std::mt19937_64& rng, int n) {
  CVec z = gaussian(rng, n);
  return z / z.norm();
}

CVec in_ball(std::mt19937_64& rng, int n, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return unit(rng, n) * (radius * std::pow(u(rng), 1.0 / (2 * n)));
}

CMat isometry(std::mt19937_64& rng, int m, int n) {
  CMat a(m, n);
  for (int j = 0; j < n; ++j) a.col(j) = gaussian(rng, m);
  Eigen::HouseholderQR<CMat> qr(a);
  return qr.householderQ() * CMat::Identity(m, n);
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

std::vector<MultiIndex> nonzero(int n, int max_degree) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& v : enumerate_up_to(n, max_degree))
    if (!v.is_zero()) out.push_back(v);
  return out;
}

bool on_lattice(const MultiIndex& alpha, const MultiIndex& v) {
  int q = -1;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) {
      if (alpha[i] != 0) return false;
      continue;
    }
    if (alpha[i] % v[i] != 0 || (q >= 0 && alpha[i] / v[i] != q)) return false;
    q = alpha[i] / v[i];
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1
Outcome soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t contexts = 0;
  std::size_t checked = 0;
  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      SuiteConfig c;
      c.suite = SuiteId::main;
      c.n = n;
      c.m = m;
      c.samples = 38;
      c.k_max = 4;
      c.degree = 5;
      c.seed = 1000 + static_cast<std::uint64_t>(10 * n + m);
      c.failure_dir.clear();
      const Report r = run_suite(c);
      contexts += static_cast<std::size_t>(c.samples) * 2 * 3;  // two points, three directions
      for (const Record& rec : r.records) {
        if (rec.report.id != InequalityId::high_order) continue;
        ++checked;
        min_slack = std::min(min_slack, rec.report.slack);
        if (rec.report.slack < -1e-8) ++violations;
      }
    }
  const double secs = seconds_since(t0);
  return {contexts >= 2000 && violations == 0 && secs <= 300.0,
          fmt("%zu (map,z,beta) contexts, %zu order-k checks (k<=4), %d below -1e-8, min slack %.3g, %.1f s",
              contexts, checked, violations, min_slack, secs)};
}

// ---------------------------------------------------------------- 2
Outcome reductions() {
  std::mt19937_64 rng(2);
  double worst_k1 = 0.0;
  for (int i = 0; i < 500; ++i) {
    SuiteConfig c;
    c.n = 1 + i % 3;
    c.m = 1 + (i / 3) % 3;
    c.seed = 2;
    const HoloMap f = sample_map(c, i);
    const CVec z = in_ball(rng, c.n, 0.9);
    const DerivativeTable t = derivative_table(f, z, 1);
    const BoundContext ctx{z, unit(rng, c.n), 1, std::nullopt, ""};
    const BoundReport a = check_inequality(f, InequalityId::high_order, ctx, &t);
    const BoundReport b = check_inequality(f, InequalityId::schwarz_pick, ctx, &t);
    worst_k1 = std::max({worst_k1, rel(a.lhs, b.lhs) * (std::max(a.lhs, b.lhs) > 0), rel(a.rhs, b.rhs)});
  }
  double worst_disk = 0.0;
  for (int i = 0; i < 500; ++i) {
    SuiteConfig c;
    c.n = 1;
    c.m = 1 + i % 3;
    c.seed = 3;
    const HoloMap f = sample_map(c, i);
    const CVec z = in_ball(rng, 1, 0.9);
    const int k = 1 + (i / 3) % 4;
    const DerivativeTable t = derivative_table(f, z, k);
    const double s = 1.0 - t.value.squaredNorm();
    const BoundContext ctx{z, CVec::Ones(1), k, std::nullopt, ""};
    const BoundReport h = check_inequality(f, InequalityId::high_order, ctx, &t);
    const BoundReport d = check_inequality(f, InequalityId::disk_quadratic, ctx, &t);
    const double lhs_gap = std::abs(h.lhs * s * s - d.lhs) / std::max(d.lhs, 1e-300);
    worst_disk = std::max({worst_disk, d.lhs > 0.0 ? lhs_gap : h.lhs, rel(h.rhs * s * s, d.rhs)});
  }
  return {worst_k1 <= 1e-12 && worst_disk <= 1e-10,
          fmt("order-1 vs first-order bound: max rel gap %.2e (500 contexts, tol 1e-12); n=1 vs disk form after "
              "rescaling: max rel gap %.2e (500 contexts, tol 1e-10)",
              worst_k1, worst_disk)};
}

// ---------------------------------------------------------------- 3
Outcome equality() {
  std::mt19937_64 rng(3);
  double aut = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 3;
    const HoloMap f = automorphism_map(in_ball(rng, n, 0.9));
    const BoundContext ctx{in_ball(rng, n, 0.9), unit(rng, n), 1, std::nullopt, ""};
    aut = std::max(aut, std::abs(check_inequality(f, InequalityId::schwarz_pick, ctx).slack));
  }

  double origin = 0.0;
  int grid = 0;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m)
      for (const MultiIndex& v : nonzero(n, 4))
        for (double a : {0.0, 0.3, 0.7}) {
          const CVec a0 = unit(rng, m) * a;
          const HoloMap f = extremal_origin_map(a0, extremal_coefficient(a0, unit(rng, m), v), v);
          const BoundContext ctx{CVec::Zero(n), std::nullopt, 0, v, ""};
          origin = std::max(origin, std::abs(check_inequality(f, InequalityId::origin_partial, ctx).slack));
          ++grid;
        }

  double k1 = 0.0;
  int built = 0;
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= 3; ++m)
      for (int rep = 0; rep < 4; ++rep) {
        const CVec xi = in_ball(rng, n, 0.8);
        const CVec w0 = rep == 0 ? CVec(CVec::Zero(m)) : in_ball(rng, m, 0.8);
        const HoloMap f = extremal_k1_map(xi, w0, isometric_jacobian(xi, w0, isometry(rng, m, n)));
        const DerivativeTable t = derivative_table(f, xi, 1);
        for (int b = 0; b < 50; ++b) {
          const BoundContext ctx{xi, gaussian(rng, n), 1, std::nullopt, ""};
          k1 = std::max(k1, std::abs(check_inequality(f, InequalityId::schwarz_pick, ctx, &t).slack));
        }
        ++built;
      }
  return {aut <= 1e-9 && origin <= 1e-10 && k1 <= 1e-9,
          fmt("automorphisms max |slack| %.2e (500 contexts, tol 1e-9); extremal origin maps max |slack| %.2e "
              "(%d grid points, tol 1e-10); k=1 extremal maps max |slack| %.2e (%d maps x 50 beta, tol 1e-9)",
              aut, origin, grid, k1, built)};
}

// ---------------------------------------------------------------- 4
Outcome oracle() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  std::size_t compared = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 3;
    const PolyMap f = random_polymap(n, 1 + (i / 3) % 2, 6, static_cast<std::uint64_t>(4000 + i));
    const CVec z = in_ball(rng, n, 0.6);
    const DerivativeTable quad = quadrature_table(f, z, 5, wide_quadrature(z, 5));
    const DerivativeTable exact = derivative_table(f, z, 5);
    for (const auto& [v, d] : exact.partials) {
      worst = std::max(worst, relative_gap(quad.at(v), d));
      ++compared;
    }
  }

  double route = 0.0;
  int contexts = 0;
  for (int i = 0; i < 125; ++i) {
    SuiteConfig c;
    c.n = 1 + i % 3;
    c.m = 1 + (i / 3) % 3;
    c.seed = 5;
    const HoloMap f = sample_map(c, i);
    const BallPoint z(in_ball(rng, c.n, 0.9));
    const Direction beta(unit(rng, c.n));
    const DerivativeTable t = derivative_table(f, z.coords(), 4);
    for (int k = 1; k <= 4; ++k) {
      const CVec sum = frechet_sum(t, beta.coords(), k);
      const CVec line = frechet_line(f, z, beta, k, default_quadrature(z.coords(), k).nodes);
      route = std::max(route, relative_gap(sum, line));
      ++contexts;
    }
  }
  return {worst <= 1e-10 && route <= 1e-9,
          fmt("quadrature vs exact: max rel error %.2e over 200 maps, %zu partials |v|<=5 (tol 1e-10); "
              "D_k routes: max rel gap %.2e over %d contexts (tol 1e-9)",
              worst, compared, route, contexts)};
}

// ---------------------------------------------------------------- 5
Outcome identities() {
  double aj = 0.0;
  for (int k = 1; k <= 10; ++k)
    for (int i = 0; i <= 9; ++i) {
      const AjCoefficients c = aj_coefficients_disk(k, 0.1 * i);
      aj = std::max(aj, rel(c.term_sum, c.closed_form));
    }
  std::mt19937_64 rng(5);
  double quad = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int m = 1 + i % 4;
    const CVec fz = in_ball(rng, m, 0.999);
    const CVec d = gaussian(rng, m);
    const double s = 1.0 - fz.squaredNorm();
    quad = std::max(quad, rel(lhs_quadratic(d, fz), s * s * bergman_metric(fz, d)));
  }
  return {aj <= 1e-12 && quad <= 1e-12,
          fmt("A_j term sums vs closed form: max rel gap %.2e (k<=10, 10 radii); quadratic form vs metric: "
              "max rel gap %.2e (1000 random inputs); tol 1e-12",
              aj, quad)};
}

// ---------------------------------------------------------------- 6
Outcome sharpness() {
  SuiteConfig c;
  c.suite = SuiteId::sharpness;
  c.n = 2;
  c.k_max = 4;
  c.seed = 6;
  c.failure_dir.clear();
  c.sweep.xi_norms = {0.25, 0.5, 0.75};
  c.sweep.radii = {0.5, 0.9, 0.99, 0.999, 0.9999};

  // Records of one series share a sample index; within a series each
  // inequality appears once per radius, in increasing |w|.
  double law = 0.0;
  double final_gap = 0.0;
  double worst_drop = 0.0;
  std::size_t records = 0;
  bool certified = true;
  for (int m = 1; m <= 2; ++m) {
    c.m = m;
    c.sweep.families = m == 1 ? std::vector{RemarkKind::remark2, RemarkKind::remark4} : std::vector{RemarkKind::remark2};
    const Report r = run_suite(c);
    certified = certified && r.passed();
    records += r.records.size();
    std::map<std::pair<int, InequalityId>, double> last;
    for (const Record& rec : r.records) {
      law = std::max(law, std::abs(rec.report.ratio - *rec.predicted));
      const auto key = std::make_pair(rec.sample, rec.report.id);
      if (auto it = last.find(key); it != last.end()) worst_drop = std::max(worst_drop, it->second - rec.report.ratio);
      last[key] = rec.report.ratio;
    }
    for (const auto& [key, ratio] : last) final_gap = std::max(final_gap, 1.0 - ratio);
  }
  const bool monotone = worst_drop <= 1e-12;
  return {law <= 1e-8 && final_gap <= 1e-3 && monotone && certified,
          fmt("%zu sweep records (remark2 with m in {1,2}, remark4), k<=4, |xi| in {0.25,0.5,0.75}: "
              "max |ratio - closed form| %.2e (tol 1e-8), largest drop between radii %.1e (tol 1e-12), max 1-ratio at |w|=0.9999 %.2e (tol 1e-3)",
              records, law, worst_drop, final_gap)};
}

// ---------------------------------------------------------------- 7
Outcome remark3() {
  double display = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  int cases = 0;
  for (int n = 2; n <= 3; ++n)
    for (const MultiIndex& v : nonzero(n, 4))
      for (double xn : {0.0, 0.3, 0.6})
        for (double wn : {0.0, 0.5, 0.9}) {
          const cplx xi = std::polar(xn, 0.4);
          const cplx w = std::polar(wn, -1.0);
          const HoloMap f = remark3_map(v, xi, w);
          CVec z = CVec::Zero(n);
          z(0) = xi;
          const DerivativeTable t = derivative_table(f, z, v.degree());
          const double want = std::abs(remark3_partial(v, xn, wn));
          display = std::max(display, rel(t.at(v).norm(), want));
          const BoundReport r = check_inequality(f, InequalityId::radial_quadratic, {z, std::nullopt, 0, v, ""}, &t);
          margin = std::min(margin, r.ratio - std::pow(2.0, -2.0 * (v.degree() - 1)));
          ++cases;
        }
  return {display <= 1e-8 && margin >= -1e-8,
          fmt("%d cases (n in {2,3}, |v|<=4): attained partial vs display max rel gap %.2e (tol 1e-8); "
              "min of ratio - 2^{-2(|v|-1)} = %.3g (tol -1e-8)",
              cases, display, margin)};
}

// ---------------------------------------------------------------- 8
Outcome dominance() {
  int points = 0;
  int bad = 0;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (const MultiIndex& v : nonzero(n, 5))
      for (double r : {0.0, 0.3, 0.6, 0.9}) {
        const PartialBounds b = rhs_partial(v, r, 0.0);
        worst = std::max(worst, b.scalar / b.chen_liu);
        if (b.scalar > b.chen_liu) ++bad;
        ++points;
      }
  return {bad == 0, fmt("%d grid points (n<=3, |v|<=5, |z| in {0,0.3,0.6,0.9}): %d where the new bound exceeds "
                        "the baseline, max ratio new/baseline %.3f",
                        points, bad, worst)};
}

// ---------------------------------------------------------------- 9
PolyMap coefficient_map(int i, std::mt19937_64& rng) {
  const int n = 1 + i % 3;
  const int m = 1 + (i / 3) % 2;
  switch (i % 4) {
    case 0: return random_polymap(n, m, 5, static_cast<std::uint64_t>(9000 + i));
    case 1: return random_polymap(n, m, 4, static_cast<std::uint64_t>(9000 + i), 1e-12);
    case 2: {
      // a_v z^v with the largest admissible |a_v|.
      const auto vs = nonzero(n, 4);
      const MultiIndex v = vs[static_cast<std::size_t>(i / 4) % vs.size()];
      PolyMap f(n, m, v.degree());
      f.set(v, extremal_coefficient(CVec::Zero(m), unit(rng, m), v));
      return f;
    }
    default: {
      // A linear isometry into C^{m'} with m' >= n.
      const int mm = std::max(n, m);
      const CMat u = isometry(rng, mm, n);
      PolyMap f(n, mm, 1);
      for (int j = 0; j < n; ++j) f.set(MultiIndex::unit(n, j), u.col(j));
      return f;
    }
  }
}

Outcome coefficients() {
  std::mt19937_64 rng(9);
  double unit_sphere = 0.0, weighted = 0.0, graded = 0.0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    const PolyMap f = coefficient_map(i, rng);
    const auto vs = nonzero(f.n(), std::max(1, f.max_degree()));
    for (int b = 0; b < 100; ++b) {
      const MultiIndex& v = vs[static_cast<std::size_t>(b) % vs.size()];
      const CVec beta = b == 0 ? extremal_direction(v) : unit(rng, f.n());
      const CoefficientReport r = coefficient_checks(f, v, beta);
      unit_sphere = std::max(unit_sphere, r.unit_sphere.lhs);
      weighted = std::max(weighted, r.weighted.lhs);
      graded = std::max(graded, r.graded.lhs);
      min_slack = std::min({min_slack, r.unit_sphere.slack(), r.weighted.slack(), r.graded.slack()});
    }
  }

  const PolyMap r1 = remark1_map();
  const CoefficientReport rc = coefficient_checks(r1, MultiIndex{1, 0}, CVec::Unit(2, 0));
  const double single_slack = rc.single.slack();
  const double origin_slack =
      check_inequality(r1, InequalityId::origin_partial, {CVec::Zero(2), std::nullopt, 0, MultiIndex{1, 0}, ""}).slack;
  const HoloMap r1_closed = HoloMap::closed_form("remark1", "", 2, 1, [](const CVec& z) {
    return CVec::Constant(1, z(0) + z(1) * z(1) / 3.0);
  });
  const cplx off = taylor_coefficient(r1_closed, MultiIndex{0, 2}, wide_quadrature(CVec::Zero(2), 2))(0);
  const bool remark1_ok = single_slack == 0.0 && origin_slack == 0.0 && std::abs(off - 1.0 / 3.0) <= 1e-12;
  return {min_slack >= -1e-10 && remark1_ok,
          fmt("500 maps x 100 boundary directions: min slack %.3g (tol -1e-10), max lhs unit-sphere %.6f, "
              "weighted %.6f, graded %.6f; remark1 map: single-coefficient slack %.1g, origin slack %.1g, "
              "coefficient at (0,2) = %.15f",
              min_slack, unit_sphere, weighted, graded, single_slack, origin_slack, off.real())};
}

// ---------------------------------------------------------------- 10
Outcome rigidity() {
  std::mt19937_64 rng(10);
  double worst = 0.0;
  int maps = 0;
  std::size_t coefficients = 0;
  for (const MultiIndex& v : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{2, 2}})
    for (int m = 1; m <= 2; ++m)
      for (double a : {0.0, 0.3, 0.7}) {
        const CVec a0 = unit(rng, m) * a;
        const HoloMap f = extremal_origin_map(a0, extremal_coefficient(a0, unit(rng, m), v), v);
        const QuadratureSpec spec{{0.4, 0.4}, 32};
        for (const auto& [alpha, c] : taylor_coefficients(f, 8, spec))
          if (!on_lattice(alpha, v)) {
            worst = std::max(worst, c.norm());
            ++coefficients;
          }
        ++maps;
      }
  return {worst <= 1e-9, fmt("%d extremal maps, v in {(1,1),(2,1),(2,2)}, %zu off-lattice coefficients with "
                             "|alpha|<=8: max modulus %.2e (tol 1e-9)",
                             maps, coefficients, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"soundness sweep", soundness},     {"reductions", reductions},
      {"equality certification", equality}, {"oracle agreement", oracle},
      {"identity checks", identities},    {"sharpness asymptotics", sharpness},
      {"remark3 tightness", remark3},     {"dominance", dominance},
      {"coefficient inequalities", coefficients}, {"rigidity", rigidity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
