// Serial reference vs OpenMP kernels: torus sampling, quadrature tables and a
// full suite run. Also confirms both paths give identical output.

#include "spv/cauchy.hpp"
#include "spv/families.hpp"
#include "spv/harness.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace spv;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Times serial and parallel kernels"};
  int reps = 3;
  int samples = 100;
  app.add_option("--reps", reps, "repetitions per timing (best is reported)")->capture_default_str();
  app.add_option("--samples", samples, "samples for the suite timing")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  CVec z2(2);
  z2 << cplx(0.5, 0.2), cplx(-0.3, 0.6);
  const HoloMap f2 = HoloMap(random_polymap(2, 2, 8, 11));
  const QuadratureSpec s2{{0.3, 0.3}, 256};
  {
    TorusSamples a = sample_torus(f2, z2, s2, Execution::serial);
    TorusSamples b = sample_torus(f2, z2, s2, Execution::parallel);
    const double ts = best_of(reps, [&] { a = sample_torus(f2, z2, s2, Execution::serial); });
    const double tp = best_of(reps, [&] { b = sample_torus(f2, z2, s2, Execution::parallel); });
    row("sample_torus n=2 N=256", ts, tp, a.values() == b.values());
  }

  CVec z3(3);
  z3 << cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.1, -0.5);
  const HoloMap f3 = automorphism_map(z3 * 0.8);
  const QuadratureSpec s3{{0.1, 0.1, 0.1}, 64};
  {
    DerivativeTable a = quadrature_table(f3, z3, 6, s3, Execution::serial);
    DerivativeTable b = quadrature_table(f3, z3, 6, s3, Execution::parallel);
    const double ts = best_of(reps, [&] { a = quadrature_table(f3, z3, 6, s3, Execution::serial); });
    const double tp = best_of(reps, [&] { b = quadrature_table(f3, z3, 6, s3, Execution::parallel); });
    row("quadrature_table n=3 N=64 |v|<=6", ts, tp, a.partials == b.partials);
  }

  {
    const CVec a0 = CVec::Constant(1, 0.3);
    const MultiIndex v{2, 1};
    const HoloMap f = extremal_origin_map(a0, extremal_coefficient(a0, CVec::Ones(1), v), v);
    const QuadratureSpec spec{{0.4, 0.4}, 128};
    std::map<MultiIndex, CVec> a, b;
    const double ts = best_of(reps, [&] { a = taylor_coefficients(f, 12, spec, Execution::serial); });
    const double tp = best_of(reps, [&] { b = taylor_coefficients(f, 12, spec, Execution::parallel); });
    row("taylor_coefficients n=2 N=128", ts, tp, a == b);
  }

  {
    SuiteConfig c;
    c.suite = SuiteId::main;
    c.n = 3;
    c.m = 2;
    c.samples = samples;
    c.k_max = 3;
    c.failure_dir.clear();
    std::string a, b;
    c.exec = Execution::serial;
    const double ts = best_of(1, [&] { a = report_to_json(run_suite(c)); });
    c.exec = Execution::parallel;
    const double tp = best_of(1, [&] { b = report_to_json(run_suite(c)); });
    row("main suite n=3 m=2", ts, tp, a == b);
  }
  return 0;
}
