#include "spv/cauchy.hpp"

#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spv {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

constexpr double kNearBoundary = 0.95;

int next_pow2(int x) {
  int p = 1;
  while (p < x) p <<= 1;
  return p;
}

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

// tw[p * N + j] = exp(-2 pi i p j / N) for p <= max_p.
std::vector<cplx> twiddles(int nodes, int max_p) {
  std::vector<cplx> tw(static_cast<std::size_t>((max_p + 1) * nodes));
  for (int p = 0; p <= max_p; ++p)
    for (int j = 0; j < nodes; ++j) {
      const int r = (p * j) % nodes;
      tw[static_cast<std::size_t>(p * nodes + j)] =
          std::polar(1.0, -2.0 * std::numbers::pi * r / nodes);
    }
  return tw;
}

std::size_t grid_size(int n, int nodes) {
  std::size_t s = 1;
  for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(nodes);
  return s;
}

}  // namespace

const char* to_string(DerivativeMethod method) {
  switch (method) {
    case DerivativeMethod::exact_poly: return "exact-poly";
    case DerivativeMethod::quadrature: return "quadrature";
    case DerivativeMethod::frechet_sum: return "frechet-sum";
    case DerivativeMethod::frechet_line: return "frechet-line";
  }
  return "?";
}

QuadratureSpec default_quadrature(const CVec& z, int max_order) {
  const int n = static_cast<int>(z.size());
  const double norm = z.norm();
  QuadratureSpec spec;
  spec.radii.assign(static_cast<std::size_t>(n), 0.5 * (1.0 - norm) / std::sqrt(static_cast<double>(n)));
  spec.nodes = norm > kNearBoundary && n <= 2 ? 128 : 64;
  spec.nodes = std::max(spec.nodes, next_pow2(2 * max_order + 2));
  return spec;
}

QuadratureSpec wide_quadrature(const CVec& z, int max_order, double reach) {
  const int n = static_cast<int>(z.size());
  double sum_abs = 0.0;
  for (int j = 0; j < n; ++j) sum_abs += std::abs(z(j));
  // n r^2 + 2 r sum|z_j| + |z|^2 - reach^2 = 0
  const double c = z.squaredNorm() - reach * reach;
  if (!(c < 0.0)) throw QuadratureError("point lies outside the requested reach");
  const double r = -c / (sum_abs + std::sqrt(sum_abs * sum_abs - n * c));
  QuadratureSpec spec;
  spec.radii.assign(static_cast<std::size_t>(n), r);
  spec.nodes = std::max(64, next_pow2(2 * max_order + 2));
  return spec;
}

void validate_quadrature(const QuadratureSpec& spec, const CVec& z, int max_order) {
  if (static_cast<int>(spec.radii.size()) != z.size())
    throw QuadratureError("quadrature radii do not match the point dimension");
  if (!is_pow2(spec.nodes)) throw QuadratureError("quadrature node count must be a power of two");
  if (spec.nodes < 2 * max_order + 2)
    throw QuadratureError("quadrature node count too small for order " + std::to_string(max_order));
  double reach = 0.0;
  for (int j = 0; j < z.size(); ++j) {
    const double r = spec.radii[static_cast<std::size_t>(j)];
    if (!(r > 0.0)) throw QuadratureError("quadrature radii must be positive");
    reach += (std::abs(z(j)) + r) * (std::abs(z(j)) + r);
  }
  if (!(reach < 1.0)) throw QuadratureError("quadrature torus leaves the unit ball");
}

// ---------------------------------------------------------------- torus

TorusSamples::TorusSamples(int n, int m, int nodes, std::vector<double> radii, CVec center_value,
                           std::vector<cplx> values)
    : n_(n), m_(m), nodes_(nodes), radii_(std::move(radii)), center_(std::move(center_value)),
      values_(std::move(values)) {}

std::vector<cplx> TorusSamples::spectrum(int max_freq) const {
  const auto big_n = static_cast<std::size_t>(nodes_);
  const auto freqs = static_cast<std::size_t>(max_freq + 1);
  const auto m = static_cast<std::size_t>(m_);
  const auto tw = twiddles(nodes_, max_freq);

  // Transform the last axis first. Before step `axis`, the data is laid out
  // as [outer = N^axis][N][inner = freqs^(n-1-axis)][m].
  std::vector<cplx> cur = values_;
  std::size_t inner = 1;
  for (int axis = n_ - 1; axis >= 0; --axis) {
    std::size_t outer = 1;
    for (int i = 0; i < axis; ++i) outer *= big_n;
    std::vector<cplx> next(outer * freqs * inner * m, cplx(0.0));
    const std::size_t block = inner * m;
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t p = 0; p < freqs; ++p) {
        cplx* dst = next.data() + (o * freqs + p) * block;
        for (std::size_t j = 0; j < big_n; ++j) {
          const cplx w = tw[p * big_n + j];
          const cplx* src = cur.data() + (o * big_n + j) * block;
          for (std::size_t t = 0; t < block; ++t) dst[t] += src[t] * w;
        }
      }
    cur = std::move(next);
    inner *= freqs;
  }
  const double norm = 1.0 / static_cast<double>(grid_size(n_, nodes_));
  for (auto& c : cur) c *= norm;
  return cur;
}

std::map<MultiIndex, CVec> TorusSamples::partials_up_to(int max_order) const {
  const auto spec = spectrum(max_order);
  const auto freqs = static_cast<std::size_t>(max_order + 1);
  std::map<MultiIndex, CVec> out;
  for (const auto& v : enumerate_up_to(n_, max_order)) {
    if (v.is_zero()) {
      out.emplace(v, center_);
      continue;
    }
    std::size_t offset = 0;
    double scale = factorial(v);
    for (int i = 0; i < n_; ++i) {
      offset = offset * freqs + static_cast<std::size_t>(v[i]);
      scale /= ipow(radii_[static_cast<std::size_t>(i)], v[i]);
    }
    CVec d(m_);
    for (int c = 0; c < m_; ++c) d(c) = scale * spec[offset * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c)];
    out.emplace(v, std::move(d));
  }
  return out;
}

CVec TorusSamples::partial(const MultiIndex& v) const {
  if (v.dim() != n_) throw PreconditionError("derivative multi-index has wrong dimension");
  if (v.is_zero()) return center_;
  int max_p = 0;
  for (int e : v.entries()) max_p = std::max(max_p, e);
  const auto tw = twiddles(nodes_, max_p);
  const std::size_t total = grid_size(n_, nodes_);

  CVec acc = CVec::Zero(m_);
  std::vector<int> idx(static_cast<std::size_t>(n_), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    cplx phase = 1.0;
    for (int i = 0; i < n_; ++i)
      phase *= tw[static_cast<std::size_t>(v[i] * nodes_ + idx[static_cast<std::size_t>(i)])];
    const cplx* row = values_.data() + flat * static_cast<std::size_t>(m_);
    for (int c = 0; c < m_; ++c) acc(c) += row[c] * phase;
    for (int i = n_ - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < nodes_) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  double scale = factorial(v) / static_cast<double>(total);
  for (int i = 0; i < n_; ++i) scale /= ipow(radii_[static_cast<std::size_t>(i)], v[i]);
  return scale * acc;
}

TorusSamples sample_torus(const HoloMap& f, const CVec& z, const QuadratureSpec& spec, Execution exec) {
  const int n = f.n();
  const int m = f.m();
  const int nodes = spec.nodes;
  if (z.size() != n) throw PreconditionError("evaluation point has wrong dimension");
  const std::size_t total = grid_size(n, nodes);
  const CVec center = f(z);

  std::vector<cplx> circle(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) circle[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);

  std::vector<cplx> values(total * static_cast<std::size_t>(m));
  const auto body = [&](std::size_t flat) {
    CVec w(n);
    std::size_t rest = flat;
    for (int i = n - 1; i >= 0; --i) {
      const auto j = rest % static_cast<std::size_t>(nodes);
      rest /= static_cast<std::size_t>(nodes);
      w(i) = z(i) + spec.radii[static_cast<std::size_t>(i)] * circle[j];
    }
    const CVec fw = f.evaluate_unchecked(w) - center;
    for (int c = 0; c < m; ++c) values[flat * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] = fw(c);
  };

  const auto count = static_cast<std::ptrdiff_t>(total);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t flat = 0; flat < count; ++flat) body(static_cast<std::size_t>(flat));
  } else {
    for (std::ptrdiff_t flat = 0; flat < count; ++flat) body(static_cast<std::size_t>(flat));
  }
  return TorusSamples(n, m, nodes, spec.radii, center, std::move(values));
}

// ---------------------------------------------------------------- tables

const CVec& DerivativeTable::at(const MultiIndex& v) const {
  auto it = partials.find(v);
  if (it == partials.end()) throw PreconditionError("derivative " + v.str() + " not in table");
  return it->second;
}

DerivativeTable quadrature_table(const HoloMap& f, const CVec& z, int max_order,
                                 const QuadratureSpec& spec, Execution exec) {
  validate_quadrature(spec, z, max_order);
  const TorusSamples samples = sample_torus(f, z, spec, exec);
  return DerivativeTable{samples.center_value(), samples.partials_up_to(max_order), DerivativeMethod::quadrature};
}

DerivativeTable derivative_table(const HoloMap& f, const CVec& z, int max_order,
                                 const QuadratureSpec& spec, Execution exec) {
  if (const PolyMap* poly = f.as_poly()) {
    DerivativeTable table{f(z), {}, DerivativeMethod::exact_poly};
    for (const auto& v : enumerate_up_to(f.n(), max_order))
      table.partials.emplace(v, poly_partial(*poly, v).evaluate(z));
    return table;
  }
  return quadrature_table(f, z, max_order, spec, exec);
}

DerivativeTable derivative_table(const HoloMap& f, const CVec& z, int max_order, Execution exec) {
  return derivative_table(f, z, max_order, default_quadrature(z, max_order), exec);
}

DerivativeResult partial_derivative(const HoloMap& f, const BallPoint& z, const MultiIndex& v,
                                    const QuadratureSpec& spec) {
  validate_quadrature(spec, z.coords(), v.degree());
  const TorusSamples samples = sample_torus(f, z.coords(), spec);
  return DerivativeResult{samples.partial(v), v, DerivativeMethod::quadrature};
}

DerivativeResult partial_derivative(const HoloMap& f, const BallPoint& z, const MultiIndex& v) {
  return partial_derivative(f, z, v, default_quadrature(z.coords(), v.degree()));
}

CVec taylor_coefficient(const HoloMap& f, const MultiIndex& v, const QuadratureSpec& spec) {
  const BallPoint origin = BallPoint::origin(f.n());
  return partial_derivative(f, origin, v, spec).value / factorial(v);
}

std::map<MultiIndex, CVec> taylor_coefficients(const HoloMap& f, int max_degree,
                                               const QuadratureSpec& spec, Execution exec) {
  const DerivativeTable table = quadrature_table(f, CVec::Zero(f.n()), max_degree, spec, exec);
  std::map<MultiIndex, CVec> out;
  for (const auto& [v, d] : table.partials) out.emplace(v, d / factorial(v));
  return out;
}

// ---------------------------------------------------------------- Frechet

CVec line_derivative(const LineRestriction& line, int k, double radius, int nodes) {
  if (k < 0) throw PreconditionError("negative derivative order");
  if (!(radius > 0.0 && radius < line.radius)) throw QuadratureError("line circle exceeds the restriction disk");
  if (!is_pow2(nodes) || nodes < 2 * k + 2) throw QuadratureError("line node count invalid for order");
  const CVec center = line(0.0);
  if (k == 0) return center;
  CVec acc = CVec::Zero(center.size());
  for (int j = 0; j < nodes; ++j) {
    const int r = (k * j) % nodes;
    const cplx node = std::polar(radius, 2.0 * std::numbers::pi * j / nodes);
    acc += (line.map.evaluate_unchecked(line.base + node * line.direction) - center) *
           std::polar(1.0, -2.0 * std::numbers::pi * r / nodes);
  }
  return acc * (factorial(k) / (nodes * ipow(radius, k)));
}

CVec frechet_sum(const DerivativeTable& table, const CVec& beta, int k) {
  const int n = static_cast<int>(beta.size());
  CVec acc = CVec::Zero(table.value.size());
  for (const auto& alpha : enumerate(n, k)) {
    cplx mono = 1.0;
    for (int j = 0; j < n; ++j) mono *= ipow(beta(j), alpha[j]);
    acc += (multinomial_weight_real(alpha) * mono) * table.at(alpha);
  }
  return acc;
}

CVec frechet_line(const HoloMap& f, const BallPoint& z, const Direction& beta, int k, int nodes) {
  const LineRestriction line = restrict_to_line(f, z, beta);
  return line_derivative(line, k, 0.5 * line.radius, nodes);
}

double relative_gap(const CVec& a, const CVec& b) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), 1.0});
}

DerivativeResult frechet_derivative(const HoloMap& f, const BallPoint& z, const Direction& beta,
                                    int k, const QuadratureSpec& spec, const FrechetOptions& options) {
  if (beta.is_zero()) throw PreconditionError("Frechet derivative needs a nonzero direction");
  if (k < 1) throw PreconditionError("Frechet derivative order must be >= 1");
  const DerivativeTable table = derivative_table(f, z.coords(), k, spec);
  DerivativeResult result{frechet_sum(table, beta.coords(), k), FrechetOrder{k, beta.coords()},
                          DerivativeMethod::frechet_sum};
  if (options.cross_check) {
    const CVec line = frechet_line(f, z, beta, k, spec.nodes);
    result.route_gap = relative_gap(result.value, line);
    if (options.throw_on_disagreement && result.route_gap > options.route_tolerance)
      throw QuadratureError("Frechet routes disagree (relative gap " + std::to_string(result.route_gap) + ")");
  }
  return result;
}

DerivativeResult frechet_derivative(const HoloMap& f, const BallPoint& z, const Direction& beta,
                                    int k, const FrechetOptions& options) {
  return frechet_derivative(f, z, beta, k, default_quadrature(z.coords(), k), options);
}

}  // namespace spv
