#pragma once

#include "spv/execution.hpp"
#include "spv/geometry.hpp"
#include "spv/holomap.hpp"
#include "spv/multiindex.hpp"

#include <map>
#include <variant>
#include <vector>

namespace spv {

/// Torus z + (r_1 e^{i t_1}, ..., r_n e^{i t_n}) sampled at `nodes` equally
/// spaced angles per circle.
struct QuadratureSpec {
  std::vector<double> radii;
  int nodes = 64;
};

/// Radii 0.5 (1-|z|)/sqrt(n) on every axis; 64 nodes, or 128 when |z| > 0.95
/// and n <= 2.
/// Node count is raised to the next power of two >= 2*max_order + 2.
QuadratureSpec default_quadrature(const CVec& z, int max_order);

/// Equal radii r with sum_j (|z_j| + r)^2 = reach^2: the widest torus of
/// equal radii that stays inside the ball of radius `reach`. Suited to maps
/// holomorphic on a neighborhood of the closed ball (polynomials).
QuadratureSpec wide_quadrature(const CVec& z, int max_order, double reach = 0.98);

/// Throws QuadratureError if the torus leaves the ball or the node count is
/// too small for the requested order.
void validate_quadrature(const QuadratureSpec& spec, const CVec& z, int max_order);

enum class DerivativeMethod { exact_poly, quadrature, frechet_sum, frechet_line };
const char* to_string(DerivativeMethod method);

struct FrechetOrder {
  int k;
  CVec beta;
};

struct DerivativeResult {
  CVec value;
  std::variant<MultiIndex, FrechetOrder> order;
  DerivativeMethod method;
  /// Relative disagreement between the two Frechet routes (0 otherwise).
  double route_gap = 0.0;
};

/// Raw samples f(z + r e^{i theta_j}) on the N^n torus grid, row-major with
/// the first coordinate slowest. Values have f(z) subtracted.
class TorusSamples {
 public:
  TorusSamples(int n, int m, int nodes, std::vector<double> radii, CVec center_value,
               std::vector<cplx> values);

  int n() const { return n_; }
  int m() const { return m_; }
  int nodes() const { return nodes_; }
  const std::vector<cplx>& values() const { return values_; }
  const CVec& center_value() const { return center_; }

  /// Trapezoid estimate of d^{|v|} f(z) / dz^v.
  CVec partial(const MultiIndex& v) const;

  /// Normalized discrete Fourier coefficients (1/N^n) sum_j F_j e^{-i p.theta_j}
  /// for every p in [0, max_freq]^n, computed one axis at a time. Entry
  /// layout: row-major over p (first axis slowest), m values per entry.
  std::vector<cplx> spectrum(int max_freq) const;

  /// Partials for every |v| <= max_order from one spectrum pass.
  std::map<MultiIndex, CVec> partials_up_to(int max_order) const;

 private:
  int n_;
  int m_;
  int nodes_;
  std::vector<double> radii_;
  CVec center_;
  std::vector<cplx> values_;
};

TorusSamples sample_torus(const HoloMap& f, const CVec& z, const QuadratureSpec& spec,
                          Execution exec = Execution::parallel);

/// All partial derivatives of order <= max_order at one point.
struct DerivativeTable {
  CVec value;  // f(z)
  std::map<MultiIndex, CVec> partials;
  DerivativeMethod method;

  const CVec& at(const MultiIndex& v) const;
};

/// Exact differentiation for polynomial maps, torus quadrature otherwise.
DerivativeTable derivative_table(const HoloMap& f, const CVec& z, int max_order,
                                 const QuadratureSpec& spec, Execution exec = Execution::parallel);
DerivativeTable derivative_table(const HoloMap& f, const CVec& z, int max_order,
                                 Execution exec = Execution::parallel);

/// Same, always by quadrature (also for polynomial maps).
DerivativeTable quadrature_table(const HoloMap& f, const CVec& z, int max_order,
                                 const QuadratureSpec& spec, Execution exec = Execution::parallel);

DerivativeResult partial_derivative(const HoloMap& f, const BallPoint& z, const MultiIndex& v,
                                    const QuadratureSpec& spec);
DerivativeResult partial_derivative(const HoloMap& f, const BallPoint& z, const MultiIndex& v);

/// a_v = d^v f(0) / v!.
CVec taylor_coefficient(const HoloMap& f, const MultiIndex& v, const QuadratureSpec& spec);

/// All Taylor coefficients of degree <= max_degree from one torus sample.
std::map<MultiIndex, CVec> taylor_coefficients(const HoloMap& f, int max_degree,
                                               const QuadratureSpec& spec,
                                               Execution exec = Execution::parallel);

/// k-th derivative at lambda = 0 of lambda -> f(z + lambda beta), by a
/// single circle of the given radius.
CVec line_derivative(const LineRestriction& line, int k, double radius, int nodes);

struct FrechetOptions {
  bool cross_check = true;
  double route_tolerance = 1e-9;
  bool throw_on_disagreement = true;
};

/// D_k(f, z, beta) = sum_{|alpha|=k} (k!/alpha!) d^alpha f(z) beta^alpha.
/// Route (i) is the multi-index sum; route (ii) differentiates the line
/// restriction. Returns route (i) with the relative gap recorded.
DerivativeResult frechet_derivative(const HoloMap& f, const BallPoint& z, const Direction& beta,
                                    int k, const QuadratureSpec& spec,
                                    const FrechetOptions& options = {});
DerivativeResult frechet_derivative(const HoloMap& f, const BallPoint& z, const Direction& beta,
                                    int k, const FrechetOptions& options = {});

/// Route (i) only, from a precomputed table.
CVec frechet_sum(const DerivativeTable& table, const CVec& beta, int k);

/// Route (ii) only.
CVec frechet_line(const HoloMap& f, const BallPoint& z, const Direction& beta, int k, int nodes);

/// |a - b| / max(|a|, |b|, 1).
double relative_gap(const CVec& a, const CVec& b);

}  // namespace spv
