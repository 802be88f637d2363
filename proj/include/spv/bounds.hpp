#pragma once

#include "spv/cauchy.hpp"
#include "spv/geometry.hpp"
#include "spv/holomap.hpp"
#include "spv/multiindex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spv {

/// Which inequality a BoundReport evaluates. Names follow the numbering used
/// in the reports ("1.4" is the high-order Bergman-metric bound, also
/// accepted as "4.3" when parsing).
enum class InequalityId {
  disk_scalar,       // 1.1: |f^(k)|/(1-|f|^2) <= k!(1+|z|)^{k-1}/(1-|z|^2)^k,  n = m = 1
  chen_liu,          // 1.2: baseline partial-derivative bound, m = 1
  schwarz_pick,      // 1.3: H_{f(z)}(f'(z)b, f'(z)b) <= H_z(b, b)
  high_order,        // 1.4 / 4.3: H_{f(z)}(D_k, D_k) <= k!^2 (1 + ...)^{2(k-1)} H_z^k
  origin_graded,     // 3.1: homogeneous part at the origin
  origin_partial,    // 3.2: single coefficient at the origin
  disk_quadratic,    // 4.1: quadratic form on the disk, n = 1
  partial_quadratic, // 5.1
  partial_scalar,    // 5.2, m = 1
  radial_quadratic,  // 5.3, z on the z_1-axis
};

std::string to_string(InequalityId id);
InequalityId inequality_from_string(const std::string& s);
const std::vector<InequalityId>& all_inequalities();

struct BoundContext {
  CVec z;
  std::optional<CVec> beta;
  int k = 0;
  std::optional<MultiIndex> v;
  std::string map_label;
};

struct BoundReport {
  InequalityId id;
  double lhs;
  double rhs;
  double slack;
  double ratio;
  BoundContext context;

  static BoundReport make(InequalityId id, double lhs, double rhs, BoundContext context);
};

/// |<D, fz>|^2 + (1 - |fz|^2)|D|^2.
double lhs_quadratic(const CVec& d, const CVec& fz);

/// k!^2 (1 + |<b,z>| / ((1-|z|^2)|b|^2 + |<b,z>|^2)^{1/2})^{2(k-1)} H_z(b,b)^k.
double rhs_main(int k, const CVec& z, const CVec& beta);

/// [k! (1 - |f|^2)(1+|z|)^{k-1} / (1-|z|^2)^k]^2.
double rhs_disk(int k, double z_norm, double fz_norm);

struct PartialBounds {
  double quadratic;  // (|v|^|v|/v^v) [v!(1+|z|)^{|v|-1}(1-|f|^2)/(1-|z|^2)^{|v|}]^2
  double scalar;     // square root of `quadratic`
  double chen_liu;   // n^{|v|/2} |v|! C(n+|v|-1, n-1) (1-|f|^2)(1+|z|)^{|v|-1}/(1-|z|^2)^{|v|}
};

PartialBounds rhs_partial(const MultiIndex& v, double z_norm, double fz_norm);

/// Terms c_j |z|^j of (1+|z|)^{|v|-1} with j <= v_1.
double radial_mu(const MultiIndex& v, double z_norm);

/// (|v|^|v|/v^v) [v! mu(z) (1-|f|^2) / (1-|z|^2)^{(v_1+|v|)/2}]^2 for z on
/// the z_1-axis; rejects other points.
double rhs_radial(const MultiIndex& v, const CVec& z, double fz_norm);

struct OriginBounds {
  double graded;   // (1 - |a0|^2)^2
  double partial;  // (|v|^|v|/v^v)(1 - |a0|^2)^2
};

OriginBounds rhs_origin(const MultiIndex& v, double a0_norm);

struct AjCoefficients {
  std::vector<double> magnitudes;
  int first_index;     // j of magnitudes[0]
  double term_sum;
  double closed_form;
};

/// |A_j| for the chain-rule expansion of f = g o phi_xi at xi.
/// Disk: A_j = (-1)^j conj(xi)^{k-j}/(1-|xi|^2)^k k!(k-1)!/((k-j)!(j-1)!), j = 1..k,
///   sum = k!(1+|xi|)^{k-1}/(1-|xi|^2)^k.
AjCoefficients aj_coefficients_disk(int k, double xi_norm);
/// Radial variant for v with xi on the z_1-axis, j = 0..v_1 (1..v_1 when v' = 0):
///   |A_j| = |xi|^{v_1-j}/(1-|xi|^2)^{(v_1+|v|)/2} v!(|v|-1)!/((v_1-j)!(j-1+|v'|)!),
///   sum = v! mu(xi)/(1-|xi|^2)^{(v_1+|v|)/2}.
AjCoefficients aj_coefficients_radial(const MultiIndex& v, double xi_norm);

/// Complex A_j (disk variant), for chain-rule reconstruction tests.
std::vector<cplx> aj_values_disk(int k, cplx xi);

/// Evaluates one inequality. Derivatives come from `table` (which must hold
/// all partials up to the order the inequality needs) or, when absent, from
/// derivative_table with default quadrature.
BoundReport check_inequality(const HoloMap& f, InequalityId id, const BoundContext& context,
                             const DerivativeTable* table = nullptr);

/// Derivative order an inequality needs for a context.
int required_order(InequalityId id, const BoundContext& context);

}  // namespace spv
