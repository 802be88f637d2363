#pragma once

// Closed-form maps that attain, or asymptotically attain, the Schwarz-Pick
// type bounds.

#include "spv/geometry.hpp"
#include "spv/holomap.hpp"
#include "spv/multiindex.hpp"

namespace spv {

/// phi_a as a map B_n -> B_n.
HoloMap automorphism_map(const CVec& a);

/// f(z) = a0 + a_v z^v / (1 + <a_v, a0> z^v / (1 - |a0|^2)).
/// Requires |<a_v,a0>|^2 + (1-|a0|^2)|a_v|^2 = (|v|^|v|/v^v)(1-|a0|^2)^2.
HoloMap extremal_origin_map(const CVec& a0, const CVec& av, const MultiIndex& v);

/// Positive multiple of `direction` satisfying the equality condition above.
CVec extremal_coefficient(const CVec& a0, const CVec& direction, const MultiIndex& v);

/// The k = 1 extremal map through w0 = f(xi) with Jacobian J at xi:
///   f(z) = w0 + [ (1-<z,xi>)/(1-|xi|^2) + w0^H J (z-xi)/(1-|w0|^2) ]^{-1} J (z-xi).
/// Requires n <= m and phi'_{w0}(w0) J phi'_xi(0) to be an isometry.
HoloMap extremal_k1_map(const CVec& xi, const CVec& w0, const CMat& jacobian);

/// The Jacobian J for which phi'_{w0}(w0) J phi'_xi(0) equals the given
/// isometry U (m x n with U^H U = I).
CMat isometric_jacobian(const CVec& xi, const CVec& w0, const CMat& isometry);

/// f_w(z) = g_w(-e^{-i arg xi} (xi - z)/(1 - conj(xi) z)),
/// g_w(t) = (w/|w|)(|w| - t)/(1 - |w| t). Disk into B_m; xi != 0, 0 < |w| < 1.
HoloMap remark2_map(cplx xi, const CVec& w);

/// f = g o phi_xi with g(z) = (w - s z^v)/(1 - conj(w) s z^v), s = sqrt(|v|^|v|/v^v),
/// xi = (xi1, 0, ..., 0). B_n into the disk; |w| < 1.
HoloMap remark3_map(const MultiIndex& v, cplx xi1, cplx w);

/// f = g o phi_xi with g(z) = (w + e^{-i theta} z_1)/(1 + conj(w) e^{-i theta} z_1),
/// theta = arg xi1 - arg w, xi = (xi1, 0, ..., 0). xi1 != 0, 0 < |w| < 1.
HoloMap remark4_map(int n, cplx xi1, cplx w);

enum class RemarkKind { remark2, remark3, remark4 };

struct RemarkParams {
  cplx xi = 0.0;
  CVec w;            // remark2: point of B_m; remark3/4: w(0) is used
  MultiIndex v;      // remark3 only
  int n = 1;         // remark4 only
};

HoloMap remark_family(RemarkKind kind, const RemarkParams& params);

/// |f_w^{(k)}(xi)| for the remark2 family, from the binomial display.
double remark2_derivative_modulus(int k, double xi_norm, double w_norm);

/// |d^k f / dz_1^k (xi)| for the remark4 family.
double remark4_derivative_modulus(int k, double xi_norm, double w_norm);

/// d^v f(xi) for the remark3 family:
/// (-1)^{|v|+1} sqrt(|v|^|v|/v^v) v! (1-|w|^2) / (1-|xi|^2)^{(v_1+|v|)/2}.
double remark3_partial(const MultiIndex& v, double xi_norm, double w_norm);

/// The Remark 1 example z_1 + z_2^2/3 on B_2.
PolyMap remark1_map();

}  // namespace spv
