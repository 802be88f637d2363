#include "spv/families.hpp"

#include <cmath>
#include <sstream>

namespace spv {

namespace {

std::string fmt_c(cplx c) {
  std::ostringstream os;
  os.precision(6);
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
  return os.str();
}

std::string fmt_v(const CVec& v) {
  std::string s = "[";
  for (int i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_c(v(i));
  return s + "]";
}

cplx monomial(const CVec& z, const MultiIndex& v) {
  cplx r = 1.0;
  for (int j = 0; j < v.dim(); ++j) r *= ipow(z(j), v[j]);
  return r;
}

CVec axis_point(int n, cplx xi1) {
  CVec xi = CVec::Zero(n);
  xi(0) = xi1;
  return xi;
}

}  // namespace

HoloMap automorphism_map(const CVec& a) {
  Automorphism phi(a);
  const int n = phi.dim();
  return HoloMap::closed_form("automorphism", "a=" + fmt_v(a), n, n,
                              [phi](const CVec& z) { return phi.apply(z); });
}

CVec extremal_coefficient(const CVec& a0, const CVec& direction, const MultiIndex& v) {
  const double s0 = 1.0 - a0.squaredNorm();
  if (!(s0 > 0.0)) throw DomainError("a0 must lie in the open unit ball");
  const double q = std::norm(inner(direction, a0)) + s0 * direction.squaredNorm();
  if (!(q > 0.0)) throw PreconditionError("direction must be nonzero");
  return std::sqrt(sharpness_factor(v) * s0 * s0 / q) * direction;
}

HoloMap extremal_origin_map(const CVec& a0, const CVec& av, const MultiIndex& v) {
  if (v.is_zero()) throw PreconditionError("extremal map needs v != 0");
  if (a0.size() != av.size()) throw PreconditionError("a0 and a_v dimensions differ");
  const double s0 = 1.0 - a0.squaredNorm();
  if (!(s0 > 0.0)) throw DomainError("a0 must lie in the open unit ball");
  const cplx c = inner(av, a0);
  const double lhs = std::norm(c) + s0 * av.squaredNorm();
  const double rhs = sharpness_factor(v) * s0 * s0;
  if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, rhs))
    throw PreconditionError("(a0, a_v, v) do not satisfy the equality condition");
  const int n = v.dim();
  const int m = static_cast<int>(a0.size());
  const cplx ratio = c / s0;
  std::ostringstream params;
  params << "v=" << v.str() << ",a0=" << fmt_v(a0) << ",av=" << fmt_v(av);
  return HoloMap::closed_form("extremal_origin", params.str(), n, m,
                              [a0, av, v, ratio](const CVec& z) -> CVec {
                                const cplx zv = monomial(z, v);
                                return a0 + (zv / (1.0 + ratio * zv)) * av;
                              });
}

CMat isometric_jacobian(const CVec& xi, const CVec& w0, const CMat& isometry) {
  return Automorphism(w0).jacobian_at_origin() * isometry * Automorphism(xi).jacobian_at_parameter();
}

HoloMap extremal_k1_map(const CVec& xi, const CVec& w0, const CMat& jacobian) {
  const int n = static_cast<int>(xi.size());
  const int m = static_cast<int>(w0.size());
  if (n > m) throw PreconditionError("k = 1 extremal maps need n <= m");
  if (jacobian.rows() != m || jacobian.cols() != n) throw PreconditionError("Jacobian must be m x n");
  const Automorphism phi_xi(xi);
  const Automorphism phi_w(w0);
  const CMat f0 = phi_w.jacobian_at_parameter() * jacobian * phi_xi.jacobian_at_origin();
  if ((f0.adjoint() * f0 - CMat::Identity(n, n)).norm() > 1e-10)
    throw PreconditionError("phi'_{w0}(w0) J phi'_xi(0) is not an isometry");

  const double sx = 1.0 - xi.squaredNorm();
  const double sw = 1.0 - w0.squaredNorm();
  std::ostringstream params;
  params << "xi=" << fmt_v(xi) << ",w0=" << fmt_v(w0);
  return HoloMap::closed_form("extremal_k1", params.str(), n, m,
                              [xi, w0, jacobian, sx, sw](const CVec& z) -> CVec {
                                const CVec jd = jacobian * (z - xi);
                                const cplx denom = (1.0 - inner(z, xi)) / sx + inner(jd, w0) / sw;
                                if (std::abs(denom) <= 1e-12)
                                  throw DomainError("k = 1 extremal map denominator vanished");
                                return w0 + jd / denom;
                              });
}

HoloMap remark2_map(cplx xi, const CVec& w) {
  const double wn = w.norm();
  if (xi == 0.0 || !(std::abs(xi) < 1.0)) throw PreconditionError("remark2 needs 0 < |xi| < 1");
  if (!(wn > 0.0 && wn < 1.0)) throw PreconditionError("remark2 needs 0 < |w| < 1");
  const cplx rot = -std::polar(1.0, -std::arg(xi));
  const CVec unit = w / wn;
  std::ostringstream params;
  params << "xi=" << fmt_c(xi) << ",w=" << fmt_v(w);
  return HoloMap::closed_form("remark2", params.str(), 1, static_cast<int>(w.size()),
                              [xi, rot, unit, wn](const CVec& z) -> CVec {
                                const cplx t = rot * disk_automorphism(xi, z(0));
                                return ((wn - t) / (1.0 - wn * t)) * unit;
                              });
}

HoloMap remark3_map(const MultiIndex& v, cplx xi1, cplx w) {
  if (v.is_zero()) throw PreconditionError("remark3 needs v != 0");
  if (!(std::abs(w) < 1.0)) throw PreconditionError("remark3 needs |w| < 1");
  const int n = v.dim();
  const Automorphism phi(axis_point(n, xi1));
  const double s = std::sqrt(sharpness_factor(v));
  std::ostringstream params;
  params << "v=" << v.str() << ",xi1=" << fmt_c(xi1) << ",w=" << fmt_c(w);
  return HoloMap::closed_form("remark3", params.str(), n, 1, [phi, v, s, w](const CVec& z) -> CVec {
    const cplx t = s * monomial(phi.apply(z), v);
    CVec out(1);
    out(0) = (w - t) / (1.0 - std::conj(w) * t);
    return out;
  });
}

HoloMap remark4_map(int n, cplx xi1, cplx w) {
  if (xi1 == 0.0 || !(std::abs(xi1) < 1.0)) throw PreconditionError("remark4 needs 0 < |xi| < 1");
  if (!(std::abs(w) > 0.0 && std::abs(w) < 1.0)) throw PreconditionError("remark4 needs 0 < |w| < 1");
  const Automorphism phi(axis_point(n, xi1));
  const cplx rot = std::polar(1.0, -(std::arg(xi1) - std::arg(w)));
  std::ostringstream params;
  params << "n=" << n << ",xi1=" << fmt_c(xi1) << ",w=" << fmt_c(w);
  return HoloMap::closed_form("remark4", params.str(), n, 1, [phi, rot, w](const CVec& z) -> CVec {
    const cplx t = rot * phi.apply(z)(0);
    CVec out(1);
    out(0) = (w + t) / (1.0 + std::conj(w) * t);
    return out;
  });
}

HoloMap remark_family(RemarkKind kind, const RemarkParams& p) {
  switch (kind) {
    case RemarkKind::remark2: return remark2_map(p.xi, p.w);
    case RemarkKind::remark3:
      if (p.w.size() < 1) throw PreconditionError("remark3 needs w");
      return remark3_map(p.v, p.xi, p.w(0));
    case RemarkKind::remark4:
      if (p.w.size() < 1) throw PreconditionError("remark4 needs w");
      return remark4_map(p.n, p.xi, p.w(0));
  }
  throw PreconditionError("unknown remark family");
}

double remark2_derivative_modulus(int k, double xi_norm, double w_norm) {
  double sum = 0.0;
  for (int j = 1; j <= k; ++j)
    sum += binomial(k - 1, j - 1) * ipow(w_norm, j - 1) * ipow(xi_norm, k - j);
  return factorial(k) * (1.0 - w_norm * w_norm) / ipow(1.0 - xi_norm * xi_norm, k) * sum;
}

double remark4_derivative_modulus(int k, double xi_norm, double w_norm) {
  return factorial(k) * (1.0 - w_norm * w_norm) * ipow(w_norm + xi_norm, k - 1) /
         ipow(1.0 - xi_norm * xi_norm, k);
}

double remark3_partial(const MultiIndex& v, double xi_norm, double w_norm) {
  const double sign = (v.degree() + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::sqrt(sharpness_factor(v)) * factorial(v) * (1.0 - w_norm * w_norm) /
         std::pow(1.0 - xi_norm * xi_norm, 0.5 * (v[0] + v.degree()));
}

PolyMap remark1_map() {
  PolyMap f(2, 1, 2);
  f.set(MultiIndex{1, 0}, CVec::Constant(1, 1.0));
  f.set(MultiIndex{0, 2}, CVec::Constant(1, 1.0 / 3.0));
  return f;
}

}  // namespace spv
