#include "spv/geometry.hpp"

#include <cmath>

namespace spv {

BallPoint::BallPoint(CVec coords) : coords_(std::move(coords)) {
  if (!coords_.allFinite()) throw DomainError("ball point has non-finite entries");
  if (coords_.squaredNorm() >= 1.0) throw DomainError("point lies outside the open unit ball");
}

Direction::Direction(CVec coords) : coords_(std::move(coords)) {
  if (!coords_.allFinite()) throw DomainError("direction has non-finite entries");
}

Direction Direction::unit(int n, int j) {
  CVec e = CVec::Zero(n);
  e(j) = 1.0;
  return Direction(std::move(e));
}

double bergman_metric(const CVec& z, const CVec& beta) {
  const double s = 1.0 - z.squaredNorm();
  if (s <= 0.0) throw DomainError("Bergman metric evaluated outside the ball");
  return (s * beta.squaredNorm() + std::norm(inner(beta, z))) / (s * s);
}

Automorphism::Automorphism(CVec a) : a_(std::move(a)), a_norm2_(a_.squaredNorm()) {
  if (!a_.allFinite() || a_norm2_ >= 1.0)
    throw DomainError("automorphism parameter must lie in the open unit ball");
}

CVec Automorphism::apply(const CVec& w) const {
  if (w.size() != a_.size()) throw PreconditionError("automorphism dimension mismatch");
  // P_a w = (c/|a|^2) a with c = <w,a>, so
  // phi_a(w) = [a (1 - (1 - s) c/|a|^2) - s w] / (1 - c),  s = sqrt(1 - |a|^2).
  const cplx c = inner(w, a_);
  const double s = std::sqrt(1.0 - a_norm2_);
  const cplx along = a_norm2_ > 0.0 ? 1.0 - (1.0 - s) * c / a_norm2_ : cplx(1.0);
  const cplx denom = 1.0 - c;
  return (along / denom) * a_ - (s / denom) * w;
}

CMat Automorphism::projection() const {
  const auto m = a_.size();
  if (a_norm2_ == 0.0) return CMat::Zero(m, m);
  // P_a w = <w,a> a / |a|^2 = a a^H w / |a|^2
  return a_ * a_.adjoint() / a_norm2_;
}

CMat Automorphism::complement() const {
  return CMat::Identity(a_.size(), a_.size()) - projection();
}

CMat Automorphism::jacobian_at_origin() const {
  const double s = 1.0 - a_norm2_;
  return -s * projection() - std::sqrt(s) * complement();
}

CMat Automorphism::jacobian_at_parameter() const {
  const double s = 1.0 - a_norm2_;
  return -projection() / s - complement() / std::sqrt(s);
}

cplx disk_automorphism(cplx xi, cplx z) { return (xi - z) / (1.0 - std::conj(xi) * z); }

}  // namespace spv
