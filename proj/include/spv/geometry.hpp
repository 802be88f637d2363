#pragma once

#include "spv/types.hpp"

namespace spv {

/// Point of the open unit ball.
class BallPoint {
 public:
  explicit BallPoint(CVec coords);
  static BallPoint origin(int n) { return BallPoint(CVec::Zero(n)); }

  const CVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double norm() const { return coords_.norm(); }

 private:
  CVec coords_;
};

/// Tangent direction; entries must be finite. Nonzero-ness is checked by the
/// operations that need it.
class Direction {
 public:
  explicit Direction(CVec coords);
  static Direction unit(int n, int j);

  const CVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double norm() const { return coords_.norm(); }
  bool is_zero() const { return coords_.squaredNorm() == 0.0; }

 private:
  CVec coords_;
};

/// H_z(beta, beta) = [(1-|z|^2)|beta|^2 + |<beta,z>|^2] / (1-|z|^2)^2,
/// without the (n+1)/2 normalization.
double bergman_metric(const CVec& z, const CVec& beta);
inline double bergman_metric(const BallPoint& z, const Direction& beta) {
  return bergman_metric(z.coords(), beta.coords());
}

/// The involutive ball automorphism phi_a exchanging 0 and a:
///   phi_a(w) = (a - P_a w - sqrt(1-|a|^2) Q_a w) / (1 - <w, a>)
/// with P_a the orthogonal projection onto span{a} (P_0 = 0) and Q_a = I - P_a.
class Automorphism {
 public:
  explicit Automorphism(CVec a);

  const CVec& parameter() const { return a_; }
  int dim() const { return static_cast<int>(a_.size()); }

  CVec apply(const CVec& w) const;
  BallPoint apply(const BallPoint& w) const { return BallPoint(apply(w.coords())); }

  CMat projection() const;    // P_a
  CMat complement() const;    // Q_a
  CMat jacobian_at_origin() const;     // -(1-|a|^2) P_a - (1-|a|^2)^{1/2} Q_a
  CMat jacobian_at_parameter() const;  // -P_a/(1-|a|^2) - Q_a/(1-|a|^2)^{1/2}

 private:
  CVec a_;
  double a_norm2_;
};

enum class JacobianSite { origin, parameter };

inline CMat moebius_jacobian(const Automorphism& phi, JacobianSite at) {
  return at == JacobianSite::origin ? phi.jacobian_at_origin() : phi.jacobian_at_parameter();
}

inline CVec moebius_apply(const Automorphism& phi, const CVec& w) { return phi.apply(w); }

/// Unit-disk automorphism (xi - z)/(1 - conj(xi) z).
cplx disk_automorphism(cplx xi, cplx z);

}  // namespace spv
