#pragma once

#include "spv/geometry.hpp"
#include "spv/multiindex.hpp"
#include "spv/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

namespace spv {

/// Sparse polynomial map C^n -> C^m, f(z) = sum_alpha a_alpha z^alpha.
/// Absent keys are zero coefficients.
class PolyMap {
 public:
  PolyMap(int n, int m, int max_degree);

  int n() const { return n_; }
  int m() const { return m_; }
  int max_degree() const { return max_degree_; }

  /// Inserts or replaces a_alpha. Zero vectors are dropped.
  void set(const MultiIndex& alpha, CVec value);
  CVec coefficient(const MultiIndex& alpha) const;
  const std::map<MultiIndex, CVec>& coefficients() const { return coeffs_; }

  /// Exact monomial-sum evaluation, no domain check.
  CVec evaluate(const CVec& z) const;

  /// sum_alpha |a_alpha|; <= 1 certifies f(B_n) is inside the closed ball.
  double certificate() const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void rebuild_flat();

  int n_;
  int m_;
  int max_degree_;
  std::map<MultiIndex, CVec> coeffs_;
  // Contiguous copy of coeffs_ for evaluation: exponents term-major, one
  // coefficient column per term.
  std::vector<int> flat_exponents_;
  CMat flat_coeffs_;
};

/// Coefficient table of the partial derivative d^{|v|} f / dz^v.
PolyMap poly_partial(const PolyMap& f, const MultiIndex& v);

/// Seeded sample with sum |a_alpha| = 1 - margin over all |alpha| <= degree.
PolyMap random_polymap(int n, int m, int degree, std::uint64_t seed, double margin = 0.05);

/// The identity map of C^n as a polynomial table.
PolyMap identity_polymap(int n);

void to_json(nlohmann::json& j, const PolyMap& f);
void from_json(const nlohmann::json& j, PolyMap& f);
PolyMap polymap_from_json(const nlohmann::json& j);

/// A holomorphic map B_n -> C^m. Immutable, cheap to copy (shared state).
class HoloMap {
 public:
  using Evaluator = std::function<CVec(const CVec&)>;

  HoloMap(PolyMap poly);  // NOLINT(google-explicit-constructor)

  static HoloMap closed_form(std::string family, std::string params, int n, int m,
                             Evaluator eval);
  static HoloMap composed(Automorphism outer, HoloMap inner);

  int n() const;
  int m() const;

  /// Evaluates f(z); rejects |z| >= 1.
  CVec operator()(const CVec& z) const;
  CVec operator()(const BallPoint& z) const { return evaluate_unchecked(z.coords()); }

  /// Evaluation without the ball membership check (callers guarantee it).
  CVec evaluate_unchecked(const CVec& z) const;

  /// Non-null only for polynomial maps.
  const PolyMap* as_poly() const;

  /// Family tag: "poly", "composed", or the closed-form family name.
  std::string family() const;
  /// Human-readable description including parameters.
  std::string describe() const;

 private:
  struct ClosedForm;
  struct Composition;
  struct Rep;

  explicit HoloMap(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};


inline CVec eval(const HoloMap& f, const BallPoint& z) { return f(z); }

/// phi_a o f.
HoloMap compose_ball_automorphism(const CVec& a, const HoloMap& f);

/// lambda -> f(z + lambda beta) on |lambda| < radius, where radius is the
/// largest disk radius keeping z + lambda beta inside the ball.
struct LineRestriction {
  HoloMap map;
  CVec base;
  CVec direction;
  double radius;

  CVec operator()(cplx lambda) const;
};

LineRestriction restrict_to_line(const HoloMap& f, const BallPoint& z, const Direction& beta);

struct CoefficientCheck {
  double lhs;
  double rhs;
  double slack() const { return rhs - lhs; }
};

/// Left sides of the coefficient inequalities for a polynomial map:
///   unit_sphere:   sum |a_alpha|^2 |beta^{2 alpha}|            <= 1
///   weighted:      sum |a_alpha|^2 v^alpha / |v|^{|alpha|}      <= 1
///   single:        |a_v|                                     <= sqrt(|v|^|v|/v^v)
///   graded:        sum_k |sum_{|alpha|=k} a_alpha beta^alpha|^2 <= 1
struct CoefficientReport {
  CoefficientCheck unit_sphere;
  CoefficientCheck weighted;
  CoefficientCheck single;
  CoefficientCheck graded;
};

CoefficientReport coefficient_checks(const PolyMap& f, const MultiIndex& v, const CVec& beta);

/// beta_j = sqrt(v_j / |v|), the maximizer of |beta^v| on the sphere.
CVec extremal_direction(const MultiIndex& v);

}  // namespace spv
