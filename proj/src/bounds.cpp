#include "spv/bounds.hpp"

#include <cmath>
#include <limits>

namespace spv {

namespace {

struct IdName {
  InequalityId id;
  const char* name;
};

constexpr IdName kNames[] = {
    {InequalityId::disk_scalar, "1.1"},       {InequalityId::chen_liu, "1.2"},
    {InequalityId::schwarz_pick, "1.3"},      {InequalityId::high_order, "1.4"},
    {InequalityId::origin_graded, "3.1"},     {InequalityId::origin_partial, "3.2"},
    {InequalityId::disk_quadratic, "4.1"},    {InequalityId::partial_quadratic, "5.1"},
    {InequalityId::partial_scalar, "5.2"},    {InequalityId::radial_quadratic, "5.3"},
};

double one_minus_sq(double x) { return 1.0 - x * x; }

const CVec& require_beta(const BoundContext& c) {
  if (!c.beta) throw PreconditionError("inequality needs a direction beta");
  if (c.beta->squaredNorm() == 0.0) throw PreconditionError("direction beta must be nonzero");
  return *c.beta;
}

const MultiIndex& require_v(const BoundContext& c) {
  if (!c.v) throw PreconditionError("inequality needs a multi-index v");
  if (c.v->is_zero()) throw PreconditionError("multi-index v must be nonzero");
  return *c.v;
}

void require_origin(const BoundContext& c) {
  if (c.z.squaredNorm() != 0.0) throw PreconditionError("origin inequalities are evaluated at z = 0");
}

void require_dims(const HoloMap& f, int n, int m, const char* what) {
  if ((n > 0 && f.n() != n) || (m > 0 && f.m() != m))
    throw PreconditionError(std::string(what) + " applies to maps of a restricted dimension");
}

}  // namespace

std::string to_string(InequalityId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "?";
}

InequalityId inequality_from_string(const std::string& s) {
  if (s == "4.3") return InequalityId::high_order;
  for (const auto& e : kNames)
    if (s == e.name) return e.id;
  throw ConfigError("unknown inequality id '" + s + "'");
}

const std::vector<InequalityId>& all_inequalities() {
  static const std::vector<InequalityId> ids = [] {
    std::vector<InequalityId> out;
    for (const auto& e : kNames) out.push_back(e.id);
    return out;
  }();
  return ids;
}

BoundReport BoundReport::make(InequalityId id, double lhs, double rhs, BoundContext context) {
  double ratio = 0.0;
  if (rhs > 0.0) ratio = lhs / rhs;
  else if (lhs > 0.0) ratio = std::numeric_limits<double>::infinity();
  return BoundReport{id, lhs, rhs, rhs - lhs, ratio, std::move(context)};
}

double lhs_quadratic(const CVec& d, const CVec& fz) {
  const double s = 1.0 - fz.squaredNorm();
  if (!(s > 0.0)) throw DomainError("lhs_quadratic needs |f(z)| < 1");
  return std::norm(inner(d, fz)) + s * d.squaredNorm();
}

double rhs_main(int k, const CVec& z, const CVec& beta) {
  if (k < 1) throw PreconditionError("order must be >= 1");
  const double b2 = beta.squaredNorm();
  if (b2 == 0.0) throw PreconditionError("direction must be nonzero");
  const double s = 1.0 - z.squaredNorm();
  if (!(s > 0.0)) throw DomainError("point outside the ball");
  const double p = std::abs(inner(beta, z));
  const double factor = 1.0 + p / std::sqrt(s * b2 + p * p);
  const double kf = factorial(k);
  return kf * kf * ipow(factor, 2 * (k - 1)) * ipow(bergman_metric(z, beta), k);
}

double rhs_disk(int k, double z_norm, double fz_norm) {
  if (k < 1) throw PreconditionError("order must be >= 1");
  const double b = factorial(k) * one_minus_sq(fz_norm) * ipow(1.0 + z_norm, k - 1) /
                   ipow(one_minus_sq(z_norm), k);
  return b * b;
}

PartialBounds rhs_partial(const MultiIndex& v, double z_norm, double fz_norm) {
  if (v.is_zero()) throw PreconditionError("multi-index v must be nonzero");
  const int d = v.degree();
  const int n = v.dim();
  const double common = one_minus_sq(fz_norm) * ipow(1.0 + z_norm, d - 1) / ipow(one_minus_sq(z_norm), d);
  const double scalar = std::sqrt(sharpness_factor(v)) * factorial(v) * common;
  const double chen_liu = std::pow(static_cast<double>(n), 0.5 * d) * factorial(d) *
                          binomial(n + d - 1, n - 1) * common;
  return PartialBounds{scalar * scalar, scalar, chen_liu};
}

double radial_mu(const MultiIndex& v, double z_norm) {
  if (v.is_zero()) throw PreconditionError("multi-index v must be nonzero");
  const int top = v.degree() - 1;
  double mu = 0.0;
  for (int j = 0; j <= std::min(v[0], top); ++j) mu += binomial(top, j) * ipow(z_norm, j);
  return mu;
}

double rhs_radial(const MultiIndex& v, const CVec& z, double fz_norm) {
  for (int j = 1; j < z.size(); ++j)
    if (z(j) != 0.0) throw PreconditionError("radial bound needs z on the z_1-axis");
  const double zn = std::abs(z(0));
  const double b = factorial(v) * radial_mu(v, zn) * one_minus_sq(fz_norm) /
                   std::pow(one_minus_sq(zn), 0.5 * (v[0] + v.degree()));
  return sharpness_factor(v) * b * b;
}

OriginBounds rhs_origin(const MultiIndex& v, double a0_norm) {
  const double s = one_minus_sq(a0_norm);
  return OriginBounds{s * s, sharpness_factor(v) * s * s};
}

AjCoefficients aj_coefficients_disk(int k, double xi_norm) {
  if (k < 1) throw PreconditionError("order must be >= 1");
  AjCoefficients out{{}, 1, 0.0, 0.0};
  const double denom = ipow(one_minus_sq(xi_norm), k);
  for (int j = 1; j <= k; ++j) {
    const double a = ipow(xi_norm, k - j) / denom * factorial(k) * factorial(k - 1) /
                     (factorial(k - j) * factorial(j - 1));
    out.magnitudes.push_back(a);
    out.term_sum += a;
  }
  out.closed_form = factorial(k) * ipow(1.0 + xi_norm, k - 1) / denom;
  return out;
}

AjCoefficients aj_coefficients_radial(const MultiIndex& v, double xi_norm) {
  if (v.is_zero()) throw PreconditionError("multi-index v must be nonzero");
  const int k = v.degree();
  const int v1 = v[0];
  const int tail = k - v1;  // |v'|
  AjCoefficients out{{}, tail == 0 ? 1 : 0, 0.0, 0.0};
  const double denom = std::pow(one_minus_sq(xi_norm), 0.5 * (v1 + k));
  for (int j = out.first_index; j <= v1; ++j) {
    const double a = ipow(xi_norm, v1 - j) / denom * factorial(v) * factorial(k - 1) /
                     (factorial(v1 - j) * factorial(j - 1 + tail));
    out.magnitudes.push_back(a);
    out.term_sum += a;
  }
  out.closed_form = factorial(v) * radial_mu(v, xi_norm) / denom;
  return out;
}

std::vector<cplx> aj_values_disk(int k, cplx xi) {
  std::vector<cplx> out;
  const double denom = ipow(1.0 - std::norm(xi), k);
  for (int j = 1; j <= k; ++j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    out.push_back(sign * ipow(std::conj(xi), k - j) / denom * factorial(k) * factorial(k - 1) /
                  (factorial(k - j) * factorial(j - 1)));
  }
  return out;
}

int required_order(InequalityId id, const BoundContext& c) {
  switch (id) {
    case InequalityId::schwarz_pick: return 1;
    case InequalityId::high_order:
    case InequalityId::disk_scalar:
    case InequalityId::disk_quadratic:
    case InequalityId::origin_graded: return c.k;
    default: return c.v ? c.v->degree() : 0;
  }
}

BoundReport check_inequality(const HoloMap& f, InequalityId id, const BoundContext& c,
                             const DerivativeTable* table) {
  if (c.z.size() != f.n()) throw PreconditionError("context point has wrong dimension");
  const int order = required_order(id, c);
  if (id != InequalityId::schwarz_pick && order < 1)
    throw PreconditionError("inequality " + to_string(id) + " needs a positive order");
  std::optional<DerivativeTable> own;
  if (table == nullptr) {
    own = derivative_table(f, c.z, order);
    table = &*own;
  }
  const CVec& fz = table->value;
  const double fz_norm = fz.norm();
  const double z_norm = c.z.norm();

  switch (id) {
    case InequalityId::schwarz_pick: {
      const CVec d = frechet_sum(*table, require_beta(c), 1);
      return BoundReport::make(id, bergman_metric(fz, d), bergman_metric(c.z, *c.beta), c);
    }
    case InequalityId::high_order: {
      const CVec d = frechet_sum(*table, require_beta(c), c.k);
      return BoundReport::make(id, bergman_metric(fz, d), rhs_main(c.k, c.z, *c.beta), c);
    }
    case InequalityId::disk_scalar: {
      require_dims(f, 1, 1, "1.1");
      const double d = std::abs(table->at(MultiIndex{c.k})(0));
      const double rhs = factorial(c.k) * ipow(1.0 + z_norm, c.k - 1) / ipow(one_minus_sq(z_norm), c.k);
      return BoundReport::make(id, d / one_minus_sq(fz_norm), rhs, c);
    }
    case InequalityId::disk_quadratic: {
      require_dims(f, 1, 0, "4.1");
      const CVec& d = table->at(MultiIndex{c.k});
      return BoundReport::make(id, lhs_quadratic(d, fz), rhs_disk(c.k, z_norm, fz_norm), c);
    }
    case InequalityId::origin_graded: {
      require_origin(c);
      const CVec& beta = require_beta(c);
      if (std::abs(beta.norm() - 1.0) > 1e-12) throw PreconditionError("3.1 needs a unit direction");
      const CVec d = frechet_sum(*table, beta, c.k) / factorial(c.k);
      return BoundReport::make(id, lhs_quadratic(d, fz), rhs_origin(MultiIndex::unit(f.n(), 0), fz_norm).graded, c);
    }
    case InequalityId::origin_partial: {
      require_origin(c);
      const MultiIndex& v = require_v(c);
      const CVec av = table->at(v) / factorial(v);
      return BoundReport::make(id, lhs_quadratic(av, fz), rhs_origin(v, fz_norm).partial, c);
    }
    case InequalityId::partial_quadratic: {
      const MultiIndex& v = require_v(c);
      return BoundReport::make(id, lhs_quadratic(table->at(v), fz), rhs_partial(v, z_norm, fz_norm).quadratic, c);
    }
    case InequalityId::partial_scalar: {
      require_dims(f, 0, 1, "5.2");
      const MultiIndex& v = require_v(c);
      return BoundReport::make(id, table->at(v).norm(), rhs_partial(v, z_norm, fz_norm).scalar, c);
    }
    case InequalityId::chen_liu: {
      require_dims(f, 0, 1, "1.2");
      const MultiIndex& v = require_v(c);
      return BoundReport::make(id, table->at(v).norm(), rhs_partial(v, z_norm, fz_norm).chen_liu, c);
    }
    case InequalityId::radial_quadratic: {
      const MultiIndex& v = require_v(c);
      return BoundReport::make(id, lhs_quadratic(table->at(v), fz), rhs_radial(v, c.z, fz_norm), c);
    }
  }
  throw PreconditionError("unknown inequality");
}

}  // namespace spv
