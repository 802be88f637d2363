#include "spv/holomap.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <variant>

namespace spv {

// ---------------------------------------------------------------- PolyMap

PolyMap::PolyMap(int n, int m, int max_degree) : n_(n), m_(m), max_degree_(max_degree) {
  if (n < 1 || m < 1) throw PreconditionError("polynomial map dimensions must be positive");
  if (max_degree < 0) throw PreconditionError("max_degree must be nonnegative");
}

void PolyMap::set(const MultiIndex& alpha, CVec value) {
  if (alpha.dim() != n_) throw PreconditionError("coefficient key has wrong dimension");
  if (alpha.degree() > max_degree_) throw PreconditionError("coefficient degree exceeds max_degree");
  if (value.size() != m_) throw PreconditionError("coefficient value has wrong dimension");
  if (value.squaredNorm() == 0.0) coeffs_.erase(alpha);
  else coeffs_[alpha] = std::move(value);
  rebuild_flat();
}

void PolyMap::rebuild_flat() {
  flat_exponents_.clear();
  flat_coeffs_.resize(m_, static_cast<Eigen::Index>(coeffs_.size()));
  Eigen::Index t = 0;
  for (const auto& [alpha, a] : coeffs_) {
    flat_exponents_.insert(flat_exponents_.end(), alpha.entries().begin(), alpha.entries().end());
    flat_coeffs_.col(t++) = a;
  }
}

CVec PolyMap::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? CVec::Zero(m_) : it->second;
}

CVec PolyMap::evaluate(const CVec& z) const {
  if (z.size() != n_) throw PreconditionError("evaluation point has wrong dimension");
  const auto stride = static_cast<std::size_t>(max_degree_ + 1);
  thread_local std::vector<cplx> powers;
  thread_local CVec monomials;
  powers.resize(static_cast<std::size_t>(n_) * stride);
  for (int j = 0; j < n_; ++j) {
    cplx* row = powers.data() + static_cast<std::size_t>(j) * stride;
    row[0] = 1.0;
    for (std::size_t p = 1; p < stride; ++p) row[p] = row[p - 1] * z(j);
  }
  const auto terms = flat_coeffs_.cols();
  monomials.resize(terms);
  const int* e = flat_exponents_.data();
  for (Eigen::Index t = 0; t < terms; ++t) {
    cplx mono = 1.0;
    for (int j = 0; j < n_; ++j, ++e) mono *= powers[static_cast<std::size_t>(j) * stride + static_cast<std::size_t>(*e)];
    monomials(t) = mono;
  }
  if (terms == 0) return CVec::Zero(m_);
  return flat_coeffs_ * monomials;
}

double PolyMap::certificate() const {
  double s = 0.0;
  for (const auto& [alpha, a] : coeffs_) s += a.norm();
  return s;
}

PolyMap poly_partial(const PolyMap& f, const MultiIndex& v) {
  if (v.dim() != f.n()) throw PreconditionError("derivative multi-index has wrong dimension");
  PolyMap out(f.n(), f.m(), std::max(0, f.max_degree() - v.degree()));
  for (const auto& [key, a] : f.coefficients()) {
    if (!v.divides(key)) continue;
    const MultiIndex alpha = key - v;
    double falling = 1.0;  // prod_j (alpha_j + v_j)! / alpha_j!
    for (int j = 0; j < f.n(); ++j)
      for (int t = alpha[j] + 1; t <= key[j]; ++t) falling *= t;
    out.set(alpha, falling * a);
  }
  return out;
}

PolyMap random_polymap(int n, int m, int degree, std::uint64_t seed, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) throw PreconditionError("margin must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PolyMap f(n, m, degree);
  std::vector<std::pair<MultiIndex, CVec>> drawn;
  double total = 0.0;
  for (const auto& alpha : enumerate_up_to(n, degree)) {
    CVec a(m);
    for (int i = 0; i < m; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      a(i) = cplx(re, im);
    }
    total += a.norm();
    drawn.emplace_back(alpha, std::move(a));
  }
  const double scale = (1.0 - margin) / total;
  for (auto& [alpha, a] : drawn) f.set(alpha, scale * a);
  return f;
}

PolyMap identity_polymap(int n) {
  PolyMap f(n, n, 1);
  for (int j = 0; j < n; ++j) {
    CVec e = CVec::Zero(n);
    e(j) = 1.0;
    f.set(MultiIndex::unit(n, j), e);
  }
  return f;
}

void to_json(nlohmann::json& j, const PolyMap& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [alpha, a] : f.coefficients()) {
    std::vector<double> re(static_cast<std::size_t>(f.m())), im(static_cast<std::size_t>(f.m()));
    for (int i = 0; i < f.m(); ++i) {
      re[static_cast<std::size_t>(i)] = a(i).real();
      im[static_cast<std::size_t>(i)] = a(i).imag();
    }
    coeffs.push_back({{"alpha", alpha.entries()}, {"re", re}, {"im", im}});
  }
  j = {{"n", f.n()}, {"m", f.m()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, PolyMap& f) { f = polymap_from_json(j); }

PolyMap polymap_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  int max_degree = 0;
  std::vector<std::pair<MultiIndex, CVec>> entries;
  for (const auto& c : j.at("coeffs")) {
    MultiIndex alpha(c.at("alpha").get<std::vector<int>>());
    const auto re = c.at("re").get<std::vector<double>>();
    const auto im = c.at("im").get<std::vector<double>>();
    if (static_cast<int>(re.size()) != m || static_cast<int>(im.size()) != m)
      throw PreconditionError("coefficient arrays do not match m");
    CVec a(m);
    for (int i = 0; i < m; ++i) a(i) = cplx(re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]);
    max_degree = std::max(max_degree, alpha.degree());
    entries.emplace_back(std::move(alpha), std::move(a));
  }
  PolyMap f(n, m, max_degree);
  for (auto& [alpha, a] : entries) f.set(alpha, std::move(a));
  return f;
}

// ---------------------------------------------------------------- HoloMap

struct HoloMap::ClosedForm {
  std::string family;
  std::string params;
  int n;
  int m;
  Evaluator eval;
};

struct HoloMap::Composition {
  Automorphism outer;
  HoloMap inner;
};

struct HoloMap::Rep {
  std::variant<PolyMap, ClosedForm, Composition> value;
};

HoloMap::HoloMap(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

HoloMap::HoloMap(PolyMap poly)
    : rep_(std::make_shared<const Rep>(Rep{std::move(poly)})) {}

HoloMap HoloMap::closed_form(std::string family, std::string params, int n, int m, Evaluator eval) {
  return HoloMap(std::make_shared<const Rep>(
      Rep{ClosedForm{std::move(family), std::move(params), n, m, std::move(eval)}}));
}

HoloMap HoloMap::composed(Automorphism outer, HoloMap inner) {
  if (outer.dim() != inner.m()) throw PreconditionError("automorphism dimension must equal target dimension");
  return HoloMap(std::make_shared<const Rep>(Rep{Composition{std::move(outer), std::move(inner)}}));
}

int HoloMap::n() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolyMap>) return v.n();
        else if constexpr (std::is_same_v<T, ClosedForm>) return v.n;
        else return v.inner.n();
      },
      rep_->value);
}

int HoloMap::m() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolyMap>) return v.m();
        else if constexpr (std::is_same_v<T, ClosedForm>) return v.m;
        else return v.outer.dim();
      },
      rep_->value);
}

CVec HoloMap::operator()(const CVec& z) const {
  if (z.size() != n()) throw PreconditionError("evaluation point has wrong dimension");
  if (!(z.squaredNorm() < 1.0)) throw DomainError("evaluation point outside the open unit ball");
  return evaluate_unchecked(z);
}

CVec HoloMap::evaluate_unchecked(const CVec& z) const {
  return std::visit(
      [&z](const auto& v) -> CVec {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolyMap>) return v.evaluate(z);
        else if constexpr (std::is_same_v<T, ClosedForm>) return v.eval(z);
        else return v.outer.apply(v.inner.evaluate_unchecked(z));
      },
      rep_->value);
}

const PolyMap* HoloMap::as_poly() const { return std::get_if<PolyMap>(&rep_->value); }

std::string HoloMap::family() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PolyMap>) return "poly";
        else if constexpr (std::is_same_v<T, ClosedForm>) return v.family;
        else return "composed";
      },
      rep_->value);
}

std::string HoloMap::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, PolyMap>) {
          os << "poly(n=" << v.n() << ",m=" << v.m() << ",deg=" << v.max_degree()
             << ",terms=" << v.coefficients().size() << ")";
        } else if constexpr (std::is_same_v<T, ClosedForm>) {
          os << v.family << '(' << v.params << ')';
        } else {
          os << "phi_a o " << v.inner.describe();
        }
        return os.str();
      },
      rep_->value);
}

HoloMap compose_ball_automorphism(const CVec& a, const HoloMap& f) {
  return HoloMap::composed(Automorphism(a), f);
}

// ---------------------------------------------------------------- lines

CVec LineRestriction::operator()(cplx lambda) const { return map(CVec(base + lambda * direction)); }

LineRestriction restrict_to_line(const HoloMap& f, const BallPoint& z, const Direction& beta) {
  if (beta.is_zero()) throw PreconditionError("line restriction needs a nonzero direction");
  if (beta.dim() != f.n() || z.dim() != f.n()) throw PreconditionError("dimension mismatch");
  // Largest r with |z|^2 + 2 r |<z,beta>| + r^2 |beta|^2 <= 1.
  const double b2 = beta.coords().squaredNorm();
  const double p = std::abs(inner(z.coords(), beta.coords()));
  const double c = 1.0 - z.coords().squaredNorm();
  const double radius = c / (p + std::sqrt(p * p + b2 * c));
  return LineRestriction{f, z.coords(), beta.coords(), radius};
}

// ---------------------------------------------------------------- coefficients

CVec extremal_direction(const MultiIndex& v) {
  if (v.is_zero()) throw PreconditionError("extremal direction needs v != 0");
  CVec beta(v.dim());
  for (int j = 0; j < v.dim(); ++j) beta(j) = std::sqrt(static_cast<double>(v[j]) / v.degree());
  return beta;
}

CoefficientReport coefficient_checks(const PolyMap& f, const MultiIndex& v, const CVec& beta) {
  if (v.is_zero()) throw PreconditionError("coefficient checks need v != 0");
  if (v.dim() != f.n() || beta.size() != f.n()) throw PreconditionError("dimension mismatch");
  if (std::abs(beta.norm() - 1.0) > 1e-12) throw PreconditionError("boundary direction must have unit norm");

  CoefficientReport r{};
  std::map<int, CVec> graded;
  double unit_sphere = 0.0;
  double weighted = 0.0;
  const double total = v.degree();
  for (const auto& [alpha, a] : f.coefficients()) {
    const double a2 = a.squaredNorm();
    cplx beta_pow = 1.0;
    double abs_pow2 = 1.0;
    for (int j = 0; j < f.n(); ++j) {
      beta_pow *= ipow(beta(j), alpha[j]);
      abs_pow2 *= ipow(std::norm(beta(j)), alpha[j]);
    }
    unit_sphere += a2 * abs_pow2;
    weighted += a2 * power_of(v, alpha) / std::pow(total, alpha.degree());
    auto [it, fresh] = graded.try_emplace(alpha.degree(), CVec::Zero(f.m()));
    it->second += beta_pow * a;
  }
  double graded_sum = 0.0;
  for (const auto& [k, s] : graded) graded_sum += s.squaredNorm();

  r.unit_sphere = {unit_sphere, 1.0};
  r.weighted = {weighted, 1.0};
  r.single = {f.coefficient(v).norm(), std::sqrt(sharpness_factor(v))};
  r.graded = {graded_sum, 1.0};
  return r;
}

}  // namespace spv
