#include "spv/multiindex.hpp"

#include "spv/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace spv {

namespace {

constexpr int kMaxDegree = 64;
constexpr int kExactDegree = 20;

// C(n, k) exactly; nullopt-like false on overflow.
bool checked_binomial(int n, int k, std::uint64_t& out) {
  if (k < 0 || k > n) {
    out = 0;
    return true;
  }
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t den = static_cast<std::uint64_t>(i) / g;
    std::uint64_t r = result / g;
    num /= den;
    if (__builtin_mul_overflow(r, num, &result)) return false;
  }
  out = result;
  return true;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw PreconditionError("multi-index entries must be nonnegative");
    degree_ += e;
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int j, int power) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(j)) = power;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim()) throw PreconditionError("multi-index dimension mismatch");
  std::vector<int> e = entries_;
  for (int j = 0; j < dim(); ++j) e[static_cast<std::size_t>(j)] += other[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (dim() != other.dim()) throw PreconditionError("multi-index dimension mismatch");
  std::vector<int> e = entries_;
  for (int j = 0; j < dim(); ++j) e[static_cast<std::size_t>(j)] -= other[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::scaled(int factor) const {
  std::vector<int> e = entries_;
  for (int& x : e) x *= factor;
  return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (dim() != other.dim()) return false;
  for (int j = 0; j < dim(); ++j)
    if (entries_[static_cast<std::size_t>(j)] > other[j]) return false;
  return true;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int j = 0; j < dim(); ++j) os << (j ? "," : "") << entries_[static_cast<std::size_t>(j)];
  os << ')';
  return os.str();
}

std::uint64_t multinomial_weight(const MultiIndex& alpha) {
  if (alpha.degree() > kMaxDegree) throw CapacityError("multi-index degree above 64");
  // |alpha|!/alpha! = prod_j C(alpha_1 + ... + alpha_j, alpha_j)
  std::uint64_t result = 1;
  int partial = 0;
  for (int e : alpha.entries()) {
    partial += e;
    std::uint64_t b = 0;
    if (!checked_binomial(partial, e, b) || __builtin_mul_overflow(result, b, &result))
      throw CapacityError("multinomial weight of " + alpha.str() + " overflows 64 bits");
  }
  return result;
}

double multinomial_weight_real(const MultiIndex& alpha) {
  if (alpha.degree() > kMaxDegree) throw CapacityError("multi-index degree above 64");
  if (alpha.degree() <= kExactDegree) return static_cast<double>(multinomial_weight(alpha));
  double log_w = std::lgamma(alpha.degree() + 1.0);
  for (int e : alpha.entries()) log_w -= std::lgamma(e + 1.0);
  return std::exp(log_w);
}

double sharpness_factor(const MultiIndex& v) {
  if (v.is_zero()) throw PreconditionError("sharpness factor undefined for the zero multi-index");
  const double total = v.degree();
  double result = 1.0;
  for (int e : v.entries())
    if (e > 0) result *= ipow(total / e, e);
  return result;
}

std::vector<MultiIndex> enumerate(int n, int k) {
  if (n < 1 || k < 0) throw PreconditionError("enumerate requires n >= 1 and k >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  // Lexicographic: first entry ascending, then recursively.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<MultiIndex> enumerate_up_to(int n, int k) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= k; ++d) {
    auto layer = enumerate(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

double factorial(int k) {
  if (k < 0) throw PreconditionError("factorial of a negative integer");
  if (k > 170) throw CapacityError("factorial overflows double");
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double factorial(const MultiIndex& alpha) {
  double r = 1.0;
  for (int e : alpha.entries()) r *= factorial(e);
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  std::uint64_t exact = 0;
  if (checked_binomial(n, k, exact)) return static_cast<double>(exact);
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double power_of(const MultiIndex& v, const MultiIndex& alpha) {
  double r = 1.0;
  for (int j = 0; j < v.dim(); ++j)
    r *= ipow(static_cast<double>(v[j]), alpha[j]);
  return r;
}

}  // namespace spv
