#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace spv {

/// Tuple of nonnegative integers indexing partial derivatives and Taylor
/// coefficients. Entries are fixed at construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int j, int power = 1);

  int dim() const { return static_cast<int>(entries_.size()); }
  int degree() const { return degree_; }
  bool is_zero() const { return degree_ == 0; }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; throws if any entry would go negative.
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex scaled(int factor) const;
  /// True when every entry is <= the corresponding entry of other.
  bool divides(const MultiIndex& other) const;

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

inline int degree(const MultiIndex& alpha) { return alpha.degree(); }

/// |alpha|! / alpha!, exact. Throws CapacityError when the value does not
/// fit in 64 bits or the degree exceeds 64.
std::uint64_t multinomial_weight(const MultiIndex& alpha);

/// Same quantity as a double; exact integer arithmetic up to degree 20,
/// log-gamma differences above.
double multinomial_weight_real(const MultiIndex& alpha);

/// |v|^|v| / v^v with 0^0 = 1. Rejects v = 0.
double sharpness_factor(const MultiIndex& v);

/// All multi-indexes of dimension n and degree k in lexicographic order.
std::vector<MultiIndex> enumerate(int n, int k);

/// All multi-indexes of dimension n and degree <= k, grouped by degree then
/// lexicographic.
std::vector<MultiIndex> enumerate_up_to(int n, int k);

/// alpha! as a double.
double factorial(const MultiIndex& alpha);
double factorial(int k);
double binomial(int n, int k);

/// prod_j v_j^{alpha_j} with 0^0 = 1.
double power_of(const MultiIndex& v, const MultiIndex& alpha);

}  // namespace spv
