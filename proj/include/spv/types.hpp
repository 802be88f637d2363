#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace spv {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Hermitian product <z, w> = sum z_j conj(w_j), linear in the first slot.
inline cplx inner(const CVec& z, const CVec& w) { return w.dot(z); }

inline double norm2(const CVec& z) { return z.squaredNorm(); }

// Integer power by repeated squaring; ipow(0, 0) == 1.
template <typename T>
T ipow(T base, int exp) {
  T result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spv
