#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "knotzeros/polynomial.hpp"

namespace knotzeros {

/// Raised when the simultaneous iteration does not settle.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, std::string polynomial)
      : std::runtime_error(what), polynomial_(std::move(polynomial)) {}
  const std::string& polynomial() const { return polynomial_; }

 private:
  std::string polynomial_;
};

struct RootOptions {
  double tolerance = 1e-12;  // relative size of the last update
  int max_sweeps = 500;
  int polish_steps = 3;
};

/// Positive root of |a_d| r^d = sum_{i<d} |a_i| r^i; every root has modulus
/// at most this radius.
double cauchy_radius(const Eigen::VectorXd& coeffs);

/// All complex roots of a polynomial with ascending real coefficients by
/// Aberth-Ehrlich iteration started on the Cauchy-radius circle. Leading and
/// constant coefficients must be nonzero.
Eigen::VectorXcd aberth_roots(const Eigen::VectorXd& coeffs, const RootOptions& opts = {});

/// Roots of an exact integer polynomial, sorted by argument then modulus.
std::vector<Complex> find_roots(const UniPoly& p, const RootOptions& opts = {});

/// |p(z)| / (max |a_i| * max(1,|z|)^deg), the residual measure used to
/// accept a root (the polynomial is read in reversed form outside |z| = 1).
double normalized_residual(const Eigen::VectorXd& coeffs, Complex z);

void sort_by_angle(std::vector<Complex>& zs);

}  // namespace knotzeros
