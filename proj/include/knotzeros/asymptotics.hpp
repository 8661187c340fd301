#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "knotzeros/graph.hpp"
#include "knotzeros/polynomial.hpp"
#include "knotzeros/roots.hpp"

namespace knotzeros {

/// Signed indicator whose zeros are the equimodular points of one pair of
/// terms; `admissible` is false where a sign change does not correspond to
/// equal moduli.
struct TieValue {
  double value = 0.0;
  bool admissible = true;
};

struct TiePair {
  int j = 0;  // 0-based term indices
  int k = 0;
  std::function<TieValue(Complex)> indicator;
};

struct Rational {
  int num = 1;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

/// V_L(t) = sum_j c_j(t) lambda_j(t)^{exponent_of(n)} for one family.
struct LambdaSystem {
  Family family = Family::A;
  std::vector<std::function<Complex(Complex)>> lambdas;
  /// Coefficients may depend on the parity of n (family A).
  std::vector<std::function<Complex(Complex, int)>> coefficients;
  std::function<int(int)> exponent_of;
  Rational u_power;
  std::vector<TiePair> ties;

  int term_count() const { return static_cast<int>(lambdas.size()); }
  Eigen::VectorXcd lambda_values(Complex t) const;
  Eigen::VectorXd moduli(Complex t) const;
};

LambdaSystem lambda_system(Family family);

/// The same system read at 1/t, i.e. the system of the mirror family.
LambdaSystem mirrored(const LambdaSystem& system);

/// sum_j c_j lambda_j^{exponent_of(n)} at t. Throws std::domain_error at
/// excluded points: t = 0, t = -1 where c_j has a pole, and the negative
/// real axis for family E whose half-integer powers use the principal branch.
Complex reconstruct_eval(Family family, int n, Complex t);

/// max_j |lambda_j(t)|^{u_power}. Throws std::domain_error at t = 0.
double u_magnitude(Family family, Complex t);

/// Region label (R1, R2, R3, R3*, R4, R4*) from the strictly dominant term.
/// Throws std::invalid_argument when t lies on the locus within 1e-8.
std::string region_classify(Family family, Complex t);

/// Zeros of the integer-exponent part of V for a family member.
std::vector<Complex> jones_zeros(Family family, int n, const RootOptions& opts = {});

/// A traced point of the accumulation locus with its 1-based tied pair.
struct LocusPoint {
  Complex t;
  int j = 0;
  int k = 0;
};

struct PolarWindow {
  double r_min = 0.0;
  double r_max = 0.0;
};

struct RectWindow {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;
};

struct LocusOptions {
  int resolution = 2000;
  std::optional<PolarWindow> polar;
  std::optional<RectWindow> rect;
};

/// Default scan window for a family: Cartesian [-2,2]^2 for F, otherwise a
/// polar annulus.
LocusOptions default_locus_options(Family family);

/// Scans for sign changes of every tie indicator along rays and circles
/// (polar window) or rows and columns (rectangle), bisects each to the
/// equimodular point, keeps points whose pair is dominant, and refines the
/// ends of every traced arc. Output is sorted by angle, then radius.
std::vector<LocusPoint> trace_locus(const LambdaSystem& system, const LocusOptions& opts);
std::vector<LocusPoint> trace_locus(Family family, const LocusOptions& opts);

/// Points e^{+-2 pi i/3} where zeros accumulate independently of the
/// dominance structure.
std::vector<Complex> discrete_accumulation_points(Family family);

/// True if the pair (j,k) (0-based) is tied within `tol` in log-modulus and
/// attains the maximum modulus within `tol`.
bool is_dominant_tie(const LambdaSystem& system, Complex t, int j, int k, double tol = 1e-8);

}  // namespace knotzeros
