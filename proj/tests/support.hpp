#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "knotzeros/polynomial.hpp"

namespace knotzeros::test {

/// t^{e4_min/4} * (c_0 + c_1 t + ...).
inline QuarterLaurent laurent(int e4_min, const std::vector<int>& coeffs) {
  QuarterLaurent p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(e4_min + 4 * static_cast<int>(i), coeffs[i]);
  return p;
}

inline UniPoly uni(const std::vector<int>& coeffs) {
  UniPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

inline BivarPoly random_bivar(std::mt19937_64& rng, int max_terms = 5, int max_degree = 4) {
  BivarPoly p;
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) {
    p.add_term({static_cast<int>(rng() % (max_degree + 1)), static_cast<int>(rng() % (max_degree + 1))},
               static_cast<int>(rng() % 11) - 5);
  }
  return p;
}

/// All exponents congruent to `residue` mod 4.
inline QuarterLaurent random_quarter(std::mt19937_64& rng, int residue, int max_terms = 6) {
  QuarterLaurent p;
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) {
    const int e = static_cast<int>(rng() % 13) - 6;
    p.add_term(4 * e + residue, static_cast<int>(rng() % 19) - 9);
  }
  return p;
}

/// Uniform in the annulus r_min < |t| < r_max, away from the negative real axis.
inline Complex random_point(std::mt19937_64& rng, double r_min = 0.5, double r_max = 2.0) {
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::uniform_real_distribution<double> angle(-0.95 * std::numbers::pi, 0.95 * std::numbers::pi);
  return std::polar(radius(rng), angle(rng));
}

inline double relative_error(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace knotzeros::test
