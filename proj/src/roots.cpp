#include "knotzeros/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace knotzeros {

namespace {

namespace mp = boost::multiprecision;

template <class R>
double as_double(const R& x) {
  if constexpr (std::is_same_v<R, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

template <class C>
struct NewtonStep {
  C ratio;              // p(z)/p'(z)
  bool at_noise_floor;  // |p(z)| is within the rounding error of its evaluation
};

// Outside the unit disc the reversed polynomial is evaluated at 1/z to keep
// the Horner sums bounded.
template <class R, class C>
NewtonStep<C> newton_step(const std::vector<R>& a, const C& z) {
  using std::abs;
  const std::size_t d = a.size() - 1;
  const R noise = R(4.0 * static_cast<double>(d + 1)) * std::numeric_limits<R>::epsilon();
  if (abs(z) <= R(1)) {
    const R r = abs(z);
    C p = C(a[d]), dp = C(0);
    R bound = abs(a[d]);
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + C(a[k]);
      bound = bound * r + abs(a[k]);
    }
    return {p / dp, abs(p) <= noise * bound};
  }
  const C w = C(1) / z;
  const R r = abs(w);
  // q(w) = sum a_i w^(d-i) = w^d p(1/w)
  C q = C(a[0]), dq = C(0);
  R bound = abs(a[0]);
  for (std::size_t k = 1; k <= d; ++k) {
    dq = dq * w + q;
    q = q * w + C(a[k]);
    bound = bound * r + abs(a[k]);
  }
  // p(z) = z^d q(w), p'(z) = z^(d-1) (d q(w) - w q'(w))
  return {z * q / (C(R(static_cast<double>(d))) * q - w * dq), abs(q) <= noise * bound};
}

template <class C>
bool finite(const C& z) {
  return std::isfinite(as_double(real(z))) && std::isfinite(as_double(imag(z)));
}

// Gauss-Seidel Aberth-Ehrlich sweeps from the given starting points. A root
// is settled once its update is below tolerance or its residual is at the
// rounding level of the evaluation; settled roots stay fixed.
template <class R, class C>
std::vector<C> aberth(const std::vector<R>& a, std::vector<C> z, const RootOptions& opts) {
  using std::abs;
  const std::size_t d = z.size();
  const R tol(opts.tolerance);
  std::vector<bool> settled(d, false);
  bool converged = false;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (settled[i]) continue;
      const auto newton = newton_step(a, z[i]);
      if (newton.at_noise_floor) {
        settled[i] = true;
        continue;
      }
      C repulsion(0);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += C(1) / (z[i] - z[j]);
      }
      const C step = newton.ratio / (C(1) - newton.ratio * repulsion);
      if (finite(step)) z[i] -= step;
      const R size = abs(z[i]);
      if (abs(step) <= tol * (size > R(1) ? size : R(1))) {
        settled[i] = true;
      } else {
        converged = false;
      }
    }
  }
  if (!converged) {
    throw NonConvergence("Aberth iteration did not converge in " +
                             std::to_string(opts.max_sweeps) + " sweeps",
                         "");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (int s = 0; s < opts.polish_steps; ++s) {
      const auto newton = newton_step(a, z[i]);
      if (newton.at_noise_floor) break;
      if (finite(newton.ratio)) z[i] -= newton.ratio;
    }
  }
  return z;
}

std::vector<Complex> initial_guesses(double radius, std::size_t d) {
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    // Offset angle avoids starting on a symmetry axis of real polynomials.
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.25) / static_cast<double>(d) + 0.4);
  }
  return z;
}

template <class R, class C, class Coeff>
std::vector<Complex> solve_at(const std::vector<Coeff>& coeffs, const std::vector<Complex>& start,
                              const RootOptions& opts) {
  std::vector<R> a;
  for (const Coeff& c : coeffs) {
    if constexpr (std::is_same_v<R, double> && std::is_same_v<Coeff, BigInt>) {
      a.push_back(to_double(c));
    } else {
      a.push_back(R(c));
    }
  }
  std::vector<C> z;
  for (Complex s : start) z.push_back(C(R(s.real()), R(s.imag())));
  std::vector<Complex> out;
  for (const C& r : aberth(a, std::move(z), opts)) {
    out.push_back({as_double(R(real(r))), as_double(R(imag(r)))});
  }
  return out;
}

// Every root of `b` has a distinct partner in `a` within a relative 1e-10.
bool same_roots(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<bool> used(a.size(), false);
  for (Complex r : b) {
    std::size_t best = a.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(a[i] - r);
      if (dist < best_distance) {
        best_distance = dist;
        best = i;
      }
    }
    if (best == a.size() || best_distance > 1e-10 * std::max(1.0, std::abs(r))) return false;
    used[best] = true;
  }
  return true;
}

template <unsigned Digits>
using Real = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;
template <unsigned Digits>
using Cplx = mp::number<mp::complex_adaptor<mp::cpp_bin_float<Digits>>, mp::et_off>;

}  // namespace

double cauchy_radius(const Eigen::VectorXd& a) {
  const Eigen::Index d = a.size() - 1;
  const Eigen::VectorXd ratio = a.head(d).cwiseAbs() / std::abs(a(d));
  // g(r) = 1 - sum ratio_i r^(i-d) increases from -inf; its root is bracketed
  // by the cruder bound 1 + max ratio_i.
  auto g = [&](double r) {
    double s = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) s -= ratio(i) * std::pow(r, static_cast<double>(i - d));
    return s;
  };
  double lo = 0.0, hi = 1.0 + ratio.maxCoeff();
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return hi;
}

double normalized_residual(const Eigen::VectorXd& a, Complex z) {
  const Eigen::Index d = a.size() - 1;
  const double scale = a.cwiseAbs().maxCoeff();
  Complex value = 0.0;
  if (std::abs(z) <= 1.0) {
    for (Eigen::Index i = d; i >= 0; --i) value = value * z + a(i);
  } else {
    const Complex w = 1.0 / z;
    for (Eigen::Index i = 0; i <= d; ++i) value = value * w + a(i);
  }
  return std::abs(value) / scale;
}

Eigen::VectorXcd aberth_roots(const Eigen::VectorXd& a, const RootOptions& opts) {
  const Eigen::Index d = a.size() - 1;
  if (d < 1) throw std::invalid_argument("root finding needs degree >= 1");
  if (a(d) == 0.0 || a(0) == 0.0) {
    throw std::invalid_argument("leading and constant coefficients must be nonzero");
  }
  Eigen::VectorXcd out(d);
  if (d == 1) {
    out(0) = -a(0) / a(1);
    return out;
  }
  const std::vector<double> coeffs(a.data(), a.data() + a.size());
  const std::vector<Complex> z =
      solve_at<double, Complex>(coeffs, initial_guesses(cauchy_radius(a), d), opts);
  for (Eigen::Index i = 0; i < d; ++i) out(i) = z[i];
  return out;
}

void sort_by_angle(std::vector<Complex>& zs) {
  std::sort(zs.begin(), zs.end(), [](Complex a, Complex b) {
    const double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return std::abs(a) < std::abs(b);
  });
}

std::vector<Complex> find_roots(const UniPoly& p, const RootOptions& opts) {
  if (degree(p) < 1) throw std::invalid_argument("root finding needs degree >= 1");
  const Eigen::VectorXd a = dense_coefficients(p);
  if (a(0) == 0.0) throw std::invalid_argument("constant coefficient must be nonzero");
  if (degree(p) == 1) return {Complex(-a(0) / a(1))};
  std::vector<BigInt> exact(a.size());
  for (const auto& [e, c] : p.terms()) exact[e] = c;

  // Precision ladder: each level starts from the previous roots, and the
  // result is accepted once two successive levels agree.
  using Solver = std::vector<Complex> (*)(const std::vector<BigInt>&, const std::vector<Complex>&,
                                          const RootOptions&);
  const Solver ladder[] = {solve_at<double, Complex, BigInt>,
                           solve_at<Real<50>, Cplx<50>, BigInt>,
                           solve_at<Real<100>, Cplx<100>, BigInt>,
                           solve_at<Real<200>, Cplx<200>, BigInt>,
                           solve_at<Real<400>, Cplx<400>, BigInt>};
  std::vector<Complex> prev, roots;
  bool stable = false;
  std::string failure = "roots did not stabilise under increasing precision";
  std::vector<Complex> start = initial_guesses(cauchy_radius(a), a.size() - 1);
  for (const Solver solve : ladder) {
    try {
      roots = solve(exact, start, opts);
    } catch (const NonConvergence& e) {
      failure = e.what();
      prev.clear();
      continue;
    }
    if (!prev.empty() && same_roots(prev, roots)) {
      stable = true;
      break;
    }
    prev = roots;
    start = roots;
  }
  if (!stable) throw NonConvergence(failure, to_string(p));
  for (Complex r : roots) {
    if (normalized_residual(a, r) > 1e-8) {
      throw NonConvergence("root residual above tolerance", to_string(p));
    }
  }
  sort_by_angle(roots);
  return roots;
}

}  // namespace knotzeros
