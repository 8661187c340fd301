#include "knotzeros/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "knotzeros/jones.hpp"

namespace knotzeros {

namespace {

TieValue log_modulus_gap(Complex a, Complex b) {
  return {std::log(std::abs(a)) - std::log(std::abs(b)), true};
}

// lambda^2 - S lambda + 1 = 0 with S = 1 - t - 1/t; larger modulus first.
std::pair<Complex, Complex> wheel_pair(Complex t) {
  const Complex s = 1.0 - t - 1.0 / t;
  const Complex root = std::sqrt(s * s - 4.0);
  Complex a = (s + root) / 2.0;
  Complex b = (s - root) / 2.0;
  if (std::abs(b) > std::abs(a)) std::swap(a, b);
  return {a, b};
}

LambdaSystem family_a() {
  LambdaSystem sys;
  sys.family = Family::A;
  sys.lambdas = {[](Complex) { return Complex(1.0); }, [](Complex t) { return -1.0 / t; }};
  auto prefactor = [](Complex t, int n) {
    return ((n % 2 == 1) ? Complex(1.0) : t * t * t) / (1.0 + t);
  };
  sys.coefficients = {
      [prefactor](Complex t, int n) { return prefactor(t, n) * (1.0 + 1.0 / (t * t)); },
      [prefactor](Complex t, int n) {
        return prefactor(t, n) * (1.0 - 1.0 / t) * (1.0 + t + 1.0 / t);
      }};
  sys.exponent_of = [](int n) { return n - 1; };
  sys.u_power = {1, 1};
  sys.ties = {{0, 1, [](Complex t) { return TieValue{std::log(std::abs(t)), true}; }}};
  return sys;
}

LambdaSystem family_b() {
  LambdaSystem sys;
  sys.family = Family::B;
  sys.lambdas = {[](Complex) { return Complex(1.0); },
                 [](Complex t) { return wheel_pair(t).first; },
                 [](Complex t) { return wheel_pair(t).second; }};
  sys.coefficients = {[](Complex t, int) { return t + 1.0 / t; },
                      [](Complex, int) { return Complex(1.0); },
                      [](Complex, int) { return Complex(1.0); }};
  sys.exponent_of = [](int n) { return n - 1; };
  sys.u_power = {1, 1};
  // |lambda_2| = |lambda_3| iff D/S^2 is real and <= 0, D = S^2 - 4.
  // lambda_1 = 1 never strictly dominates since lambda_2 lambda_3 = 1.
  sys.ties = {{1, 2, [](Complex t) {
                 const Complex s = 1.0 - t - 1.0 / t;
                 const Complex ratio = (s * s - 4.0) / (s * s);
                 return TieValue{ratio.imag(), ratio.real() <= 0.0};
               }}};
  return sys;
}

LambdaSystem family_e() {
  LambdaSystem sys;
  sys.family = Family::E;
  sys.lambdas = {[](Complex t) { return (-1.0 + 1.0 / t) / std::sqrt(t); },
                 [](Complex t) { return -(1.0 + 1.0 / (t * t)) / std::sqrt(t); }};
  sys.coefficients = {
      [](Complex t, int) { return -std::sqrt(t) * (1.0 + t + 1.0 / t) / (1.0 + t); },
      [](Complex t, int) { return -std::sqrt(t) / (1.0 + t); }};
  sys.exponent_of = [](int n) { return n; };
  sys.u_power = {1, 1};
  // The common factor t^{-1/2} cancels from the modulus comparison.
  sys.ties = {{0, 1, [](Complex t) { return log_modulus_gap(1.0 - t, t + 1.0 / t); }}};
  return sys;
}

LambdaSystem family_f() {
  LambdaSystem sys;
  sys.family = Family::F;
  sys.lambdas = {[](Complex) { return Complex(1.0); },
                 [](Complex t) { return 1.0 - 1.0 / t; },
                 [](Complex t) { return 1.0 / (t * t) - 1.0 / t + 1.0 - t; }};
  sys.coefficients = {[](Complex, int) { return Complex(1.0); },
                      [](Complex t, int) { return t + 1.0 / t; },
                      [](Complex, int) { return Complex(1.0); }};
  sys.exponent_of = [](int n) { return (n - 1) / 2; };
  sys.u_power = {1, 2};
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      auto lj = sys.lambdas[j], lk = sys.lambdas[k];
      sys.ties.push_back({j, k, [lj, lk](Complex t) { return log_modulus_gap(lj(t), lk(t)); }});
    }
  }
  return sys;
}

void check_point(Family family, Complex t) {
  if (t == Complex(0.0)) throw std::domain_error("t = 0 is excluded");
  if ((family == Family::A || family == Family::E) && t == Complex(-1.0)) {
    throw std::domain_error("t = -1 is a pole of the coefficients");
  }
  if (family == Family::E && t.imag() == 0.0 && t.real() < 0.0) {
    throw std::domain_error("negative real t is on the branch cut of t^(1/2)");
  }
}

Complex int_power(Complex z, int e) {
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= z;
    e >>= 1;
    if (e) z *= z;
  }
  return result;
}

int dominant_index(const Eigen::VectorXd& m) {
  Eigen::Index i = 0;
  m.maxCoeff(&i);
  return static_cast<int>(i);
}

// Flood fill over the cells where `term` strictly dominates, on a grid of
// spacing 0.01 covering [-2,2]^2 and both endpoints.
bool dominance_connected(const LambdaSystem& sys, int term, Complex from, Complex to) {
  const double h = 0.01;
  const double x0 = std::min({-2.0, from.real(), to.real()}) - 2 * h;
  const double y0 = std::min({-2.0, from.imag(), to.imag()}) - 2 * h;
  const double x1 = std::max({2.0, from.real(), to.real()}) + 2 * h;
  const double y1 = std::max({2.0, from.imag(), to.imag()}) + 2 * h;
  const int nx = static_cast<int>(std::ceil((x1 - x0) / h));
  const int ny = static_cast<int>(std::ceil((y1 - y0) / h));
  auto cell_of = [&](Complex z) {
    return std::pair<int, int>{std::clamp(static_cast<int>((z.real() - x0) / h), 0, nx - 1),
                               std::clamp(static_cast<int>((z.imag() - y0) / h), 0, ny - 1)};
  };
  auto inside = [&](int i, int j) {
    const Complex z(x0 + (i + 0.5) * h, y0 + (j + 0.5) * h);
    if (z == Complex(0.0)) return false;
    return dominant_index(sys.moduli(z)) == term;
  };
  const auto [si, sj] = cell_of(from);
  const auto [ti, tj] = cell_of(to);
  std::vector<char> seen(static_cast<std::size_t>(nx) * ny, 0);
  std::queue<std::pair<int, int>> queue;
  queue.push({si, sj});
  seen[static_cast<std::size_t>(si) * ny + sj] = 1;
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop();
    if (i == ti && j == tj) return true;
    const int di[] = {1, -1, 0, 0};
    const int dj[] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int a = i + di[d], b = j + dj[d];
      if (a < 0 || b < 0 || a >= nx || b >= ny) continue;
      char& mark = seen[static_cast<std::size_t>(a) * ny + b];
      if (mark) continue;
      mark = 1;
      if ((a == ti && b == tj) || inside(a, b)) queue.push({a, b});
    }
  }
  return false;
}

}  // namespace

Eigen::VectorXcd LambdaSystem::lambda_values(Complex t) const {
  Eigen::VectorXcd out(term_count());
  for (int j = 0; j < term_count(); ++j) out(j) = lambdas[j](t);
  return out;
}

Eigen::VectorXd LambdaSystem::moduli(Complex t) const { return lambda_values(t).cwiseAbs(); }

LambdaSystem lambda_system(Family family) {
  switch (family) {
    case Family::A: return family_a();
    case Family::B: return family_b();
    case Family::E: return family_e();
    case Family::F: return family_f();
  }
  throw std::invalid_argument("unknown family");
}

LambdaSystem mirrored(const LambdaSystem& system) {
  LambdaSystem out = system;
  for (auto& l : out.lambdas) l = [l](Complex t) { return l(1.0 / t); };
  for (auto& c : out.coefficients) c = [c](Complex t, int n) { return c(1.0 / t, n); };
  for (auto& tie : out.ties) {
    tie.indicator = [f = tie.indicator](Complex t) { return f(1.0 / t); };
  }
  return out;
}

bool is_dominant_tie(const LambdaSystem& system, Complex t, int j, int k, double tol) {
  const Eigen::VectorXd m = system.moduli(t);
  if (!m.allFinite()) return false;
  const double top = m.maxCoeff();
  const double pair = std::max(m(j), m(k));
  if (std::abs(std::log(m(j)) - std::log(m(k))) > tol) return false;
  return pair >= top * (1.0 - tol);
}

Complex reconstruct_eval(Family family, int n, Complex t) {
  check_parameter(family, n);
  check_point(family, t);
  const LambdaSystem sys = lambda_system(family);
  const int e = sys.exponent_of(n);
  Complex sum = 0.0;
  for (int j = 0; j < sys.term_count(); ++j) {
    sum += sys.coefficients[j](t, n) * int_power(sys.lambdas[j](t), e);
  }
  return sum;
}

double u_magnitude(Family family, Complex t) {
  if (t == Complex(0.0)) throw std::domain_error("t = 0 is excluded");
  const LambdaSystem sys = lambda_system(family);
  return std::pow(sys.moduli(t).maxCoeff(), sys.u_power.value());
}

std::string region_classify(Family family, Complex t) {
  if (t == Complex(0.0)) throw std::domain_error("t = 0 is excluded");
  const LambdaSystem sys = lambda_system(family);
  const Eigen::VectorXd m = sys.moduli(t);
  const int top = dominant_index(m);
  for (int j = 0; j < sys.term_count(); ++j) {
    if (j != top && m(j) >= m(top) * (1.0 - 1e-8)) {
      throw std::invalid_argument("point lies on the accumulation locus");
    }
  }
  switch (family) {
    case Family::A: return top == 0 ? "R1" : "R2";
    case Family::B: return "R1";
    case Family::E: return top == 1 ? "R1" : "R2";
    case Family::F: {
      const bool upper = t.imag() >= 0.0;
      if (top == 2) return "R1";
      if (top == 1) return upper ? "R3" : "R3*";
      if (dominance_connected(sys, 0, Complex(1.0), t)) return "R2";
      return upper ? "R4" : "R4*";
    }
  }
  throw std::invalid_argument("unknown family");
}

std::vector<Complex> jones_zeros(Family family, int n, const RootOptions& opts) {
  const StrippedPoly s = strip_monomial(jones_family_closed(family, n));
  if (degree(s.poly) < 1) return {};
  return find_roots(s.poly, opts);
}

std::vector<Complex> discrete_accumulation_points(Family) {
  const double pi = std::acos(-1.0);
  return {std::polar(1.0, 2.0 * pi / 3.0), std::polar(1.0, -2.0 * pi / 3.0)};
}

}  // namespace knotzeros
