#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace knotzeros {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Exponent of a monomial x^x y^y.
struct XYExp {
  int x = 0;
  int y = 0;
  auto operator<=>(const XYExp&) const = default;
  friend XYExp operator+(XYExp a, XYExp b) { return {a.x + b.x, a.y + b.y}; }
};

namespace detail {
inline bool nonnegative(int e) { return e >= 0; }
inline bool nonnegative(XYExp e) { return e.x >= 0 && e.y >= 0; }
}  // namespace detail

/// Sparse polynomial with arbitrary-precision integer coefficients, keyed by
/// exponent. Zero coefficients are never stored. When `Laurent` is false,
/// negative exponents are rejected.
template <typename Exp, bool Laurent>
class SparsePoly {
 public:
  using exponent_type = Exp;
  using map_type = std::map<Exp, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c) { return monomial(Exp{}, c); }
  static SparsePoly monomial(Exp e, const BigInt& c = 1) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }

  void add_term(Exp e, const BigInt& c) {
    if (c == 0) return;
    if constexpr (!Laurent) {
      if (!detail::nonnegative(e)) throw std::domain_error("negative exponent in a polynomial");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const BigInt& k) const {
    SparsePoly out;
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return a.scaled(-1); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  map_type terms_;
};

/// T(G,x,y)-style polynomials: nonnegative exponents in x and y.
using BivarPoly = SparsePoly<XYExp, false>;
/// Integer exponents in x and y.
using BivarLaurent = SparsePoly<XYExp, true>;
/// Laurent polynomial in t whose exponent keys are e4, meaning t^(e4/4).
using QuarterLaurent = SparsePoly<int, true>;
/// Ordinary polynomial in one variable with integer exponents.
using UniPoly = SparsePoly<int, false>;

template <typename P>
P power(const P& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power");
  P result = P::constant(1);
  P b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

BivarPoly var_x();
BivarPoly var_y();
BivarLaurent to_laurent(const BivarPoly& p);

/// Image of a variable under a monomial substitution: sign * t^(e4/4).
struct MonomialImage {
  int sign = 1;
  int e4 = 0;
};

/// Exact substitution of monomials in t for x and y.
QuarterLaurent substitute(const BivarLaurent& p, MonomialImage x, MonomialImage y);
/// x -> -t, y -> -1/t.
QuarterLaurent substitute_jones(const BivarPoly& p);

/// Multiplies by sign * t^(e4/4).
QuarterLaurent mono_shift(const QuarterLaurent& p, int e4, int sign);

struct StrippedPoly {
  int e4_min = 0;
  UniPoly poly;  // nonzero constant term
};

/// Splits p = t^(e4_min/4) * poly(t). Throws std::invalid_argument for the
/// zero polynomial or when exponents are not congruent mod 4.
StrippedPoly strip_monomial(const QuarterLaurent& p);

/// Exact Laurent quotient n / d, or nullopt when none exists.
std::optional<QuarterLaurent> exact_divide(const QuarterLaurent& n, const QuarterLaurent& d);

enum class Variable { X, Y };

/// Exact quotient p / (var - root), or nullopt when the remainder is nonzero.
std::optional<BivarPoly> divide_by_linear(const BivarPoly& p, Variable var, const BigInt& root);

/// Exact integer value of a bivariate polynomial.
BigInt evaluate_exact(const BivarPoly& p, const BigInt& x, const BigInt& y);

/// Substitutes x -> a + b*q and y -> c (integers), giving a polynomial in q.
UniPoly substitute_affine_x(const BivarPoly& p, const BigInt& a, const BigInt& b, const BigInt& y);

inline double to_double(const BigInt& c) { return c.convert_to<double>(); }

template <typename Scalar>
Scalar evaluate(const BivarPoly& p, const Scalar& x, const Scalar& y) {
  Scalar sum(0);
  for (const auto& [e, c] : p.terms()) {
    Scalar term(to_double(c));
    for (int i = 0; i < e.x; ++i) term *= x;
    for (int i = 0; i < e.y; ++i) term *= y;
    sum += term;
  }
  return sum;
}

template <typename Scalar>
Scalar evaluate(const BivarLaurent& p, const Scalar& x, const Scalar& y) {
  Scalar sum(0);
  for (const auto& [e, c] : p.terms()) {
    using std::pow;
    sum += Scalar(to_double(c)) * pow(x, e.x) * pow(y, e.y);
  }
  return sum;
}

/// Horner evaluation.
template <typename Scalar>
Scalar evaluate(const UniPoly& p, const Scalar& t) {
  if (p.is_zero()) return Scalar(0);
  Scalar acc(0);
  int current = p.terms().rbegin()->first;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= t;
    acc += Scalar(to_double(it->second));
  }
  for (; current > 0; --current) acc *= t;
  return acc;
}

/// Principal-branch evaluation of a quarter-exponent Laurent polynomial.
/// Throws std::domain_error at t = 0 when negative exponents are present.
Complex evaluate(const QuarterLaurent& p, Complex t);

/// Value at t = e^{2 pi i/3} on the principal branch, computed exactly in
/// the cyclotomic integers before rounding.
Complex evaluate_at_cube_root_of_unity(const QuarterLaurent& p);

/// Dense ascending coefficient vector (index = exponent).
Eigen::VectorXd dense_coefficients(const UniPoly& p);

int degree(const UniPoly& p);

std::string to_string(const BivarPoly& p);
std::string to_string(const BivarLaurent& p);
std::string to_string(const UniPoly& p, const std::string& var = "t");
/// Rendered as `t^{-4}*(-1 + t + t^3)`: lowest power first with the
/// monomial prefactor pulled out.
std::string to_string(const QuarterLaurent& p);

/// Exponent e4/4 written as an integer or a reduced fraction.
std::string quarter_exponent_string(int e4);

}  // namespace knotzeros
