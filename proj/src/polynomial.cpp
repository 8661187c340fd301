#include "knotzeros/polynomial.hpp"

#include <array>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

namespace knotzeros {

namespace {

int floor_mod4(int e) { return ((e % 4) + 4) % 4; }

// Integer power of t; exponent may be negative.
Complex int_power(Complex t, int k) {
  Complex base = k >= 0 ? t : 1.0 / t;
  unsigned m = static_cast<unsigned>(k >= 0 ? k : -k);
  Complex result(1.0);
  while (m) {
    if (m & 1u) result *= base;
    m >>= 1u;
    if (m) base *= base;
  }
  return result;
}

void append_signed(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
  const bool negative = c < 0;
  const BigInt mag = negative ? BigInt(-c) : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag << '*';
    os << mono;
  }
}

std::string power_string(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

template <typename P>
std::string bivar_string(const P& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = power_string("x", e.x);
    const std::string ym = power_string("y", e.y);
    if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
    append_signed(os, first, c, mono);
    first = false;
  }
  return os.str();
}

}  // namespace

BivarPoly var_x() { return BivarPoly::monomial({1, 0}); }
BivarPoly var_y() { return BivarPoly::monomial({0, 1}); }

BivarLaurent to_laurent(const BivarPoly& p) {
  BivarLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

QuarterLaurent substitute(const BivarLaurent& p, MonomialImage x, MonomialImage y) {
  QuarterLaurent out;
  for (const auto& [e, c] : p.terms()) {
    int sign = 1;
    if (x.sign < 0 && (e.x % 2 != 0)) sign = -sign;
    if (y.sign < 0 && (e.y % 2 != 0)) sign = -sign;
    out.add_term(e.x * x.e4 + e.y * y.e4, sign > 0 ? c : BigInt(-c));
  }
  return out;
}

QuarterLaurent substitute_jones(const BivarPoly& p) {
  return substitute(to_laurent(p), {-1, 4}, {-1, -4});
}

QuarterLaurent mono_shift(const QuarterLaurent& p, int e4, int sign) {
  QuarterLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e + e4, sign > 0 ? c : BigInt(-c));
  return out;
}

StrippedPoly strip_monomial(const QuarterLaurent& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot strip the zero polynomial");
  StrippedPoly s;
  s.e4_min = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    if ((e - s.e4_min) % 4 != 0) {
      throw std::invalid_argument("exponents differ by non-integer powers of t");
    }
    s.poly.add_term((e - s.e4_min) / 4, c);
  }
  return s;
}

std::optional<QuarterLaurent> exact_divide(const QuarterLaurent& n, const QuarterLaurent& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (n.is_zero()) return QuarterLaurent{};
  // Work in s = t^(1/4): n = s^a N(s), d = s^b D(s) with N(0), D(0) != 0.
  // Since s does not divide D, any Laurent quotient is s^(a-b) N/D.
  const int a = n.terms().begin()->first;
  const int b = d.terms().begin()->first;
  std::map<int, BigInt> rem;
  for (const auto& [e, c] : n.terms()) rem[e - a] = c;
  std::vector<std::pair<int, BigInt>> divisor;
  for (const auto& [e, c] : d.terms()) divisor.push_back({e - b, c});
  const int d_deg = divisor.back().first;
  const BigInt& lead = divisor.back().second;

  QuarterLaurent q;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const int shift = top->first - d_deg;
    if (shift < 0) return std::nullopt;
    if (top->second % lead != 0) return std::nullopt;
    const BigInt factor = top->second / lead;
    q.add_term(shift + a - b, factor);
    for (const auto& [e, c] : divisor) {
      auto& slot = rem[e + shift];
      slot -= factor * c;
      if (slot == 0) rem.erase(e + shift);
    }
  }
  return q;
}

std::optional<BivarPoly> divide_by_linear(const BivarPoly& p, Variable var, const BigInt& root) {
  // Synthetic division in `var`, coefficients grouped by the other exponent.
  std::map<int, std::map<int, BigInt>> by_other;  // other exponent -> (main exponent -> coeff)
  for (const auto& [e, c] : p.terms()) {
    const int main = var == Variable::X ? e.x : e.y;
    const int other = var == Variable::X ? e.y : e.x;
    by_other[other][main] = c;
  }
  BivarPoly q;
  for (const auto& [other, coeffs] : by_other) {
    const int deg = coeffs.rbegin()->first;
    BigInt carry = 0;
    for (int k = deg; k >= 1; --k) {
      auto it = coeffs.find(k);
      carry = carry * root + (it == coeffs.end() ? BigInt(0) : it->second);
      XYExp e = var == Variable::X ? XYExp{k - 1, other} : XYExp{other, k - 1};
      q.add_term(e, carry);
    }
    auto it0 = coeffs.find(0);
    const BigInt remainder = carry * root + (it0 == coeffs.end() ? BigInt(0) : it0->second);
    if (remainder != 0) return std::nullopt;
  }
  return q;
}

BigInt evaluate_exact(const BivarPoly& p, const BigInt& x, const BigInt& y) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * pow(x, e.x) * pow(y, e.y);
  return sum;
}

UniPoly substitute_affine_x(const BivarPoly& p, const BigInt& a, const BigInt& b, const BigInt& y) {
  UniPoly lin;
  lin.add_term(0, a);
  lin.add_term(1, b);
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    const BigInt yc = c * pow(y, e.y);
    if (yc == 0) continue;
    out += power(lin, e.x).scaled(yc);
  }
  return out;
}

Complex evaluate(const QuarterLaurent& p, Complex t) {
  if (p.is_zero()) return 0.0;
  if (t == Complex(0.0)) {
    if (p.terms().begin()->first < 0) throw std::domain_error("negative power of t at t = 0");
    return to_double(p.coefficient(0));
  }
  // Group by e4 mod 4; each class is t^(r/4) times an integer Laurent part.
  std::map<int, UniPoly> classes;
  std::map<int, int> low;
  for (const auto& [e, c] : p.terms()) {
    const int r = floor_mod4(e);
    const int q = (e - r) / 4;
    auto [it, fresh] = low.try_emplace(r, q);
    if (!fresh) it->second = std::min(it->second, q);
  }
  for (const auto& [e, c] : p.terms()) {
    const int r = floor_mod4(e);
    classes[r].add_term((e - r) / 4 - low[r], c);
  }
  const Complex log_t = std::log(t);
  Complex sum = 0.0;
  for (const auto& [r, poly] : classes) {
    Complex part = evaluate(poly, t) * int_power(t, low[r]);
    if (r != 0) part *= std::exp(0.25 * r * log_t);
    sum += part;
  }
  return sum;
}

Complex evaluate_at_cube_root_of_unity(const QuarterLaurent& p) {
  // t^(e4/4) = zeta^e4 with zeta = e^(i pi/6); reduce in Z[zeta] modulo
  // zeta^4 - zeta^2 + 1 so that only the final four integers are rounded.
  std::array<BigInt, 12> c;
  for (const auto& [e, coeff] : p.terms()) c[((e % 12) + 12) % 12] += coeff;
  for (int r = 11; r >= 4; --r) {
    c[r - 2] += c[r];
    c[r - 4] -= c[r];
  }
  Complex sum = 0.0;
  for (int r = 0; r < 4; ++r) sum += to_double(c[r]) * std::polar(1.0, r * std::numbers::pi / 6.0);
  return sum;
}

Eigen::VectorXd dense_coefficients(const UniPoly& p) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.is_zero() ? 1 : degree(p) + 1);
  for (const auto& [e, c] : p.terms()) out(e) = to_double(c);
  return out;
}

int degree(const UniPoly& p) { return p.is_zero() ? -1 : p.terms().rbegin()->first; }

std::string to_string(const BivarPoly& p) { return bivar_string(p); }
std::string to_string(const BivarLaurent& p) { return bivar_string(p); }

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_signed(os, first, c, power_string(var, e));
    first = false;
  }
  return os.str();
}

std::string quarter_exponent_string(int e4) {
  const int g = std::gcd(e4 < 0 ? -e4 : e4, 4);
  if (g == 4 || e4 == 0) return std::to_string(e4 / 4);
  return std::to_string(e4 / g) + "/" + std::to_string(4 / g);
}

std::string to_string(const QuarterLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const int base = p.terms().begin()->first;
  bool integral = true;
  for (const auto& [e, c] : p.terms()) integral = integral && ((e - base) % 4 == 0);
  if (!integral) {
    // Mixed fractional classes: print every term with its own exponent.
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      append_signed(os, first, c, e == 0 ? "" : "t^{" + quarter_exponent_string(e) + "}");
      first = false;
    }
    return os.str();
  }
  const StrippedPoly s = strip_monomial(p);
  const std::string body = to_string(s.poly, "t");
  if (s.e4_min == 0) return body;
  return "t^{" + quarter_exponent_string(s.e4_min) + "}*(" + body + ")";
}

}  // namespace knotzeros
