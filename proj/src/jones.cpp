#include "knotzeros/jones.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "knotzeros/tutte.hpp"

namespace knotzeros {

namespace {

QuarterLaurent t_pow(int e4, const BigInt& c = 1) { return QuarterLaurent::monomial(e4, c); }

QuarterLaurent one() { return t_pow(0); }

QuarterLaurent divide_or_throw(const QuarterLaurent& n, const QuarterLaurent& d) {
  auto q = exact_divide(n, d);
  if (!q) throw std::logic_error("closed-form Jones polynomial does not divide exactly");
  return *q;
}

int sign_of_power(int w) { return (w % 2 == 0) ? 1 : -1; }

}  // namespace

QuarterLaurent jones_alternating(const LinkPresentation& p) {
  if (!is_connected(p.graph)) throw std::invalid_argument("associated graph must be connected");
  const QuarterLaurent t = substitute_jones(tutte_dc(p.graph));
  return mono_shift(t, p.n_light - p.n_dark + 3 * p.writhe, sign_of_power(p.writhe));
}

QuarterLaurent jones_family_closed(Family family, int n) {
  check_parameter(family, n);
  const QuarterLaurent t = t_pow(4);
  const QuarterLaurent t_inv = t_pow(-4);
  const QuarterLaurent one_plus_t = one() + t;
  switch (family) {
    case Family::A: {
      // t^k/(1+t) [ (1 + t^-2) + (1 - t^-1)(1 + t + t^-1)(-t)^(1-n) ]
      const int k = (n % 2 == 1) ? 0 : 3;
      const QuarterLaurent twist = t_pow(4 * (1 - n), sign_of_power(n - 1));
      const QuarterLaurent bracket =
          one() + t_pow(-8) + (one() - t_inv) * (one() + t + t_inv) * twist;
      return mono_shift(divide_or_throw(bracket, one_plus_t), 4 * k, 1);
    }
    case Family::B: {
      // t + 1/t + s_{n-1}; s_m = (1 - t - 1/t) s_{m-1} - s_{m-2}.
      const QuarterLaurent trace = one() - t - t_inv;
      QuarterLaurent prev = t_pow(0, 2), cur = trace;
      for (int m = 2; m <= n - 1; ++m) {
        QuarterLaurent next = trace * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return t + t_inv + cur;
    }
    case Family::E: {
      // -t^(1/2)/(1+t) [ (1+t+1/t) ((1-t)/t^(3/2))^n + (-1)^n ((t+1/t)/t^(3/2))^n ]
      const QuarterLaurent first = (one() + t + t_inv) * power(one() - t, n);
      const QuarterLaurent second = power(t + t_inv, n).scaled(n % 2 == 0 ? 1 : -1);
      const QuarterLaurent bracket = mono_shift(first + second, -6 * n, 1);
      return mono_shift(divide_or_throw(bracket, one_plus_t), 2, -1);
    }
    case Family::F: {
      // 1 + (t + 1/t)(1 - 1/t)^m + (t^-2 - t^-1 + 1 - t)^m
      const int m = (n - 1) / 2;
      return one() + (t + t_inv) * power(one() - t_inv, m) +
             power(t_pow(-8) - t_inv + one() - t, m);
    }
  }
  throw std::invalid_argument("unknown family");
}

NonAlternatingJones jones_nonalternating_both(const SignedMultigraph& sg, int writhe) {
  const Multigraph& g = sg.graph();
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw std::invalid_argument("signed associated graph must be nonempty and connected");
  }
  const int n = g.vertex_count();
  const int e_plus = sg.count_sign(1);
  const int e_minus = sg.count_sign(-1);
  const int sign = sign_of_power(writhe);
  NonAlternatingJones out;
  // y = -1/t: primed edges are the minus edges.
  out.via_minus_t = mono_shift(substitute(signed_tutte(sg, -1), {-1, 4}, {-1, -4}),
                               3 * writhe + 2 - 2 * n + e_plus - e_minus, sign);
  // y = -t: primed edges are the plus edges.
  out.via_minus_inverse_t = mono_shift(substitute(signed_tutte(sg, 1), {-1, -4}, {-1, 4}),
                                       3 * writhe - 2 + 2 * n + e_plus - e_minus, sign);
  return out;
}

QuarterLaurent jones_nonalternating(const SignedMultigraph& g, int writhe) {
  auto both = jones_nonalternating_both(g, writhe);
  if (!(both.via_minus_t == both.via_minus_inverse_t)) {
    throw std::logic_error("signed-graph Jones expressions disagree: " +
                           to_string(both.via_minus_t) + " vs " +
                           to_string(both.via_minus_inverse_t));
  }
  return both.via_minus_t;
}

bool skein_check(const QuarterLaurent& v_plus, const QuarterLaurent& v_minus,
                 const QuarterLaurent& v_zero) {
  const QuarterLaurent residual = mono_shift(v_plus, -4, 1) - mono_shift(v_minus, 4, 1) -
                                  (t_pow(2) - t_pow(-2)) * v_zero;
  return residual.is_zero();
}

QuarterLaurent mirror(const QuarterLaurent& v) {
  QuarterLaurent out;
  for (const auto& [e, c] : v.terms()) out.add_term(-e, c);
  return out;
}

std::optional<QuarterLaurent> wk_extract(const QuarterLaurent& v) {
  const QuarterLaurent denom = (one() - t_pow(4)) * (one() - t_pow(12));
  return exact_divide(one() - v, denom);
}

StructuralReport structural_report(const LinkPresentation& p, const QuarterLaurent& v) {
  if (v.is_zero()) throw std::invalid_argument("structural report needs a nonzero polynomial");
  StructuralReport r;
  const int lo = v.terms().begin()->first;
  const int hi = v.terms().rbegin()->first;
  r.degree_span_e4 = hi - lo;
  r.span_ok = r.degree_span_e4 == 4 * p.crossings;
  if (!r.span_ok) {
    r.violations.push_back("degree span " + quarter_exponent_string(r.degree_span_e4) +
                           " != crossings " + std::to_string(p.crossings));
  }

  r.top_sign = v.terms().rbegin()->second > 0 ? 1 : -1;
  r.expected_top_sign = sign_of_power(p.n_light - 1);
  r.sign_ok = r.top_sign == r.expected_top_sign;
  if (!r.sign_ok) r.violations.push_back("top coefficient sign != (-1)^(n_light-1)");

  r.special_value = evaluate_at_cube_root_of_unity(v);
  r.expected_special_value = sign_of_power(p.n_components - 1);
  r.special_value_ok = std::abs(r.special_value - r.expected_special_value) <= 1e-9;
  if (!r.special_value_ok) r.violations.push_back("V(e^{2 pi i/3}) != (-1)^(n_c - 1)");

  const int want = (p.n_components % 2 == 1) ? 0 : 2;
  r.residues_ok = true;
  for (const auto& [e, c] : v.terms()) r.residues_ok = r.residues_ok && (((e % 4) + 4) % 4 == want);
  if (!r.residues_ok) r.violations.push_back("exponent residues do not match component parity");
  return r;
}

}  // namespace knotzeros
