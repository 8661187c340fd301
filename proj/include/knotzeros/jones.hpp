#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotzeros/graph.hpp"
#include "knotzeros/polynomial.hpp"

namespace knotzeros {

/// V_L(t) = (-1)^w t^{(n_light - n_dark + 3w)/4} T(G+, -t, -1/t).
QuarterLaurent jones_alternating(const LinkPresentation& p);

/// Per-family closed forms, evaluated with exact Laurent arithmetic.
/// Throws std::logic_error if a division by (1+t) is inexact.
QuarterLaurent jones_family_closed(Family family, int n);

/// Both expressions of the signed-graph Jones polynomial, one built on
/// (x,y) = (-t,-1/t) and one on (-1/t,-t).
struct NonAlternatingJones {
  QuarterLaurent via_minus_t;
  QuarterLaurent via_minus_inverse_t;
};

NonAlternatingJones jones_nonalternating_both(const SignedMultigraph& g, int writhe);

/// Jones polynomial of a diagram with signed associated graph. The graph
/// must be connected. Throws std::logic_error if the two expressions differ.
QuarterLaurent jones_nonalternating(const SignedMultigraph& g, int writhe);

/// t^{-1} V+ - t V- == (t^{1/2} - t^{-1/2}) V0, exactly.
bool skein_check(const QuarterLaurent& v_plus, const QuarterLaurent& v_minus,
                 const QuarterLaurent& v_zero);

/// V(t) -> V(1/t).
QuarterLaurent mirror(const QuarterLaurent& v);

/// (1 - V) / ((1 - t)(1 - t^3)), when exact.
std::optional<QuarterLaurent> wk_extract(const QuarterLaurent& v);

struct StructuralReport {
  int degree_span_e4 = 0;  // in quarter units
  bool span_ok = false;
  int top_sign = 0;
  int expected_top_sign = 0;
  bool sign_ok = false;
  Complex special_value;
  double expected_special_value = 0.0;
  bool special_value_ok = false;
  bool residues_ok = false;
  std::vector<std::string> violations;

  double degree_span() const { return degree_span_e4 / 4.0; }
  bool ok() const { return violations.empty(); }
};

/// Checks a computed Jones polynomial against the structural laws of
/// alternating links: span equals the crossing number, the top coefficient
/// has sign (-1)^{n_light - 1}, V(e^{2 pi i/3}) = (-1)^{n_c - 1}, and the
/// exponents are integral for odd n_c and half-odd for even n_c.
StructuralReport structural_report(const LinkPresentation& p, const QuarterLaurent& v);

}  // namespace knotzeros
