#include "knotzeros/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "knotzeros/asymptotics.hpp"
#include "knotzeros/jones.hpp"
#include "knotzeros/oracles.hpp"
#include "knotzeros/tutte.hpp"

namespace knotzeros {

namespace {

// Collects failures of one criterion; the first few are kept verbatim.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what());
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  bool ok() const { return failures_ == 0; }

  std::string summary() const {
    std::ostringstream out;
    out << checks_ - failures_ << '/' << checks_ << " checks";
    for (const auto& m : messages_) out << "; " << m;
    for (const auto& n : notes_) out << "; " << n;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct Range {
  int lo, hi, step;
};

int cap(const VerifyOptions& o, int hi) { return o.suite == Suite::Quick ? std::min(hi, 8) : hi; }

QuarterLaurent laurent(int e4_min, std::initializer_list<int> coeffs) {
  QuarterLaurent p;
  int e = e4_min;
  for (int c : coeffs) {
    p.add_term(e, c);
    e += 4;
  }
  return p;
}

BigInt evaluate_integer(const UniPoly& p, int q) {
  BigInt acc = 0, power = 1;
  int e = 0;
  for (const auto& [k, c] : p.terms()) {
    for (; e < k; ++e) power *= q;
    acc += c * power;
  }
  return acc;
}

BivarPoly swap_xy(const BivarPoly& p) {
  BivarPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.y, e.x}, c);
  return out;
}

std::string label(Family f, int n) { return to_string(f) + "_" + std::to_string(n); }

Range family_range(Family f, int hi) {
  const int lo = min_parameter(f);
  if (f == Family::F) return {lo, hi % 2 == 1 ? hi : hi - 1, 2};
  return {lo, hi, 1};
}

constexpr Family kFamilies[] = {Family::A, Family::B, Family::E, Family::F};

CheckResult exact_jones(const VerifyOptions&) {
  struct Case {
    Family f;
    int n;
    QuarterLaurent v;
  };
  const Case cases[] = {
      {Family::A, 3, laurent(-16, {-1, 1, 0, 1})},
      {Family::A, 4, laurent(-8, {1, -1, 1, -1, 1})},
      {Family::B, 3, laurent(-8, {1, -1, 1, -1, 1})},
      {Family::B, 5, laurent(-16, {1, -4, 6, -7, 9, -7, 6, -4, 1})},
      {Family::E, 2, laurent(-18, {-1, 0, -1, 1, -1})},
      {Family::E, 3, laurent(-28, {1, -1, 3, -1, 3, -2, 1})},
      {Family::F, 5, laurent(-16, {1, -1, 1, -2, 2, -1, 1})},
      {Family::F, 7, laurent(-24, {1, -3, 5, -7, 8, -8, 8, -5, 3, -1})},
  };
  Tally tally;
  for (const Case& c : cases) {
    const QuarterLaurent via_graph = jones_alternating(link_presentation(c.f, c.n));
    const QuarterLaurent closed = jones_family_closed(c.f, c.n);
    tally.expect(via_graph == c.v, [&] {
      return label(c.f, c.n) + " graph route gave " + to_string(via_graph);
    });
    tally.expect(closed == c.v, [&] {
      return label(c.f, c.n) + " closed form gave " + to_string(closed);
    });
  }
  return {1, "exact Jones polynomials", tally.ok() ? Status::Pass : Status::Fail, tally.summary()};
}

CheckResult tutte_methods(const VerifyOptions& opts) {
  struct Spec {
    Family f;
    int hi;
    GraphKind kind;
    int shift;  // closed-form parameter = n + shift
  };
  const Spec specs[] = {{Family::A, 24, GraphKind::D1C, -1},
                        {Family::B, 12, GraphKind::Wheel, 0},
                        {Family::E, 12, GraphKind::H3, 0},
                        {Family::F, 17, GraphKind::HW, 0}};
  Tally tally;
  for (const Spec& s : specs) {
    const Range r = family_range(s.f, cap(opts, s.hi));
    for (int n = r.lo; n <= r.hi; n += r.step) {
      const Multigraph g = family_graph(s.f, n);
      if (g.edge_count() > kMaxEnumerationEdges) continue;
      const BivarPoly brute = tutte_bruteforce(g);
      const BivarPoly dc = tutte_dc(g);
      const BivarPoly closed = tutte_family_closed(s.kind, n + s.shift);
      tally.expect(brute == dc, [&] { return label(s.f, n) + ": subgraph sum != deletion-contraction"; });
      tally.expect(brute == closed, [&] { return label(s.f, n) + ": subgraph sum != closed form"; });
    }
  }
  return {2, "Tutte polynomial by three methods", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

CheckResult duality(const VerifyOptions&) {
  Tally tally;
  for (GraphKind kind : {GraphKind::Circuit, GraphKind::H3, GraphKind::Wheel}) {
    for (int n = min_parameter(kind); n <= 8; ++n) {
      const auto [g, dual] = dual_pair(kind, n);
      tally.expect(tutte_dc(g) == swap_xy(tutte_dc(dual)), [&] {
        return to_string(kind) + "_" + std::to_string(n) + ": T(G,x,y) != T(G*,y,x)";
      });
    }
  }
  return {3, "planar duality", tally.ok() ? Status::Pass : Status::Fail, tally.summary()};
}

CheckResult structural(const VerifyOptions& opts) {
  Tally tally;
  int stated_law_failures = 0, shifted_law_failures = 0, cases = 0;
  for (Family f : kFamilies) {
    const Range r = family_range(f, cap(opts, 20));
    for (int n = r.lo; n <= r.hi; n += r.step) {
      const LinkPresentation p = link_presentation(f, n);
      const QuarterLaurent v = jones_family_closed(f, n);
      const StructuralReport rep = structural_report(p, v);
      ++cases;
      tally.expect(p.n_components == 1 + oracle::bicycle_dimension(p.graph), [&] {
        return label(f, n) + ": component count disagrees with the bicycle-space oracle";
      });
      tally.expect(rep.span_ok, [&] { return label(f, n) + ": degree span != crossings"; });
      tally.expect(rep.sign_ok, [&] { return label(f, n) + ": leading sign"; });
      tally.expect(rep.residues_ok, [&] { return label(f, n) + ": exponent residues"; });
      const Complex value = evaluate_at_cube_root_of_unity(v);
      const double stated = (p.n_components % 2 == 0) ? 1.0 : -1.0;
      const bool stated_ok = std::abs(value - stated) <= 1e-9;
      if (!stated_ok) ++stated_law_failures;
      if (std::abs(value + stated) > 1e-9) ++shifted_law_failures;
      tally.expect(stated_ok, [&] {
        std::ostringstream s;
        s << label(f, n) << ": V(e^{2 pi i/3}) = " << value.real() << (value.imag() < 0 ? "" : "+")
          << value.imag() << "i, expected (-1)^n_c = " << stated;
        return s.str();
      });
    }
  }
  std::ostringstream note;
  note << "V(e^{2 pi i/3}) = (-1)^n_c fails in " << stated_law_failures << "/" << cases
       << " links; (-1)^(n_c-1) fails in " << shifted_law_failures << "/" << cases;
  tally.note(note.str());
  return {4, "structural laws", tally.ok() ? Status::Pass : Status::Fail, tally.summary()};
}

CheckResult lambda_fidelity(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> log_r(std::log(0.5), std::log(2.0));
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Tally tally;
  double worst = 0.0;
  for (Family f : kFamilies) {
    const Range r = family_range(f, 12);
    const int lo = std::max(5, r.lo);
    const int count = (r.hi - lo) / r.step + 1;
    std::uniform_int_distribution<int> pick(0, count - 1);
    for (int i = 0; i < 100; ++i) {
      const int n = lo + r.step * pick(rng);
      Complex t;
      do {
        t = std::polar(std::exp(log_r(rng)), angle(rng));
      } while (std::abs(std::arg(t)) > std::numbers::pi - 1e-6);
      const Complex exact = evaluate(jones_family_closed(f, n), t);
      const Complex recon = reconstruct_eval(f, n, t);
      const double rel = std::abs(recon - exact) / std::abs(exact);
      worst = std::max(worst, rel);
      tally.expect(rel <= 1e-9, [&] {
        std::ostringstream s;
        s << label(f, n) << " at t=" << t << ": relative error " << rel;
        return s.str();
      });
    }
  }
  std::ostringstream note;
  note << "max relative error " << worst;
  tally.note(note.str());
  return {5, "lambda-form fidelity", tally.ok() ? Status::Pass : Status::Fail, tally.summary()};
}

CheckResult zeros_near_locus(const VerifyOptions& opts) {
  if (opts.suite == Suite::Quick) return {6, "zeros near the accumulation set", Status::Skip, "needs n = 50 and 42"};
  const double pi = std::numbers::pi;
  Tally tally;
  const std::vector<Complex> a = jones_zeros(Family::A, 50);
  tally.expect(a.size() == 50, [&] { return "A_50 has " + std::to_string(a.size()) + " zeros"; });
  double worst_radius = 0.0;
  for (Complex z : a) worst_radius = std::max(worst_radius, std::abs(std::abs(z) - 1.0));
  tally.expect(worst_radius <= 0.05, [&] {
    return "A_50 zero off the unit circle by " + std::to_string(worst_radius);
  });
  std::vector<double> angles;
  for (Complex z : a) angles.push_back(std::arg(z));
  std::sort(angles.begin(), angles.end());
  const double mean_gap = 2.0 * pi / 50.0;
  double min_gap = 1e9, max_gap = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2.0 * pi;
    min_gap = std::min(min_gap, next - angles[i]);
    max_gap = std::max(max_gap, next - angles[i]);
  }
  tally.expect(min_gap >= mean_gap / 2.0 && max_gap <= 2.0 * mean_gap, [&] {
    std::ostringstream s;
    s << "A_50 angular gaps span [" << min_gap << ", " << max_gap << "], mean " << mean_gap;
    return s.str();
  });
  const Complex omega = std::polar(1.0, 2.0 * pi / 3.0);
  double near = 1e9, near_conj = 1e9;
  for (Complex z : a) {
    near = std::min(near, std::abs(z - omega));
    near_conj = std::min(near_conj, std::abs(z - std::conj(omega)));
  }
  tally.expect(near <= 0.05 && near_conj <= 0.05, [&] {
    std::ostringstream s;
    s << "A_50 nearest zeros to e^{+-2 pi i/3} at distances " << near << ", " << near_conj;
    return s.str();
  });
  double worst_b = 0.0;
  const std::vector<Complex> b = jones_zeros(Family::B, 42);
  for (Complex z : b) worst_b = std::max(worst_b, oracle::distance_to_wheel_locus(z));
  tally.expect(worst_b <= 0.1, [&] { return "B_42 zero at distance " + std::to_string(worst_b); });
  std::ostringstream note;
  note << "A_50 radial " << worst_radius << ", e^{2 pi i/3} " << std::max(near, near_conj)
       << ", B_42 " << worst_b;
  tally.note(note.str());
  return {6, "zeros near the accumulation set", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

CheckResult locus_landmarks(const VerifyOptions& opts) {
  const double pi = std::numbers::pi;
  Tally tally;
  std::ostringstream note;

  {
    const std::vector<LocusPoint> pts = trace_locus(Family::B, default_locus_options(Family::B));
    double seg_lo = 1e9, seg_hi = -1e9, arc_hi = -1e9, arc_lo = 1e9;
    for (const LocusPoint& p : pts) {
      if (p.t.imag() == 0.0 && p.t.real() > 0.0) {
        seg_lo = std::min(seg_lo, p.t.real());
        seg_hi = std::max(seg_hi, p.t.real());
      }
      if (std::abs(std::abs(p.t) - 1.0) <= 1e-9) {
        arc_hi = std::max(arc_hi, std::arg(p.t));
        arc_lo = std::min(arc_lo, std::arg(p.t));
      }
    }
    const double lo = (3.0 - std::sqrt(5.0)) / 2.0, hi = (3.0 + std::sqrt(5.0)) / 2.0;
    tally.expect(std::abs(seg_lo - lo) <= 1e-6 && std::abs(seg_hi - hi) <= 1e-6, [&] {
      std::ostringstream s;
      s.precision(12);
      s << "B segment traced as [" << seg_lo << ", " << seg_hi << "]";
      return s.str();
    });
    tally.expect(std::abs(arc_hi - 2.0 * pi / 3.0) <= 1e-6 && std::abs(arc_lo + 2.0 * pi / 3.0) <= 1e-6,
                 [&] {
                   std::ostringstream s;
                   s.precision(12);
                   s << "B arc traced over angles [" << arc_lo << ", " << arc_hi << "]";
                   return s.str();
                 });
    note.precision(10);
    note << "B segment [" << seg_lo << ", " << seg_hi << "], arc +-" << arc_hi;
  }

  {
    const std::vector<LocusPoint> pts = trace_locus(Family::E, default_locus_options(Family::E));
    double axis_r = -1.0, worst_residual = 0.0, worst_cos = -1.0;
    for (const LocusPoint& p : pts) {
      worst_residual = std::max(worst_residual, std::abs(oracle::e_family_polar_residual(p.t)));
      if (std::abs(std::arg(p.t) - pi / 2.0) <= 1e-12) axis_r = std::abs(p.t);
      if (std::abs(std::abs(p.t) - 50.0) <= 1e-9) {
        worst_cos = std::max(worst_cos, std::abs(std::cos(std::arg(p.t)) - 3.0 / 100.0));
      }
    }
    tally.expect(std::abs(axis_r - 1.0 / std::sqrt(3.0)) <= 1e-6, [&] {
      return "E imaginary-axis crossing at r = " + std::to_string(axis_r);
    });
    tally.expect(worst_cos >= 0.0 && worst_cos <= 2e-4, [&] {
      return "E at r = 50: |cos(theta) - 3/(2r)| = " + std::to_string(worst_cos);
    });
    tally.expect(worst_residual <= 1e-8, [&] {
      return "E polar residual " + std::to_string(worst_residual);
    });
    note << "; E axis r " << axis_r << ", r=50 cos gap " << worst_cos;
  }

  {
    LocusOptions fo = default_locus_options(Family::F);
    if (opts.suite == Suite::Quick) fo.resolution = 800;
    const std::vector<LocusPoint> pts = trace_locus(Family::F, fo);
    for (double want : {0.6823278038280193, 1.7548776662466927}) {
      double best = 1e9;
      for (const LocusPoint& p : pts) {
        if (p.t.imag() == 0.0) best = std::min(best, std::abs(p.t.real() - want));
      }
      tally.expect(best <= 1e-5, [&] {
        return "F real crossing " + std::to_string(want) + " missed by " + std::to_string(best);
      });
    }
  }
  tally.note(note.str());
  return {7, "accumulation-set landmarks", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

CheckResult u_spot_values(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed + 8);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> outer(1.05, 3.0), inner(0.3, 0.95);
  Tally tally;
  for (int i = 0; i < 10; ++i) {
    const Complex t = std::polar(outer(rng), angle(rng));
    const double u = u_magnitude(Family::A, t);
    tally.expect(std::abs(u - 1.0) <= 1e-9, [&] { return "|U| = " + std::to_string(u) + " outside"; });
  }
  for (int i = 0; i < 10; ++i) {
    const Complex t = std::polar(inner(rng), angle(rng));
    const double u = u_magnitude(Family::A, t);
    tally.expect(std::abs(u - 1.0 / std::abs(t)) <= 1e-9,
                 [&] { return "|U| = " + std::to_string(u) + " inside"; });
  }
  return {8, "|U| in the two regions of family A", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

CheckResult nonalternating(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed + 9);
  Tally tally;
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int e = std::uniform_int_distribution<int>(std::max(0, n - 1), 10)(rng);
    const Multigraph g = oracle::random_connected_multigraph(rng, n, e, true);
    const SignedMultigraph sg(g);
    tally.expect(signed_tutte(sg, -1) == to_laurent(tutte_dc(g)),
                 [&] { return "signed Tutte with no primed edges differs from T"; });
  }
  for (int i = 0; i < 50; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int e = std::uniform_int_distribution<int>(std::max(0, n - 1), 12)(rng);
    const Multigraph g = oracle::random_connected_multigraph(rng, n, e, true);
    std::vector<int> signs(e);
    for (int& s : signs) s = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    const int writhe = std::uniform_int_distribution<int>(-5, 5)(rng);
    const auto both = jones_nonalternating_both(SignedMultigraph(g, signs), writhe);
    tally.expect(both.via_minus_t == both.via_minus_inverse_t, [&] {
      return "signed expressions differ: " + to_string(both.via_minus_t) + " vs " +
             to_string(both.via_minus_inverse_t);
    });
  }
  for (int n = min_parameter(Family::A); n <= 10; ++n) {
    const LinkPresentation p = link_presentation(Family::A, n);
    tally.expect(jones_nonalternating(SignedMultigraph(p.graph), p.writhe) == jones_alternating(p),
                 [&] { return label(Family::A, n) + ": signed route differs"; });
  }
  const QuarterLaurent unknot = QuarterLaurent::constant(1);
  const QuarterLaurent unlink = QuarterLaurent::monomial(2, -1) + QuarterLaurent::monomial(-2, -1);
  tally.expect(skein_check(unknot, unknot, unlink), [] { return "skein identity fails"; });
  return {9, "signed-graph Jones consistency", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

CheckResult potts_bridges(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed + 10);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  Tally tally;
  for (Family f : kFamilies) {
    const Range r = family_range(f, 6);
    for (int n = r.lo; n <= r.hi; n += r.step) {
      const Multigraph g = family_graph(f, n);
      const BivarPoly t = tutte_dc(g);
      for (int i = 0; i < 50; ++i) {
        const Complex q(coord(rng), coord(rng));
        Complex v(coord(rng), coord(rng));
        if (std::abs(v) < 1e-3) v = 1.0;
        const Complex direct = potts_direct(g, q, v);
        const Complex via = potts_via_tutte(g, t, q, v);
        const double err = std::abs(direct - via) / std::max(1.0, std::abs(direct));
        tally.expect(err <= 1e-9, [&] {
          return label(f, n) + ": cluster sum and Tutte evaluation differ by " + std::to_string(err);
        });
      }
    }
  }

  std::vector<Multigraph> graphs;
  for (GraphKind kind : {GraphKind::Circuit, GraphKind::FatLink, GraphKind::D1C, GraphKind::DC,
                         GraphKind::Wheel, GraphKind::H3, GraphKind::HW}) {
    for (int n = min_parameter(kind); n <= 15; ++n) {
      if (kind == GraphKind::HW && n % 2 == 0) continue;
      Multigraph g = build_graph(kind, n);
      if (g.vertex_count() <= 8) graphs.push_back(std::move(g));
    }
  }
  for (int i = 0; i < 60; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int e = std::uniform_int_distribution<int>(0, 12)(rng);
    graphs.push_back(oracle::random_multigraph(rng, n, n == 1 ? 0 : e, i % 5 == 0));
  }
  for (const Multigraph& g : graphs) {
    const UniPoly p = chromatic(g);
    for (int q : {2, 3, 4}) {
      const BigInt want = oracle::count_colorings(g, q);
      const BigInt got = evaluate_integer(p, q);
      tally.expect(got == want, [&] {
        return "chromatic polynomial " + to_string(p, "q") + " at q=" + std::to_string(q) +
               " gives " + got.str() + ", colorings " + want.str();
      });
    }
  }

  for (int n = 2; n <= 8; ++n) {
    UniPoly q_minus_1;
    q_minus_1.add_term(1, 1);
    q_minus_1.add_term(0, -1);
    const UniPoly want = power(q_minus_1, n) + q_minus_1.scaled(n % 2 == 0 ? 1 : -1);
    tally.expect(chromatic(build_graph(GraphKind::Circuit, n)) == want,
                 [&] { return "P(C_" + std::to_string(n) + ", q)"; });
  }
  return {10, "Potts and chromatic bridges", tally.ok() ? Status::Pass : Status::Fail,
          tally.summary()};
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "paper") return Suite::Paper;
  if (name == "quick") return Suite::Quick;
  throw std::invalid_argument("unknown suite '" + name + "' (expected paper or quick)");
}

CheckResult run_criterion(int id, const VerifyOptions& opts) {
  using Fn = CheckResult (*)(const VerifyOptions&);
  static const Fn table[kCriterionCount] = {exact_jones,     tutte_methods,    duality,
                                            structural,      lambda_fidelity,  zeros_near_locus,
                                            locus_landmarks, u_spot_values,    nonalternating,
                                            potts_bridges};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no such criterion");
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = table[id - 1](opts);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), Status::Fail, std::string("exception: ") + e.what()};
  }
  r.id = id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
    out << tag << "  " << r.id << "  " << r.name << "  (" << r.detail << ", ";
    out.precision(3);
    out << std::fixed << r.seconds << " s)\n";
    out.unsetf(std::ios::fixed);
    out.precision(6);
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status != Status::Fail; });
}

}  // namespace knotzeros
