#include "knotzeros/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace knotzeros {

namespace {

constexpr double kAcceptTol = 1e-8;
constexpr int kMatchSteps = 3;
constexpr int kRefineSamples = 25;  // odd: the centre sample is the previous hit

// A one-parameter family of scan lines: point(u, s) is the position at
// parameter s on the line labelled u.
struct Sweep {
  std::function<Complex(double, double)> point;
  std::vector<double> us;
  std::vector<double> ss;
  bool wrap = false;    // the line after us.back() is us.front() + period
  double period = 0.0;
};

struct Hit {
  double s = 0.0;
  int tie = 0;
  Complex t;
};

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = a + (b - a) * i / (count - 1);
  out.back() = b;
  return out;
}

void insert_value(std::vector<double>& xs, double x) {
  if (x < xs.front() || x > xs.back()) return;
  if (std::find(xs.begin(), xs.end(), x) != xs.end()) return;
  xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x);
}

class Tracer {
 public:
  explicit Tracer(const LambdaSystem& sys) : sys_(sys) {}

  void run(const Sweep& sweep) {
    const double step = (sweep.ss.back() - sweep.ss.front()) / (sweep.ss.size() - 1);
    std::vector<std::vector<Hit>> per_line(sweep.us.size());
    for (std::size_t i = 0; i < sweep.us.size(); ++i) {
      const double u = sweep.us[i];
      per_line[i] = scan(sweep, u, sweep.ss);
      for (const Hit& h : per_line[i]) emit(h);
    }
    const std::size_t lines = sweep.us.size();
    const std::size_t pairs = sweep.wrap ? lines : lines - 1;
    for (std::size_t a = 0; a < pairs; ++a) {
      const std::size_t b = (a + 1) % lines;
      const double ua = sweep.us[a];
      const double ub = (b == 0) ? sweep.us[0] + sweep.period : sweep.us[b];
      extend(sweep, per_line[a], per_line[b], ua, ub, step);
      extend(sweep, per_line[b], per_line[a], ub, ua, step);
    }
  }

  std::vector<LocusPoint> take() { return std::move(points_); }

 private:
  // Sign changes of every tie indicator along one line, bisected and filtered.
  std::vector<Hit> scan(const Sweep& sweep, double u, const std::vector<double>& ss) const {
    std::vector<Hit> hits;
    const std::size_t m = ss.size();
    for (std::size_t q = 0; q < sys_.ties.size(); ++q) {
      const auto& f = sys_.ties[q].indicator;
      std::vector<double> v(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = f(sweep.point(u, ss[i])).value;
      for (std::size_t i = 0; i < m; ++i) {
        if (!std::isfinite(v[i])) continue;
        if (v[i] == 0.0) {
          accept(sweep, u, ss[i], static_cast<int>(q), hits);
          continue;
        }
        if (i + 1 < m && std::isfinite(v[i + 1]) && v[i + 1] != 0.0 &&
            (v[i] < 0.0) != (v[i + 1] < 0.0)) {
          accept(sweep, u, bisect(sweep, u, ss[i], ss[i + 1], v[i], f), static_cast<int>(q), hits);
        }
      }
    }
    return hits;
  }

  double bisect(const Sweep& sweep, double u, double lo, double hi, double v_lo,
                const std::function<TieValue(Complex)>& f) const {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
      const double v = f(sweep.point(u, mid)).value;
      if (v == 0.0) return mid;
      if ((v < 0.0) == (v_lo < 0.0)) {
        lo = mid;
        v_lo = v;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  void accept(const Sweep& sweep, double u, double s, int q, std::vector<Hit>& hits) const {
    const Complex t = sweep.point(u, s);
    if (t == Complex(0.0)) return;
    const TiePair& tie = sys_.ties[q];
    if (!tie.indicator(t).admissible) return;
    if (!is_dominant_tie(sys_, t, tie.j, tie.k, kAcceptTol)) return;
    hits.push_back({s, q, t});
  }

  void emit(const Hit& h) {
    const TiePair& tie = sys_.ties[h.tie];
    points_.push_back({h.t, tie.j + 1, tie.k + 1});
  }

  // For each hit on `from` without a partner on `to`, bisects the line label
  // between them to locate where the traced arc ends.
  void extend(const Sweep& sweep, const std::vector<Hit>& from, const std::vector<Hit>& to,
              double u_from, double u_to, double step) {
    const double window = kMatchSteps * step;
    for (const Hit& h : from) {
      const bool matched = std::any_of(to.begin(), to.end(), [&](const Hit& g) {
        return g.tie == h.tie && std::abs(g.s - h.s) <= window;
      });
      if (matched) continue;
      double lo = u_from, hi = u_to;
      Hit best = h;
      bool moved = false;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        std::vector<double> local(kRefineSamples);
        for (int i = 0; i < kRefineSamples; ++i) {
          local[i] = best.s + window * (2.0 * i / (kRefineSamples - 1) - 1.0);
        }
        local[kRefineSamples / 2] = best.s;
        const std::vector<Hit> found = scan_tie(sweep, mid, local, best.tie);
        if (found.empty()) {
          hi = mid;
          continue;
        }
        const Hit* nearest = &found.front();
        for (const Hit& g : found) {
          if (std::abs(g.s - best.s) < std::abs(nearest->s - best.s)) nearest = &g;
        }
        best = *nearest;
        lo = mid;
        moved = true;
      }
      if (moved) emit(best);
    }
  }

  std::vector<Hit> scan_tie(const Sweep& sweep, double u, const std::vector<double>& ss,
                            int q) const {
    std::vector<Hit> hits;
    const auto& f = sys_.ties[q].indicator;
    std::vector<double> v(ss.size());
    for (std::size_t i = 0; i < ss.size(); ++i) v[i] = f(sweep.point(u, ss[i])).value;
    for (std::size_t i = 0; i < ss.size(); ++i) {
      if (!std::isfinite(v[i])) continue;
      if (v[i] == 0.0) {
        accept(sweep, u, ss[i], q, hits);
      } else if (i + 1 < ss.size() && std::isfinite(v[i + 1]) && v[i + 1] != 0.0 &&
                 (v[i] < 0.0) != (v[i + 1] < 0.0)) {
        accept(sweep, u, bisect(sweep, u, ss[i], ss[i + 1], v[i], f), q, hits);
      }
    }
    return hits;
  }

  const LambdaSystem& sys_;
  std::vector<LocusPoint> points_;
};

}  // namespace

LocusOptions default_locus_options(Family family) {
  LocusOptions opts;
  switch (family) {
    case Family::F: opts.rect = RectWindow{}; break;
    case Family::E: opts.polar = PolarWindow{0.02, 50.0}; break;
    case Family::A:
    case Family::B: opts.polar = PolarWindow{1.0 / 3.0, 3.0}; break;
  }
  return opts;
}

std::vector<LocusPoint> trace_locus(const LambdaSystem& system, const LocusOptions& opts) {
  if (opts.resolution < 100) throw std::invalid_argument("resolution must be at least 100");
  if (opts.polar.has_value() == opts.rect.has_value()) {
    throw std::invalid_argument("exactly one of a polar or a rectangular window is required");
  }
  Tracer tracer(system);
  const double two_pi = 2.0 * std::numbers::pi;
  if (opts.polar) {
    const PolarWindow w = *opts.polar;
    if (!(w.r_min > 0.0 && w.r_max > w.r_min)) throw std::invalid_argument("need 0 < r_min < r_max");
    // A multiple of four so that the axes are scanned exactly.
    const int rays = (opts.resolution + 3) / 4 * 4;
    std::vector<double> angles(rays);
    for (int i = 0; i < rays; ++i) angles[i] = two_pi * i / rays;
    const std::vector<double> logs = linspace(std::log(w.r_min), std::log(w.r_max), opts.resolution);

    Sweep ray_sweep{[](double theta, double s) { return std::polar(std::exp(s), theta); }, angles,
                    logs, true, two_pi};
    tracer.run(ray_sweep);

    std::vector<double> around = angles;
    around.push_back(two_pi);
    Sweep circle_sweep{[](double s, double theta) { return std::polar(std::exp(s), theta); }, logs,
                       around, false, 0.0};
    tracer.run(circle_sweep);
  } else {
    const RectWindow w = *opts.rect;
    if (!(w.x_max > w.x_min && w.y_max > w.y_min)) throw std::invalid_argument("empty rectangle");
    std::vector<double> xs = linspace(w.x_min, w.x_max, opts.resolution);
    std::vector<double> ys = linspace(w.y_min, w.y_max, opts.resolution);
    insert_value(xs, 0.0);
    insert_value(ys, 0.0);
    Sweep rows{[](double y, double x) { return Complex(x, y); }, ys, xs, false, 0.0};
    tracer.run(rows);
    Sweep columns{[](double x, double y) { return Complex(x, y); }, xs, ys, false, 0.0};
    tracer.run(columns);
  }
  std::vector<LocusPoint> points = tracer.take();
  std::sort(points.begin(), points.end(), [](const LocusPoint& a, const LocusPoint& b) {
    const double aa = std::arg(a.t), ab = std::arg(b.t);
    if (aa != ab) return aa < ab;
    return std::abs(a.t) < std::abs(b.t);
  });
  return points;
}

std::vector<LocusPoint> trace_locus(Family family, const LocusOptions& opts) {
  return trace_locus(lambda_system(family), opts);
}

}  // namespace knotzeros
