#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "knotzeros/asymptotics.hpp"
#include "knotzeros/io.hpp"
#include "knotzeros/jones.hpp"
#include "knotzeros/svg.hpp"
#include "knotzeros/tutte.hpp"
#include "knotzeros/verify.hpp"

namespace kz = knotzeros;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kMathCheck = 3;
constexpr int kNonConvergence = 4;

// A computed result contradicted an independent route.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

kz::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return kz::Json::parse(in);
  } catch (const kz::Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

// Writes to `path`, or to stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

kz::Json complex_json(kz::Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

kz::Json bivar_output(const kz::BivarPoly& p) {
  kz::Json j = kz::to_json(p);
  j["text"] = kz::to_string(p);
  return j;
}

struct Inputs {
  std::string family;
  int n = 0;
  std::string graph_file;
  std::string kind;
  std::string method = "dc";
  bool check_all = false;
  int writhe = 0;
  std::string out;
  std::string svg;
  bool unit_circle = false;
  double r_max = 0.0;
  double r_min = 0.0;
  std::vector<double> window;
  int resolution = 2000;
  double q = 0.0, q_im = 0.0, v = 0.0, v_im = 0.0;
  std::string suite = "paper";
  std::uint64_t seed = kz::VerifyOptions{}.seed;
};

int cmd_family_info(const Inputs& in) {
  const kz::Family f = kz::parse_family(in.family);
  const kz::LinkPresentation p = kz::link_presentation(f, in.n);
  const kz::Json j = {{"family", kz::to_string(f)},  {"n", in.n},
                      {"crossings", p.crossings},    {"writhe", p.writhe},
                      {"n_dark", p.n_dark},          {"n_light", p.n_light},
                      {"components", p.n_components}, {"graph", kz::to_json(p.graph)}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_tutte(const Inputs& in) {
  kz::Multigraph g;
  std::optional<std::pair<kz::GraphKind, int>> named;
  if (!in.graph_file.empty()) {
    if (!in.kind.empty()) throw std::invalid_argument("give either --graph or --kind, not both");
    g = kz::graph_from_json(read_json_file(in.graph_file));
  } else {
    if (in.kind.empty()) throw std::invalid_argument("one of --graph or --kind is required");
    named = {kz::parse_graph_kind(in.kind), in.n};
    g = kz::build_graph(named->first, named->second);
  }
  auto compute = [&](const std::string& method) {
    if (method == "brute") return kz::tutte_bruteforce(g);
    if (method == "dc") return kz::tutte_dc(g);
    if (method == "closed") {
      if (!named) throw std::invalid_argument("--method closed needs --kind");
      return kz::tutte_family_closed(named->first, named->second);
    }
    throw std::invalid_argument("unknown method '" + method + "'");
  };
  if (!in.check_all) {
    std::cout << bivar_output(compute(in.method)).dump(2) << '\n';
    return kOk;
  }
  std::vector<std::string> methods = {"dc"};
  if (g.edge_count() <= kz::kMaxEnumerationEdges) methods.push_back("brute");
  if (named && named->first != kz::GraphKind::Circuit && named->first != kz::GraphKind::FatLink &&
      named->first != kz::GraphKind::DC) {
    methods.push_back("closed");
  }
  const kz::BivarPoly reference = compute(methods[0]);
  for (std::size_t i = 1; i < methods.size(); ++i) {
    const kz::BivarPoly other = compute(methods[i]);
    if (!(other == reference)) {
      throw CheckFailure(methods[0] + ": " + kz::to_string(reference) + "\n" + methods[i] + ": " +
                         kz::to_string(other));
    }
  }
  kz::Json j = bivar_output(reference);
  j["methods"] = methods;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_jones(const Inputs& in) {
  kz::Json j;
  if (!in.graph_file.empty()) {
    if (!in.family.empty()) throw std::invalid_argument("give either --graph or --family, not both");
    const kz::SignedMultigraph g = kz::signed_graph_from_json(read_json_file(in.graph_file));
    kz::QuarterLaurent v;
    try {
      v = kz::jones_nonalternating(g, in.writhe);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      throw CheckFailure(e.what());
    }
    j = kz::to_json(v);
    j["text"] = kz::to_string(v);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (in.family.empty()) throw std::invalid_argument("one of --family or --graph is required");
  const kz::Family f = kz::parse_family(in.family);
  const kz::LinkPresentation p = kz::link_presentation(f, in.n);
  const kz::QuarterLaurent v = kz::jones_family_closed(f, in.n);
  const kz::QuarterLaurent via_graph = kz::jones_alternating(p);
  const kz::StructuralReport rep = kz::structural_report(p, v);
  j = kz::to_json(v);
  j["text"] = kz::to_string(v);
  j["degree_span"] = rep.degree_span();
  j["crossings"] = p.crossings;
  j["components"] = p.n_components;
  j["special_value"] = complex_json(rep.special_value);
  j["special_value_ok"] = rep.special_value_ok;
  j["leading_sign_ok"] = rep.sign_ok;
  j["residues_ok"] = rep.residues_ok;
  j["graph_route_agrees"] = via_graph == v;
  std::cout << j.dump(2) << '\n';
  if (!(via_graph == v)) {
    throw CheckFailure("graph route gives " + kz::to_string(via_graph));
  }
  if (!rep.ok()) {
    std::string msg = "structural check failed:";
    for (const auto& s : rep.violations) msg += " " + s + ";";
    throw CheckFailure(msg);
  }
  return kOk;
}

int cmd_zeros(const Inputs& in) {
  const kz::Family f = kz::parse_family(in.family);
  const std::vector<kz::Complex> zeros = kz::jones_zeros(f, in.n);
  std::ostringstream csv;
  kz::write_zeros_csv(csv, zeros);
  emit(in.out, csv.str());
  if (!in.svg.empty()) {
    kz::SvgOptions opts;
    opts.title = "zeros of V for " + kz::to_string(f) + "_" + std::to_string(in.n);
    opts.unit_circle = in.unit_circle;
    write_text_file(in.svg, kz::render_svg(zeros, opts));
  }
  return kOk;
}

int cmd_locus(const Inputs& in) {
  const kz::Family f = kz::parse_family(in.family);
  kz::LocusOptions opts = kz::default_locus_options(f);
  opts.resolution = in.resolution;
  if (!in.window.empty()) {
    if (in.window.size() != 4) throw std::invalid_argument("--window takes x0 x1 y0 y1");
    opts.polar.reset();
    opts.rect = kz::RectWindow{in.window[0], in.window[1], in.window[2], in.window[3]};
  } else if (in.r_max > 0.0) {
    opts.rect.reset();
    const double r_min = in.r_min > 0.0 ? in.r_min : std::min(1.0 / in.r_max, in.r_max / 100.0);
    opts.polar = kz::PolarWindow{r_min, in.r_max};
  }
  const std::vector<kz::LocusPoint> points = kz::trace_locus(f, opts);
  std::ostringstream csv;
  kz::write_locus_csv(csv, points);
  emit(in.out, csv.str());
  if (!in.svg.empty()) {
    std::vector<kz::Complex> ts;
    for (const auto& p : points) ts.push_back(p.t);
    kz::SvgOptions svg;
    svg.title = "accumulation set for family " + kz::to_string(f);
    svg.unit_circle = in.unit_circle;
    svg.marker_radius = 0.8;
    write_text_file(in.svg, kz::render_svg(ts, svg, kz::discrete_accumulation_points(f)));
  }
  return kOk;
}

int cmd_potts(const Inputs& in) {
  const kz::Multigraph g = kz::graph_from_json(read_json_file(in.graph_file));
  const kz::Complex q(in.q, in.q_im), v(in.v, in.v_im);
  const kz::Complex z = (v == kz::Complex(0.0)) ? kz::potts_direct(g, q, v) : kz::potts_via_tutte(g, q, v);
  const kz::Json j = {{"q", complex_json(q)}, {"v", complex_json(v)}, {"Z", complex_json(z)}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_chromatic(const Inputs& in) {
  const kz::Multigraph g = kz::graph_from_json(read_json_file(in.graph_file));
  const kz::UniPoly p = kz::chromatic(g);
  kz::Json coeffs = kz::Json::array();
  for (int e = 0; e <= std::max(0, kz::degree(p)); ++e) coeffs.push_back(p.coefficient(e).str());
  const kz::Json j = {{"coefficients", coeffs}, {"text", kz::to_string(p, "q")}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Inputs& in) {
  kz::VerifyOptions opts;
  opts.suite = kz::parse_suite(in.suite);
  opts.seed = in.seed;
  const auto results = kz::run_acceptance(opts);
  kz::print_results(std::cout, results);
  return kz::all_passed(results) ? kOk : kMathCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte and Jones polynomials of link families and their complex zeros"};
  app.require_subcommand(1);
  Inputs in;

  auto* info = app.add_subcommand("family-info", "diagram data and graph of a family member");
  info->add_option("--family", in.family, "A, B, E or F")->required();
  info->add_option("--n", in.n, "family parameter")->required();

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of a graph");
  tutte->add_option("--graph", in.graph_file, "graph JSON file");
  tutte->add_option("--kind", in.kind, "C, FL, D1C, DC, Wheel, H3 or HW");
  tutte->add_option("--n", in.n, "graph parameter");
  tutte->add_option("--method", in.method, "brute, dc or closed");
  tutte->add_flag("--check-all", in.check_all, "compare every applicable method");

  auto* jones = app.add_subcommand("jones", "Jones polynomial of a family member or signed graph");
  jones->add_option("--family", in.family, "A, B, E or F");
  jones->add_option("--n", in.n, "family parameter");
  jones->add_option("--graph", in.graph_file, "signed associated graph JSON file");
  jones->add_option("--writhe", in.writhe, "writhe of the diagram");

  auto* zeros = app.add_subcommand("zeros", "zeros of the Jones polynomial as CSV");
  zeros->add_option("--family", in.family, "A, B, E or F")->required();
  zeros->add_option("--n", in.n, "family parameter")->required();
  zeros->add_option("--out", in.out, "CSV file (default stdout)");
  zeros->add_option("--svg", in.svg, "SVG plot file");
  zeros->add_flag("--overlay-unit-circle", in.unit_circle, "draw |t| = 1");

  auto* locus = app.add_subcommand("locus", "traced accumulation set as CSV");
  locus->add_option("--family", in.family, "A, B, E or F")->required();
  locus->add_option("--rmax", in.r_max, "outer radius of a polar window");
  locus->add_option("--rmin", in.r_min, "inner radius of a polar window");
  locus->add_option("--window", in.window, "rectangle x0 x1 y0 y1")->expected(4);
  locus->add_option("--resolution", in.resolution, "scan lines per direction");
  locus->add_option("--out", in.out, "CSV file (default stdout)");
  locus->add_option("--svg", in.svg, "SVG plot file");
  locus->add_flag("--overlay-unit-circle", in.unit_circle, "draw |t| = 1");

  auto* potts = app.add_subcommand("potts", "Potts partition function Z(G,q,v)");
  potts->add_option("--graph", in.graph_file, "graph JSON file")->required();
  potts->add_option("--q", in.q, "real part of q")->required();
  potts->add_option("--v", in.v, "real part of v")->required();
  potts->add_option("--q-im", in.q_im, "imaginary part of q");
  potts->add_option("--v-im", in.v_im, "imaginary part of v");

  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial P(G,q)");
  chrom->add_option("--graph", in.graph_file, "graph JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", in.suite, "paper or quick");
  verify->add_option("--seed", in.seed, "seed for randomized sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_family_info(in);
    if (*tutte) return cmd_tutte(in);
    if (*jones) return cmd_jones(in);
    if (*zeros) return cmd_zeros(in);
    if (*locus) return cmd_locus(in);
    if (*potts) return cmd_potts(in);
    if (*chrom) return cmd_chromatic(in);
    if (*verify) return cmd_verify(in);
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kMathCheck;
  } catch (const kz::NonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << "\npolynomial: " << e.polynomial() << '\n';
    return kNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const kz::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kMathCheck;
  }
  return kUsage;
}
