#include "knotzeros/io.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace knotzeros {

namespace {

BigInt parse_coefficient(const Json& c) {
  if (c.is_string()) {
    const std::string& s = c.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("coefficient is not a decimal integer: " + s);
    }
    return BigInt(s);
  }
  if (c.is_number_integer()) return BigInt(c.get<long long>());
  throw std::invalid_argument("coefficient must be a decimal string");
}

const Json& terms_of(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  }
  return j.at("terms");
}

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

void write_real(std::ostream& out, double x) { out << std::setprecision(17) << x; }

}  // namespace

Json to_json(const SignedMultigraph& g) {
  Json j = to_json(g.graph());
  if (g.count_sign(-1) > 0) j["signs"] = g.signs();
  return j;
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

SignedMultigraph signed_graph_from_json(const Json& j) {
  const int n = get_int(j, "vertices");
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw std::invalid_argument("graph JSON needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument("each edge must be a pair of integers");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  Multigraph g(n, std::move(edges));
  if (!j.contains("signs")) return SignedMultigraph(std::move(g));
  const Json& s = j.at("signs");
  if (!s.is_array() || s.size() != static_cast<std::size_t>(g.edge_count())) {
    throw std::invalid_argument("\"signs\" must list one sign per edge");
  }
  std::vector<int> signs;
  for (const Json& x : s) {
    if (!x.is_number_integer()) throw std::invalid_argument("signs must be +1 or -1");
    signs.push_back(x.get<int>());
  }
  return SignedMultigraph(std::move(g), std::move(signs));
}

Multigraph graph_from_json(const Json& j) {
  SignedMultigraph g = signed_graph_from_json(j);
  if (g.count_sign(-1) > 0) throw std::invalid_argument("expected an unsigned graph");
  return g.graph();
}

Json to_json(const BivarPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"xe", e.x}, {"ye", e.y}, {"c", c.str()}});
  return Json{{"terms", terms}};
}

Json to_json(const QuarterLaurent& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e4", e}, {"c", c.str()}});
  return Json{{"terms", terms}};
}

BivarPoly bivar_from_json(const Json& j) {
  BivarPoly p;
  for (const Json& t : terms_of(j)) {
    if (!t.contains("c")) throw std::invalid_argument("term without coefficient");
    p.add_term({get_int(t, "xe"), get_int(t, "ye")}, parse_coefficient(t.at("c")));
  }
  return p;
}

QuarterLaurent quarter_from_json(const Json& j) {
  QuarterLaurent p;
  for (const Json& t : terms_of(j)) {
    if (!t.contains("c")) throw std::invalid_argument("term without coefficient");
    p.add_term(get_int(t, "e4"), parse_coefficient(t.at("c")));
  }
  return p;
}

void write_zeros_csv(std::ostream& out, const std::vector<Complex>& zeros) {
  for (Complex z : zeros) {
    write_real(out, z.real());
    out << ',';
    write_real(out, z.imag());
    out << '\n';
  }
}

void write_locus_csv(std::ostream& out, const std::vector<LocusPoint>& points) {
  for (const LocusPoint& p : points) {
    write_real(out, p.t.real());
    out << ',';
    write_real(out, p.t.imag());
    out << ',' << p.j << ',' << p.k << '\n';
  }
}

}  // namespace knotzeros
