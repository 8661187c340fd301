#include <random>
#include <sstream>

#include "doctest.h"
#include "knotzeros/io.hpp"
#include "knotzeros/jones.hpp"
#include "knotzeros/oracles.hpp"
#include "knotzeros/svg.hpp"
#include "knotzeros/tutte.hpp"
#include "support.hpp"

using namespace knotzeros;

TEST_SUITE("io") {

TEST_CASE("graph JSON") {
  const Json j = Json::parse(R"({"vertices": 3, "edges": [[0,1],[1,2],[2,0]]})");
  const Multigraph c3 = graph_from_json(j);
  CHECK(c3.same_as(build_graph(GraphKind::Circuit, 3)));
  CHECK(to_json(c3) == j);
  CHECK_FALSE(to_json(SignedMultigraph(c3)).contains("signs"));

  const SignedMultigraph sg(build_graph(GraphKind::FatLink, 3), {1, -1, 1});
  const Json sj = to_json(sg);
  CHECK(sj.at("signs") == Json::array({1, -1, 1}));
  const SignedMultigraph back = signed_graph_from_json(sj);
  CHECK(back.graph() == sg.graph());
  CHECK(back.signs() == sg.signs());
  CHECK_THROWS_AS(graph_from_json(sj), std::invalid_argument);
}

TEST_CASE("malformed graph JSON") {
  for (const char* text : {R"({"edges": []})", R"({"vertices": -1, "edges": []})",
                           R"({"vertices": 2})", R"({"vertices": 2, "edges": [[0]]})",
                           R"({"vertices": 2, "edges": [[0, 2]]})",
                           R"({"vertices": 2, "edges": [["a", 1]]})",
                           R"({"vertices": 2, "edges": [[0, 1]], "signs": [1, 1]})",
                           R"({"vertices": 2, "edges": [[0, 1]], "signs": [2]})", R"([1, 2])"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(signed_graph_from_json(Json::parse(text)), std::invalid_argument);
  }
}

TEST_CASE("polynomial JSON keeps big coefficients exact") {
  const BivarPoly t = tutte_family_closed(GraphKind::Wheel, 40);
  const Json j = to_json(t);
  CHECK(bivar_from_json(j) == t);
  CHECK(bivar_from_json(Json::parse(j.dump())) == t);
  const QuarterLaurent v = jones_family_closed(Family::B, 60);
  CHECK(quarter_from_json(Json::parse(to_json(v).dump())) == v);
  bool has_big = false;
  for (const auto& [e, c] : v.terms()) has_big = has_big || abs(c) > BigInt("1000000000000000000000");
  CHECK(has_big);
  const Json term = to_json(QuarterLaurent::monomial(-18, -1)).at("terms").at(0);
  CHECK(term.at("e4") == -18);
  CHECK(term.at("c") == "-1");
}

TEST_CASE("random JSON round trips") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    const BivarPoly b = test::random_bivar(rng);
    const Json jb = to_json(b);
    CHECK(to_json(bivar_from_json(Json::parse(jb.dump()))) == jb);
    const QuarterLaurent q = test::random_quarter(rng, static_cast<int>(rng() % 4));
    const Json jq = to_json(q);
    CHECK(to_json(quarter_from_json(Json::parse(jq.dump()))) == jq);
    const Multigraph g = oracle::random_multigraph(rng, 1 + static_cast<int>(rng() % 5),
                                                   static_cast<int>(rng() % 8), true);
    CHECK(to_json(graph_from_json(Json::parse(to_json(g).dump()))) == to_json(g));
  }
}

TEST_CASE("malformed polynomial JSON") {
  for (const char* text : {R"({})", R"({"terms": 3})", R"({"terms": [{"xe": 1, "ye": 0}]})",
                           R"({"terms": [{"xe": 1, "c": "2"}]})",
                           R"({"terms": [{"xe": 1, "ye": 0, "c": "1.5"}]})",
                           R"({"terms": [{"xe": 1, "ye": 0, "c": "-"}]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(bivar_from_json(Json::parse(text)), std::invalid_argument);
  }
  CHECK_THROWS_AS(bivar_from_json(Json::parse(R"({"terms": [{"xe": -1, "ye": 0, "c": "1"}]})")),
                  std::domain_error);
  CHECK(quarter_from_json(Json::parse(R"({"terms": [{"e4": 2, "c": 3}]})")) ==
        QuarterLaurent::monomial(2, 3));
}

TEST_CASE("CSV formats") {
  std::ostringstream zs;
  write_zeros_csv(zs, {Complex(0.5, -0.25), Complex(1.0 / 3.0, 0.0)});
  CHECK(zs.str() == "0.5,-0.25\n0.33333333333333331,0\n");
  std::ostringstream ls;
  write_locus_csv(ls, {{Complex(-1.0, 2.0), 2, 3}});
  CHECK(ls.str() == "-1,2,2,3\n");
}

TEST_CASE("SVG is self-contained and auto-fit") {
  SvgOptions opts;
  opts.title = "zeros";
  opts.unit_circle = true;
  const std::string svg = render_svg({Complex(0.5, 0.5), Complex(-3.0, 1.0)}, opts, {Complex(0.0, 1.0)});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("viewBox=\"0 0 640 640\"") != std::string::npos);
  CHECK(svg.find("<script") == std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(svg.find("zeros") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  const std::string empty = render_svg({}, SvgOptions{});
  CHECK(empty.find("</svg>") != std::string::npos);
}

}  // TEST_SUITE
