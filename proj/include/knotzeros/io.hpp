#pragma once

#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "knotzeros/asymptotics.hpp"
#include "knotzeros/graph.hpp"
#include "knotzeros/polynomial.hpp"

namespace knotzeros {

using Json = nlohmann::json;

/// {"vertices": N, "edges": [[u,v],...], "signs": [...]}; signs are
/// emitted only when some edge is negative.
Json to_json(const SignedMultigraph& g);
Json to_json(const Multigraph& g);

/// Throws std::invalid_argument on malformed input. Missing signs mean all
/// edges are positive.
SignedMultigraph signed_graph_from_json(const Json& j);
Multigraph graph_from_json(const Json& j);

/// Coefficients are decimal strings.
Json to_json(const BivarPoly& p);               // {"terms":[{"xe","ye","c"}]}
Json to_json(const QuarterLaurent& p);          // {"terms":[{"e4","c"}]}
BivarPoly bivar_from_json(const Json& j);
QuarterLaurent quarter_from_json(const Json& j);

/// `re,im` per line.
void write_zeros_csv(std::ostream& out, const std::vector<Complex>& zeros);
/// `re,im,j,k` per line.
void write_locus_csv(std::ostream& out, const std::vector<LocusPoint>& points);

}  // namespace knotzeros
