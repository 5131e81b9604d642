#pragma once

// JSON interchange: matrices are arrays of rows, vectors flat arrays,
// integers are JSON numbers (or decimal strings when they do not fit in
// 64 bits), rationals are integers or "p/q" strings.

#include <json.hpp>

#include "chipfire/constructors.hpp"

namespace chipfire::cli {

using Json = nlohmann::ordered_json;

BigInt parse_integer(const Json& j);
Rational parse_rational(const Json& j);
IntVector parse_int_vector(const Json& j);
RatVector parse_rat_vector(const Json& j);
IntMatrix parse_int_matrix(const Json& j);
RatMatrix parse_rat_matrix(const Json& j);

// {"vertices": n, "edges": [[u, v, mult], ...], "sink": s, "undirected": bool}
Digraph parse_graph(const Json& j);
// {"facets": [[i, j, k], ...], "tree": [[i, j], ...]}
SimplicialComplex2D parse_complex(const Json& j);

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);

}  // namespace chipfire::cli
