#include "json_io.hpp"

namespace chipfire::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be a JSON array");
  return j;
}

template <typename T, typename ParseEntry>
Matrix<T> parse_matrix(const Json& j, ParseEntry parse_entry) {
  require_array(j, "matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : require_array(j[0], "matrix row").size();
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(j[r], "matrix row");
    if (j[r].size() != cols) parse_fail("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry(j[r][c]);
  }
  return m;
}

std::size_t parse_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    parse_fail(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

BigInt parse_integer(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) parse_fail("expected an integer, got " + r.to_string());
    return r.numerator();
  }
  parse_fail("expected an integer, got " + j.dump());
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(parse_integer(j));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  parse_fail("expected an integer or \"p/q\" string, got " + j.dump());
}

IntVector parse_int_vector(const Json& j) {
  require_array(j, "vector");
  IntVector v;
  for (const auto& e : j) v.push_back(parse_integer(e));
  return v;
}

RatVector parse_rat_vector(const Json& j) {
  require_array(j, "vector");
  RatVector v;
  for (const auto& e : j) v.push_back(parse_rational(e));
  return v;
}

IntMatrix parse_int_matrix(const Json& j) { return parse_matrix<BigInt>(j, parse_integer); }
RatMatrix parse_rat_matrix(const Json& j) { return parse_matrix<Rational>(j, parse_rational); }

Digraph parse_graph(const Json& j) {
  if (!j.is_object()) parse_fail("graph must be a JSON object");
  if (!j.contains("vertices") || !j.contains("edges") || !j.contains("sink")) {
    parse_fail("graph needs \"vertices\", \"edges\" and \"sink\"");
  }
  Digraph g;
  g.vertex_count = parse_index(j.at("vertices"), "vertices");
  g.sink = parse_index(j.at("sink"), "sink");
  const bool undirected = j.value("undirected", false);
  for (const auto& e : require_array(j.at("edges"), "edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) parse_fail("edge must be [u, v] or [u, v, mult]");
    const std::size_t u = parse_index(e[0], "edge endpoint");
    const std::size_t v = parse_index(e[1], "edge endpoint");
    const std::uint64_t mult = e.size() == 3 ? parse_index(e[2], "edge multiplicity") : 1;
    if (undirected) g.add_undirected(u, v, mult);
    else g.edges.push_back({u, v, mult});
  }
  return g;
}

SimplicialComplex2D parse_complex(const Json& j) {
  if (!j.is_object() || !j.contains("facets") || !j.contains("tree")) {
    parse_fail("complex needs \"facets\" and \"tree\"");
  }
  SimplicialComplex2D c;
  for (const auto& f : require_array(j.at("facets"), "facets")) {
    if (!f.is_array() || f.size() != 3) parse_fail("facet must have three vertices");
    Triangle t;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!f[k].is_number_integer() || f[k].get<std::int64_t>() <= 0) parse_fail("vertex labels must be positive integers");
      t[k] = f[k].get<Vertex>();
    }
    c.facets.push_back(t);
  }
  for (const auto& e : require_array(j.at("tree"), "tree")) {
    if (!e.is_array() || e.size() != 2) parse_fail("tree edge must have two vertices");
    Edge edge;
    for (std::size_t k = 0; k < 2; ++k) {
      if (!e[k].is_number_integer() || e[k].get<std::int64_t>() <= 0) parse_fail("vertex labels must be positive integers");
      edge[k] = e[k].get<Vertex>();
    }
    c.sink_tree.push_back(edge);
  }
  return c;
}

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& v) {
  if (v.is_integer()) return to_json(v.numerator());
  return Json(v.to_string());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

}  // namespace chipfire::cli
