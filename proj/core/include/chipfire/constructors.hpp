#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "chipfire/classify.hpp"

namespace chipfire {

struct DigraphEdge {
  std::size_t from;
  std::size_t to;
  std::uint64_t multiplicity = 1;
};

// Vertices are 0 .. vertex_count-1; one of them is the sink.
struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<DigraphEdge> edges;
  std::size_t sink = 0;

  // Adds u->v and v->u.
  void add_undirected(std::size_t u, std::size_t v, std::uint64_t multiplicity = 1);
};

// Out-degree on the diagonal, -multiplicity off it, sink row and column
// deleted. Throws InvalidInput for self-loops or out-of-range vertices and
// DisconnectedFromSink when the result is not an M-matrix.
IntMatrix reduced_graph_laplacian(const Digraph& g);

using Vertex = std::int64_t;
using Triangle = std::array<Vertex, 3>;
using Edge = std::array<Vertex, 2>;

// A pure 2-dimensional complex given by its facets, with a spanning tree of
// its 1-skeleton acting as the sink.
struct SimplicialComplex2D {
  std::vector<Triangle> facets;
  std::vector<Edge> sink_tree;
};

struct CombinatorialLaplacian {
  IntMatrix matrix;
  // Row/column labels: the non-tree edges in lexicographic order.
  std::vector<Edge> edges;
};

// Boundary map d[ijk] = [jk] - [ik] + [ij] restricted to non-tree edges,
// returned as d * d^T. Throws EmptyComplex, NotASpanningTree, InvalidInput.
CombinatorialLaplacian reduced_combinatorial_laplacian(const SimplicialComplex2D& c);

struct LatticePointSet {
  std::vector<IntVector> points;  // sorted, distinct
};

// Integer points p with 0 <= (L^-1 p)_i < 1. Throws DeterminantExceedsCap,
// SingularMatrix.
LatticePointSet fundamental_parallelepiped_points(const IntMatrix& l,
                                                  const BigInt& det_cap = kDefaultDetCap);

// (L, L); requires L to be an M-matrix. Throws NotAnMMatrix.
Pairing classical_pairing(const IntMatrix& l);
// (L, I). Throws SingularL.
Pairing identity_pairing(const IntMatrix& l);

}  // namespace chipfire
