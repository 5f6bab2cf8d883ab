#pragma once

#include "drg/gf.hpp"
#include "drg/graph.hpp"

namespace drg {

struct FamilyGraph {
    Graph graph;
    LineCover cover;
};

// Vertices are D-subsets of {0..n-1} in lexicographic order, adjacent when the
// intersection has size D-1.  Lines are the stars of (D-1)-subsets; for n = 2D
// the star family is the one used.  Requires n >= 2D >= 4.
FamilyGraph build_johnson(int n, int D);

// Vertices are the D-dimensional subspaces of F_q^n as reduced row-echelon
// matrices, indexed by entry-lexicographic rank; adjacent when the
// intersection has dimension D-1.  Lines are the stars of (D-1)-spaces.
// Requires q a prime power and n >= 2D >= 4.
FamilyGraph build_grassmann(int q, int n, int D);

// Vertices are words of length D over {0..e-1} in lexicographic order,
// adjacent at Hamming distance 1.  Lines fix all but one coordinate.
// Requires D >= 1, e >= 2.
FamilyGraph build_hamming(int D, int e);

// Vertices are d x e matrices over F_q in row-major entry-lexicographic
// order, adjacent when the difference has rank 1.  The line through an edge
// is {A + u w^T : w in F_q^e} for the column direction u of the difference.
// Requires q a prime power and 1 <= d <= e.
FamilyGraph build_bilinear(int d, int e, int q);

// Cartesian product of cliques: (i,j) ~ (i',j') when they share a coordinate.
Graph build_grid(int m, int n);

// Replaces each vertex with an s-clique; copies of adjacent vertices stay
// adjacent.  clique_extension(g, 1) == g.
Graph clique_extension(const Graph& g, int s);

}  // namespace drg
