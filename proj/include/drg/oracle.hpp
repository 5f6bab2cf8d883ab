#pragma once

#include "drg/filters.hpp"
#include "drg/graph.hpp"

namespace drg {

struct DistanceData {
    bool connected = true;
    int diameter = 0;
    std::vector<std::vector<int>> dist;  // -1 where unreachable
};

DistanceData all_distances(const Graph& g);

// Constant |C_i| and |B_i| over every ordered pair; first violation wins.
Outcome<IntersectionArray> verify_drg(const Graph& g, const DistanceData& dd);

// The four cover clauses: cliques, size beta+1, unique edge, r lines per vertex.
std::vector<CheckVerdict> verify_cover(const Graph& g, const LineCover& cover,
                                       const Int& r, const Int& beta);

// Measured phi_0..phi_{D-1} over all (vertex, line) pairs; every vertex must
// sit within distance D-1 of every line.
Outcome<std::vector<Int>> measure_phi(const Graph& g, const DistanceData& dd,
                                      const LineCover& cover);

// Measured tau_1..tau_D over all ordered vertex pairs.
Outcome<std::vector<Int>> measure_tau(const Graph& g, const DistanceData& dd,
                                      const LineCover& cover);

// Lines through x at distance 1 from y, sorted; the line set of a pair at
// distance 2.
std::vector<int> line_set(const Graph& g, const DistanceData& dd, const LineCover& cover,
                          int x, int y);

CheckVerdict check_els(const Graph& g, const DistanceData& dd, const LineCover& cover);
CheckVerdict check_dual_pasch(const Graph& g, const LineCover& cover);

std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct AssemblyData {
    std::vector<std::vector<int>> assemblies;  // sorted cliques, sorted list
    std::vector<CheckVerdict> checks;
};
AssemblyData find_assemblies(const Graph& g, const LineCover& cover, const GeometricArray& geo);

// Local graphs as line blocks plus assembly blocks; certifies the disjoint
// clique picture when phi_1 = 1 and the clique extension of a grid otherwise.
std::vector<CheckVerdict> check_local_structure(const Graph& g, const LineCover& cover,
                                                const std::vector<std::vector<int>>& assemblies,
                                                const GeometricArray& geo);

// Smallest local eigenvalue >= -b-1, floating point with slack 1e-6 and an
// exact integer PSD certificate when a vertex lands inside the slack.
CheckVerdict check_local_eigenvalue(const Graph& g, const Rat& b);

struct SigmaSubgraph {
    int x = 0;
    int y = 0;
    std::vector<int> vertices;  // sorted
    std::vector<CheckVerdict> checks;
};
SigmaSubgraph build_sigma(const Graph& g, const DistanceData& dd, const LineCover& cover,
                          const GeometricArray& geo, int x, int y);

CheckVerdict verify_design(const Graph& g, const DistanceData& dd, const LineCover& cover,
                           const GeometricArray& geo);

enum class CoverSearch { found, none, budget_exhausted };
struct CoverResult {
    CoverSearch outcome = CoverSearch::none;
    LineCover cover;
    long nodes = 0;
};
// Exact cover of the edge set by cliques of size beta+1, backtracking with a
// node budget; exceeding the budget is reported, never guessed around.
CoverResult find_cover(const Graph& g, const Int& beta, long node_budget = 1000000);

// The whole pipeline: distance-regularity, cover, measured geometry, the
// structural theorems, then the parameter battery on the measured array.
FeasibilityReport verify_graph_full(const Graph& g, const LineCover& cover,
                                    long sigma_cap = 50, bool exhaustive = false);

}  // namespace drg
