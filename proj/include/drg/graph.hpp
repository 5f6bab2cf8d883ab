#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace drg {

// Undirected simple graph; neighbor lists stay sorted once finalize() runs.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> label;  // optional canonical labels, families fill these

    explicit Graph(int vertices = 0) : n(vertices), adj(vertices) {}

    void add_edge(int u, int v);
    void finalize();  // sorts and dedupes every neighbor list
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    long edge_count() const;
};

// A set of cliques meant to cover every edge exactly once.
struct LineCover {
    std::vector<std::vector<int>> lines;    // each sorted
    std::vector<std::vector<int>> through;  // vertex -> indices of containing lines

    void build_index(int n);
};

bool operator==(const Graph& a, const Graph& b);

// Text formats.  Graph: "n <count>" then one "i: j k l ..." line per vertex
// with sorted neighbors.  Cover: one line per clique, sorted vertex indices.
void write_graph(std::ostream& os, const Graph& g);
void write_cover(std::ostream& os, const LineCover& c);
std::optional<Graph> read_graph(std::istream& is, std::string* error = nullptr);
std::optional<LineCover> read_cover(std::istream& is, int n, std::string* error = nullptr);

}  // namespace drg
