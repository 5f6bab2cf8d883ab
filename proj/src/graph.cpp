#include "drg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace drg {

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
}

void Graph::finalize() {
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& nb : adj) twice += static_cast<long>(nb.size());
    return twice / 2;
}

bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }

void LineCover::build_index(int n) {
    through.assign(n, {});
    for (size_t i = 0; i < lines.size(); ++i)
        for (int v : lines[i]) through[v].push_back(static_cast<int>(i));
}

void write_graph(std::ostream& os, const Graph& g) {
    os << "n " << g.n << "\n";
    for (int v = 0; v < g.n; ++v) {
        os << v << ":";
        for (int w : g.adj[v]) os << " " << w;
        os << "\n";
    }
}

void write_cover(std::ostream& os, const LineCover& c) {
    for (const auto& line : c.lines) {
        for (size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << line[i];
        os << "\n";
    }
}

namespace {

bool fail(std::string* error, const std::string& msg) {
    if (error) *error = msg;
    return false;
}

}  // namespace

std::optional<Graph> read_graph(std::istream& is, std::string* error) {
    std::string word;
    int n = -1;
    if (!(is >> word) || word != "n" || !(is >> n) || n < 0) {
        fail(error, "expected header \"n <count>\"");
        return std::nullopt;
    }
    Graph g(n);
    std::string rest;
    std::getline(is, rest);
    std::string line;
    for (int v = 0; v < n; ++v) {
        if (!std::getline(is, line)) {
            fail(error, "missing adjacency line for vertex " + std::to_string(v));
            return std::nullopt;
        }
        std::istringstream ls(line);
        int idx;
        char colon;
        if (!(ls >> idx >> colon) || idx != v || colon != ':') {
            fail(error, "malformed adjacency line for vertex " + std::to_string(v));
            return std::nullopt;
        }
        int w;
        while (ls >> w) {
            if (w < 0 || w >= n || w == v) {
                fail(error, "neighbor out of range on vertex " + std::to_string(v));
                return std::nullopt;
            }
            g.adj[v].push_back(w);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!std::is_sorted(g.adj[v].begin(), g.adj[v].end())) {
            fail(error, "neighbors of vertex " + std::to_string(v) + " not sorted");
            return std::nullopt;
        }
        if (std::adjacent_find(g.adj[v].begin(), g.adj[v].end()) != g.adj[v].end()) {
            fail(error, "duplicate neighbor on vertex " + std::to_string(v));
            return std::nullopt;
        }
        for (int w : g.adj[v])
            if (!g.has_edge(w, v)) {
                fail(error, "asymmetric edge " + std::to_string(v) + "-" + std::to_string(w));
                return std::nullopt;
            }
    }
    return g;
}

std::optional<LineCover> read_cover(std::istream& is, int n, std::string* error) {
    LineCover c;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> verts;
        int v;
        while (ls >> v) {
            if (v < 0 || v >= n) {
                fail(error, "cover vertex out of range: " + std::to_string(v));
                return std::nullopt;
            }
            verts.push_back(v);
        }
        if (verts.empty()) continue;
        if (!std::is_sorted(verts.begin(), verts.end()) ||
            std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
            fail(error, "cover line not sorted or has repeats");
            return std::nullopt;
        }
        c.lines.push_back(std::move(verts));
    }
    c.build_index(n);
    return c;
}

}  // namespace drg
