#include "drg/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace drg {

namespace {

constexpr double kSlack = 1e-6;

int to_int(const Int& v) {
    if (!v.fits_sint_p()) throw std::overflow_error("value too large: " + v.get_str());
    return static_cast<int>(v.get_si());
}

std::string int_list(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

CheckVerdict na(std::string name, std::string witness) {
    return verdict(std::move(name), Status::not_applicable, "", "", std::move(witness));
}

// flat bit matrix for O(1) adjacency
struct BitAdj {
    int n = 0;
    int stride = 0;
    std::vector<uint64_t> bits;

    explicit BitAdj(const Graph& g) : n(g.n), stride((g.n + 63) / 64), bits(static_cast<size_t>(g.n) * stride) {
        for (int v = 0; v < g.n; ++v)
            for (int w : g.adj[v]) bits[static_cast<size_t>(v) * stride + w / 64] |= uint64_t(1) << (w % 64);
    }
    bool get(int u, int v) const {
        return (bits[static_cast<size_t>(u) * stride + v / 64] >> (v % 64)) & 1;
    }
};

// distance from every vertex to every line: min over members
std::vector<std::vector<int>> line_distances(const DistanceData& dd, const LineCover& cover) {
    int n = static_cast<int>(dd.dist.size());
    std::vector<std::vector<int>> ld(n, std::vector<int>(cover.lines.size()));
    for (int x = 0; x < n; ++x)
        for (size_t l = 0; l < cover.lines.size(); ++l) {
            int best = dd.dist[x][cover.lines[l][0]];
            for (int v : cover.lines[l]) best = std::min(best, dd.dist[x][v]);
            ld[x][l] = best;
        }
    return ld;
}

std::string pair_str(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// the unique cover line containing the edge (x,y), or -1
int line_of_edge(const LineCover& cover, int x, int y) {
    for (int l : cover.through[x]) {
        const auto& line = cover.lines[l];
        if (std::binary_search(line.begin(), line.end(), y)) return l;
    }
    return -1;
}

}  // namespace

DistanceData all_distances(const Graph& g) {
    DistanceData dd;
    dd.dist.assign(g.n, std::vector<int>(g.n, -1));
    for (int s = 0; s < g.n; ++s) {
        auto& row = dd.dist[s];
        row[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.adj[v])
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    dd.diameter = std::max(dd.diameter, row[w]);
                    q.push_back(w);
                }
        }
        for (int v = 0; v < g.n; ++v)
            if (row[v] < 0) dd.connected = false;
    }
    return dd;
}

Outcome<IntersectionArray> verify_drg(const Graph& g, const DistanceData& dd) {
    if (g.n == 0) return infeasible("distance-regularity", -1, "empty graph");
    if (!dd.connected) return infeasible("distance-regularity", -1, "graph is disconnected");
    int D = dd.diameter;
    if (D == 0) return infeasible("distance-regularity", -1, "single vertex");
    std::vector<long> bs(D + 1, -1), cs(D + 1, -1);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            int i = dd.dist[x][y];
            long c = 0, b = 0;
            for (int w : g.adj[y]) {
                int dw = dd.dist[x][w];
                if (dw == i - 1) ++c;
                else if (dw == i + 1) ++b;
            }
            if (bs[i] < 0) {
                bs[i] = b;
                cs[i] = c;
            } else if (bs[i] != b || cs[i] != c) {
                return infeasible(
                    "distance-regularity", i,
                    "pair " + pair_str(x, y) + " sees (c,b)=(" +
                        std::to_string(c) + "," + std::to_string(b) + "), expected (" +
                        std::to_string(cs[i]) + "," + std::to_string(bs[i]) + ")");
            }
        }
    IntersectionArray arr;
    arr.D = D;
    for (int i = 0; i < D; ++i) arr.b.push_back(Int(bs[i]));
    for (int i = 1; i <= D; ++i) arr.c.push_back(Int(cs[i]));
    if (auto f = validate(arr)) return infeasible("distance-regularity", -1, f->str());
    return arr;
}

std::vector<CheckVerdict> verify_cover(const Graph& g, const LineCover& cover, const Int& r,
                                       const Int& beta) {
    std::vector<CheckVerdict> out;

    CheckVerdict cliques = verdict("cover-lines-are-cliques", Status::pass);
    for (size_t l = 0; l < cover.lines.size() && cliques.status == Status::pass; ++l) {
        const auto& line = cover.lines[l];
        for (size_t i = 0; i < line.size() && cliques.status == Status::pass; ++i)
            for (size_t j = i + 1; j < line.size(); ++j)
                if (!g.has_edge(line[i], line[j])) {
                    cliques.status = Status::fail;
                    cliques.witness = "line " + std::to_string(l) + " misses edge " +
                                      pair_str(line[i], line[j]);
                    break;
                }
    }
    out.push_back(cliques);

    CheckVerdict size = verdict("cover-line-size", Status::pass, "", Int(beta + 1).get_str());
    for (size_t l = 0; l < cover.lines.size(); ++l)
        if (Int(static_cast<long>(cover.lines[l].size())) != beta + 1) {
            size.status = Status::fail;
            size.lhs = std::to_string(cover.lines[l].size());
            size.witness = "line " + std::to_string(l) + " has the wrong size";
            break;
        }
    out.push_back(size);

    CheckVerdict unique = verdict("cover-edge-unique", Status::pass);
    std::map<std::pair<int, int>, int> seen;
    for (const auto& line : cover.lines)
        for (size_t i = 0; i < line.size(); ++i)
            for (size_t j = i + 1; j < line.size(); ++j) ++seen[{line[i], line[j]}];
    for (const auto& [e, cnt] : seen)
        if (cnt > 1) {
            unique.status = Status::fail;
            unique.witness = "edge " + pair_str(e.first, e.second) + " lies in " +
                             std::to_string(cnt) + " lines";
            break;
        }
    if (unique.status == Status::pass && static_cast<long>(seen.size()) != g.edge_count()) {
        unique.status = Status::fail;
        unique.witness = "cover misses " + std::to_string(g.edge_count() - seen.size()) + " edges";
    }
    out.push_back(unique);

    CheckVerdict count = verdict("cover-line-count", Status::pass, "", r.get_str());
    for (int v = 0; v < g.n; ++v)
        if (Int(static_cast<long>(cover.through[v].size())) != r) {
            count.status = Status::fail;
            count.lhs = std::to_string(cover.through[v].size());
            count.witness = "vertex " + std::to_string(v) + " lies in the wrong number of lines";
            break;
        }
    out.push_back(count);
    return out;
}

Outcome<std::vector<Int>> measure_phi(const Graph& g, const DistanceData& dd,
                                      const LineCover& cover) {
    int D = dd.diameter;
    auto ld = line_distances(dd, cover);
    std::vector<long> phi(D, -1);
    for (int x = 0; x < g.n; ++x)
        for (size_t l = 0; l < cover.lines.size(); ++l) {
            int j = ld[x][l];
            if (j > D - 1)
                return infeasible(
                    "line-distance-bound", j,
                    "vertex " + std::to_string(x) + " is too far from line " + std::to_string(l));
            long cnt = 0;
            for (int v : cover.lines[l])
                if (dd.dist[x][v] == j) ++cnt;
            if (phi[j] < 0) phi[j] = cnt;
            else if (phi[j] != cnt)
                return infeasible(
                    "phi-constancy", j,
                    "vertex " + std::to_string(x) + ", line " + std::to_string(l) + " sees " +
                        std::to_string(cnt) + ", expected " + std::to_string(phi[j]));
        }
    std::vector<Int> out;
    for (int j = 0; j < D; ++j) out.push_back(Int(phi[j] < 0 ? 0 : phi[j]));
    return out;
}

Outcome<std::vector<Int>> measure_tau(const Graph& g, const DistanceData& dd,
                                      const LineCover& cover) {
    int D = dd.diameter;
    auto ld = line_distances(dd, cover);
    std::vector<long> tau(D + 1, -1);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            int i = dd.dist[x][y];
            if (i < 1) continue;
            long cnt = 0;
            for (int l : cover.through[y])
                if (ld[x][l] == i - 1) ++cnt;
            if (tau[i] < 0) tau[i] = cnt;
            else if (tau[i] != cnt)
                return infeasible(
                    "tau-constancy", i,
                    "pair " + pair_str(x, y) + " sees " + std::to_string(cnt) +
                        " lines, expected " + std::to_string(tau[i]));
        }
    std::vector<Int> out;
    for (int i = 1; i <= D; ++i) out.push_back(Int(tau[i] < 0 ? 0 : tau[i]));
    return out;
}

std::vector<int> line_set(const Graph& g, const DistanceData& dd, const LineCover& cover, int x,
                          int y) {
    std::vector<int> out;
    for (int l : cover.through[x]) {
        int best = g.n;
        for (int v : cover.lines[l]) best = std::min(best, dd.dist[y][v]);
        if (best == 1) out.push_back(l);
    }
    return out;  // through[x] is sorted, so out is too
}

CheckVerdict check_els(const Graph& g, const DistanceData& dd, const LineCover& cover) {
    auto ld = line_distances(dd, cover);
    for (int x = 0; x < g.n; ++x)
        for (size_t l = 0; l < cover.lines.size(); ++l) {
            if (ld[x][l] != 1) continue;
            std::vector<int> first;
            int first_y = -1;
            for (int y : cover.lines[l]) {
                if (dd.dist[x][y] != 2) continue;
                std::vector<int> cur;
                for (int m : cover.through[x])
                    if (ld[y][m] == 1) cur.push_back(m);
                if (first_y < 0) {
                    first = std::move(cur);
                    first_y = y;
                } else if (cur != first) {
                    return verdict("els-equal-line-sets", Status::fail, "", "",
                                   "vertex " + std::to_string(x) + ", line " + std::to_string(l) +
                                       ": members " + std::to_string(first_y) + " and " +
                                       std::to_string(y) + " determine different line sets");
                }
            }
        }
    return verdict("els-equal-line-sets", Status::pass);
}

CheckVerdict check_dual_pasch(const Graph& g, const LineCover& cover) {
    BitAdj bits(g);
    for (int x = 0; x < g.n; ++x)
        for (int y : g.adj[x]) {
            if (y < x) continue;
            int lxy = line_of_edge(cover, x, y);
            if (lxy < 0)
                return verdict("dual-pasch", Status::fail, "", "",
                               "edge " + pair_str(x, y) + " lies on no line");
            std::vector<int> off;
            const auto& line = cover.lines[lxy];
            for (int z : g.adj[x])
                if (bits.get(y, z) && !std::binary_search(line.begin(), line.end(), z))
                    off.push_back(z);
            for (size_t i = 0; i < off.size(); ++i)
                for (size_t j = i + 1; j < off.size(); ++j)
                    if (!bits.get(off[i], off[j]))
                        return verdict("dual-pasch", Status::fail, "", "",
                                       "edge " + pair_str(x, y) + ": off-line common neighbors " +
                                           pair_str(off[i], off[j]) + " are not adjacent");
        }
    return verdict("dual-pasch", Status::pass);
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Pivoted enumeration over one neighborhood: every maximal clique is reported
// at its minimum vertex, so candidate and exclusion sets live in the small
// index space of that neighborhood and fit in a few machine words.
struct LocalCliques {
    int root = 0;
    int m = 0;  // |N(root)|
    int words = 0;
    const std::vector<int>* verts = nullptr;  // global ids, sorted
    std::vector<uint64_t> adj;                // m rows, words each
    std::vector<int> stack;
    std::vector<std::vector<int>>* out = nullptr;

    bool bit(const std::vector<uint64_t>& s, int i) const { return (s[i >> 6] >> (i & 63)) & 1; }
    bool row_bit(int r, int i) const {
        return (adj[static_cast<size_t>(r) * words + (i >> 6)] >> (i & 63)) & 1;
    }

    void run(std::vector<uint64_t> p, std::vector<uint64_t> x) {
        bool p_empty = std::all_of(p.begin(), p.end(), [](uint64_t w) { return w == 0; });
        if (p_empty) {
            if (std::all_of(x.begin(), x.end(), [](uint64_t w) { return w == 0; })) {
                std::vector<int> clique{root};
                for (int i : stack) clique.push_back((*verts)[i]);
                std::sort(clique.begin(), clique.end());
                out->push_back(std::move(clique));
            }
            return;
        }
        int pivot = -1;
        long best = -1;
        for (int i = 0; i < m; ++i) {
            if (!bit(p, i) && !bit(x, i)) continue;
            long cnt = 0;
            for (int w = 0; w < words; ++w)
                cnt += __builtin_popcountll(p[w] & adj[static_cast<size_t>(i) * words + w]);
            if (cnt > best) {
                best = cnt;
                pivot = i;
            }
        }
        for (int i = 0; i < m; ++i) {
            if (!bit(p, i) || row_bit(pivot, i)) continue;
            std::vector<uint64_t> np(words), nx(words);
            for (int w = 0; w < words; ++w) {
                np[w] = p[w] & adj[static_cast<size_t>(i) * words + w];
                nx[w] = x[w] & adj[static_cast<size_t>(i) * words + w];
            }
            stack.push_back(i);
            run(std::move(np), std::move(nx));
            stack.pop_back();
            p[i >> 6] &= ~(uint64_t(1) << (i & 63));
            x[i >> 6] |= uint64_t(1) << (i & 63);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    BitAdj bits(g);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        if (nb.empty()) {
            out.push_back({v});
            continue;
        }
        LocalCliques bk;
        bk.root = v;
        bk.m = static_cast<int>(nb.size());
        bk.words = (bk.m + 63) / 64;
        bk.verts = &nb;
        bk.out = &out;
        bk.adj.assign(static_cast<size_t>(bk.m) * bk.words, 0);
        for (int i = 0; i < bk.m; ++i)
            for (int j = 0; j < bk.m; ++j)
                if (i != j && bits.get(nb[i], nb[j]))
                    bk.adj[static_cast<size_t>(i) * bk.words + (j >> 6)] |= uint64_t(1) << (j & 63);
        std::vector<uint64_t> p(bk.words, 0), x(bk.words, 0);
        for (int i = 0; i < bk.m; ++i) {
            if (nb[i] > v) p[i >> 6] |= uint64_t(1) << (i & 63);
            else x[i >> 6] |= uint64_t(1) << (i & 63);
        }
        bk.run(std::move(p), std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

AssemblyData find_assemblies(const Graph& g, const LineCover& cover, const GeometricArray& geo) {
    AssemblyData ad;
    if (geo.phi_j(1) < 2) {
        ad.checks.push_back(na("assembly-order", "needs phi_1 >= 2"));
        ad.checks.push_back(na("assembly-per-vertex", "needs phi_1 >= 2"));
        ad.checks.push_back(na("assembly-edge-unique", "needs phi_1 >= 2"));
        ad.checks.push_back(na("assembly-line-intersection", "needs phi_1 >= 2"));
        ad.checks.push_back(na("assembly-outside-neighbors", "needs phi_1 >= 2"));
        ad.checks.push_back(na("assembly-accounting", "needs phi_1 >= 2"));
        return ad;
    }
    const Int r = geo.r();
    const Int phi1 = geo.phi_j(1);
    const Int order = (phi1 - 1) * r + 1;

    std::set<std::vector<int>> line_sets(cover.lines.begin(), cover.lines.end());
    for (auto& c : maximal_cliques(g))
        if (!line_sets.count(c)) ad.assemblies.push_back(std::move(c));

    CheckVerdict vorder = verdict("assembly-order", Status::pass, "", order.get_str());
    for (size_t i = 0; i < ad.assemblies.size(); ++i)
        if (Int(static_cast<long>(ad.assemblies[i].size())) != order) {
            vorder.status = Status::fail;
            vorder.lhs = std::to_string(ad.assemblies[i].size());
            vorder.witness = "assembly " + std::to_string(i) + " has the wrong order";
            break;
        }
    ad.checks.push_back(vorder);

    std::vector<long> per_vertex(g.n, 0);
    for (const auto& a : ad.assemblies)
        for (int v : a) ++per_vertex[v];
    CheckVerdict vper = verdict("assembly-per-vertex", Status::pass);
    if (geo.beta % (phi1 - 1) != 0) {
        vper.status = Status::fail;
        vper.witness = "beta is not divisible by phi_1 - 1";
    } else {
        Int expect = geo.beta / (phi1 - 1);
        vper.rhs = expect.get_str();
        for (int v = 0; v < g.n; ++v)
            if (Int(per_vertex[v]) != expect) {
                vper.status = Status::fail;
                vper.lhs = std::to_string(per_vertex[v]);
                vper.witness = "vertex " + std::to_string(v);
                break;
            }
    }
    ad.checks.push_back(vper);

    CheckVerdict vedge = verdict("assembly-edge-unique", Status::pass);
    {
        std::map<std::pair<int, int>, int> seen;
        for (const auto& a : ad.assemblies)
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = i + 1; j < a.size(); ++j) ++seen[{a[i], a[j]}];
        for (const auto& [e, cnt] : seen)
            if (cnt > 1) {
                vedge.status = Status::fail;
                vedge.witness = "edge " + pair_str(e.first, e.second) + " lies in " +
                                std::to_string(cnt) + " assemblies";
                break;
            }
        if (vedge.status == Status::pass && static_cast<long>(seen.size()) != g.edge_count()) {
            vedge.status = Status::fail;
            vedge.witness = "assemblies miss " + std::to_string(g.edge_count() - seen.size()) +
                            " edges";
        }
    }
    ad.checks.push_back(vedge);

    CheckVerdict vline = verdict("assembly-line-intersection", Status::pass, "", phi1.get_str());
    for (size_t i = 0; i < ad.assemblies.size() && vline.status == Status::pass; ++i)
        for (size_t l = 0; l < cover.lines.size(); ++l) {
            long common = static_cast<long>(
                intersect_sorted(ad.assemblies[i], cover.lines[l]).size());
            if (common != 0 && Int(common) != phi1) {
                vline.status = Status::fail;
                vline.lhs = std::to_string(common);
                vline.witness = "assembly " + std::to_string(i) + ", line " + std::to_string(l);
                break;
            }
        }
    ad.checks.push_back(vline);

    CheckVerdict vout = verdict("assembly-outside-neighbors", Status::pass, "", phi1.get_str());
    {
        BitAdj bits(g);
        for (size_t i = 0; i < ad.assemblies.size() && vout.status == Status::pass; ++i) {
            const auto& a = ad.assemblies[i];
            for (int v = 0; v < g.n; ++v) {
                if (std::binary_search(a.begin(), a.end(), v)) continue;
                long cnt = 0;
                for (int w : a)
                    if (bits.get(v, w)) ++cnt;
                if (cnt != 0 && Int(cnt) != phi1) {
                    vout.status = Status::fail;
                    vout.lhs = std::to_string(cnt);
                    vout.witness = "vertex " + std::to_string(v) + " into assembly " +
                                   std::to_string(i);
                    break;
                }
            }
        }
    }
    ad.checks.push_back(vout);

    CheckVerdict vacct = verdict("assembly-accounting", Status::pass);
    {
        Int lhs = Int(static_cast<long>(ad.assemblies.size())) * order;
        Int rhs = (geo.beta % (phi1 - 1) == 0) ? Int(g.n) * (geo.beta / (phi1 - 1)) : Int(-1);
        vacct.lhs = lhs.get_str();
        vacct.rhs = rhs.get_str();
        if (lhs != rhs) {
            vacct.status = Status::fail;
            vacct.witness = "assembly count does not balance the per-vertex count";
        }
    }
    ad.checks.push_back(vacct);
    return ad;
}

std::vector<CheckVerdict> check_local_structure(const Graph& g, const LineCover& cover,
                                                const std::vector<std::vector<int>>& assemblies,
                                                const GeometricArray& geo) {
    std::vector<CheckVerdict> out;
    BitAdj bits(g);
    if (geo.phi_j(1) == 1) {
        CheckVerdict v = verdict("local-disjoint-cliques", Status::pass);
        for (int x = 0; x < g.n && v.status == Status::pass; ++x) {
            const auto& nb = g.adj[x];
            for (size_t i = 0; i < nb.size() && v.status == Status::pass; ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    bool same = line_of_edge(cover, x, nb[i]) == line_of_edge(cover, x, nb[j]);
                    if (same != bits.get(nb[i], nb[j])) {
                        v.status = Status::fail;
                        v.witness = "vertex " + std::to_string(x) + ", neighbors " +
                                    pair_str(nb[i], nb[j]);
                        break;
                    }
                }
        }
        out.push_back(v);
        out.push_back(na("local-adjacency-rule", "local graphs are clique unions when phi_1 = 1"));
        out.push_back(na("local-block-intersection", "local graphs are clique unions when phi_1 = 1"));
        return out;
    }

    out.push_back(na("local-disjoint-cliques", "needs phi_1 = 1"));

    std::vector<std::vector<int>> asm_through(g.n);
    for (size_t i = 0; i < assemblies.size(); ++i)
        for (int v : assemblies[i]) asm_through[v].push_back(static_cast<int>(i));

    auto assembly_of_edge = [&](int x, int y) {
        for (int a : asm_through[x])
            if (std::binary_search(assemblies[a].begin(), assemblies[a].end(), y)) return a;
        return -1;
    };

    CheckVerdict vrule = verdict("local-adjacency-rule", Status::pass);
    for (int x = 0; x < g.n && vrule.status == Status::pass; ++x) {
        const auto& nb = g.adj[x];
        std::vector<int> lid(nb.size()), aid(nb.size());
        for (size_t i = 0; i < nb.size(); ++i) {
            lid[i] = line_of_edge(cover, x, nb[i]);
            aid[i] = assembly_of_edge(x, nb[i]);
            if (lid[i] < 0 || aid[i] < 0) {
                vrule.status = Status::fail;
                vrule.witness = "edge " + pair_str(x, nb[i]) + " misses a line or an assembly";
                break;
            }
        }
        for (size_t i = 0; i < nb.size() && vrule.status == Status::pass; ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                bool same = lid[i] == lid[j] || aid[i] == aid[j];
                if (same != bits.get(nb[i], nb[j])) {
                    vrule.status = Status::fail;
                    vrule.witness = "vertex " + std::to_string(x) + ", neighbors " +
                                    pair_str(nb[i], nb[j]);
                    break;
                }
            }
    }
    out.push_back(vrule);

    CheckVerdict vint = verdict("local-block-intersection", Status::pass, "",
                                Int(geo.phi_j(1) - 1).get_str());
    for (int x = 0; x < g.n && vint.status == Status::pass; ++x)
        for (int l : cover.through[x]) {
            for (int a : asm_through[x]) {
                std::vector<int> common = intersect_sorted(cover.lines[l], assemblies[a]);
                // both blocks contain x itself
                long inside = static_cast<long>(common.size()) - 1;
                if (Int(inside) != geo.phi_j(1) - 1) {
                    vint.status = Status::fail;
                    vint.lhs = std::to_string(inside);
                    vint.witness = "vertex " + std::to_string(x) + ", line " + std::to_string(l) +
                                   ", assembly " + std::to_string(a);
                    break;
                }
            }
            if (vint.status != Status::pass) break;
        }
    out.push_back(vint);
    return out;
}

namespace {

// Exact positive-semidefiniteness of an integer symmetric matrix, fraction
// free elimination; a zero pivot forces a zero row or the matrix is not PSD.
bool psd_integer(std::vector<std::vector<Int>> m) {
    int n = static_cast<int>(m.size());
    std::vector<int> act;
    for (int i = 0; i < n; ++i) act.push_back(i);
    Int prev = 1;
    while (!act.empty()) {
        int k = act.front();
        if (m[k][k] < 0) return false;
        if (m[k][k] == 0) {
            for (int j : act)
                if (m[k][j] != 0) return false;
            act.erase(act.begin());
            continue;
        }
        const Int piv = m[k][k];
        act.erase(act.begin());
        for (size_t a = 0; a < act.size(); ++a) {
            int i = act[a];
            for (size_t b = a; b < act.size(); ++b) {
                int j = act[b];
                Int t = (m[i][j] * piv - m[i][k] * m[k][j]) / prev;
                m[i][j] = t;
                m[j][i] = t;
            }
        }
        prev = piv;
    }
    return true;
}

// smallest eigenvalue of the subgraph induced on the neighbors of x
double local_min_eigenvalue(const Graph& g, const BitAdj& bits, int x) {
    const auto& nb = g.adj[x];
    int m = static_cast<int>(nb.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (bits.get(nb[i], nb[j])) a(i, j) = a(j, i) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

// exact certificate that the local graph at x satisfies theta_min >= -b-1
bool local_bound_exact(const Graph& g, const BitAdj& bits, int x, const Rat& b) {
    const auto& nb = g.adj[x];
    int m = static_cast<int>(nb.size());
    // A + (b+1) I is PSD iff theta_min >= -b-1; scale by den(b+1) > 0
    Rat shift = b + 1;
    Int den = shift.get_den();
    Int num = shift.get_num();
    std::vector<std::vector<Int>> mat(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) {
        mat[i][i] = num;
        for (int j = i + 1; j < m; ++j)
            if (bits.get(nb[i], nb[j])) mat[i][j] = mat[j][i] = den;
    }
    return psd_integer(std::move(mat));
}

}  // namespace

CheckVerdict check_local_eigenvalue(const Graph& g, const Rat& b) {
    BitAdj bits(g);
    double t = Rat(-b - 1).get_d();
    CheckVerdict v = verdict("local-eigenvalue-bound", Status::pass, "", "~" + rat_decimal_str(-b - 1, 6));
    double worst = 0;
    bool have = false;
    for (int x = 0; x < g.n; ++x) {
        if (g.adj[x].empty()) continue;
        double lmin = local_min_eigenvalue(g, bits, x);
        if (!have || lmin < worst) {
            worst = lmin;
            have = true;
        }
        if (lmin >= t + kSlack) continue;
        if (!local_bound_exact(g, bits, x, b)) {
            v.status = Status::fail;
            v.lhs = "~" + std::to_string(lmin);
            v.witness = "local graph at vertex " + std::to_string(x);
            return v;
        }
    }
    if (have) v.lhs = "~" + std::to_string(worst);
    return v;
}

SigmaSubgraph build_sigma(const Graph& g, const DistanceData& dd, const LineCover& cover,
                          const GeometricArray& geo, int x, int y) {
    SigmaSubgraph s;
    s.x = x;
    s.y = y;
    std::vector<int> base = line_set(g, dd, cover, x, y);
    std::set<int> verts{x};
    for (int l : base) verts.insert(cover.lines[l].begin(), cover.lines[l].end());
    for (int z = 0; z < g.n; ++z)
        if (dd.dist[x][z] == 2 && line_set(g, dd, cover, x, z) == base) verts.insert(z);
    s.vertices.assign(verts.begin(), verts.end());

    std::vector<char> in(g.n, 0);
    for (int v : s.vertices) in[v] = 1;
    BitAdj bits(g);
    std::string at = " for pair " + pair_str(x, y);

    // formula tuple
    const Int beta = geo.beta, phi1 = geo.phi_j(1), tau2 = geo.tau_j(2);
    Rat v_f = Rat(beta * (beta - phi1 + 1) * (tau2 - 1)) / Rat(phi1) + Rat(beta * tau2 + 1);
    Int k_f = beta * tau2;
    Int l_f = beta - 1 + (phi1 - 1) * (tau2 - 1);
    Int m_f = phi1 * tau2;
    std::string tuple = "(" + rat_str(v_f) + ", " + k_f.get_str() + ", " + l_f.get_str() + ", " +
                        m_f.get_str() + ")";

    CheckVerdict srg = verdict("sigma-srg", Status::pass, "", tuple);
    if (!is_integer(v_f) || Rat(static_cast<long>(s.vertices.size())) != v_f) {
        srg.status = Status::fail;
        srg.lhs = std::to_string(s.vertices.size()) + " vertices";
        srg.witness = "wrong vertex count" + at;
    }
    for (size_t i = 0; i < s.vertices.size() && srg.status == Status::pass; ++i) {
        int u = s.vertices[i];
        long deg = 0;
        for (int w : g.adj[u])
            if (in[w]) ++deg;
        if (Int(deg) != k_f) {
            srg.status = Status::fail;
            srg.lhs = "degree " + std::to_string(deg);
            srg.witness = "vertex " + std::to_string(u) + at;
        }
    }
    for (size_t i = 0; i < s.vertices.size() && srg.status == Status::pass; ++i)
        for (size_t j = i + 1; j < s.vertices.size(); ++j) {
            int u = s.vertices[i], w = s.vertices[j];
            long common = 0;
            for (int z : g.adj[u])
                if (in[z] && bits.get(z, w)) ++common;
            Int expect = bits.get(u, w) ? l_f : m_f;
            if (Int(common) != expect) {
                srg.status = Status::fail;
                srg.lhs = std::to_string(common) + " common neighbors";
                srg.witness = "pair " + pair_str(u, w) + at;
                break;
            }
        }
    s.checks.push_back(srg);

    CheckVerdict diam = verdict("sigma-diameter", Status::pass, "", "2");
    for (size_t i = 0; i < s.vertices.size() && diam.status == Status::pass; ++i)
        for (size_t j = i + 1; j < s.vertices.size(); ++j) {
            int u = s.vertices[i], w = s.vertices[j];
            if (bits.get(u, w)) continue;
            bool linked = false;
            for (int z : g.adj[u])
                if (in[z] && bits.get(z, w)) {
                    linked = true;
                    break;
                }
            if (!linked) {
                diam.status = Status::fail;
                diam.witness = "pair " + pair_str(u, w) + at;
                break;
            }
        }
    s.checks.push_back(diam);

    CheckVerdict geo_closed = verdict("sigma-geodetic", Status::pass);
    for (size_t i = 0; i < s.vertices.size() && geo_closed.status == Status::pass; ++i)
        for (size_t j = i + 1; j < s.vertices.size(); ++j) {
            int u = s.vertices[i], w = s.vertices[j];
            int d = dd.dist[u][w];
            for (int z = 0; z < g.n; ++z)
                if (!in[z] && dd.dist[u][z] + dd.dist[z][w] == d) {
                    geo_closed.status = Status::fail;
                    geo_closed.witness = "shortest path " + pair_str(u, w) + " escapes through " +
                                         std::to_string(z) + at;
                    break;
                }
            if (geo_closed.status != Status::pass) break;
        }
    s.checks.push_back(geo_closed);

    CheckVerdict closed = verdict("sigma-clique-closed", Status::pass);
    for (size_t l = 0; l < cover.lines.size() && closed.status == Status::pass; ++l) {
        int inside = 0;
        for (int v : cover.lines[l])
            if (in[v]) ++inside;
        if (inside >= 2 && inside != static_cast<int>(cover.lines[l].size())) {
            closed.status = Status::fail;
            closed.witness = "line " + std::to_string(l) + " is cut" + at;
        }
    }
    s.checks.push_back(closed);
    return s;
}

CheckVerdict verify_design(const Graph& g, const DistanceData& dd, const LineCover& cover,
                           const GeometricArray& geo) {
    Int r = geo.r(), tau2 = geo.tau_j(2);
    CheckVerdict v = verdict("design-2-design",
                             Status::pass, "2-(" + r.get_str() + "," + tau2.get_str() + ",1)");
    for (int x = 0; x < g.n; ++x) {
        std::set<std::vector<int>> blocks;
        for (int z = 0; z < g.n; ++z)
            if (dd.dist[x][z] == 2) blocks.insert(line_set(g, dd, cover, x, z));
        std::map<std::pair<int, int>, int> pair_count;
        for (const auto& blk : blocks) {
            if (Int(static_cast<long>(blk.size())) != tau2) {
                v.status = Status::fail;
                v.witness = "vertex " + std::to_string(x) + ": block of size " +
                            std::to_string(blk.size());
                return v;
            }
            for (size_t i = 0; i < blk.size(); ++i)
                for (size_t j = i + 1; j < blk.size(); ++j) ++pair_count[{blk[i], blk[j]}];
        }
        const auto& pts = cover.through[x];
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                auto it = pair_count.find({pts[i], pts[j]});
                int cnt = it == pair_count.end() ? 0 : it->second;
                if (cnt != 1) {
                    v.status = Status::fail;
                    v.witness = "vertex " + std::to_string(x) + ": line pair " +
                                pair_str(pts[i], pts[j]) + " covered " + std::to_string(cnt) +
                                " times";
                    return v;
                }
            }
    }
    return v;
}

namespace {

void size_cliques(const Graph& g, std::vector<int>& cur, const std::vector<int>& cands, size_t s,
                  std::vector<std::vector<int>>& out) {
    if (cur.size() == s) {
        out.push_back(cur);
        return;
    }
    for (size_t i = 0; i < cands.size(); ++i) {
        if (cands.size() - i + cur.size() < s) break;
        int v = cands[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < cands.size(); ++j)
            if (g.has_edge(v, cands[j])) next.push_back(cands[j]);
        cur.push_back(v);
        size_cliques(g, cur, next, s, out);
        cur.pop_back();
    }
}

struct CoverSearchState {
    const std::vector<std::vector<int>>* cands;
    const std::vector<std::vector<int>>* cand_edges;  // edge ids per candidate
    const std::vector<std::vector<int>>* by_edge;     // candidates per edge id
    std::vector<char> covered;
    std::vector<int> chosen;
    long budget;
    bool exhausted = false;

    bool run() {
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        size_t e = 0;
        while (e < covered.size() && covered[e]) ++e;
        if (e == covered.size()) return true;
        for (int c : (*by_edge)[e]) {
            bool clash = false;
            for (int id : (*cand_edges)[c])
                if (covered[id]) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (int id : (*cand_edges)[c]) covered[id] = 1;
            chosen.push_back(c);
            if (run()) return true;
            if (exhausted) return false;
            chosen.pop_back();
            for (int id : (*cand_edges)[c]) covered[id] = 0;
        }
        return false;
    }
};

}  // namespace

CoverResult find_cover(const Graph& g, const Int& beta, long node_budget) {
    CoverResult res;
    size_t s = static_cast<size_t>(to_int(beta + 1));
    std::vector<int> all(g.n);
    for (int i = 0; i < g.n; ++i) all[i] = i;
    std::vector<std::vector<int>> cands;
    std::vector<int> cur;
    size_cliques(g, cur, all, s, cands);

    std::map<std::pair<int, int>, int> edge_id;
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            if (v < w) {
                int id = static_cast<int>(edge_id.size());
                edge_id[{v, w}] = id;
            }
    std::vector<std::vector<int>> cand_edges(cands.size());
    std::vector<std::vector<int>> by_edge(edge_id.size());
    for (size_t c = 0; c < cands.size(); ++c)
        for (size_t i = 0; i < cands[c].size(); ++i)
            for (size_t j = i + 1; j < cands[c].size(); ++j) {
                int id = edge_id.at({cands[c][i], cands[c][j]});
                cand_edges[c].push_back(id);
                by_edge[id].push_back(static_cast<int>(c));
            }

    CoverSearchState st{&cands, &cand_edges, &by_edge,
                        std::vector<char>(edge_id.size(), 0), {}, node_budget};
    bool found = st.run();
    res.nodes = node_budget - st.budget;
    if (st.exhausted) {
        res.outcome = CoverSearch::budget_exhausted;
        return res;
    }
    if (!found) {
        res.outcome = CoverSearch::none;
        return res;
    }
    res.outcome = CoverSearch::found;
    for (int c : st.chosen) res.cover.lines.push_back(cands[c]);
    std::sort(res.cover.lines.begin(), res.cover.lines.end());
    res.cover.build_index(g.n);
    return res;
}

FeasibilityReport verify_graph_full(const Graph& g, const LineCover& cover, long sigma_cap,
                                    bool exhaustive) {
    FeasibilityReport rep;
    rep.input_kind = "graph";
    rep.input = std::to_string(g.n) + " vertices, " + std::to_string(g.edge_count()) + " edges";

    DistanceData dd = all_distances(g);
    auto arr_o = verify_drg(g, dd);
    if (!arr_o.ok()) {
        rep.checks.push_back(
            verdict("distance-regular", Status::fail, "", "", arr_o.failure().str()));
        return rep;
    }
    const IntersectionArray& arr = *arr_o;
    rep.arr = arr;
    rep.checks.push_back(verdict("distance-regular", Status::pass, arr.str()));

    auto sp_o = eigenvalues(arr);
    if (!sp_o.ok()) {
        rep.checks.push_back(verdict("geometric-structure", Status::fail, "", "",
                                     "spectrum unavailable: " + sp_o.failure().str()));
        return rep;
    }
    const AlgReal& tmin = sp_o->theta.back();
    Outcome<GeometricArray> geo_o{infeasible("geometric-structure")};
    if (tmin.exact && is_integer(tmin.value) && tmin.value < 0)
        geo_o = array_to_geometric(arr, to_integer(Rat(-tmin.value)));
    if (!geo_o.ok()) {
        rep.checks.push_back(
            verdict("geometric-structure", Status::fail, tmin.str(), "",
                    "least eigenvalue does not produce a line structure for this array"));
        FeasibilityReport battery = run_battery(arr);
        for (auto& c : battery.checks) rep.checks.push_back(std::move(c));
        rep.spectrum = battery.spectrum;
        rep.branch = battery.branch;
        return rep;
    }
    const GeometricArray geo = *geo_o;
    rep.geo = geo;
    rep.checks.push_back(verdict("geometric-structure", Status::pass, geo.str()));

    const Int r = geo.r();
    const Int beta = geo.beta;
    for (auto& v : verify_cover(g, cover, r, beta)) rep.checks.push_back(std::move(v));

    auto phi_o = measure_phi(g, dd, cover);
    auto tau_o = measure_tau(g, dd, cover);
    if (!phi_o.ok())
        rep.checks.push_back(verdict("phi-constant", Status::fail, "", "", phi_o.failure().str()));
    else
        rep.checks.push_back(verdict("phi-constant", Status::pass, int_list(*phi_o)));
    if (!tau_o.ok())
        rep.checks.push_back(verdict("tau-constant", Status::fail, "", "", tau_o.failure().str()));
    else
        rep.checks.push_back(verdict("tau-constant", Status::pass, int_list(*tau_o)));

    bool geometry_match = false;
    if (phi_o.ok() && tau_o.ok()) {
        GeometricArray measured;
        measured.D = arr.D;
        measured.phi = *phi_o;
        measured.tau = *tau_o;
        measured.beta = beta;
        bool same = measured.phi == geo.phi && measured.tau == geo.tau;
        geometry_match = same;
        rep.checks.push_back(verdict("geometry-matches-array", same ? Status::pass : Status::fail,
                                     measured.str(), geo.str(),
                                     same ? "" : "measured line counts disagree with the array"));
    } else {
        rep.checks.push_back(na("geometry-matches-array", "measurement failed"));
    }

    if (phi_o.ok()) {
        // clique-size identity with the measured phi, exact
        StandardSequence ss = standard_sequence(arr, Rat(-r));
        CheckVerdict v = verdict("delsarte-phi-measured", Status::pass);
        for (int j = 1; j <= arr.D - 1; ++j) {
            Rat lhs = (ss.u[j + 1] - ss.u[j]) * Rat((*phi_o)[j]);
            Rat rhs = Rat(beta + 1) * ss.u[j + 1];
            if (lhs != rhs) {
                v.status = Status::fail;
                v.lhs = rat_str(lhs);
                v.rhs = rat_str(rhs);
                v.witness = "identity fails at j = " + std::to_string(j);
                break;
            }
        }
        rep.checks.push_back(v);
    } else {
        rep.checks.push_back(na("delsarte-phi-measured", "phi unavailable"));
    }

    CheckVerdict els = check_els(g, dd, cover);
    rep.checks.push_back(els);
    CheckVerdict dp = check_dual_pasch(g, cover);
    rep.checks.push_back(dp);
    if (els.status == Status::pass && geo.phi_j(1) >= 2) {
        bool implied = dp.status == Status::pass;
        rep.checks.push_back(verdict("els-implies-dual-pasch",
                                     implied ? Status::pass : Status::fail, "", "",
                                     implied ? "" : "equal line sets held but dual Pasch failed"));
    } else {
        rep.checks.push_back(na("els-implies-dual-pasch", "premise not established"));
    }

    AssemblyData ad = find_assemblies(g, cover, geo);
    for (auto& v : ad.checks) rep.checks.push_back(std::move(v));

    for (auto& v : check_local_structure(g, cover, ad.assemblies, geo))
        rep.checks.push_back(std::move(v));
    bool structure_certified = geo.phi_j(1) >= 2 &&
                               rep.find("local-adjacency-rule") != nullptr &&
                               rep.find("local-adjacency-rule")->status == Status::pass &&
                               rep.find("local-block-intersection")->status == Status::pass;

    {
        auto b_o = b_parameter(arr);
        if (!b_o.ok() || !b_o->exact) {
            rep.checks.push_back(na("local-eigenvalue-bound",
                                    "exact escalation needs a rational second eigenvalue"));
        } else {
            const Rat b = b_o->value;
            BitAdj bits(g);
            double t = Rat(-b - 1).get_d();
            CheckVerdict v = verdict("local-eigenvalue-bound", Status::pass, "",
                                     "~" + rat_decimal_str(-b - 1, 6));
            double worst = 0;
            bool have = false;
            std::vector<int> in_slack;
            for (int x = 0; x < g.n && v.status == Status::pass; ++x) {
                if (g.adj[x].empty()) continue;
                double lmin = local_min_eigenvalue(g, bits, x);
                if (!have || lmin < worst) {
                    worst = lmin;
                    have = true;
                }
                if (lmin < t + kSlack) in_slack.push_back(x);
            }
            if (have) v.lhs = "~" + std::to_string(worst);
            // when every local graph carries the certified block structure they
            // are pairwise isomorphic, one exact certificate settles them all
            if (!in_slack.empty()) {
                std::vector<int> to_escalate =
                    structure_certified ? std::vector<int>{in_slack.front()} : in_slack;
                for (int x : to_escalate)
                    if (!local_bound_exact(g, bits, x, b)) {
                        v.status = Status::fail;
                        v.witness = "local graph at vertex " + std::to_string(x);
                        break;
                    }
                if (v.status == Status::pass && structure_certified && in_slack.size() > 1)
                    v.witness = "one exact certificate covers all " +
                                std::to_string(in_slack.size()) +
                                " boundary vertices via the common block structure";
            }
            rep.checks.push_back(v);
        }
    }

    // sigma subgraphs over distance-2 pairs, deterministic lowest-index order
    if (geo.phi_j(1) >= 2 && geometry_match) {
        std::map<std::string, CheckVerdict> agg;
        for (const char* name :
             {"sigma-srg", "sigma-diameter", "sigma-geodetic", "sigma-clique-closed"})
            agg.emplace(name, verdict(name, Status::pass));
        long used = 0;
        std::set<std::vector<int>> sigma_sets;
        bool truncated = false;
        for (int x = 0; x < g.n; ++x) {
            for (int y = 0; y < g.n; ++y) {
                if (dd.dist[x][y] != 2) continue;
                if (!exhaustive && used >= sigma_cap) {
                    truncated = true;
                    break;
                }
                SigmaSubgraph s = build_sigma(g, dd, cover, geo, x, y);
                ++used;
                sigma_sets.insert(s.vertices);
                for (const auto& c : s.checks) {
                    auto& slot = agg.at(c.name);
                    if (slot.status == Status::pass && c.status != Status::pass) slot = c;
                    else if (slot.status == Status::pass && slot.rhs.empty()) slot.rhs = c.rhs;
                }
            }
            if (truncated) break;
        }
        for (const char* name :
             {"sigma-srg", "sigma-diameter", "sigma-geodetic", "sigma-clique-closed"}) {
            CheckVerdict v = agg.at(name);
            if (v.status == Status::pass && v.witness.empty())
                v.witness = std::to_string(used) + (truncated ? " pairs checked (capped)"
                                                              : " pairs checked");
            rep.checks.push_back(std::move(v));
        }
        if (exhaustive) {
            CheckVerdict uniq = verdict("sigma-line-pair-unique", Status::pass, "", "1");
            for (size_t l1 = 0; l1 < cover.lines.size() && uniq.status == Status::pass; ++l1)
                for (size_t l2 = l1 + 1; l2 < cover.lines.size(); ++l2) {
                    if (intersect_sorted(cover.lines[l1], cover.lines[l2]).size() != 1) continue;
                    long hits = 0;
                    for (const auto& sv : sigma_sets)
                        if (std::includes(sv.begin(), sv.end(), cover.lines[l1].begin(),
                                          cover.lines[l1].end()) &&
                            std::includes(sv.begin(), sv.end(), cover.lines[l2].begin(),
                                          cover.lines[l2].end()))
                            ++hits;
                    if (hits != 1) {
                        uniq.status = Status::fail;
                        uniq.lhs = std::to_string(hits);
                        uniq.witness = "intersecting lines " + pair_str(static_cast<int>(l1),
                                                                        static_cast<int>(l2));
                        break;
                    }
                }
            rep.checks.push_back(std::move(uniq));
        } else {
            rep.checks.push_back(na("sigma-line-pair-unique", "needs an exhaustive run"));
        }
        rep.checks.push_back(verify_design(g, dd, cover, geo));
    } else {
        const char* why = geo.phi_j(1) < 2 ? "needs phi_1 >= 2" : "measured geometry mismatch";
        for (const char* name : {"sigma-srg", "sigma-diameter", "sigma-geodetic",
                                 "sigma-clique-closed", "sigma-line-pair-unique", "design-2-design"})
            rep.checks.push_back(na(name, why));
    }

    FeasibilityReport battery = run_battery(geo);
    rep.spectrum = battery.spectrum;
    rep.cp = battery.cp;
    rep.branch = battery.branch;
    for (auto& c : battery.checks) rep.checks.push_back(std::move(c));
    return rep;
}

}  // namespace drg
