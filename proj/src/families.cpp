#include "drg/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace drg {

namespace {

using Mat = std::vector<std::vector<int>>;

std::string set_label(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string mat_label(const Mat& m) {
    std::string out;
    for (size_t r = 0; r < m.size(); ++r) {
        if (r) out += "|";
        for (size_t c = 0; c < m[r].size(); ++c)
            out += (c ? " " : "") + std::to_string(m[r][c]);
    }
    return out;
}

// In-place reduced row echelon form; returns the rank.
int rref(Mat& rows, const GF& gf) {
    int nr = static_cast<int>(rows.size());
    int nc = nr ? static_cast<int>(rows[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        int scale = gf.inv(rows[r][c]);
        for (int j = c; j < nc; ++j) rows[r][j] = gf.mul(rows[r][j], scale);
        for (int i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int f = rows[i][c];
            for (int j = c; j < nc; ++j)
                rows[i][j] = gf.sub(rows[i][j], gf.mul(f, rows[r][j]));
        }
        ++r;
    }
    return r;
}

// All d-dimensional subspaces of F_q^n as RREF matrices, sorted by the
// flattened entry sequence so indices equal label ranks.
std::vector<Mat> enumerate_subspaces(const GF& gf, int n, int d) {
    std::vector<Mat> out;
    std::vector<int> pivots(d);
    for (int i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < d; ++i)
            for (int c = pivots[i] + 1; c < n; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_cells.emplace_back(i, c);
        long count = 1;
        for (size_t i = 0; i < free_cells.size(); ++i) count *= gf.q();
        for (long v = 0; v < count; ++v) {
            Mat m(d, std::vector<int>(n, 0));
            for (int i = 0; i < d; ++i) m[i][pivots[i]] = 1;
            long rest = v;
            for (const auto& [ri, ci] : free_cells) {
                m[ri][ci] = static_cast<int>(rest % gf.q());
                rest /= gf.q();
            }
            out.push_back(std::move(m));
        }
        int i = d - 1;
        while (i >= 0 && pivots[i] == n - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Bases of the (d-1)-dimensional hyperplanes of the row space, one kernel per
// projective functional (canonical form: first nonzero coordinate is 1).
std::vector<Mat> hyperplanes(const Mat& basis, const GF& gf) {
    int d = static_cast<int>(basis.size());
    int n = static_cast<int>(basis[0].size());
    std::vector<Mat> out;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= gf.q();
    for (long fv = 1; fv < total; ++fv) {
        std::vector<int> f(d);
        long rest = fv;
        for (int i = 0; i < d; ++i) {
            f[i] = static_cast<int>(rest % gf.q());
            rest /= gf.q();
        }
        int lead = 0;
        while (f[lead] == 0) ++lead;
        if (f[lead] != 1) continue;
        Mat w;
        for (int i = 0; i < d; ++i) {
            if (i == lead) continue;
            std::vector<int> row(n);
            for (int j = 0; j < n; ++j)
                row[j] = gf.sub(basis[i][j], gf.mul(f[i], basis[lead][j]));
            w.push_back(std::move(row));
        }
        rref(w, gf);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

FamilyGraph build_johnson(int n, int D) {
    if (D < 2 || n < 2 * D)
        throw std::invalid_argument("build_johnson: need n >= 2D >= 4");

    std::vector<std::vector<int>> sets;
    std::vector<int> cur(D);
    for (int i = 0; i < D; ++i) cur[i] = i;
    for (;;) {
        sets.push_back(cur);
        int i = D - 1;
        while (i >= 0 && cur[i] == n - D + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < D; ++j) cur[j] = cur[j - 1] + 1;
    }
    std::map<std::vector<int>, int> rank;
    for (size_t i = 0; i < sets.size(); ++i) rank[sets[i]] = static_cast<int>(i);

    FamilyGraph fg;
    fg.graph = Graph(static_cast<int>(sets.size()));
    for (size_t i = 0; i < sets.size(); ++i) fg.graph.label.push_back(set_label(sets[i]));
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                  sets[j].end(), std::back_inserter(common));
            if (static_cast<int>(common.size()) == D - 1)
                fg.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    fg.graph.finalize();

    std::vector<int> t(D - 1);
    for (int i = 0; i < D - 1; ++i) t[i] = i;
    for (;;) {
        std::vector<int> line;
        for (int x = 0; x < n; ++x) {
            if (std::binary_search(t.begin(), t.end(), x)) continue;
            std::vector<int> s = t;
            s.push_back(x);
            std::sort(s.begin(), s.end());
            line.push_back(rank.at(s));
        }
        std::sort(line.begin(), line.end());
        fg.cover.lines.push_back(std::move(line));
        int i = D - 2;
        while (i >= 0 && t[i] == n - (D - 1) + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < D - 1; ++j) t[j] = t[j - 1] + 1;
    }
    fg.cover.build_index(fg.graph.n);
    return fg;
}

FamilyGraph build_grassmann(int q, int n, int D) {
    if (D < 2 || n < 2 * D)
        throw std::invalid_argument("build_grassmann: need n >= 2D >= 4");
    GF gf(q);

    std::vector<Mat> spaces = enumerate_subspaces(gf, n, D);
    int nv = static_cast<int>(spaces.size());

    FamilyGraph fg;
    fg.graph = Graph(nv);
    for (const Mat& m : spaces) fg.graph.label.push_back(mat_label(m));
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            Mat stacked = spaces[i];
            stacked.insert(stacked.end(), spaces[j].begin(), spaces[j].end());
            if (rref(stacked, gf) == D + 1) fg.graph.add_edge(i, j);
        }
    fg.graph.finalize();

    std::vector<Mat> subs = enumerate_subspaces(gf, n, D - 1);
    std::map<std::string, int> sub_id;
    for (size_t i = 0; i < subs.size(); ++i) sub_id[mat_label(subs[i])] = static_cast<int>(i);
    fg.cover.lines.assign(subs.size(), {});
    for (int v = 0; v < nv; ++v)
        for (const Mat& w : hyperplanes(spaces[v], gf))
            fg.cover.lines[sub_id.at(mat_label(w))].push_back(v);
    fg.cover.build_index(nv);
    return fg;
}

FamilyGraph build_hamming(int D, int e) {
    if (D < 1 || e < 2) throw std::invalid_argument("build_hamming: need D >= 1, e >= 2");
    long nv = 1;
    for (int i = 0; i < D; ++i) nv *= e;

    auto digits = [&](long v) {
        std::vector<int> w(D);
        for (int i = D - 1; i >= 0; --i) {
            w[i] = static_cast<int>(v % e);
            v /= e;
        }
        return w;  // w[0] is the most significant digit
    };

    FamilyGraph fg;
    fg.graph = Graph(static_cast<int>(nv));
    for (long v = 0; v < nv; ++v) {
        std::vector<int> w = digits(v);
        std::string lab;
        for (int i = 0; i < D; ++i) lab += (i ? " " : "") + std::to_string(w[i]);
        fg.graph.label.push_back(lab);
    }
    // stride of coordinate i in the index
    std::vector<long> stride(D, 1);
    for (int i = D - 2; i >= 0; --i) stride[i] = stride[i + 1] * e;
    for (long v = 0; v < nv; ++v) {
        std::vector<int> w = digits(v);
        for (int i = 0; i < D; ++i)
            for (int t = w[i] + 1; t < e; ++t)
                fg.graph.add_edge(static_cast<int>(v),
                                  static_cast<int>(v + (t - w[i]) * stride[i]));
    }
    fg.graph.finalize();

    for (int i = 0; i < D; ++i)
        for (long v = 0; v < nv; ++v) {
            if (digits(v)[i] != 0) continue;
            std::vector<int> line;
            for (int t = 0; t < e; ++t) line.push_back(static_cast<int>(v + t * stride[i]));
            fg.cover.lines.push_back(std::move(line));
        }
    fg.cover.build_index(fg.graph.n);
    return fg;
}

FamilyGraph build_bilinear(int d, int e, int q) {
    if (d < 1 || e < d) throw std::invalid_argument("build_bilinear: need 1 <= d <= e");
    GF gf(q);
    long nv = 1;
    for (int i = 0; i < d * e; ++i) nv *= q;

    auto decode = [&](long v) {
        Mat m(d, std::vector<int>(e));
        for (int i = d - 1; i >= 0; --i)
            for (int j = e - 1; j >= 0; --j) {
                m[i][j] = static_cast<int>(v % q);
                v /= q;
            }
        return m;  // row-major, first entry most significant
    };
    auto encode = [&](const Mat& m) {
        long v = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < e; ++j) v = v * q + m[i][j];
        return v;
    };

    FamilyGraph fg;
    fg.graph = Graph(static_cast<int>(nv));
    for (long v = 0; v < nv; ++v) fg.graph.label.push_back(mat_label(decode(v)));
    for (long a = 0; a < nv; ++a) {
        Mat A = decode(a);
        for (long b = a + 1; b < nv; ++b) {
            Mat diff = decode(b);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < e; ++j) diff[i][j] = gf.sub(diff[i][j], A[i][j]);
            if (rref(diff, gf) == 1)
                fg.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    }
    fg.graph.finalize();

    // projective column directions, first nonzero coordinate 1
    std::vector<std::vector<int>> dirs;
    long dtot = 1;
    for (int i = 0; i < d; ++i) dtot *= q;
    for (long fv = 1; fv < dtot; ++fv) {
        std::vector<int> u(d);
        long rest = fv;
        for (int i = 0; i < d; ++i) {
            u[i] = static_cast<int>(rest % q);
            rest /= q;
        }
        int lead = 0;
        while (u[lead] == 0) ++lead;
        if (u[lead] == 1) dirs.push_back(std::move(u));
    }

    long wtot = 1;
    for (int i = 0; i < e; ++i) wtot *= q;
    for (long a = 0; a < nv; ++a) {
        Mat A = decode(a);
        for (const auto& u : dirs) {
            std::vector<int> members;
            for (long wv = 0; wv < wtot; ++wv) {
                std::vector<int> w(e);
                long rest = wv;
                for (int j = 0; j < e; ++j) {
                    w[j] = static_cast<int>(rest % q);
                    rest /= q;
                }
                Mat m = A;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < e; ++j)
                        m[i][j] = gf.add(m[i][j], gf.mul(u[i], w[j]));
                members.push_back(static_cast<int>(encode(m)));
            }
            std::sort(members.begin(), members.end());
            // one emission per line: the member with the smallest index owns it
            if (members.front() == a) fg.cover.lines.push_back(std::move(members));
        }
    }
    fg.cover.build_index(fg.graph.n);
    return fg;
}

Graph build_grid(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_grid: need m, n >= 1");
    Graph g(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.label.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (int t = j + 1; t < n; ++t) g.add_edge(i * n + j, i * n + t);
            for (int t = i + 1; t < m; ++t) g.add_edge(i * n + j, t * n + j);
        }
    g.finalize();
    return g;
}

Graph clique_extension(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("clique_extension: need s >= 1");
    if (s == 1) return g;
    Graph out(g.n * s);
    bool labeled = !g.label.empty();
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t < s; ++t) {
            if (labeled) out.label.push_back(g.label[v] + "#" + std::to_string(t));
            for (int u = t + 1; u < s; ++u) out.add_edge(v * s + t, v * s + u);
            for (int w : g.adj[v])
                if (w > v)
                    for (int u = 0; u < s; ++u) out.add_edge(v * s + t, w * s + u);
        }
    out.finalize();
    return out;
}

}  // namespace drg
