#include <doctest.h>

#include <drg/families.hpp>
#include <drg/gf.hpp>
#include <drg/graph.hpp>

#include <algorithm>
#include <set>
#include <sstream>

using namespace drg;

namespace {

bool regular(const Graph& g, int k) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != k) return false;
    return true;
}

bool uniform_line_size(const LineCover& c, size_t s) {
    for (const auto& l : c.lines)
        if (l.size() != s) return false;
    return true;
}

bool uniform_line_count(const LineCover& c, size_t r) {
    for (const auto& t : c.through)
        if (t.size() != r) return false;
    return true;
}

}  // namespace

TEST_CASE("field tables satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        GF gf(q);
        CHECK(gf.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(gf.add(a, 0) == a);
            CHECK(gf.mul(a, 1) == a);
            CHECK(gf.add(a, gf.neg(a)) == 0);
            if (a != 0) CHECK(gf.mul(a, gf.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(gf.add(a, b) == gf.add(b, a));
                CHECK(gf.mul(a, b) == gf.mul(b, a));
                CHECK(gf.sub(gf.add(a, b), b) == a);
                for (int c = 0; c < q; ++c) {
                    CHECK(gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c)));
                    CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
                    CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("extension fields use the smallest irreducible modulus") {
    GF f4(4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);

    GF f8(8);
    CHECK(f8.modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(f8.mul(2, 4) == 3);

    GF f9(9);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
    CHECK(f9.mul(3, 3) == 2);

    CHECK_THROWS_AS(GF(6), std::invalid_argument);
    CHECK_THROWS_AS(GF(12), std::invalid_argument);
    CHECK_THROWS_AS(GF(1), std::invalid_argument);
    CHECK_THROWS_AS(GF(4).inv(0), std::domain_error);
}

TEST_CASE("graph files round-trip and malformed input is rejected") {
    Graph g(5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    g.finalize();

    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    auto back = read_graph(is);
    REQUIRE(back.has_value());
    CHECK(*back == g);

    std::string err;
    std::istringstream bad1("m 3\n");
    CHECK_FALSE(read_graph(bad1, &err).has_value());
    std::istringstream bad2("n 2\n0: 1\n1:\n");
    CHECK_FALSE(read_graph(bad2, &err).has_value());
    CHECK(err.find("asymmetric") != std::string::npos);
    std::istringstream bad3("n 3\n0: 2 1\n1: 0\n2: 0\n");
    CHECK_FALSE(read_graph(bad3, &err).has_value());
    std::istringstream bad4("n 2\n0: 5\n1:\n");
    CHECK_FALSE(read_graph(bad4, &err).has_value());

    LineCover c;
    c.lines = {{0, 1}, {2, 3, 4}};
    c.build_index(5);
    std::ostringstream co;
    write_cover(co, c);
    std::istringstream ci(co.str());
    auto cback = read_cover(ci, 5);
    REQUIRE(cback.has_value());
    CHECK(cback->lines == c.lines);
    CHECK(cback->through[3] == std::vector<int>{1});

    std::istringstream cbad1("0 9\n");
    CHECK_FALSE(read_cover(cbad1, 5, &err).has_value());
    std::istringstream cbad2("1 0\n");
    CHECK_FALSE(read_cover(cbad2, 5, &err).has_value());
}

TEST_CASE("johnson graphs and star covers") {
    FamilyGraph j63 = build_johnson(6, 3);
    CHECK(j63.graph.n == 20);
    CHECK(regular(j63.graph, 9));
    CHECK(j63.cover.lines.size() == 15);
    CHECK(uniform_line_size(j63.cover, 4));
    CHECK(uniform_line_count(j63.cover, 3));
    CHECK(j63.graph.label[0] == "{0,1,2}");

    FamilyGraph j83 = build_johnson(8, 3);
    CHECK(j83.graph.n == 56);
    CHECK(regular(j83.graph, 15));
    CHECK(j83.cover.lines.size() == 28);
    CHECK(uniform_line_size(j83.cover, 6));
    CHECK(uniform_line_count(j83.cover, 3));

    FamilyGraph oct = build_johnson(4, 2);
    CHECK(oct.graph.n == 6);
    CHECK(regular(oct.graph, 4));
    CHECK(uniform_line_size(oct.cover, 3));

    CHECK_THROWS_AS(build_johnson(5, 3), std::invalid_argument);
}

TEST_CASE("grassmann graphs and star covers") {
    FamilyGraph g242 = build_grassmann(2, 4, 2);
    CHECK(g242.graph.n == 35);
    CHECK(regular(g242.graph, 18));
    CHECK(g242.cover.lines.size() == 15);
    CHECK(uniform_line_size(g242.cover, 7));
    CHECK(uniform_line_count(g242.cover, 3));

    FamilyGraph g342 = build_grassmann(3, 4, 2);
    CHECK(g342.graph.n == 130);
    CHECK(regular(g342.graph, 48));
    CHECK(g342.cover.lines.size() == 40);
    CHECK(uniform_line_size(g342.cover, 13));
    CHECK(uniform_line_count(g342.cover, 4));

    CHECK_THROWS_AS(build_grassmann(6, 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_grassmann(2, 3, 2), std::invalid_argument);
}

TEST_CASE("hamming graphs and axis covers") {
    FamilyGraph h33 = build_hamming(3, 3);
    CHECK(h33.graph.n == 27);
    CHECK(regular(h33.graph, 6));
    CHECK(h33.cover.lines.size() == 27);
    CHECK(uniform_line_size(h33.cover, 3));
    CHECK(uniform_line_count(h33.cover, 3));

    FamilyGraph h22 = build_hamming(2, 2);
    CHECK(h22.graph.n == 4);
    CHECK(regular(h22.graph, 2));
    CHECK(uniform_line_size(h22.cover, 2));

    FamilyGraph k5 = build_hamming(1, 5);
    CHECK(k5.graph.n == 5);
    CHECK(regular(k5.graph, 4));
    CHECK(k5.cover.lines.size() == 1);
    CHECK(uniform_line_size(k5.cover, 5));

    CHECK_THROWS_AS(build_hamming(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_hamming(2, 1), std::invalid_argument);
}

TEST_CASE("bilinear forms graphs and direction covers") {
    FamilyGraph b222 = build_bilinear(2, 2, 2);
    CHECK(b222.graph.n == 16);
    CHECK(regular(b222.graph, 9));
    CHECK(b222.cover.lines.size() == 12);
    CHECK(uniform_line_size(b222.cover, 4));
    CHECK(uniform_line_count(b222.cover, 3));

    FamilyGraph b122 = build_bilinear(1, 2, 2);
    CHECK(b122.graph.n == 4);
    CHECK(regular(b122.graph, 3));
    CHECK(b122.cover.lines.size() == 1);
    CHECK(uniform_line_size(b122.cover, 4));

    CHECK_THROWS_AS(build_bilinear(2, 1, 2), std::invalid_argument);
}

TEST_CASE("bilinear embeds into grassmann as an induced subgraph") {
    FamilyGraph bil = build_bilinear(2, 2, 2);
    FamilyGraph gr = build_grassmann(2, 4, 2);

    // A maps to the row space of [I | A], which is already in echelon form
    std::vector<int> image;
    for (int v = 0; v < bil.graph.n; ++v) {
        int a = (v >> 3) & 1, b = (v >> 2) & 1, c = (v >> 1) & 1, d = v & 1;
        std::string key = "1 0 " + std::to_string(a) + " " + std::to_string(b) +
                          "|0 1 " + std::to_string(c) + " " + std::to_string(d);
        auto it = std::find(gr.graph.label.begin(), gr.graph.label.end(), key);
        REQUIRE(it != gr.graph.label.end());
        image.push_back(static_cast<int>(it - gr.graph.label.begin()));
    }
    for (int u = 0; u < bil.graph.n; ++u)
        for (int v = u + 1; v < bil.graph.n; ++v)
            CHECK(bil.graph.has_edge(u, v) == gr.graph.has_edge(image[u], image[v]));
}

TEST_CASE("grids and clique extensions") {
    Graph g77 = build_grid(7, 7);
    CHECK(g77.n == 49);
    CHECK(regular(g77, 12));

    Graph ext = clique_extension(build_grid(3, 4), 2);
    CHECK(ext.n == 24);
    CHECK(regular(ext, 11));

    Graph base = build_grid(2, 3);
    CHECK(clique_extension(base, 1) == base);

    CHECK_THROWS_AS(build_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(clique_extension(base, 0), std::invalid_argument);
}

TEST_CASE("family construction is reproducible") {
    FamilyGraph a = build_johnson(6, 3);
    FamilyGraph b = build_johnson(6, 3);
    CHECK(a.graph == b.graph);
    CHECK(a.cover.lines == b.cover.lines);

    FamilyGraph c = build_grassmann(2, 4, 2);
    FamilyGraph d = build_grassmann(2, 4, 2);
    CHECK(c.graph == d.graph);
    CHECK(c.cover.lines == d.cover.lines);
    CHECK(c.graph.label == d.graph.label);
}

TEST_CASE("cover shape: every line is a clique covering each edge once") {
    std::vector<FamilyGraph> all;
    all.push_back(build_johnson(6, 3));
    all.push_back(build_hamming(3, 3));
    all.push_back(build_bilinear(2, 2, 2));
    all.push_back(build_grassmann(2, 4, 2));
    for (const FamilyGraph& fg : all) {
        std::set<std::pair<int, int>> covered;
        for (const auto& line : fg.cover.lines)
            for (size_t i = 0; i < line.size(); ++i)
                for (size_t j = i + 1; j < line.size(); ++j) {
                    CHECK(fg.graph.has_edge(line[i], line[j]));
                    CHECK(covered.emplace(line[i], line[j]).second);
                }
        CHECK(static_cast<long>(covered.size()) == fg.graph.edge_count());
    }
}
