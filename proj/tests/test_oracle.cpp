#include <doctest.h>

#include <drg/families.hpp>
#include <drg/oracle.hpp>

#include <algorithm>
#include <set>

using namespace drg;

namespace {

const CheckVerdict& named(const std::vector<CheckVerdict>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    static CheckVerdict missing;
    REQUIRE(false);
    return missing;
}

const CheckVerdict& named(const FeasibilityReport& rep, const std::string& name) {
    const CheckVerdict* c = rep.find(name);
    REQUIRE(c != nullptr);
    return *c;
}

std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

// path on n vertices
Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.finalize();
    return g;
}

// 2-subsets of a 5-set, adjacent when disjoint
Graph petersen() {
    std::vector<std::pair<int, int>> vs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) vs.push_back({a, b});
    Graph g(10);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            auto [a, b] = vs[i];
            auto [c, d] = vs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(static_cast<int>(i),
                                                                 static_cast<int>(j));
        }
    g.finalize();
    return g;
}

}  // namespace

TEST_CASE("breadth-first distances and connectivity") {
    FamilyGraph oct = build_johnson(4, 2);
    DistanceData dd = all_distances(oct.graph);
    CHECK(dd.connected);
    CHECK(dd.diameter == 2);
    CHECK(dd.dist[0][0] == 0);

    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.finalize();
    DistanceData dd2 = all_distances(two);
    CHECK_FALSE(dd2.connected);
    CHECK(dd2.dist[0][2] == -1);
}

TEST_CASE("intersection arrays are read off and constancy is enforced") {
    FamilyGraph j63 = build_johnson(6, 3);
    auto arr = verify_drg(j63.graph, all_distances(j63.graph));
    REQUIRE(arr.ok());
    CHECK(arr->D == 3);
    CHECK(arr->b == ints({9, 4, 1}));
    CHECK(arr->c == ints({1, 4, 9}));

    FamilyGraph h33 = build_hamming(3, 3);
    auto harr = verify_drg(h33.graph, all_distances(h33.graph));
    REQUIRE(harr.ok());
    CHECK(harr->b == ints({6, 4, 2}));
    CHECK(harr->c == ints({1, 2, 3}));

    Graph g77 = build_grid(7, 7);
    auto garr = verify_drg(g77, all_distances(g77));
    REQUIRE(garr.ok());
    CHECK(garr->b == ints({12, 6}));
    CHECK(garr->c == ints({1, 2}));

    // unequal sides break constancy, equal degrees notwithstanding
    Graph g34 = build_grid(3, 4);
    auto bad = verify_drg(g34, all_distances(g34));
    CHECK_FALSE(bad.ok());
    CHECK(bad.failure().identity == "distance-regularity");

    auto p4 = verify_drg(path(4), all_distances(path(4)));
    CHECK_FALSE(p4.ok());

    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    two.finalize();
    auto disc = verify_drg(two, all_distances(two));
    CHECK_FALSE(disc.ok());
    CHECK(disc.failure().detail.find("disconnected") != std::string::npos);
}

TEST_CASE("cover clauses accept the star cover and reject impostors") {
    FamilyGraph j83 = build_johnson(8, 3);
    auto good = verify_cover(j83.graph, j83.cover, Int(3), Int(5));
    for (const auto& c : good) CHECK(c.status == Status::pass);

    // wrong expected size
    auto sized = verify_cover(j83.graph, j83.cover, Int(3), Int(4));
    CHECK(named(sized, "cover-line-size").status == Status::fail);
    CHECK(named(sized, "cover-line-count").status == Status::pass);

    // wrong expected line count per vertex
    auto counted = verify_cover(j83.graph, j83.cover, Int(4), Int(5));
    CHECK(named(counted, "cover-line-count").status == Status::fail);

    // drop one line: an edge loses its line
    LineCover partial = j83.cover;
    partial.lines.pop_back();
    partial.build_index(j83.graph.n);
    auto missing = verify_cover(j83.graph, partial, Int(3), Int(5));
    CHECK(named(missing, "cover-edge-unique").status == Status::fail);

    // duplicate a line: an edge gains a second line
    LineCover doubled = j83.cover;
    doubled.lines.push_back(doubled.lines.front());
    doubled.build_index(j83.graph.n);
    auto twice = verify_cover(j83.graph, doubled, Int(3), Int(5));
    CHECK(named(twice, "cover-edge-unique").status == Status::fail);

    // a non-clique "line"
    LineCover broken = j83.cover;
    broken.lines[0].back() = broken.lines[1].back();
    std::sort(broken.lines[0].begin(), broken.lines[0].end());
    broken.build_index(j83.graph.n);
    auto nc = verify_cover(j83.graph, broken, Int(3), Int(5));
    CHECK(named(nc, "cover-lines-are-cliques").status == Status::fail);
}

TEST_CASE("measured line counts match the derived parameters") {
    FamilyGraph j83 = build_johnson(8, 3);
    DistanceData dd = all_distances(j83.graph);
    auto phi = measure_phi(j83.graph, dd, j83.cover);
    auto tau = measure_tau(j83.graph, dd, j83.cover);
    REQUIRE(phi.ok());
    REQUIRE(tau.ok());
    CHECK(*phi == ints({1, 2, 3}));
    CHECK(*tau == ints({1, 2, 3}));

    FamilyGraph h33 = build_hamming(3, 3);
    DistanceData hd = all_distances(h33.graph);
    auto hphi = measure_phi(h33.graph, hd, h33.cover);
    auto htau = measure_tau(h33.graph, hd, h33.cover);
    REQUIRE(hphi.ok());
    REQUIRE(htau.ok());
    CHECK(*hphi == ints({1, 1, 1}));
    CHECK(*htau == ints({1, 2, 3}));

    FamilyGraph gq42 = build_grassmann(2, 4, 2);
    DistanceData gd = all_distances(gq42.graph);
    auto gphi = measure_phi(gq42.graph, gd, gq42.cover);
    auto gtau = measure_tau(gq42.graph, gd, gq42.cover);
    REQUIRE(gphi.ok());
    REQUIRE(gtau.ok());
    CHECK(*gphi == ints({1, 3}));
    CHECK(*gtau == ints({1, 3}));

    FamilyGraph bil = build_bilinear(2, 2, 2);
    DistanceData bd = all_distances(bil.graph);
    auto bphi = measure_phi(bil.graph, bd, bil.cover);
    auto btau = measure_tau(bil.graph, bd, bil.cover);
    REQUIRE(bphi.ok());
    REQUIRE(btau.ok());
    CHECK(*bphi == ints({1, 2}));
    CHECK(*btau == ints({1, 3}));
}

TEST_CASE("line sets, equal-line-set exchange, and the dual closure") {
    FamilyGraph j83 = build_johnson(8, 3);
    DistanceData dd = all_distances(j83.graph);

    int y2 = -1;
    for (int z = 0; z < j83.graph.n && y2 < 0; ++z)
        if (dd.dist[0][z] == 2) y2 = z;
    REQUIRE(y2 >= 0);
    std::vector<int> ls = line_set(j83.graph, dd, j83.cover, 0, y2);
    CHECK(ls.size() == 2);  // tau_2 lines
    for (int l : ls) {
        CHECK(std::binary_search(j83.cover.through[0].begin(), j83.cover.through[0].end(), l));
    }

    CHECK(check_els(j83.graph, dd, j83.cover).status == Status::pass);
    CHECK(check_dual_pasch(j83.graph, j83.cover).status == Status::pass);

    FamilyGraph h33 = build_hamming(3, 3);
    DistanceData hd = all_distances(h33.graph);
    CHECK(check_els(h33.graph, hd, h33.cover).status == Status::pass);
    CHECK(check_dual_pasch(h33.graph, h33.cover).status == Status::pass);
}

TEST_CASE("maximal clique enumeration is exact and ordered") {
    FamilyGraph oct = build_johnson(4, 2);
    auto cl = maximal_cliques(oct.graph);
    CHECK(cl.size() == 8);  // all triangles
    for (const auto& c : cl) CHECK(c.size() == 3);
    CHECK(std::is_sorted(cl.begin(), cl.end()));
    CHECK(cl == maximal_cliques(oct.graph));

    // both 4-clique families: 15 stars and 15 subset cliques
    FamilyGraph j63 = build_johnson(6, 3);
    auto jcl = maximal_cliques(j63.graph);
    CHECK(jcl.size() == 30);
    for (const auto& c : jcl) CHECK(c.size() == 4);

    Graph mix(3);
    mix.add_edge(1, 2);
    mix.finalize();
    auto mcl = maximal_cliques(mix);
    REQUIRE(mcl.size() == 2);
    CHECK(mcl[0] == std::vector<int>{0});
    CHECK(mcl[1] == std::vector<int>{1, 2});
}

TEST_CASE("assemblies are the non-line maximal cliques") {
    FamilyGraph j83 = build_johnson(8, 3);
    DistanceData dd = all_distances(j83.graph);
    auto arr = verify_drg(j83.graph, dd);
    REQUIRE(arr.ok());
    auto geo = array_to_geometric(*arr, Int(3));
    REQUIRE(geo.ok());

    AssemblyData ad = find_assemblies(j83.graph, j83.cover, *geo);
    CHECK(ad.assemblies.size() == 70);
    for (const auto& a : ad.assemblies) CHECK(a.size() == 4);
    for (const auto& c : ad.checks) CHECK(c.status == Status::pass);

    for (auto& c : check_local_structure(j83.graph, j83.cover, ad.assemblies, *geo)) {
        if (c.name == "local-disjoint-cliques") CHECK(c.status == Status::not_applicable);
        else CHECK(c.status == Status::pass);
    }

    // phi_1 = 1: no assemblies, local graphs are disjoint cliques
    FamilyGraph h33 = build_hamming(3, 3);
    auto harr = verify_drg(h33.graph, all_distances(h33.graph));
    REQUIRE(harr.ok());
    auto hgeo = array_to_geometric(*harr, Int(3));
    REQUIRE(hgeo.ok());
    AssemblyData had = find_assemblies(h33.graph, h33.cover, *hgeo);
    CHECK(had.assemblies.empty());
    for (const auto& c : had.checks) CHECK(c.status == Status::not_applicable);
    for (auto& c : check_local_structure(h33.graph, h33.cover, had.assemblies, *hgeo)) {
        if (c.name == "local-disjoint-cliques") CHECK(c.status == Status::pass);
        else CHECK(c.status == Status::not_applicable);
    }
}

TEST_CASE("local least-eigenvalue bound with exact escalation") {
    // local graphs of johnson are grid extensions hitting the bound exactly
    FamilyGraph j83 = build_johnson(8, 3);
    CheckVerdict v = check_local_eigenvalue(j83.graph, Rat(1));
    CHECK(v.status == Status::pass);

    // hamming locals are disjoint edges, bound met with room
    FamilyGraph h33 = build_hamming(3, 3);
    CHECK(check_local_eigenvalue(h33.graph, Rat(1)).status == Status::pass);

    // an impossible bound fails through the exact certificate
    CheckVerdict bad = check_local_eigenvalue(h33.graph, make_rat(-3, 2));
    CHECK(bad.status == Status::fail);
    CHECK(!bad.witness.empty());
}

TEST_CASE("sigma subgraphs are strongly regular and closed") {
    FamilyGraph j83 = build_johnson(8, 3);
    DistanceData dd = all_distances(j83.graph);
    auto arr = verify_drg(j83.graph, dd);
    REQUIRE(arr.ok());
    auto geo = array_to_geometric(*arr, Int(3));
    REQUIRE(geo.ok());

    int y2 = -1;
    for (int z = 0; z < j83.graph.n && y2 < 0; ++z)
        if (dd.dist[0][z] == 2) y2 = z;
    SigmaSubgraph s = build_sigma(j83.graph, dd, j83.cover, *geo, 0, y2);
    CHECK(s.vertices.size() == 21);
    CHECK(named(s.checks, "sigma-srg").status == Status::pass);
    CHECK(named(s.checks, "sigma-srg").rhs == "(21, 10, 5, 4)");
    CHECK(named(s.checks, "sigma-diameter").status == Status::pass);
    CHECK(named(s.checks, "sigma-geodetic").status == Status::pass);
    CHECK(named(s.checks, "sigma-clique-closed").status == Status::pass);
}

TEST_CASE("the line sets through a vertex form a 2-design") {
    FamilyGraph j83 = build_johnson(8, 3);
    DistanceData dd = all_distances(j83.graph);
    auto geo = array_to_geometric(*verify_drg(j83.graph, dd), Int(3));
    REQUIRE(geo.ok());
    CHECK(verify_design(j83.graph, dd, j83.cover, *geo).status == Status::pass);

    // the hypothesis behind the design statement needs phi_1 >= 2, though the
    // deduplicated blocks of a hamming graph happen to satisfy it anyway
    FamilyGraph h33 = build_hamming(3, 3);
    DistanceData hd = all_distances(h33.graph);
    auto hgeo = array_to_geometric(*verify_drg(h33.graph, hd), Int(3));
    REQUIRE(hgeo.ok());
    CHECK(verify_design(h33.graph, hd, h33.cover, *hgeo).status == Status::pass);
}

TEST_CASE("cover search finds, exhausts, or rules out") {
    FamilyGraph oct = build_johnson(4, 2);
    CoverResult res = find_cover(oct.graph, Int(2));
    REQUIRE(res.outcome == CoverSearch::found);
    CHECK(res.cover.lines.size() == 4);
    for (const auto& c : verify_cover(oct.graph, res.cover, Int(2), Int(2)))
        CHECK(c.status == Status::pass);
    CHECK(res.nodes > 0);

    CoverResult rerun = find_cover(oct.graph, Int(2));
    CHECK(rerun.cover.lines == res.cover.lines);

    CoverResult starved = find_cover(oct.graph, Int(2), 1);
    CHECK(starved.outcome == CoverSearch::budget_exhausted);

    // a pentagon has no triangles at all
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    c5.finalize();
    CHECK(find_cover(c5, Int(2)).outcome == CoverSearch::none);
}

TEST_CASE("full verification runs the whole pipeline") {
    FamilyGraph j83 = build_johnson(8, 3);
    FeasibilityReport rep = verify_graph_full(j83.graph, j83.cover);
    CHECK(rep.input_kind == "graph");
    CHECK(named(rep, "distance-regular").status == Status::pass);
    CHECK(named(rep, "geometric-structure").status == Status::pass);
    CHECK(named(rep, "geometry-matches-array").status == Status::pass);
    CHECK(named(rep, "delsarte-phi-measured").status == Status::pass);
    CHECK(named(rep, "els-implies-dual-pasch").status == Status::pass);
    CHECK(named(rep, "assembly-accounting").status == Status::pass);
    CHECK(named(rep, "local-adjacency-rule").status == Status::pass);
    CHECK(named(rep, "local-eigenvalue-bound").status == Status::pass);
    CHECK(named(rep, "sigma-srg").status == Status::pass);
    CHECK(named(rep, "design-2-design").status == Status::pass);
    CHECK(named(rep, "sigma-line-pair-unique").status == Status::not_applicable);
    CHECK(named(rep, "multiplicity-integrality").status == Status::pass);
    CHECK(rep.overall_pass());
    CHECK_FALSE(rep.branch.empty());
    REQUIRE(rep.geo.has_value());
    CHECK(rep.geo->beta == 5);

    // exhaustive mode adds the uniqueness sweep
    FeasibilityReport ex = verify_graph_full(j83.graph, j83.cover, 50, true);
    CHECK(named(ex, "sigma-line-pair-unique").status == Status::pass);
    CHECK(ex.overall_pass());

    // phi_1 = 1 gates the sigma and design layers off
    FamilyGraph h33 = build_hamming(3, 3);
    FeasibilityReport hrep = verify_graph_full(h33.graph, h33.cover);
    CHECK(named(hrep, "distance-regular").status == Status::pass);
    CHECK(named(hrep, "local-disjoint-cliques").status == Status::pass);
    CHECK(named(hrep, "sigma-srg").status == Status::not_applicable);
    CHECK(named(hrep, "design-2-design").status == Status::not_applicable);
    CHECK(hrep.overall_pass());

    // diameter two: the sigma subgraph is the whole graph
    FamilyGraph bil = build_bilinear(2, 2, 2);
    FeasibilityReport brep = verify_graph_full(bil.graph, bil.cover);
    CHECK(named(brep, "sigma-srg").status == Status::pass);
    CHECK(named(brep, "sigma-srg").rhs == "(16, 9, 4, 6)");
    CHECK(brep.overall_pass());
}

TEST_CASE("non-geometric graphs stop at the structure gate") {
    Graph pet = petersen();
    LineCover edges;
    for (int v = 0; v < pet.n; ++v)
        for (int w : pet.adj[v])
            if (v < w) edges.lines.push_back({v, w});
    edges.build_index(pet.n);
    FeasibilityReport rep = verify_graph_full(pet, edges);
    CHECK(named(rep, "distance-regular").status == Status::pass);
    REQUIRE(rep.arr.has_value());
    CHECK(rep.arr->b == ints({3, 2}));
    CHECK(rep.arr->c == ints({1, 1}));
    CHECK(named(rep, "geometric-structure").status == Status::fail);
    CHECK_FALSE(rep.overall_pass());

    Graph p4 = path(4);
    LineCover none;
    none.build_index(p4.n);
    FeasibilityReport prep = verify_graph_full(p4, none);
    CHECK(named(prep, "distance-regular").status == Status::fail);
    CHECK_FALSE(prep.overall_pass());
}
