#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "graph.hpp"
#include "potts.hpp"
#include "test_util.hpp"

using namespace pottscolor;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("edge_count matches M = N*c/2") {
    CHECK(edge_count(1000, 13.0) == 6500);
    CHECK(edge_count(10, 2.0) == 10);
    CHECK(edge_count(5, 0.0) == 0);
    CHECK_THROWS_AS(edge_count(4, 7.0), std::invalid_argument);  // 14 > 6 possible
    CHECK_THROWS_AS(edge_count(1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(edge_count(10, -1.0), std::invalid_argument);
}

TEST_CASE("generate_er produces exactly M distinct edges") {
    Graph g = generate_er(1000, 13.0, 42);
    CHECK(g.n_edges() == 6500);
    CHECK(g.mean_connectivity() == doctest::Approx(13.0));

    Graph empty = generate_er(5, 0.0, 1);
    CHECK(empty.n_edges() == 0);

    // Exhaustive pair check on a small instance: no duplicates, no loops.
    Graph small = generate_er(30, 4.0, 7);
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : small.edges()) {
        CHECK(i < j);
        CHECK(i >= 0);
        CHECK(j < 30);
        CHECK(seen.insert({i, j}).second);
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == small.n_edges());
}

TEST_CASE("generate_er is deterministic per seed") {
    Graph a = generate_er(200, 6.0, 123);
    Graph b = generate_er(200, 6.0, 123);
    Graph c = generate_er(200, 6.0, 124);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
}

TEST_CASE("CSR layout is consistent") {
    Graph g = generate_er(50, 5.0, 9);
    const auto& off = g.csr_offsets();
    REQUIRE(static_cast<int>(off.size()) == 51);
    CHECK(off.front() == 0);
    CHECK(off.back() == 2 * g.n_edges());
    for (std::size_t i = 0; i + 1 < off.size(); ++i) CHECK(off[i] <= off[i + 1]);
    // Every undirected edge appears in both adjacency lists.
    for (const auto& [i, j] : g.edges()) {
        bool found_ij = false, found_ji = false;
        for (int k = off[i]; k < off[i + 1]; ++k) found_ij |= g.csr_neighbors()[k] == j;
        for (int k = off[j]; k < off[j + 1]; ++k) found_ji |= g.csr_neighbors()[k] == i;
        CHECK(found_ij);
        CHECK(found_ji);
    }
    for (int v = 0; v < g.n_nodes(); ++v)
        for (int k = off[v]; k < off[v + 1]; ++k) CHECK(g.csr_row_of()[k] == v);
}

TEST_CASE("generate_planted yields balanced zero-conflict colorings") {
    Graph g = generate_planted(1000, 13.0, 5, 3);
    REQUIRE(g.planting().has_value());
    CHECK(g.n_edges() == 6500);

    std::vector<int> class_size(5, 0);
    for (int c : g.planting()->colors) ++class_size[c];
    for (int k : class_size) CHECK(k == 200);

    CHECK(conflict_count(g, g.planting()->colors, 5) == 0);
}

TEST_CASE("generate_planted small instance has zero conflicts by scan") {
    Graph g = generate_planted(20, 3.0, 5, 11);
    REQUIRE(g.n_edges() == 30);
    CHECK(testutil::count_conflicts_loop(g, g.planting()->colors) == 0);

    // q = n: every hetero pair valid.
    Graph gq = generate_planted(6, 2.0, 6, 2);
    CHECK(testutil::count_conflicts_loop(gq, gq.planting()->colors) == 0);
}

TEST_CASE("generate_planted balancedness within one") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = generate_planted(103, 4.0, 5, seed);
        std::vector<int> class_size(5, 0);
        for (int c : g.planting()->colors) ++class_size[c];
        auto [mn, mx] = std::minmax_element(class_size.begin(), class_size.end());
        CHECK(*mx - *mn <= 1);
    }
}

TEST_CASE("generate_planted rejects infeasible density") {
    // q=2 on 4 nodes: hetero pairs = 6 - 2*1 = 4, so c=2.5 (M=5) cannot fit.
    CHECK_THROWS(generate_planted(4, 2.5, 2, 1));
}

TEST_CASE("degree_feature normalizes by mean connectivity") {
    // Star on 5 nodes: center degree 4, c = 8/5 = 1.6.
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto f = degree_feature(star);
    CHECK(f[0] == doctest::Approx(2.5));
    for (int v = 1; v < 5; ++v) CHECK(f[v] == doctest::Approx(0.625));

    // 4-cycle is 2-regular: all ones.
    Graph cyc = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (double x : degree_feature(cyc)) CHECK(x == doctest::Approx(1.0));

    Graph empty = Graph::from_edges(3, {});
    for (double x : degree_feature(empty)) CHECK(x == 0.0);
}

TEST_CASE("graph construction rejects invalid edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("graph file round-trip is exact") {
    const std::string path = temp_path("pc_test_roundtrip.graph");
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        Graph g = generate_planted(40, 3.5, 5, seed);
        write_graph(g, path);
        Graph h = read_graph(path);
        CHECK(h.n_nodes() == g.n_nodes());
        CHECK(h.edges() == g.edges());
        REQUIRE(h.planting().has_value());
        CHECK(h.planting()->colors == g.planting()->colors);
        CHECK(h.planting()->q == g.planting()->q);

        // Serialized form is byte-identical when regenerated from the same seed.
        const std::string bytes = slurp(path);
        write_graph(generate_planted(40, 3.5, 5, seed), path);
        CHECK(slurp(path) == bytes);
    }

    Graph er = generate_er(25, 4.0, 5);
    write_graph(er, path);
    Graph er2 = read_graph(path);
    CHECK(er2.edges() == er.edges());
    CHECK(!er2.planting().has_value());
    std::remove(path.c_str());
}

TEST_CASE("read_graph rejects malformed files") {
    const std::string path = temp_path("pc_test_bad.graph");
    auto write_file = [&](const std::string& body) {
        std::ofstream out(path);
        out << body;
    };

    write_file("2 1 0\n7 7\n");
    CHECK_THROWS_WITH_AS(read_graph(path), doctest::Contains("self-loop"), std::runtime_error);

    write_file("5 3 0\n0 1\n1 2\n");
    CHECK_THROWS_WITH_AS(read_graph(path), doctest::Contains("declares"), std::runtime_error);

    write_file("not a header\n");
    CHECK_THROWS_WITH_AS(read_graph(path), doctest::Contains("malformed header"), std::runtime_error);

    write_file("3 1 0\n0 9\n");
    CHECK_THROWS_WITH_AS(read_graph(path), doctest::Contains("out of range"), std::runtime_error);

    write_file("3 2 0\n0 1\n0 1\n");
    CHECK_THROWS(read_graph(path));

    write_file("3 2 2\n0 1 0\n0 1\n1 2\n");  // planting with a conflict on (1,2)? colors 0,1,0 -> edge (1,2) hetero; edge (0,1) hetero; fine
    CHECK_NOTHROW(read_graph(path));

    write_file("3 1 2\n0 0 1\n0 1\n");  // edge (0,1) monochromatic under planting
    CHECK_THROWS(read_graph(path));
    std::remove(path.c_str());
}

TEST_CASE("generated graphs satisfy module invariants across seeds") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate_planted(60, 5.0, 4, seed);
        CHECK(g.n_edges() == edge_count(60, 5.0));
        CHECK(conflict_count(g, g.planting()->colors, 4) == 0);
    }
}
