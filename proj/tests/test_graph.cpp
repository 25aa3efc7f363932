#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kindep/max_algorithm.hpp"
#include "kindep/omega.hpp"
#include "oracles.hpp"

using namespace kindep;

namespace {

using Matrix = std::vector<std::vector<Count>>;

Matrix matrix_of(const Multigraph & g)
{
    Matrix m(g.order(), std::vector<Count>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
            m[u][v] = g.multiplicity(u, v);
    return m;
}

// Minimum survivor count over every MAX choice sequence, no memo.
Count naive_worst(const Matrix & m, std::vector<bool> alive, Degree k)
{
    const auto n = m.size();
    std::vector<Count> deg(n, 0);
    Count best_deg = -1, survivors = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (! alive[u])
            continue;
        ++survivors;
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v])
                deg[u] += m[u][v];
        best_deg = std::max(best_deg, deg[u]);
    }
    if (best_deg < k)
        return survivors;
    Count best = survivors;
    for (std::size_t u = 0; u < n; ++u)
        if (alive[u] && deg[u] == best_deg) {
            alive[u] = false;
            best = std::min(best, naive_worst(m, alive, k));
            alive[u] = true;
        }
    return best;
}

Count naive_worst(const Multigraph & g, Degree k)
{
    return naive_worst(matrix_of(g), std::vector<bool>(g.order(), true), k);
}

Multigraph triple_edge()
{
    Multigraph g(2);
    g.add_edges(0, 1, 3);
    return g;
}

}

TEST_CASE("degree sequences of small multigraphs")
{
    Multigraph single(2);
    single.add_edges(0, 1);
    CHECK(degree_sequence_of(single) == DegreeSequence{1, 1});
    CHECK(degree_sequence_of(triple_edge()) == DegreeSequence{3, 3});
    CHECK(degree_sequence_of(Multigraph(3)) == DegreeSequence{0, 0, 0});
    CHECK_THROWS_AS(single.add_edges(0, 0), InvalidInput);
    CHECK_THROWS_AS(single.add_edges(0, 2), InvalidInput);
    CHECK_THROWS_AS(single.remove_edges(0, 1, 2), InvalidInput);
}

TEST_CASE("realize")
{
    CHECK(realize({1, 1}).edges() == std::vector<Edge>{{0, 1, 1}});
    CHECK(realize({2, 2}).edges() == std::vector<Edge>{{0, 1, 2}});
    CHECK(realize({0, 0, 0}).edges().empty());
    CHECK_THROWS_AS(realize({3}), InvalidInput);
    CHECK_THROWS_AS(realize({1, 2}), InvalidInput);

    oracle::for_each_graphical(7, 20, [](const oracle::Values & v) {
        auto d = oracle::to_seq(v);
        auto g = realize(d);
        CHECK(degree_sequence_of(g) == d);
        for (Vertex i = 0; i < g.order(); ++i)
            CHECK(g.degree(i) == v[i]);
        CHECK(realize(d) == g);
    });
}

TEST_CASE("delete_vertex")
{
    Multigraph g(4);
    g.add_edges(1, 2, 2);
    g.add_edges(2, 3, 1);
    auto h = delete_vertex(g, 0);
    CHECK(degree_sequence_of(h) == DegreeSequence{2, 3, 1});
    auto j = delete_vertex(g, 1);
    CHECK(j.degree(1) == 1);
    CHECK(j.edges() == std::vector<Edge>{{1, 2, 1}});

    auto r = realize({1, 2, 2, 4, 4, 5, 6});
    Vertex top = 6;
    CHECK(r.degree(top) == 6);
    auto smaller = delete_vertex(r, top);
    CHECK(smaller.order() == 6);
    CHECK(degree_sequence_of(smaller).sum() == 24 - 12);
    CHECK_THROWS_AS(delete_vertex(r, 7), InvalidInput);
}

TEST_CASE("max_run basics")
{
    Multigraph sparse(3);
    sparse.add_edges(0, 1);
    auto run = max_run(sparse, 2, lowest_index_chooser());
    CHECK(run.independent_set == std::vector<Vertex>{0, 1, 2});
    CHECK(run.log.empty());

    auto triple = max_run(triple_edge(), 1, lowest_index_chooser());
    CHECK(triple.independent_set.size() == 1);
    REQUIRE(triple.log.size() == 1);
    CHECK(triple.log[0].degree == 3);

    CHECK_THROWS_AS(replay(triple_edge(), 1, std::vector<Vertex>{}), InvalidInput);
    CHECK_THROWS_AS(replay(triple_edge(), 1, std::vector<Vertex>{0, 1}), InvalidInput);
    CHECK(replay(triple_edge(), 1, std::vector<Vertex>{1}).independent_set == std::vector<Vertex>{0});
}

TEST_CASE("max_run output is k-independent and the log is honest")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = oracle::to_seq(oracle::random_graphical(rng, 8, 24));
        Degree k = std::uniform_int_distribution<Degree>(1, 4)(rng);
        auto g = rewire(realize(d), rng, 20);
        CHECK(degree_sequence_of(g) == d);

        // random legal choices
        Chooser pick_any = [&rng](std::span<const Vertex> c) {
            return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
        };
        auto run = max_run(g, k, pick_any);
        auto m = matrix_of(g);
        std::vector<bool> alive(g.order(), true);
        for (auto del : run.log) {
            Count deg = 0, top = 0;
            for (Vertex u = 0; u < g.order(); ++u) {
                if (! alive[u])
                    continue;
                Count du = 0;
                for (Vertex w = 0; w < g.order(); ++w)
                    if (alive[w])
                        du += m[u][w];
                top = std::max(top, du);
                if (u == del.vertex)
                    deg = du;
            }
            CHECK(del.degree == deg);
            CHECK(deg == top);
            CHECK(deg >= k);
            alive[del.vertex] = false;
        }
        for (auto v : run.independent_set)
            CHECK(alive[v]);
        for (auto v : run.independent_set) {
            Count du = 0;
            for (auto w : run.independent_set)
                du += m[v][w];
            CHECK(du < k);
        }
        CHECK(replay(g, k, [&] {
            std::vector<Vertex> s;
            for (auto del : run.log)
                s.push_back(del.vertex);
            return s;
        }()).independent_set == run.independent_set);
    }
}

TEST_CASE("max_run output need not be a maximal k-independent set")
{
    Multigraph g(6);
    for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 5}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}})
        g.add_edges(u, v);
    auto run = replay(g, 2, std::vector<Vertex>{3, 2, 5});
    CHECK(run.independent_set == std::vector<Vertex>{0, 1, 4});
    // 3 was deleted at degree 3, but 2 and 5 went later, so {0,1,3,4} is still 2-independent
    for (Vertex v : {0, 1, 3, 4}) {
        Count du = 0;
        for (Vertex w : {0, 1, 3, 4})
            du += g.multiplicity(v, w);
        CHECK(du < 2);
    }
}

TEST_CASE("exhaustive worst case matches the unmemoized oracle")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = oracle::to_seq(oracle::random_graphical(rng, 8, 22));
        Degree k = std::uniform_int_distribution<Degree>(1, 3)(rng);
        auto g = rewire(realize(d), rng, 30);
        auto wc = max_worst_case(g, k);
        CHECK(wc.min_size == naive_worst(g, k));
        CHECK(replay(g, k, wc.script).independent_set.size() == static_cast<std::size_t>(wc.min_size));
    }
    CHECK(max_worst_case(Multigraph(4), 1).min_size == 4);
    CHECK_THROWS_AS(max_worst_case(Multigraph(15), 1), ResourceLimit);
    CHECK_THROWS_AS(max_worst_case(Multigraph(5), 1, 4), ResourceLimit);
}

TEST_CASE("worst-case witness for the worked example")
{
    DegreeSequence d{1, 2, 2, 4, 4, 5, 6};
    auto w = construct_worst_case(d, 3);
    CHECK(degree_sequence_of(w.graph) == d);
    CHECK(w.graph.order() == 7);
    CHECK(w.script.size() == 3);
    auto run = replay(w.graph, 3, w.script);
    CHECK(run.independent_set.size() == 4);
    CHECK(max_worst_case(w.graph, 3).min_size == 4);

    // the residual graphs along the script carry the Omega chain
    auto chain = bound(d, 3).chain;
    auto g = w.graph;
    std::vector<Vertex> labels{0, 1, 2, 3, 4, 5, 6};
    for (std::size_t i = 0; i < w.script.size(); ++i) {
        auto pos = static_cast<Vertex>(std::find(labels.begin(), labels.end(), w.script[i]) - labels.begin());
        g = delete_vertex(g, pos);
        labels.erase(labels.begin() + pos);
        CHECK(degree_sequence_of(g) == chain[i + 1]);
    }
}

TEST_CASE("witness construction on random sequences")
{
    auto w = construct_worst_case({0, 1, 1}, 2);
    CHECK(w.script.empty());
    CHECK(w.graph == realize({0, 1, 1}));
    CHECK_THROWS_AS(construct_worst_case({2, 1}, 1), InvalidInput);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto d = oracle::to_seq(oracle::random_graphical(rng, 8, 56, 7));
        Degree k = std::uniform_int_distribution<Degree>(1, 4)(rng);
        auto wit = construct_worst_case(d, k);
        CHECK(degree_sequence_of(wit.graph) == d);
        auto run = replay(wit.graph, k, wit.script);
        CHECK_MESSAGE(static_cast<Count>(run.independent_set.size()) == bound_value(d, k), d.str(), " k=", k);
    }
}

TEST_CASE("rewire keeps degrees and is seed deterministic")
{
    auto g = realize({2, 2, 3, 3, 4, 4});
    std::mt19937_64 a(42), b(42);
    auto x = rewire(g, a, 50), y = rewire(g, b, 50);
    CHECK(x == y);
    for (Vertex v = 0; v < g.order(); ++v)
        CHECK(x.degree(v) == g.degree(v));
}
