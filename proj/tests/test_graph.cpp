#include <catch2/catch.hpp>

#include "dw/distance.hpp"
#include "dw/graph.hpp"
#include "dw/isomorphism.hpp"

using namespace dw;

TEST_CASE("from_edges validates and normalizes") {
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.edge(0) == Edge{0, 1});
    REQUIRE(g.edge(1) == Edge{0, 2});
    REQUIRE(g.adjacent(0, 2));
    REQUIRE(!g.adjacent(1, 2));
    REQUIRE(g.edge_id(2, 0) == 1);
    REQUIRE(!g.edge_id(1, 2).has_value());

    REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("generators match their definitions") {
    REQUIRE(complete(4).edge_count() == 6);
    REQUIRE(path(4).edge_count() == 3);
    REQUIRE(cycle(5).edge_count() == 5);
    REQUIRE_THROWS_AS(cycle(2), std::invalid_argument);
    REQUIRE(star(4).vertex_count() == 5);
    REQUIRE(star(4).degree(0) == 4);

    // all parts singleton: a triangle
    REQUIRE(is_isomorphic(complete_multipartite({1, 1, 1}), complete(3)));
    // edge count of the three-part example: 1*2 + 1*4 + 2*4
    REQUIRE(complete_multipartite({1, 2, 4}).edge_count() == 14);
    REQUIRE_THROWS_AS(complete_multipartite({}), std::invalid_argument);
    REQUIRE_THROWS_AS(complete_multipartite({0, 2}), std::invalid_argument);
}

TEST_CASE("cartesian product and join") {
    ProductGraph c4 = cartesian_product(complete(2), complete(2));
    REQUIRE(is_isomorphic(c4.graph, cycle(4)));
    REQUIRE(c4.coords.size() == 4);
    REQUIRE(c4.coords[3] == std::pair<Vertex, Vertex>{1, 1});

    // commutative with K1 as unit, up to isomorphism
    Graph p3 = path(3);
    REQUIRE(is_isomorphic(cartesian_product(p3, complete(1)).graph, p3));
    REQUIRE(is_isomorphic(cartesian_product(complete(1), p3).graph, p3));
    REQUIRE(is_isomorphic(cartesian_product(p3, cycle(3)).graph,
                          cartesian_product(cycle(3), p3).graph));

    Graph j = join(complete(2), complete(3));
    REQUIRE(is_isomorphic(j, complete(5)));
    REQUIRE(join(Graph(1), cycle(4)).edge_count() == 8);
}

TEST_CASE("connected components and diameter") {
    Graph two_k2 = disjoint_union(complete(2), complete(2));
    VertexPartition comps = connected_components(two_k2);
    REQUIRE(comps.count == 2);
    REQUIRE(comps.groups()[0] == std::vector<Vertex>{0, 1});
    REQUIRE(!is_connected(two_k2));
    REQUIRE(diameter(two_k2) == ExtNat::infinity());
    REQUIRE(diameter(path(4)) == ExtNat(3));
    REQUIRE(diameter(complete(1)) == ExtNat(0));
}

TEST_CASE("isometric subgraphs") {
    // any induced subgraph of diameter <= 2 is isometric
    Graph g = complete_multipartite({2, 2, 2});
    REQUIRE(is_isometric_subgraph(g, {0, 1, 2, 3}));

    // a 6-cycle with an external shortcut vertex: the cycle is induced but
    // not isometric
    Graph c6_apex = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {3, 6}});
    REQUIRE(is_isomorphic(induced_subgraph(c6_apex, {0, 1, 2, 3, 4, 5}), cycle(6)));
    REQUIRE(!is_isometric_subgraph(c6_apex, {0, 1, 2, 3, 4, 5}));

    // the full vertex set is always isometric
    REQUIRE(is_isometric_subgraph(c6_apex, {0, 1, 2, 3, 4, 5, 6}));
    REQUIRE_THROWS_AS(is_isometric_subgraph(g, {}), std::invalid_argument);
}

TEST_CASE("complement and induced subgraph") {
    Graph co = complement(cycle(5));
    REQUIRE(is_isomorphic(co, cycle(5)));  // C5 is self-complementary
    Graph ind = induced_subgraph(complete(5), {1, 3, 4});
    REQUIRE(ind == complete(3));
}
