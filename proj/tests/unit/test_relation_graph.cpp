#include <doctest.h>

#include "steiner/relation_graph.hpp"

using namespace steiner;

namespace {

RelationGraph graph(const std::vector<Name>& nodes, const std::vector<std::pair<Name, Name>>& edges)
{
    RelationGraph g;
    for (const auto& n : nodes)
        g.add_node(n);
    for (const auto& [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

} // namespace

TEST_CASE("chains are antisymmetric and totally ordered")
{
    auto g = graph({"a", "b", "c"}, {{"b", "c"}, {"a", "b"}});
    CHECK(g.is_antisymmetric());
    CHECK_FALSE(g.cycle_witness());
    CHECK(g.topological_order() == std::vector<Name>{"a", "b", "c"});
    CHECK(g.as_total_order() == std::vector<Name>{"a", "b", "c"});
    CHECK(g.closure().size() == 6);
    CHECK(g.closure().contains({"a", "c"}));
}

TEST_CASE("cycles")
{
    auto g = graph({"a", "f", "b", "g"}, {{"a", "f"}, {"f", "b"}, {"b", "g"}, {"g", "a"}});
    CHECK_FALSE(g.is_antisymmetric());
    CHECK(g.cycle_witness() == std::vector<Name>{"a", "f", "b", "g", "a"});
    CHECK_FALSE(g.topological_order());
    CHECK_FALSE(g.as_total_order());
    CHECK(g.strongly_connected_components().size() == 1);
}

TEST_CASE("self-loops are reflexivity, not cycles")
{
    auto g = graph({"a"}, {{"a", "a"}});
    CHECK(g.is_antisymmetric());
    CHECK_FALSE(g.cycle_witness());
}

TEST_CASE("partial but not total orders")
{
    auto g = graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK(g.is_antisymmetric());
    CHECK(g.topological_order() == std::vector<Name>{"a", "b", "c"});
    CHECK_FALSE(g.as_total_order());
}

TEST_CASE("unknown nodes are rejected and nodes are idempotent")
{
    RelationGraph g;
    g.add_node("a");
    g.add_node("a");
    CHECK(g.nodes().size() == 1);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), Error);
}

TEST_CASE("SCCs against reachability")
{
    auto g = graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"}, {"d", "e"}});
    auto closure = g.closure();
    for (const auto& scc : g.strongly_connected_components())
        for (const auto& x : scc)
            for (const auto& y : scc)
                CHECK(closure.contains({x, y}));
    CHECK(g.strongly_connected_components().size() == 3);
    CHECK(g.cycle_witness() == std::vector<Name>{"a", "b", "a"});
}
