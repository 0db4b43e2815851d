#include <doctest.h>

#include "steiner/adc.hpp"

using namespace steiner;

namespace {

// The 2-simplex, written out by hand.
Adc delta2()
{
    Adc c;
    for (const char* v : {"0", "1", "2"})
        c.add_generator(v, 0);
    c.add_generator("01", 1, {{"1", 1}, {"0", -1}});
    c.add_generator("02", 1, {{"2", 1}, {"0", -1}});
    c.add_generator("12", 1, {{"2", 1}, {"1", -1}});
    c.add_generator("012", 2, {{"12", 1}, {"02", -1}, {"01", 1}});
    return c;
}

Adc loop_complex()
{
    Adc c;
    c.add_generator("a", 0);
    c.add_generator("b", 0);
    c.add_generator("f", 1, {{"b", 1}, {"a", -1}});
    c.add_generator("g", 1, {{"a", 1}, {"b", -1}});
    return c;
}

} // namespace

TEST_CASE("construction and lookup")
{
    Adc c = delta2();
    CHECK(c.top_degree() == 2);
    CHECK(c.size() == 7);
    CHECK(c.basis(1) == std::vector<Name>{"01", "02", "12"});
    CHECK(c.generators().front() == "0");
    CHECK(c.generators().back() == "012");
    CHECK(c.degree_of("02") == 1);
    CHECK(c.augmentation("2") == 1);
    CHECK(c.boundary("0").is_zero());
    CHECK(Adc{}.top_degree() == -1);

    CHECK_THROWS_AS(c.add_generator("01", 1), Error);
    CHECK_THROWS_AS(c.add_generator("bad", 2, {{"nope", 1}}), Error);
    CHECK_THROWS_AS(c.add_generator("bad", 2, {{"0", 1}}), Error);
    CHECK_THROWS_AS(c.add_generator("", 0), Error);
    CHECK_THROWS_AS(c.add_generator("pt", 0, {{"0", 1}}), Error);
}

TEST_CASE("differential and validation")
{
    Adc c = delta2();
    CHECK(c.differential(IntVector::unit("012"), 2) == IntVector{{"12", 1}, {"02", -1}, {"01", 1}});
    CHECK(c.differential(c.differential(IntVector::unit("012"), 2), 1).is_zero());
    CHECK(c.augment(IntVector{{"0", 2}, {"1", -1}}) == 1);
    CHECK(validate_adc(c).ok());

    Adc bad;
    bad.add_generator("x", 0);
    bad.add_generator("y", 0);
    bad.add_generator("f", 1, {{"y", 1}, {"x", -1}});
    bad.add_generator("alpha", 2, {{"f", 1}});
    auto report = validate_adc(bad);
    CHECK_FALSE(report.boundary_squared_zero);
    CHECK(report.dd_witness == "alpha");
    CHECK(report.augmentation_compatible);

    Adc bad_eps;
    bad_eps.add_generator("x", 0);
    bad_eps.add_generator("f", 1, {{"x", 1}});
    auto r2 = validate_adc(bad_eps);
    CHECK_FALSE(r2.augmentation_compatible);
    CHECK(r2.augmentation_witness == "f");
}

TEST_CASE("decompose")
{
    auto d = decompose(IntVector{{"12", 1}, {"02", -1}, {"01", 1}});
    CHECK(d.pos == IntVector{{"12", 1}, {"01", 1}});
    CHECK(d.neg == IntVector{{"02", 1}});
    CHECK(d.supp == NameSet{"01", "02", "12"});
    CHECK(d.supp_neg == NameSet{"02"});
    CHECK(d.pos - d.neg == IntVector{{"12", 1}, {"02", -1}, {"01", 1}});
    CHECK(decompose(IntVector{}).supp.empty());
}

TEST_CASE("atoms of the 2-simplex")
{
    Adc c = delta2();
    auto atom = atom_table(c, "012");
    REQUIRE(atom.dim() == 2);
    CHECK(atom.row(2).minus == IntVector::unit("012"));
    CHECK(atom.row(2).plus == IntVector::unit("012"));
    CHECK(atom.row(1).minus == IntVector::unit("02"));
    CHECK(atom.row(1).plus == IntVector{{"01", 1}, {"12", 1}});
    CHECK(atom.row(0).minus == IntVector::unit("0"));
    CHECK(atom.row(0).plus == IntVector::unit("2"));

    auto point = atom_table(c, "1");
    CHECK(point.dim() == 0);
    CHECK(point.row(0).minus == IntVector::unit("1"));

    CHECK(is_unital(c).unital);
}

TEST_CASE("unitality fails on doubled boundaries")
{
    Adc c;
    c.add_generator("a", 0);
    c.add_generator("b", 0);
    c.add_generator("f", 1, {{"b", 2}, {"a", -2}});
    REQUIRE(validate_adc(c).ok());
    auto u = is_unital(c);
    CHECK_FALSE(u.unital);
    CHECK(u.witness == "f");
    CHECK_FALSE(is_strong_steiner_complex(c));
}

TEST_CASE("loop-freeness")
{
    auto simplex = loop_free_report(delta2());
    CHECK(simplex.is_partial_order);
    CHECK(simplex.graph.as_total_order() == std::vector<Name>{"0", "02", "012", "01", "1", "12", "2"});
    CHECK(is_strong_steiner_complex(delta2()));

    auto loop = loop_free_report(loop_complex());
    CHECK_FALSE(loop.is_partial_order);
    CHECK(loop.cycle_witness == std::vector<Name>{"a", "f", "b", "g", "a"});
    CHECK_FALSE(is_strong_steiner_complex(loop_complex()));

    // each clause on its own only sees half of the relation
    auto neg = loop_free_graph_negative_clause(delta2());
    CHECK(neg.has_edge("02", "012"));
    CHECK_FALSE(neg.has_edge("012", "01"));
    auto pos = loop_free_graph_positive_clause(delta2());
    CHECK(pos.has_edge("012", "01"));
    CHECK_FALSE(pos.has_edge("02", "012"));
}

TEST_CASE("truncation")
{
    Adc t = truncate_adc(delta2(), 1);
    CHECK(t.top_degree() == 1);
    CHECK(t.size() == 6);
    CHECK(t.boundary("02") == delta2().boundary("02"));
    CHECK(truncate_adc(delta2(), 5) == delta2());
    CHECK(truncate_adc(delta2(), -1).size() == 0);
}
