#include <doctest.h>

#include "steiner/polygraph.hpp"

using namespace steiner;
using E = CellExpr;

namespace {

// The 2-simplex with letters: f: a -> b, g: b -> c, h: a -> c, alpha: h => f g.
Presentation triangle()
{
    Presentation P;
    for (const char* p : {"a", "b", "c"})
        P.add_point(p);
    P.add_generator("f", P.gen("a"), P.gen("b"));
    P.add_generator("g", P.gen("b"), P.gen("c"));
    P.add_generator("h", P.gen("a"), P.gen("c"));
    P.add_generator("alpha", P.gen("h"), E::comp(0, P.gen("f"), P.gen("g")));
    return P;
}

Presentation square()
{
    Presentation P;
    for (const char* p : {"x", "y", "z"})
        P.add_point(p);
    P.add_generator("f", P.gen("x"), P.gen("y"));
    P.add_generator("g", P.gen("y"), P.gen("z"));
    P.add_generator("h", P.gen("y"), P.gen("z"));
    P.add_generator("alpha", E::comp(0, P.gen("f"), P.gen("g")), E::comp(0, P.gen("f"), P.gen("h")));
    return P;
}

Presentation endo()
{
    Presentation P;
    P.add_point("x");
    P.add_generator("alpha", E::id(P.gen("x")), E::id(P.gen("x")));
    return P;
}

Presentation loop()
{
    Presentation P;
    P.add_point("a");
    P.add_point("b");
    P.add_generator("f", P.gen("a"), P.gen("b"));
    P.add_generator("g", P.gen("b"), P.gen("a"));
    return P;
}

} // namespace

TEST_CASE("expressions")
{
    auto f = E::gen("f", 1), g = E::gen("g", 1);
    auto fg = E::comp(0, f, g);
    CHECK(fg.dim() == 1);
    CHECK(fg.kind() == E::Kind::comp);
    CHECK(fg.left() == f);
    CHECK(fg == E::comp(0, E::gen("f", 1), E::gen("g", 1)));
    CHECK_FALSE(fg == E::comp(0, g, f));
    CHECK(E::id(f).dim() == 2);
    CHECK(id_to(E::gen("x", 0), 3).dim() == 3);
    CHECK(fg.to_string() == "(f *0 g)");
    CHECK_THROWS_AS(E::comp(1, f, g), Error);
    CHECK_THROWS_AS(E::comp(0, f, E::id(f)), Error);
}

TEST_CASE("presentation validation")
{
    Presentation P = triangle();
    CHECK(P.size() == 7);
    CHECK(P.top_dim() == 2);
    CHECK(P.all_generators() == std::vector<Name>{"a", "b", "c", "f", "g", "h", "alpha"});
    CHECK(P.dim_of("alpha") == 2);

    SUBCASE("unknown names")
    {
        CHECK_THROWS_AS(P.add_generator("k", P.gen("a"), E::gen("nope", 0)), Error);
        CHECK_THROWS_AS(P.add_generator("k", E::gen("f", 0), P.gen("a")), Error);
        CHECK_THROWS_AS(P.add_point("a"), Error);
    }
    SUBCASE("ill-typed composite")
    {
        try {
            P.add_generator("k", P.gen("h"), E::comp(0, P.gen("g"), P.gen("f")));
            FAIL("expected NOT_COMPOSABLE");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::not_composable);
        }
    }
    SUBCASE("non-parallel boundary")
    {
        try {
            P.add_generator("k", P.gen("f"), P.gen("h"));
            FAIL("expected VALIDATION");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::validation);
        }
    }
    SUBCASE("dimension mismatch")
    {
        CHECK_THROWS_AS(P.add_generator("k", P.gen("a"), P.gen("f")), Error);
    }
}

TEST_CASE("faces")
{
    Presentation P = triangle();
    CHECK(face_expr(P, P.gen("alpha"), 0, Sign::minus) == P.gen("a"));
    CHECK(face_expr(P, P.gen("alpha"), 0, Sign::plus) == P.gen("c"));
    CHECK(face_expr(P, P.gen("alpha"), 1, Sign::plus) == E::comp(0, P.gen("f"), P.gen("g")));
    auto fg = E::comp(0, P.gen("f"), P.gen("g"));
    CHECK(face_expr(P, fg, 0, Sign::plus) == face_expr(P, P.gen("g"), 0, Sign::plus));
    CHECK(face_expr(P, fg, 0, Sign::minus) == P.gen("a"));
    CHECK(face_expr(P, E::id(P.gen("f")), 1, Sign::minus) == P.gen("f"));
    CHECK(face_expr(P, E::id(P.gen("f")), 0, Sign::plus) == P.gen("b"));
    CHECK_THROWS_AS(face_expr(P, P.gen("f"), 1, Sign::minus), Error);

    // composite 2-cell along level 0: faces at level 1 are composites of faces
    Presentation Q = triangle();
    Q.add_point("d");
    Q.add_generator("k", Q.gen("c"), Q.gen("d"));
    auto wide = E::comp(0, Q.gen("alpha"), E::id(Q.gen("k")));
    CHECK(face_expr(Q, wide, 1, Sign::minus) == E::comp(0, Q.gen("h"), Q.gen("k")));
    CHECK(face_expr(Q, wide, 0, Sign::plus) == Q.gen("d"));
}

TEST_CASE("linearisation and supports")
{
    Presentation P = triangle();
    CHECK(linearize(P, E::id(P.gen("f"))).is_zero());
    CHECK(linearize(P, E::comp(0, P.gen("f"), P.gen("g"))) == IntVector{{"f", 1}, {"g", 1}});
    CHECK(linearize_chain(P, P.gen("alpha")).degree == 2);
    CHECK(support_expr(P, E::comp(0, P.gen("f"), P.gen("g"))) == NameSet{"f", "g"});
    CHECK(support_expr(P, E::id(P.gen("f"))).empty());

    Adc lambda = lambda_presentation(P);
    CHECK(lambda.boundary("alpha") == IntVector{{"f", 1}, {"g", 1}, {"h", -1}});
    CHECK(lambda.boundary("f") == IntVector{{"b", 1}, {"a", -1}});
    CHECK(lambda.augmentation("a") == 1);
    CHECK(validate_adc(lambda).ok());

    Presentation point;
    point.add_point("x");
    CHECK(lambda_presentation(point).size() == 1);
    CHECK(lambda_presentation(point).augmentation("x") == 1);
}

TEST_CASE("unit tables and path words")
{
    Presentation P = triangle();
    auto t = unit_table(P, P.gen("alpha"));
    CHECK(t == atom_table(lambda_presentation(P), "alpha"));
    CHECK(path_word(P, E::comp(0, E::id(P.gen("a")), E::comp(0, P.gen("f"), P.gen("g")))) ==
          std::vector<Name>{"f", "g"});
    CHECK(cells_equal(P, E::comp(0, E::id(P.gen("a")), P.gen("h")), P.gen("h")));
    CHECK_FALSE(cells_equal(P, P.gen("h"), E::comp(0, P.gen("f"), P.gen("g"))));

    Presentation L = loop();
    CHECK_FALSE(cells_equal(L, E::comp(0, L.gen("f"), L.gen("g")), E::id(L.gen("a"))));
}

TEST_CASE("atomicity")
{
    CHECK(is_atomic(triangle()).atomic);

    auto sq = is_atomic(square());
    CHECK_FALSE(sq.atomic);
    REQUIRE(sq.witness);
    CHECK(sq.witness->generator == "alpha");
    CHECK(sq.witness->level == 1);
    CHECK(sq.witness->intersection == NameSet{"f"});

    auto en = is_atomic(endo());
    CHECK_FALSE(en.atomic);
    CHECK(en.witness->generator == "alpha");
    CHECK(en.witness->level == 0);
    CHECK(en.witness->intersection == NameSet{"x"});
}

TEST_CASE("strict inclusion of boundary supports in face supports")
{
    Presentation P = square();
    auto parts = decompose(lambda_presentation(P).boundary("alpha"));
    CHECK(parts.supp_pos == NameSet{"h"});
    CHECK(support_expr(P, face_expr(P, P.gen("alpha"), 1, Sign::plus)) == NameSet{"f", "h"});
}

TEST_CASE("preorders")
{
    SUBCASE("triangle: total order")
    {
        auto r = preorder_report(triangle());
        CHECK(r.full_antisymmetric);
        CHECK(r.codim1_antisymmetric);
        CHECK(r.full.as_total_order() == std::vector<Name>{"a", "h", "alpha", "f", "b", "g", "c"});
    }
    SUBCASE("loop: cycle through every generator")
    {
        auto r = preorder_report(loop());
        CHECK_FALSE(r.full_antisymmetric);
        CHECK(r.full_cycle == std::vector<Name>{"a", "f", "b", "g", "a"});
    }
    SUBCASE("endomorphism 2-cell: discrete codim1, cyclic full")
    {
        auto r = preorder_report(endo());
        CHECK(r.codim1_antisymmetric);
        CHECK(r.codim1.edges().empty());
        CHECK_FALSE(r.full_antisymmetric);
        CHECK(r.full.has_edge("x", "alpha"));
        CHECK(r.full.has_edge("alpha", "x"));
    }
}

TEST_CASE("classifiers")
{
    CHECK(is_algebraically_loop_free(triangle()));
    CHECK(is_algebraically_loop_free(square()));
    CHECK_FALSE(is_algebraically_loop_free(loop()));

    auto order = is_steiner_orderable(triangle());
    CHECK(order.orderable);
    REQUIRE(order.order);
    // every constraint respected by the witness
    std::map<Name, std::size_t> pos;
    for (std::size_t i = 0; i < order.order->size(); ++i)
        pos[(*order.order)[i]] = i;
    for (const auto& [u, v] : order.constraints.edges())
        CHECK(pos[u] < pos[v]);

    auto loop_order = is_steiner_orderable(loop());
    CHECK_FALSE(loop_order.orderable);
    CHECK(loop_order.cycle);

    Presentation point;
    point.add_point("x");
    CHECK(is_steiner_orderable(point).orderable);

    Verdict t = classify(triangle());
    CHECK(t.strong_steiner);
    CHECK(t.is_atomic);

    Verdict s = classify(square());
    CHECK_FALSE(s.is_atomic);
    CHECK(s.strongly_loop_free_algebraic);
    CHECK_FALSE(s.strongly_loop_free_categorical);
    CHECK_FALSE(s.strong_steiner);
    CHECK(s.to_string().find("atomicity violated at (alpha, 1): {f}") != std::string::npos);
}

TEST_CASE("evaluation into tables")
{
    Presentation P = triangle();
    Adc lambda = lambda_presentation(P);
    auto fg = E::comp(0, P.gen("f"), P.gen("g"));
    CHECK(eval_table(P, fg) == compose(atom_table(lambda, "f"), atom_table(lambda, "g"), 0));
    CHECK(eval_table(P, fg) == unit_table(P, fg));
    CHECK(eval_table(P, E::id(P.gen("alpha"))) == identity(eval_table(P, P.gen("alpha"))));
    CHECK(eval_table(P, P.gen("alpha")) == unit_table(P, P.gen("alpha")));
}
