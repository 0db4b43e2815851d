#include "steiner/catalog.hpp"

#include <algorithm>

namespace steiner {

namespace {

using E = CellExpr;

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorKind::bad_params, what);
}

void expect_count(const std::string& family, const std::vector<int>& params, std::size_t n)
{
    if (params.size() != n)
        bad(family + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(params.size()));
}

ExpectedVerdict strong()
{
    return {true, true, true, true};
}

// ------------------------------------------------------------------ globes

Name s_name(int q) { return "s" + std::to_string(q); }
Name t_name(int q) { return "t" + std::to_string(q); }

// Generators s_q, t_q for q <= n.
void add_globe_boundary(Presentation& P, Adc& C, int n)
{
    for (int q = 0; q <= n; ++q) {
        if (q == 0) {
            P.add_point(s_name(0));
            P.add_point(t_name(0));
            C.add_generator(s_name(0), 0, {});
            C.add_generator(t_name(0), 0, {});
            continue;
        }
        const E src = P.gen(s_name(q - 1));
        const E tgt = P.gen(t_name(q - 1));
        const IntVector d = IntVector::unit(t_name(q - 1)) - IntVector::unit(s_name(q - 1));
        for (const Name& name : {s_name(q), t_name(q)}) {
            P.add_generator(name, src, tgt);
            C.add_generator(name, q, d);
        }
    }
}

CatalogEntry disk(const std::vector<int>& params)
{
    expect_count("disk", params, 1);
    const int n = params[0];
    if (n < 0)
        bad("disk needs n >= 0");
    CatalogEntry entry{"disk", params, Presentation{}, Adc{}, {}, strong()};
    auto& P = *entry.presentation;
    auto& C = *entry.complex;
    if (n == 0) {
        P.add_point("c");
        C.add_generator("c", 0, {});
        return entry;
    }
    add_globe_boundary(P, C, n - 1);
    P.add_generator("c", P.gen(s_name(n - 1)), P.gen(t_name(n - 1)));
    C.add_generator("c", n, IntVector::unit(t_name(n - 1)) - IntVector::unit(s_name(n - 1)));
    return entry;
}

CatalogEntry sphere(const std::vector<int>& params)
{
    expect_count("sphere", params, 1);
    const int n = params[0];
    if (n < -1)
        bad("sphere needs n >= -1");
    CatalogEntry entry{"sphere", params, Presentation{}, Adc{}, {}, strong()};
    add_globe_boundary(*entry.presentation, *entry.complex, n);
    return entry;
}

// ------------------------------------------------------------ theta shapes

CatalogEntry theta(const std::string& family, int m, const std::vector<int>& ks, const std::vector<int>& params)
{
    CatalogEntry entry{family, params, Presentation{}, Adc{}, {}, strong()};
    auto& P = *entry.presentation;
    auto& C = *entry.complex;
    auto x = [](int i) { return "x" + std::to_string(i); };
    auto f = [](int i, int j) { return "f" + std::to_string(i) + "_" + std::to_string(j); };
    auto a = [](int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); };
    for (int i = 0; i <= m; ++i) {
        P.add_point(x(i));
        C.add_generator(x(i), 0, {});
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 0; j <= ks[static_cast<std::size_t>(i - 1)]; ++j) {
            P.add_generator(f(i, j), P.gen(x(i - 1)), P.gen(x(i)));
            C.add_generator(f(i, j), 1, IntVector::unit(x(i)) - IntVector::unit(x(i - 1)));
        }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= ks[static_cast<std::size_t>(i - 1)]; ++j) {
            P.add_generator(a(i, j), P.gen(f(i, j - 1)), P.gen(f(i, j)));
            C.add_generator(a(i, j), 2, IntVector::unit(f(i, j)) - IntVector::unit(f(i, j - 1)));
        }
    return entry;
}

CatalogEntry ordinal(const std::vector<int>& params)
{
    expect_count("ordinal", params, 1);
    if (params[0] < 0)
        bad("ordinal needs m >= 0");
    return theta("ordinal", params[0], std::vector<int>(static_cast<std::size_t>(params[0]), 0), params);
}

CatalogEntry theta2(const std::vector<int>& params)
{
    if (params.empty() || params[0] < 0)
        bad("theta2 takes m >= 0 followed by k1..km");
    expect_count("theta2", params, static_cast<std::size_t>(params[0]) + 1);
    std::vector<int> ks(params.begin() + 1, params.end());
    if (std::any_of(ks.begin(), ks.end(), [](int k) { return k < 0; }))
        bad("theta2 needs every k_i >= 0");
    return theta("theta2", params[0], ks, params);
}

// --------------------------------------------------------------- orientals

Name face_name(const std::vector<int>& vertices)
{
    Name out;
    for (int v : vertices)
        out += static_cast<char>('0' + v);
    return out;
}

// All (q+1)-element subsets of {0..n} in lexicographic order.
std::vector<std::vector<int>> simplices(int n, int q)
{
    std::vector<std::vector<int>> out;
    if (q > n)
        return out;
    std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
    std::fill(mask.begin(), mask.begin() + q + 1, true);
    do {
        std::vector<int> s;
        for (int i = 0; i <= n; ++i)
            if (mask[static_cast<std::size_t>(i)])
                s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

Adc simplex_complex(int n)
{
    Adc C;
    for (int q = 0; q <= n; ++q)
        for (const auto& s : simplices(n, q)) {
            IntVector d;
            if (q > 0)
                for (std::size_t i = 0; i < s.size(); ++i) {
                    auto facet = s;
                    facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                    d.add_to(face_name(facet), i % 2 == 0 ? 1 : -1);
                }
            C.add_generator(face_name(s), q, d);
        }
    return C;
}

Presentation oriental_presentation(int n)
{
    Presentation P;
    for (int i = 0; i <= n; ++i)
        P.add_point(face_name({i}));
    for (const auto& s : simplices(n, 1))
        P.add_generator(face_name(s), P.gen(face_name({s[0]})), P.gen(face_name({s[1]})));
    if (n >= 2)
        for (const auto& s : simplices(n, 2)) {
            const int i = s[0], j = s[1], k = s[2];
            P.add_generator(face_name(s), P.gen(face_name({i, k})),
                            E::comp(0, P.gen(face_name({i, j})), P.gen(face_name({j, k}))));
        }
    if (n >= 3)
        P.add_generator("0123", E::comp(1, P.gen("023"), E::comp(0, P.gen("012"), E::id(P.gen("23")))),
                        E::comp(1, P.gen("013"), E::comp(0, E::id(P.gen("01")), P.gen("123"))));
    return P;
}

CatalogEntry oriental(const std::vector<int>& params)
{
    expect_count("oriental", params, 1);
    const int n = params[0];
    if (n < 0 || n > 9)
        bad("oriental needs 0 <= n <= 9");
    CatalogEntry entry{"oriental", params, std::nullopt, simplex_complex(n), {}, strong()};
    if (n <= 3)
        entry.presentation = oriental_presentation(n);
    return entry;
}

// ------------------------------------------------------------ non-examples

CatalogEntry with_linearisation(CatalogEntry entry)
{
    entry.complex = lambda_presentation(*entry.presentation);
    return entry;
}

CatalogEntry loop(const std::vector<int>& params)
{
    expect_count("loop", params, 0);
    Presentation P;
    P.add_point("a");
    P.add_point("b");
    P.add_generator("f", P.gen("a"), P.gen("b"));
    P.add_generator("g", P.gen("b"), P.gen("a"));
    return with_linearisation({"loop", params, P, std::nullopt, {}, {false, true, false, false}});
}

CatalogEntry endo2cell(const std::vector<int>& params)
{
    expect_count("endo2cell", params, 0);
    Presentation P;
    P.add_point("x");
    P.add_generator("alpha", E::id(P.gen("x")), E::id(P.gen("x")));
    return with_linearisation({"endo2cell", params, P, std::nullopt, {}, {false, false, std::nullopt, false}});
}

CatalogEntry square(const std::vector<int>& params)
{
    expect_count("square", params, 0);
    Presentation P;
    for (const char* p : {"x", "y", "z"})
        P.add_point(p);
    P.add_generator("f", P.gen("x"), P.gen("y"));
    P.add_generator("g", P.gen("y"), P.gen("z"));
    P.add_generator("h", P.gen("y"), P.gen("z"));
    P.add_generator("alpha", E::comp(0, P.gen("f"), P.gen("g")), E::comp(0, P.gen("f"), P.gen("h")));
    return with_linearisation({"square", params, P, std::nullopt, {}, {false, false, true, false}});
}

CatalogEntry forestA(const std::vector<int>& params)
{
    expect_count("forestA", params, 0);
    Presentation P;
    for (const char* p : {"x", "y", "z"})
        P.add_point(p);
    for (const char* n : {"a", "b", "c"})
        P.add_generator(n, P.gen("x"), P.gen("y"));
    for (const char* n : {"d", "e", "f"})
        P.add_generator(n, P.gen("y"), P.gen("z"));
    for (const char* n : {"alpha", "alpha'"})
        P.add_generator(n, P.gen("a"), P.gen("b"));
    for (const char* n : {"beta", "beta'"})
        P.add_generator(n, P.gen("b"), P.gen("c"));
    for (const char* n : {"gamma", "gamma'"})
        P.add_generator(n, P.gen("d"), P.gen("e"));
    for (const char* n : {"delta", "delta'"})
        P.add_generator(n, P.gen("e"), P.gen("f"));
    auto g = [&](const Name& n) { return P.gen(n); };
    auto whisker = [&](const Name& one, const Name& two) { return E::comp(0, E::id(g(one)), g(two)); };
    auto whisker_r = [&](const Name& two, const Name& one) { return E::comp(0, g(two), E::id(g(one))); };
    P.add_generator("A", E::comp(0, g("alpha"), g("delta")), E::comp(0, g("alpha'"), g("delta'")));
    P.add_generator("B", E::comp(0, g("beta"), g("gamma")), E::comp(0, g("beta'"), g("gamma'")));

    // three-fold *1 composites, right-nested, of a 3-cell between two whiskered 2-cells
    auto sandwich = [&](const E& left, const Name& top, const E& right) {
        return E::comp(1, E::id(left), E::comp(1, g(top), E::id(right)));
    };
    const E h1 = E::comp(2, sandwich(whisker("a", "gamma"), "A", whisker_r("beta", "f")),
                         sandwich(whisker_r("alpha'", "d"), "B", whisker("c", "delta'")));
    const E h2 = E::comp(2, sandwich(whisker_r("alpha", "d"), "B", whisker("c", "delta")),
                         sandwich(whisker("a", "gamma'"), "A", whisker_r("beta'", "f")));
    CatalogEntry entry{"forestA", params, P, std::nullopt, {{"H1", h1}, {"H2", h2}}, {}};
    entry.expected.strong_steiner = false;
    return with_linearisation(std::move(entry));
}

} // namespace

const CellExpr& CatalogEntry::expression(const Name& name) const
{
    for (const auto& [n, e] : expressions)
        if (n == name)
            return e;
    throw Error(ErrorKind::bad_params, "entry " + this->name + " has no expression " + name);
}

std::vector<std::string> catalog_names()
{
    return {"disk", "sphere", "ordinal", "theta2", "oriental", "loop", "endo2cell", "square", "forestA"};
}

CatalogEntry build(const std::string& name, const std::vector<int>& params)
{
    if (name == "disk") return disk(params);
    if (name == "sphere") return sphere(params);
    if (name == "ordinal") return ordinal(params);
    if (name == "theta2") return theta2(params);
    if (name == "oriental") return oriental(params);
    if (name == "loop") return loop(params);
    if (name == "endo2cell") return endo2cell(params);
    if (name == "square") return square(params);
    if (name == "forestA") return forestA(params);
    bad("unknown catalog entry " + name);
}

std::vector<CatalogEntry> catalog_instances()
{
    std::vector<CatalogEntry> out;
    for (int n = 0; n <= 4; ++n)
        out.push_back(build("disk", {n}));
    for (int n = -1; n <= 3; ++n)
        out.push_back(build("sphere", {n}));
    for (int m = 0; m <= 3; ++m)
        out.push_back(build("ordinal", {m}));
    out.push_back(build("theta2", {3, 2, 0, 1}));
    out.push_back(build("theta2", {2, 1, 1}));
    for (int n = 0; n <= 3; ++n)
        out.push_back(build("oriental", {n}));
    for (const char* name : {"loop", "endo2cell", "square", "forestA"})
        out.push_back(build(name));
    return out;
}

} // namespace steiner
