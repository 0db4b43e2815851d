// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "laws.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "random_presentation.hpp"
#include "steiner/catalog.hpp"
#include "steiner/roundtrip.hpp"
#include "steiner/serialize.hpp"
#include "steiner/zlin.hpp"

using namespace steiner;
using E = CellExpr;

namespace {

using Failure = std::optional<std::string>;

std::string join(const std::vector<Name>& xs, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + xs[i];
    return s;
}

std::string show(const NameSet& s)
{
    return "{" + join(std::vector<Name>(s.begin(), s.end())) + "}";
}

// Full preorder on the 2-simplex presentation is the total order
// a <= h <= alpha <= f <= b <= g <= c, i.e. 0, 02, 012, 01, 1, 12, 2.
Failure total_order_on_triangle()
{
    const Presentation P = *build("oriental", {2}).presentation;
    const std::vector<Name> expected = {"0", "02", "012", "01", "1", "12", "2"};
    auto r = preorder_report(P);
    auto order = r.full.as_total_order();
    if (!r.full_antisymmetric || !order)
        return "full preorder is not a total order";
    if (*order != expected)
        return "order was " + join(*order);

    const auto file = std::filesystem::temp_directory_path() / "steiner_acceptance_o2.json";
    std::ofstream(file) << serialize(P);
    std::ostringstream out, err;
    if (cli::run({"preorder", file.string()}, out, err) != cli::ok)
        return "CLI preorder failed: " + err.str();
    if (out.str().find("total order: " + join(expected, " <= ")) == std::string::npos)
        return "CLI output lacks the total order";
    return std::nullopt;
}

Failure counterexamples()
{
    Verdict loop = classify(*build("loop").presentation);
    if (loop.strong_steiner || loop.strongly_loop_free_algebraic || loop.strongly_loop_free_categorical)
        return "loop: expected loops in both preorders";
    if (!loop.categorical_cycle || join(*loop.categorical_cycle, " <= ") != "a <= f <= b <= g <= a")
        return "loop: unexpected categorical cycle";

    Verdict endo = classify(*build("endo2cell").presentation);
    if (endo.is_atomic || endo.strong_steiner)
        return "endo2cell: expected a non-atomic verdict";
    if (!endo.atomicity_witness || endo.atomicity_witness->generator != "alpha" ||
        endo.atomicity_witness->level != 0 || endo.atomicity_witness->intersection != NameSet{"x"})
        return "endo2cell: wrong atomicity witness";
    if (!endo.codim1_antisymmetric || endo.strongly_loop_free_categorical)
        return "endo2cell: expected codim1 antisymmetric and full cyclic";

    const Presentation sq = *build("square").presentation;
    Verdict v = classify(sq);
    if (v.is_atomic || !v.strongly_loop_free_algebraic || v.strongly_loop_free_categorical || v.strong_steiner)
        return "square: wrong verdict";
    if (!v.atomicity_witness || v.atomicity_witness->level != 1 || v.atomicity_witness->intersection != NameSet{"f"})
        return "square: wrong atomicity witness";
    const NameSet pos = decompose(lambda_presentation(sq).boundary("alpha")).supp_pos;
    const NameSet face = support_expr(sq, face_expr(sq, sq.gen("alpha"), 1, Sign::plus));
    if (pos != NameSet{"h"} || face != NameSet{"f", "h"})
        return "square: supports " + show(pos) + " and " + show(face);
    return std::nullopt;
}

// On the 3-simplex with f = 01, h = 23, beta = 012, alpha = 023.
Failure linearisation_on_tetrahedron()
{
    const Presentation P = *build("oriental", {3}).presentation;
    const E f = P.gen("01"), h = P.gen("23"), beta = P.gen("012"), alpha = P.gen("023");
    if (!linearize(P, E::id(f)).is_zero())
        return "identity does not vanish";
    const E whisker = E::comp(0, beta, E::id(h));
    if (linearize(P, whisker) != IntVector{{"012", 1}})
        return "whisker linearises to " + linearize(P, whisker).to_string();
    const E source = E::comp(1, alpha, whisker);
    if (linearize(P, source) != IntVector{{"012", 1}, {"023", 1}})
        return "composite linearises to " + linearize(P, source).to_string();
    return std::nullopt;
}

Failure forest_collision()
{
    const CatalogEntry forest = build("forestA");
    const Presentation& P = *forest.presentation;
    const E h1 = forest.expression("H1"), h2 = forest.expression("H2");
    const IntVector ab{{"A", 1}, {"B", 1}};
    if (linearize(P, h1) != ab || linearize(P, h2) != ab)
        return "linearisations differ from [A] + [B]";
    if (eval_table(P, h1) != eval_table(P, h2))
        return "tables differ";
    if (forest.expected.strong_steiner)
        return "forest presentation marked strong Steiner";
    return std::nullopt;
}

Failure enumeration_vs_brute_force()
{
    for (int n = 1; n <= 3; ++n) {
        const Adc c = *build("oriental", {n}).complex;
        auto e = enumerate_nu(c, n);
        for (int q = 0; q <= n; ++q) {
            std::set<NuTable> small;
            for (const auto& t : e.cells[static_cast<std::size_t>(q)]) {
                std::int64_t m = 0;
                for (const auto& row : t.rows)
                    m = std::max({m, row.minus.max_abs(), row.plus.max_abs()});
                if (m <= 3)
                    small.insert(t);
            }
            if (brute_force_nu(c, q, 3) != small)
                return "oriental " + std::to_string(n) + " differs in dimension " + std::to_string(q);
        }
    }
    auto d2 = enumerate_nu(*build("oriental", {2}).complex, 2);
    if (d2.cells[0].size() != 3 || d2.nontrivial_count(1) != 4 || d2.nontrivial_count(2) != 1)
        return "2-simplex counts differ from (3, 4, 1)";
    return std::nullopt;
}

Failure round_trips()
{
    std::vector<std::pair<std::string, std::vector<int>>> cases;
    for (int n = 0; n <= 3; ++n)
        cases.push_back({"oriental", {n}});
    for (int n = 0; n <= 4; ++n)
        cases.push_back({"disk", {n}});
    for (int n = -1; n <= 3; ++n)
        cases.push_back({"sphere", {n}});
    cases.push_back({"theta2", {3, 2, 0, 1}});
    for (const auto& [name, params] : cases) {
        auto r = verify_equivalence(*build(name, params).complex);
        if (!r.ok)
            return name + " " + (params.empty() ? "" : std::to_string(params[0])) + ": " + r.message;
    }
    return std::nullopt;
}

Failure proposition_suite()
{
    std::vector<Presentation> corpus;
    for (const auto& entry : catalog_instances())
        if (entry.presentation)
            corpus.push_back(*entry.presentation);
    std::mt19937 rng(7);
    for (int i = 0; i < 120; ++i)
        corpus.push_back(gen::random_presentation(rng));
    for (const auto& P : corpus)
        for (const auto& check : props::suite())
            if (auto failure = check.run(P))
                return std::string(check.name) + ": " + *failure + "\n" + serialize(P);
    return std::nullopt;
}

Failure smith_forms()
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = oracle::random_matrix(rng, 5, 5);
        const IntMatrix a = IntMatrix::from_rows(m);
        const auto s = smith_normal_form(a);
        if (!(s.U * a * s.V).same_values(s.D))
            return "U A V != D at trial " + std::to_string(trial);
        if (std::abs(s.U.determinant()) != 1 || std::abs(s.V.determinant()) != 1)
            return "non-unimodular transform at trial " + std::to_string(trial);
        if (s.invariant_factors() != oracle::naive_smith_diagonal(m) ||
            s.invariant_factors() != oracle::determinantal_diagonal(m))
            return "invariant factors disagree with the oracles at trial " + std::to_string(trial);
    }
    return std::nullopt;
}

Failure category_laws()
{
    for (int n : {2, 3}) {
        auto e = enumerate_nu(*build("oriental", {n}).complex, n);
        for (const auto& [label, outcome] :
             {std::pair{"globularity", laws::globularity(e)}, std::pair{"units", laws::units(e)},
              std::pair{"associativity", laws::associativity(e)}, std::pair{"interchange", laws::interchange(e)}}) {
            if (outcome.failure)
                return std::string(label) + " on oriental " + std::to_string(n) + ": " + *outcome.failure;
            if (outcome.tuples == 0)
                return std::string(label) + " checked nothing on oriental " + std::to_string(n);
        }
    }
    return std::nullopt;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Failure()>>> criteria = {
        {"full preorder of the 2-simplex is a total order", total_order_on_triangle},
        {"counterexample verdicts", counterexamples},
        {"linearisation on the 3-simplex", linearisation_on_tetrahedron},
        {"distinct composites with equal linearisation", forest_collision},
        {"enumeration agrees with exhaustive search", enumeration_vs_brute_force},
        {"round trip on strong Steiner complexes", round_trips},
        {"proposition suite on catalog and random presentations", proposition_suite},
        {"Smith normal form against oracles", smith_forms},
        {"omega-category laws on enumerated simplices", category_laws},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Failure f;
        try {
            f = criteria[i].second();
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << i + 1 << ": " << (f ? "FAIL" : "PASS") << " - " << criteria[i].first;
        if (f)
            std::cout << " (" << *f << ")";
        std::cout << "\n";
        failed += f.has_value();
    }
    return failed ? 1 : 0;
}
