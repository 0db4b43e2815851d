#include <doctest.h>

#include <random>

#include "properties.hpp"
#include "random_presentation.hpp"
#include "steiner/catalog.hpp"
#include "steiner/roundtrip.hpp"
#include "steiner/serialize.hpp"

using namespace steiner;

namespace {

constexpr int random_instances = 150;

std::vector<Presentation> random_corpus()
{
    std::mt19937 rng(20260418);
    std::vector<Presentation> out;
    for (int i = 0; i < random_instances; ++i)
        out.push_back(gen::random_presentation(rng));
    return out;
}

void run_suite(const Presentation& P)
{
    for (const auto& check : props::suite()) {
        auto failure = check.run(P);
        CAPTURE(check.name);
        CHECK_MESSAGE(!failure, failure.value_or(""));
    }
}

} // namespace

TEST_CASE("proposition suite on the catalog")
{
    for (const auto& entry : catalog_instances()) {
        if (!entry.presentation)
            continue;
        CAPTURE(entry.name);
        run_suite(*entry.presentation);
    }
}

TEST_CASE("proposition suite on random presentations")
{
    int atomic = 0, strong = 0;
    for (const auto& P : random_corpus()) {
        const std::string text = serialize(P);
        CAPTURE(text);
        run_suite(P);
        Verdict v = classify(P);
        atomic += v.is_atomic;
        strong += v.strong_steiner;
    }
    // the generator has to reach both sides of each classifier
    CHECK(atomic > 0);
    CHECK(atomic < random_instances);
    CHECK(strong > 0);
    CHECK(strong < random_instances);
}

TEST_CASE("strong random presentations round trip")
{
    int checked = 0;
    for (const auto& P : random_corpus()) {
        if (!classify(P).strong_steiner)
            continue;
        const std::string text = serialize(P);
        CAPTURE(text);
        auto report = verify_equivalence(lambda_presentation(P));
        CHECK_MESSAGE(report.ok, report.message);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("evaluation agrees with unit tables on strong presentations")
{
    int checked = 0;
    for (const auto& P : random_corpus()) {
        if (!classify(P).strong_steiner)
            continue;
        const std::string text = serialize(P);
        CAPTURE(text);
        for (int q = 0; q <= P.top_dim(); ++q)
            for (const auto& e : gen::candidate_expressions(P, q)) {
                const std::string expr = e.to_string();
                CAPTURE(expr);
                CHECK(eval_table(P, e) == unit_table(P, e));
                ++checked;
            }
    }
    CHECK(checked > 100);
}
