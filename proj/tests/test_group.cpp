#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "zafa/group.hpp"

using namespace zafa;

namespace {

// brute-force oracle: count pairs (x,y) in C_i x C_j with x*y equal to the
// fixed class representative, by scanning all pairs
ClassConstants oracle_class_constants(const FiniteGroup& g, const ConjugacyData& cd) {
    const int n = g.order();
    const int k = cd.k();
    ClassConstants cc;
    cc.k = k;
    cc.a.assign(static_cast<std::size_t>(k) * k * k, 0);
    for (int m = 0; m < k; ++m)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (g.multiply(x, y) == cd.representatives[m])
                    ++cc.a[(static_cast<std::size_t>(cd.class_of[x]) * k + cd.class_of[y]) * k + m];
    return cc;
}

std::multiset<std::int64_t> class_size_multiset(const ConjugacyData& cd) {
    return {cd.sizes.begin(), cd.sizes.end()};
}

}  // namespace

TEST_CASE("permutation closure enumerates S3") {
    const auto g = FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK(g.multiply(0, 3) == 3);
    CHECK(g.element_words()[0] == "e");
    // generators come right after the identity, in the given order
    CHECK(g.element_words()[1] == "a");
    CHECK(g.element_words()[2] == "b");
}

TEST_CASE("trivial and cyclic closures") {
    const auto trivial = FiniteGroup::from_permutation_generators(1, {});
    CHECK(trivial.order() == 1);
    const auto z4 = FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}});
    CHECK(z4.order() == 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(z4.multiply(a, b) == z4.multiply(b, a));
}

TEST_CASE("invalid permutations are rejected") {
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutation_generators(3, {{0, 0, 1}}),
                         "invalid permutation", std::invalid_argument);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutation_generators(3, {{0, 1}}),
                         "invalid permutation", std::invalid_argument);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutation_generators(3, {{0, 1, 3}}),
                         "invalid permutation", std::invalid_argument);
}

TEST_CASE("order cap aborts the closure") {
    CHECK_THROWS_WITH_AS(
        FiniteGroup::from_permutation_generators(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "", 10),
        "order cap exceeded", std::runtime_error);
    CHECK_THROWS_WITH_AS(
        FiniteGroup::direct_product(FiniteGroup::cyclic(200), FiniteGroup::cyclic(200)),
        "order cap exceeded", std::runtime_error);
}

TEST_CASE("direct products") {
    const auto z2z3 = catalog_group("Z2xZ3");
    CHECK(z2z3.order() == 6);
    CHECK(is_abelian(z2z3));

    const auto s3z2 = catalog_group("S3xZ2");
    CHECK(s3z2.order() == 12);
    CHECK(conjugacy_classes(s3z2).k() == 6);  // classes of a product are pairs

    const auto g = catalog_group("S3");
    const auto gx1 = FiniteGroup::direct_product(g, FiniteGroup());
    REQUIRE(gx1.order() == g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            CHECK(gx1.multiply(a, b) == g.multiply(a, b));
}

TEST_CASE("conjugacy classes of small groups") {
    const auto s3 = catalog_group("S3");
    const auto cd = conjugacy_classes(s3);
    CHECK(class_size_multiset(cd) == std::multiset<std::int64_t>{1, 2, 3});
    CHECK(cd.classes[0] == std::vector<int>{0});
    CHECK(cd.sizes[1] == 2);  // ties broken by size: 3-cycles before transpositions

    const auto q8 = catalog_group("Q8");
    CHECK(q8.order() == 8);
    CHECK(class_size_multiset(conjugacy_classes(q8)) ==
          std::multiset<std::int64_t>{1, 1, 2, 2, 2});

    const auto z6 = catalog_group("Z6");
    const auto zcd = conjugacy_classes(z6);
    CHECK(zcd.k() == 6);
    for (auto s : zcd.sizes) CHECK(s == 1);
}

TEST_CASE("conjugacy data structure invariants") {
    for (const auto& name : {"S3", "S4", "A4", "Q8", "D5", "S3xZ2"}) {
        CAPTURE(name);
        const auto g = catalog_group(name);
        const auto cd = conjugacy_classes(g);
        CHECK(std::accumulate(cd.sizes.begin(), cd.sizes.end(), std::int64_t{0}) ==
              g.order());
        for (auto s : cd.sizes) CHECK(g.order() % s == 0);
        CHECK(count_conjugation_violations(g, cd) == 0);
        // inverse_class is an involution
        for (int j = 0; j < cd.k(); ++j)
            CHECK(cd.inverse_class[cd.inverse_class[j]] == j);
    }
}

TEST_CASE("class constants match the brute-force oracle") {
    for (const auto& name : {"Z2", "S3", "Q8", "A4"}) {
        CAPTURE(name);
        const auto g = catalog_group(name);
        const auto cd = conjugacy_classes(g);
        const auto oracle = oracle_class_constants(g, cd);
        const auto fast = class_constants(g, cd);
        CHECK(fast.a == oracle.a);
    }
}

TEST_CASE("class constants: named examples and size identity") {
    const auto trivial = catalog_group("Z1");
    const auto tc = class_constants(trivial, conjugacy_classes(trivial));
    CHECK(tc.at(0, 0, 0) == 1);

    const auto z2 = catalog_group("Z2");
    const auto zc = class_constants(z2, conjugacy_classes(z2));
    CHECK(zc.at(1, 1, 0) == 1);  // g*g = e
    CHECK(zc.at(1, 1, 1) == 0);

    for (const auto& name : {"S3", "S4", "Q8", "D6"}) {
        CAPTURE(name);
        const auto g = catalog_group(name);
        const auto cd = conjugacy_classes(g);
        const auto cc = class_constants(g, cd);
        for (int i = 0; i < cd.k(); ++i)
            for (int j = 0; j < cd.k(); ++j) {
                std::int64_t pairs = 0;
                for (int m = 0; m < cd.k(); ++m) pairs += cc.at(i, j, m) * cd.sizes[m];
                CHECK(pairs == cd.sizes[i] * cd.sizes[j]);
            }
    }
}

TEST_CASE("catalog groups of order <= 512 are associative on all triples") {
    for (const auto& name : default_catalog()) {
        const auto g = catalog_group(name);
        if (g.order() > 512) continue;
        CAPTURE(name);
        CHECK(count_associativity_violations(g) == 0);
        CHECK(g.multiply(g.identity(), 1 % g.order()) == 1 % g.order());
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.multiply(g.inverse(x), x) == g.identity());
            CHECK(g.multiply(x, g.inverse(x)) == g.identity());
        }
    }
}

TEST_CASE("catalog orders") {
    CHECK(catalog_group("Z12").order() == 12);
    CHECK(catalog_group("D4").order() == 8);
    CHECK(catalog_group("D5").order() == 10);
    CHECK(catalog_group("S5").order() == 120);
    CHECK(catalog_group("S6").order() == 720);
    CHECK(catalog_group("A5").order() == 60);
    CHECK(catalog_group("A6").order() == 360);
    CHECK(catalog_group("A3").order() == 3);
    CHECK(catalog_group("D2").order() == 4);
    CHECK_THROWS_AS(catalog_group("S7"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_group("E8"), std::invalid_argument);
}

TEST_CASE("group hash is stable and structure-sensitive") {
    CHECK(catalog_group("S3").hash() == catalog_group("S3").hash());
    CHECK(catalog_group("S3").hash() != catalog_group("Z6").hash());
}
