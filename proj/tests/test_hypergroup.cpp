#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zafa/hypergroup.hpp"
#include "zafa/za.hpp"

using namespace zafa;
using Index = DiscreteHypergroup::Index;
using Measure = DiscreteHypergroup::Measure;
using CMeasure = DiscreteHypergroup::CMeasure;

namespace {

TablePtr table_of(const std::string& name) {
    return std::make_shared<const CharacterTable>(
        compute_character_table(catalog_group(name)));
}

}  // namespace

TEST_CASE("dual of an abelian group is a group") {
    const auto h = dual_of_group(table_of("Z6"));
    for (const auto& a : h->enumerate(6))
        for (const auto& b : h->enumerate(6)) {
            const Measure m = h->convolve(a, b);
            REQUIRE(m.size() == 1);  // every convolution is a point mass
            CHECK(m.begin()->second == doctest::Approx(1.0));
        }
}

TEST_CASE("dual of S3") {
    const auto h = dual_of_group(table_of("S3"));
    const Measure m = h->convolve({2}, {2});
    CHECK(m.size() == 3);
    CHECK(m.at({0}) == doctest::Approx(0.25));
    CHECK(m.at({1}) == doctest::Approx(0.25));
    CHECK(m.at({2}) == doctest::Approx(0.5));

    CHECK(h->haar_weight({0}) == doctest::Approx(1.0));
    CHECK(h->haar_weight({1}) == doctest::Approx(1.0));
    CHECK(h->haar_weight({2}) == doctest::Approx(4.0));  // d^2
}

TEST_CASE("polynomial hypergroup on N0") {
    const auto h = polynomial_N0();
    CHECK(h->convolve({1}, {1}) == Measure{{{0}, 0.5}, {{2}, 0.5}});
    for (long long n : {0LL, 1LL, 5LL, 12LL})
        CHECK(h->convolve({0}, {n}) == Measure{{{n}, 1.0}});

    // (d1*d1)*d2 = d1*(d1*d2) expanded by hand
    const auto lhs_inner = h->convolve({1}, {1});
    Measure lhs;
    for (const auto& [x, w] : lhs_inner)
        for (const auto& [idx, v] : h->convolve(x, {2})) lhs[idx] += w * v;
    const auto rhs_inner = h->convolve({1}, {2});
    Measure rhs;
    for (const auto& [x, w] : rhs_inner)
        for (const auto& [idx, v] : h->convolve({1}, x)) rhs[idx] += w * v;
    REQUIRE(lhs.size() == rhs.size());
    for (const auto& [idx, w] : lhs) CHECK(rhs.at(idx) == doctest::Approx(w));

    CHECK(h->haar_weight({0}) == doctest::Approx(1.0));
    CHECK(h->haar_weight({7}) == doctest::Approx(2.0));
}

TEST_CASE("orbit hypergroup Z/{+-1} reproduces poly-N0") {
    const auto orbit = orbit_hypergroup(1, {{{1}}, {{-1}}});
    const auto poly = polynomial_N0();

    const Measure m = orbit->convolve(orbit->involution({1}), orbit->involution({1}));
    // 1/4 (d2 + 2 d0 + d-2) re-averaged: half at orbit{0}, half at orbit{2}
    CHECK(m.size() == 2);
    CHECK(m.at({0}) == doctest::Approx(0.5));
    CHECK(m.at({-2}) == doctest::Approx(0.5));  // orbit reps are lex-minimal

    for (long long n = 0; n <= 20; ++n)
        for (long long mth = 0; mth <= 20; ++mth) {
            const auto pm = poly->convolve({n}, {mth});
            const auto om = orbit->convolve({-n}, {-mth});
            REQUIRE(pm.size() == om.size());
            for (const auto& [idx, w] : pm) CHECK(om.at({-idx[0]}) == w);  // exact
        }
}

TEST_CASE("orbit hypergroup of the trivial group is Z^n") {
    const auto h = orbit_hypergroup(2, {{{1, 0}, {0, 1}}});
    const Measure m = h->convolve({3, -1}, {-2, 5});
    REQUIRE(m.size() == 1);
    CHECK(m.at({1, 4}) == doctest::Approx(1.0));
    CHECK(h->involution({2, -7}) == Index{-2, 7});
}

TEST_CASE("quarter-turn orbit hypergroup on Z^2") {
    const std::vector<std::vector<std::vector<long long>>> rot4 = {
        {{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}, {{-1, 0}, {0, -1}}, {{0, 1}, {-1, 0}}};
    const auto h = orbit_hypergroup(2, rot4);
    for (const auto& a : h->enumerate(12))
        for (const auto& b : h->enumerate(12)) {
            double total = 0.0;
            for (const auto& [idx, w] : h->convolve(a, b)) {
                CHECK(w > 0.0);
                total += w;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    const auto chk = verify_hypergroup(*h, 16, 400);
    CHECK(chk.max_probability_residual < 1e-12);
    CHECK(chk.max_associativity_deviation < 1e-10);
}

TEST_CASE("invalid orbit groups are rejected") {
    // not closed: a quarter turn without its powers
    CHECK_THROWS_WITH_AS(
        orbit_hypergroup(2, {{{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}}),
        "invalid orbit group", std::runtime_error);
    // not unimodular
    CHECK_THROWS_WITH_AS(orbit_hypergroup(1, {{{2}}}), "invalid orbit group",
                         std::runtime_error);
    // shape mismatch
    CHECK_THROWS_WITH_AS(orbit_hypergroup(2, {{{1}}}), "invalid orbit group",
                         std::runtime_error);
}

TEST_CASE("ell1 convolution") {
    const auto s3 = table_of("S3");
    const auto h = dual_of_group(s3);

    // unit element
    std::uint64_t state = 17;
    CMeasure f;
    for (int p = 0; p < 3; ++p)
        f[{p}] = cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0);
    const auto same = ell1_convolve(*h, {{{0}, 1.0}}, f);
    for (const auto& [idx, v] : f) CHECK(std::abs(same.at(idx) - v) < 1e-12);

    // agreement with the dual-side convolution on weights
    const auto lhs = ell1_convolve(*h, {{{2}, 1.0}}, {{{2}, 1.0}});
    const auto rhs = hypergroup_convolve(s3, {{2, 1.0}}, {{2, 1.0}});
    for (const auto& [s, w] : rhs) CHECK(std::abs(lhs.at({s}) - cplx(w)) < 1e-12);

    // norm inequality on random pairs
    for (int trial = 0; trial < 100; ++trial) {
        CMeasure a, b;
        for (int p = 0; p < 3; ++p) {
            a[{p}] = cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0);
            b[{p}] = cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0);
        }
        CHECK(ell1_norm(ell1_convolve(*h, a, b)) <=
              ell1_norm(a) * ell1_norm(b) * (1.0 + 1e-12));
    }
}

TEST_CASE("axiom verification across all instances") {
    const auto duals = {"S3", "Q8", "A5", "Z12"};
    for (const auto& name : duals) {
        CAPTURE(name);
        const auto h = dual_of_group(table_of(name));
        const auto chk = verify_hypergroup(*h, 12, 1200);
        CHECK(chk.max_probability_residual < 1e-12);
        CHECK(chk.min_coefficient >= -1e-15);
        CHECK(chk.max_identity_deviation < 1e-12);
        CHECK(chk.max_associativity_deviation < 1e-10);
    }

    const auto poly = polynomial_N0();
    const auto pchk = verify_hypergroup(*poly, 50, 2000);
    CHECK(pchk.triples >= 1000);
    CHECK(pchk.max_probability_residual < 1e-12);
    CHECK(pchk.max_associativity_deviation < 1e-10);

    const auto orbit = orbit_hypergroup(1, {{{1}}, {{-1}}});
    const auto ochk = verify_hypergroup(*orbit, 30, 1500);
    CHECK(ochk.max_probability_residual < 1e-12);
    CHECK(ochk.max_associativity_deviation < 1e-10);

    // vacuous check on an empty sample is a clean zero
    const auto empty = verify_hypergroup(*poly, 0, 10);
    CHECK(empty.points == 0);
    CHECK(empty.triples == 0);
}
