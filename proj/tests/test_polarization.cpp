#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monores/betti.hpp"
#include "monores/polarization.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::mono;
using testutil::ring_n;

namespace {
const FieldConfig kField{};
}

TEST_CASE("polarizing splits exponents into squarefree copies") {
    RingPtr R = VariableSet::make({"x", "y"});
    MonomialIdeal I{R, {mono(R, {2, 1})}, true};
    PolarizeResult pol = polarize(I);
    CHECK(pol.map.target->names() == std::vector<std::string>{"x_1", "x_2", "y_1"});
    CHECK(pol.ideal.generators[0].dense() == std::vector<std::int64_t>{1, 1, 1});

    MonomialIdeal J{R, {mono(R, {2, 0}), mono(R, {1, 1})}, true};
    PolarizeResult pj = polarize(J);
    CHECK(pj.ideal.generators[0].dense() == std::vector<std::int64_t>{1, 1, 0});
    CHECK(pj.ideal.generators[1].dense() == std::vector<std::int64_t>{1, 0, 1});
}

TEST_CASE("images are squarefree and depolarize back to the input") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 30; ++trial) {
        MonomialIdeal I = testutil::random_minimal_ideal(rng, 4, 2 + trial % 4, 5);
        PolarizeResult pol = polarize(I);
        REQUIRE(pol.ideal.generators.size() == I.generators.size());
        for (std::size_t k = 0; k < I.generators.size(); ++k) {
            for (const auto& [var, e] : pol.ideal.generators[k].terms()) CHECK(e == 1);
            CHECK(depolarize(pol.map, pol.ideal.generators[k]) == I.generators[k]);
        }
    }
}

TEST_CASE("betti numbers survive polarization") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 12; ++trial) {
        MonomialIdeal I = testutil::random_minimal_ideal(rng, 3, 2 + trial % 3, 3);
        BettiTable before = betti_koszul(I, kField);
        PolarizeResult pol = polarize(I);
        BettiTable after = betti_supported(taylor_complex(pol.ideal), pol.ideal, kField);
        CHECK(before.totals == after.totals);
    }
}

TEST_CASE("projective dimension chain for the remark ideal") {
    MonomialIdeal I = testutil::load_fixture("remark-sharpness.ideal").ideal;
    MonomialIdeal I2 = square(I).minimal_square;

    BettiTable direct = betti_koszul(I2, kField);
    CHECK(projective_dimension(direct) == 3);

    // polarizing the square preserves the resolution
    PolarizeResult pol_sq = polarize(I2);
    BettiTable of_polarized_square =
        betti_supported(taylor_complex(pol_sq.ideal), pol_sq.ideal, kField);
    CHECK(projective_dimension(of_polarized_square) == 3);
    CHECK(of_polarized_square.totals == direct.totals);

    // squaring the polarization drops the projective dimension
    PolarizeResult pol = polarize(I);
    MonomialIdeal squared_pol = square(pol.ideal).minimal_square;
    CHECK(squared_pol.generators.size() == 6);
    BettiTable of_squared_polarization =
        betti_supported(taylor_complex(squared_pol), squared_pol, kField);
    CHECK(projective_dimension(of_squared_polarization) == 2);
    CHECK(of_squared_polarization.totals == std::vector<long long>{6, 9, 4});
}

TEST_CASE("polarize requires a minimal ideal") {
    RingPtr R = ring_n(2);
    MonomialIdeal I{R, {mono(R, {1, 0}), mono(R, {1, 1})}, false};
    CHECK_THROWS_AS(polarize(I), Error);
}
