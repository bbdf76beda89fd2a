#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "monores/monomial.hpp"
#include "test_util.hpp"

using namespace monores;
using testutil::mono;
using testutil::ring_n;

TEST_CASE("lcm is the componentwise maximum") {
    RingPtr R = ring_n(2);
    CHECK(lcm(mono(R, {2, 1}), mono(R, {0, 3})) == mono(R, {2, 3}));
    Monomial m = mono(R, {4, 7});
    CHECK(lcm(m, m) == m);
}

TEST_CASE("lcm for the six-variable failure ideal") {
    auto I = testutil::load_fixture("l32-failure.ideal").ideal;
    Monomial m1sq = product(I.generators[0], I.generators[0]);
    Monomial m2m3 = product(I.generators[1], I.generators[2]);
    CHECK(lcm(m1sq, m2m3) == mono(I.ring, {6, 4, 6, 5, 4, 5}));
}

TEST_CASE("divides") {
    RingPtr R = ring_n(3);
    CHECK(divides(Monomial(R), mono(R, {5, 0, 2})));
    CHECK(divides(mono(R, {1, 1, 0}), mono(R, {1, 2, 0})));
    CHECK_FALSE(divides(mono(R, {1, 3, 0}), mono(R, {1, 2, 9})));
}

TEST_CASE("divisibility among pair products of example 3-1a") {
    auto I = testutil::load_fixture("example-3-1a.ideal").ideal;
    Monomial m1m3 = product(I.generators[0], I.generators[2]);
    Monomial m2sq = product(I.generators[1], I.generators[1]);
    CHECK(divides(m1m3, m2sq));
}

TEST_CASE("divisibility among pair products of the 4-generator comparison ideal") {
    auto I = testutil::load_fixture("ideal-example-3-2.ideal").ideal;
    auto pp = [&](std::size_t i, std::size_t j) {
        return product(I.generators[i], I.generators[j]);
    };
    // note: m1*m2 divides m3*m4 here; m2*m3 does not (indices 1-based)
    CHECK_FALSE(divides(pp(1, 2), pp(2, 3)));
    CHECK(divides(pp(0, 1), pp(2, 3)));
    CHECK(divides(pp(0, 1), pp(3, 3)));
    CHECK(divides(pp(1, 3), pp(2, 2)));
}

TEST_CASE("product") {
    RingPtr R = ring_n(2);
    CHECK(product(mono(R, {1, 0}), mono(R, {0, 1})) == mono(R, {1, 1}));
    Monomial m = mono(R, {3, 5});
    CHECK(product(m, Monomial(R)) == m);
}

TEST_CASE("ring mismatch is an error") {
    RingPtr R = ring_n(2), S = ring_n(3);
    CHECK_THROWS_AS(lcm(mono(R, {1, 0}), mono(S, {1, 0, 0})), RingMismatchError);
    CHECK_THROWS_AS((void)divides(mono(R, {1, 0}), mono(S, {1, 0, 0})), RingMismatchError);
    CHECK_THROWS_AS(product(mono(R, {1, 0}), mono(S, {1, 0, 0})), RingMismatchError);
}

TEST_CASE("exponent overflow is detected") {
    RingPtr R = ring_n(1);
    Monomial big = mono(R, {INT64_MAX - 1});
    CHECK_THROWS_AS(product(big, big), OverflowError);
}

TEST_CASE("minimalize drops multiples and duplicates") {
    RingPtr R = ring_n(2);
    auto res = minimalize({mono(R, {1, 0}), mono(R, {1, 1})});
    REQUIRE(res.ideal.generators.size() == 1);
    CHECK(res.ideal.generators[0] == mono(R, {1, 0}));
    REQUIRE(res.removals.size() == 1);
    CHECK(res.removals[0].removed == 1);
    CHECK(res.removals[0].by == 0);

    auto dup = minimalize({mono(R, {2, 1}), mono(R, {2, 1})});
    CHECK(dup.ideal.generators.size() == 1);
    CHECK(dup.removals[0].removed == 1);

    CHECK_THROWS_AS(minimalize({}), EmptyIdealError);
}

TEST_CASE("square of the 4-generator comparison ideal keeps 7 of 10 products") {
    auto I = testutil::load_fixture("ideal-example-3-2.ideal").ideal;
    SquarePresentation sq = square(I);
    CHECK(sq.minimal_square.generators.size() == 7);
    std::set<std::pair<std::size_t, std::size_t>> deleted;
    for (const auto& p : sq.pairs)
        if (!p.kept) deleted.insert({p.i, p.j});
    CHECK(deleted == std::set<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}});
    for (const auto& p : sq.pairs)
        if (!p.kept) {
            REQUIRE(p.cause.has_value());
            CHECK(p.relation == Relation::strict);
            // the recorded cause must divide the deleted product
            Monomial c = product(I.generators[p.cause->first], I.generators[p.cause->second]);
            CHECK(divides(c, p.value));
        }
}

TEST_CASE("square of permutation-style six-generator list keeps everything") {
    auto I = testutil::load_fixture("remark-sharpness.ideal").ideal;
    SquarePresentation sq = square(I);
    CHECK(sq.minimal_square.generators.size() == 6);
    for (const auto& p : sq.pairs) CHECK(p.kept);
}

TEST_CASE("square of (x, y)") {
    RingPtr R = ring_n(2);
    MonomialIdeal I{R, {mono(R, {1, 0}), mono(R, {0, 1})}, true};
    SquarePresentation sq = square(I);
    CHECK(sq.minimal_square.generators.size() == 3);
    for (const auto& p : sq.pairs) CHECK(p.kept);
}

TEST_CASE("square deletion for example 3-1a names the cause") {
    auto I = testutil::load_fixture("example-3-1a.ideal").ideal;
    SquarePresentation sq = square(I);
    CHECK(sq.minimal_square.generators.size() == 5);
    bool saw = false;
    for (const auto& p : sq.pairs)
        if (!p.kept) {
            CHECK(p.i == 1);
            CHECK(p.j == 1);
            CHECK(p.cause == std::make_pair<std::size_t, std::size_t>(0, 2));
            saw = true;
        }
    CHECK(saw);
}

TEST_CASE("square result is independent of generator order") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        MonomialIdeal I = testutil::random_minimal_ideal(rng, 4, 4, 4);
        auto sorted_gens = [](const SquarePresentation& s) {
            std::vector<Monomial> g = s.minimal_square.generators;
            std::sort(g.begin(), g.end());
            return g;
        };
        SquarePresentation a = square(I);
        MonomialIdeal J = I;
        std::shuffle(J.generators.begin(), J.generators.end(), rng);
        SquarePresentation b = square(J);
        CHECK(sorted_gens(a) == sorted_gens(b));
    }
}

TEST_CASE("lcm lattice of small examples") {
    RingPtr R = ring_n(2);
    auto lat = lcm_lattice({mono(R, {1, 0}), mono(R, {0, 1})});
    REQUIRE(lat.size() == 3);
    // descending lexicographic order
    CHECK(lat[0] == mono(R, {1, 1}));
    CHECK(lat[1] == mono(R, {1, 0}));
    CHECK(lat[2] == mono(R, {0, 1}));
}

TEST_CASE("lcm lattice of the squared two-generator permutation ideal") {
    RingPtr R = VariableSet::make({"x12", "x21"});
    std::vector<Monomial> gens = {mono(R, {2, 4}), mono(R, {3, 3}), mono(R, {4, 2})};
    auto lat = lcm_lattice(gens);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& m : lat) got.insert(m.dense());
    std::set<std::vector<std::int64_t>> want = {{2, 4}, {3, 3}, {4, 2}, {3, 4}, {4, 3}, {4, 4}};
    CHECK(got == want);
}

TEST_CASE("lcm lattice size of the squared comparison ideal") {
    auto I = testutil::load_fixture("ideal-example-3-2.ideal").ideal;
    auto G2 = square(I).minimal_square;
    CHECK(lcm_lattice(G2.generators).size() == 48);
}

TEST_CASE("lattice elements are generator multiples and lcm-closed") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MonomialIdeal I = testutil::random_minimal_ideal(rng, 4, 4, 3);
        auto lat = lcm_lattice(I.generators);
        std::set<Monomial> members(lat.begin(), lat.end());
        for (const auto& m : lat) {
            bool dominated = false;
            for (const auto& g : I.generators) dominated |= divides(g, m);
            CHECK(dominated);
            for (const auto& n : lat) CHECK(members.count(lcm(m, n)) == 1);
        }
    }
}

TEST_CASE("lcm properties on random pairs") {
    std::mt19937_64 rng(3);
    RingPtr R = ring_n(5);
    std::uniform_int_distribution<std::int64_t> exp(0, 6);
    auto rand_mono = [&] {
        std::vector<std::int64_t> e(5);
        for (auto& v : e) v = exp(rng);
        return mono(R, e);
    };
    for (int i = 0; i < 300; ++i) {
        Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
        CHECK(divides(a, lcm(a, b)));
        CHECK(divides(b, lcm(a, b)));
        CHECK(lcm(a, b) == lcm(b, a));
        CHECK(lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
        CHECK(lcm(a, a) == a);
    }
}

TEST_CASE("pair products divide the lcm of the squares, 1000 random pairs") {
    std::mt19937_64 rng(5);
    RingPtr R = ring_n(6);
    std::uniform_int_distribution<std::int64_t> exp(0, 9);
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::int64_t> ea(6), eb(6);
        for (auto& v : ea) v = exp(rng);
        for (auto& v : eb) v = exp(rng);
        Monomial a = mono(R, ea), b = mono(R, eb);
        CHECK(divides(product(a, b), lcm(product(a, a), product(b, b))));
    }
}

TEST_CASE("squared permutation generator for q = 3") {
    RingPtr R = VariableSet::make({"x123", "x132", "x213", "x231", "x312", "x321"});
    Monomial tau1 = mono(R, {1, 1, 2, 2, 3, 3});
    CHECK(product(tau1, tau1) == mono(R, {2, 2, 4, 4, 6, 6}));
}
