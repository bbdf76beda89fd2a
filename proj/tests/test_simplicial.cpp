#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "monores/msquare.hpp"
#include "monores/simplicial.hpp"
#include "test_util.hpp"

using namespace monores;

TEST_CASE("from_facets absorbs contained and duplicate faces") {
    auto c = SimplicialComplex::from_facets({Face({1, 2}), Face({2})});
    REQUIRE(c.facets().size() == 1);
    CHECK(c.facets()[0] == Face({1, 2}));

    auto d = SimplicialComplex::from_facets({Face({1}), Face({1})});
    CHECK(d.facets().size() == 1);
}

TEST_CASE("the empty-face-only and void complexes") {
    auto e = SimplicialComplex::from_facets({Face()});
    CHECK(e.empty_face_only());
    CHECK(e.vertices().empty());
    CHECK(e.dim() == -1);

    SimplicialComplex v;
    CHECK(v.is_void());
    CHECK_THROWS_AS(v.dim(), Error);
    CHECK_THROWS_AS(v.f_vector(), Error);
}

TEST_CASE("the four-triangle comparison complex has incomparable facets") {
    L32Fixture fx = l32_fixture();
    CHECK(fx.complex.facets().size() == 4);
    CHECK(fx.complex.dim() == 2);
}

TEST_CASE("faces_of_dim") {
    auto simplex = SimplicialComplex::from_facets({Face({1, 2, 3})});
    auto edges = simplex.faces_of_dim(1);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == Face({1, 2}));
    CHECK(edges[1] == Face({1, 3}));
    CHECK(edges[2] == Face({2, 3}));
    CHECK(simplex.faces_of_dim(-1) == std::vector<Face>{Face()});
    CHECK(simplex.faces_of_dim(5).empty());

    MSquareComplex m3 = build_mq2(3);
    CHECK(m3.complex.faces_of_dim(3).size() == 3);
}

TEST_CASE("f-vectors") {
    auto simplex = SimplicialComplex::from_facets({Face({0, 1, 2})});
    CHECK(simplex.f_vector() == std::vector<long long>{3, 3, 1});

    CHECK(build_mq2(3).complex.f_vector() == std::vector<long long>{6, 12, 10, 3});
    CHECK(build_mq2(4).complex.f_vector() ==
          std::vector<long long>{10, 39, 80, 95, 66, 25, 4});
    CHECK(l32_fixture().complex.f_vector() == std::vector<long long>{6, 9, 4});
}

TEST_CASE("face count equals the union of facet power sets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        SimplicialComplex c = testutil::random_complex(rng, 12, 5, 6);
        std::set<std::vector<int>> brute;
        for (const Face& facet : c.facets()) {
            const auto& fv = facet.vertices();
            for (std::size_t mask = 1; mask < (std::size_t(1) << fv.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t k = 0; k < fv.size(); ++k)
                    if (mask >> k & 1) sub.push_back(fv[k]);
                brute.insert(sub);
            }
        }
        long long total = 0;
        for (long long fd : c.f_vector()) total += fd;
        CHECK(total == static_cast<long long>(brute.size()));
        long long by_dim = 0;
        for (int d = 0; d <= c.dim(); ++d)
            by_dim += static_cast<long long>(c.faces_of_dim(d).size());
        CHECK(by_dim == total);
    }
}

TEST_CASE("induced subcomplexes") {
    L32Fixture fx = l32_fixture();
    CHECK(fx.complex.induced(std::vector<int>{}).is_void());

    // v1 and v4 (ids 0, 3) share no face
    auto two = fx.complex.induced(std::vector<int>{0, 3});
    REQUIRE(two.facets().size() == 2);
    CHECK(two.facets()[0] == Face({0}));
    CHECK(two.facets()[1] == Face({3}));

    MSquareComplex m3 = build_mq2(3);
    auto tri = m3.complex.induced(
        std::vector<int>{m3.vertex_id(0, 0), m3.vertex_id(0, 1), m3.vertex_id(1, 2)});
    REQUIRE(tri.facets().size() == 1);
    CHECK(tri.facets()[0].size() == 3);
}

TEST_CASE("induced on the full vertex set is the identity") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex c = testutil::random_complex(rng, 10, 4, 5);
        SimplicialComplex d = c.induced(c.vertices());
        CHECK(c.facets() == d.facets());
        CHECK(c.vertices() == d.vertices());
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(SimplicialComplex::from_facets({Face({1, 2, 3})})));
    CHECK_FALSE(is_connected(SimplicialComplex::from_facets({Face({1}), Face({2})})));
    CHECK_THROWS_AS(is_connected(SimplicialComplex()), Error);

    // restriction of the comparison complex at the failing degree
    L32Fixture fx = l32_fixture();
    CHECK_FALSE(is_connected(fx.complex.induced(std::vector<int>{0, 3})));
}

TEST_CASE("find_leaf") {
    auto single = SimplicialComplex::from_facets({Face({1, 2})});
    auto leaf = find_leaf(single);
    REQUIRE(leaf.has_value());
    CHECK(leaf->leaf == 0);
    CHECK_FALSE(leaf->joint.has_value());

    MSquareComplex m3 = build_mq2(3);
    auto l = find_leaf(m3.complex);
    REQUIRE(l.has_value());
    CHECK(l->leaf == 0);
    CHECK(l->joint == 1);

    // the three outer triangles alone have no leaf
    L32Fixture fx = l32_fixture();
    auto outer = SimplicialComplex::from_facets(
        {fx.complex.facets()[0], fx.complex.facets()[1], fx.complex.facets()[2]});
    CHECK_FALSE(find_leaf(outer).has_value());
}

TEST_CASE("forest and tree checks") {
    for (int q = 1; q <= 6; ++q) CHECK(is_tree(build_mq2(q).complex));

    L32Fixture fx = l32_fixture();
    CHECK_FALSE(is_forest(fx.complex));
    auto witness = leafless_subcollection(fx.complex);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<std::size_t>{0, 1, 2});

    auto disjoint = SimplicialComplex::from_facets({Face({1, 2}), Face({3, 4})});
    CHECK(is_forest(disjoint));
    CHECK_FALSE(is_tree(disjoint));
}

TEST_CASE("every facet of the pair complex is a leaf with any other as joint") {
    for (int q = 2; q <= 5; ++q) {
        MSquareComplex mq = build_mq2(q);
        const auto& facets = mq.complex.facets();
        for (std::size_t f = 0; f < facets.size(); ++f) {
            std::set<int> touched;
            for (std::size_t h = 0; h < facets.size(); ++h) {
                if (h == f) continue;
                for (int v : facets[f].vertices())
                    if (facets[h].contains(v)) touched.insert(v);
            }
            for (std::size_t g = 0; g < facets.size(); ++g) {
                if (g == f) continue;
                for (int v : touched) CHECK(facets[g].contains(v));
            }
        }
    }
}

TEST_CASE("subcollections of forests are forests") {
    std::mt19937_64 rng(31);
    int forests_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex c = testutil::random_complex(rng, 8, 4, 4);
        if (!is_forest(c)) continue;
        ++forests_seen;
        const auto& facets = c.facets();
        for (std::size_t mask = 1; mask < (std::size_t(1) << facets.size()); ++mask) {
            std::vector<Face> sub;
            for (std::size_t k = 0; k < facets.size(); ++k)
                if (mask >> k & 1) sub.push_back(facets[k]);
            CHECK(is_forest(SimplicialComplex::from_facets(sub)));
        }
    }
    CHECK(forests_seen > 5);
}

TEST_CASE("facet count guard") {
    std::vector<Face> many;
    for (int i = 0; i < 26; ++i) many.push_back(Face({i, 100 + i}));
    auto c = SimplicialComplex::from_facets(many);
    CHECK_THROWS_AS(is_forest(c), CapacityError);
}
