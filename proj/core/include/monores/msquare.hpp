#ifndef MONORES_MSQUARE_HPP
#define MONORES_MSQUARE_HPP

#include <utility>
#include <vector>

#include "monores/labeled.hpp"
#include "monores/monomial.hpp"
#include "monores/simplicial.hpp"

namespace monores {

/// The complex on C(q,2) + q vertices, one per generator pair (i <= j), whose
/// q facets each hold all off-diagonal vertices plus one diagonal vertex.
/// Vertex ids follow the (i <= j) lexicographic pair order, 0-based.
struct MSquareComplex {
    int q = 0;
    std::vector<std::pair<int, int>> vertex_pairs;  // id -> (i, j), 0-based, i <= j
    SimplicialComplex complex;

    int vertex_id(int i, int j) const;
};

/// Guard: 1 <= q <= 8.  q = 1 is a single point.
MSquareComplex build_mq2(int q);

/// Label each vertex (i, j) with m_i * m_j of the given minimal ideal.
LabeledComplex labeled_by_pair_products(const MSquareComplex& mq, const MonomialIdeal& ideal);

/// The induced subcomplex of build_mq2(q) after deleting vertices whose pair
/// products are redundant, with the (s, t) deletion accounting.
struct M2OfIdeal {
    MSquareComplex ambient;
    LabeledComplex labeled;        // surviving vertices keep their ambient ids
    int s = 0;                     // deleted off-diagonal vertices
    int t = 0;                     // deleted diagonal vertices

    struct Deletion {
        std::pair<int, int> vertex;  // deleted pair (i, j), 0-based
        std::pair<int, int> cause;
        Relation relation;
    };
    std::vector<Deletion> log;
};

/// Deletion rules, evaluated on the original pair-product list (not cascaded):
/// a strict divisor deletes the multiple; equal products delete the pair
/// containing the overall minimum index, so each equal class keeps exactly the
/// member whose minimum index is largest.
M2OfIdeal build_m2_of_ideal(const MonomialIdeal& ideal);

/// The fixed 4-triangle comparison complex on six vertices (ids 0..5 are the
/// figure's v1..v6) with its vertex -> generator-pair correspondence.
struct L32Fixture {
    SimplicialComplex complex;
    std::vector<std::pair<int, int>> vertex_pairs;  // id -> (i, j), 0-based
};

L32Fixture l32_fixture();

}  // namespace monores

#endif
