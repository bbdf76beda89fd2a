#include "monores/msquare.hpp"

#include <algorithm>

namespace monores {

int MSquareComplex::vertex_id(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (std::size_t k = 0; k < vertex_pairs.size(); ++k)
        if (vertex_pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
    throw Error("vertex_id: pair out of range");
}

MSquareComplex build_mq2(int q) {
    if (q < 1 || q > 8) throw CapacityError("build_mq2: q must be between 1 and 8");
    MSquareComplex out;
    out.q = q;
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j)
            out.vertex_pairs.emplace_back(i, j);

    std::vector<int> off_diagonal;
    for (std::size_t id = 0; id < out.vertex_pairs.size(); ++id)
        if (out.vertex_pairs[id].first != out.vertex_pairs[id].second)
            off_diagonal.push_back(static_cast<int>(id));

    std::vector<Face> facets;
    for (int i = 0; i < q; ++i) {
        std::vector<int> verts = off_diagonal;
        verts.push_back(out.vertex_id(i, i));
        facets.emplace_back(std::move(verts));
    }
    out.complex = SimplicialComplex::from_facets(std::move(facets));
    return out;
}

LabeledComplex labeled_by_pair_products(const MSquareComplex& mq, const MonomialIdeal& ideal) {
    if (!ideal.minimal) throw Error("labeled_by_pair_products: ideal must be minimal");
    if (static_cast<int>(ideal.generators.size()) != mq.q)
        throw Error("labeled_by_pair_products: generator count differs from q");
    std::map<int, Monomial> labels;
    for (std::size_t id = 0; id < mq.vertex_pairs.size(); ++id) {
        const auto [i, j] = mq.vertex_pairs[id];
        labels.emplace(static_cast<int>(id),
                       product(ideal.generators[static_cast<std::size_t>(i)],
                               ideal.generators[static_cast<std::size_t>(j)]));
    }
    return make_labeled(mq.complex, std::move(labels));
}

M2OfIdeal build_m2_of_ideal(const MonomialIdeal& ideal) {
    if (!ideal.minimal) throw Error("build_m2_of_ideal: ideal must be minimal");
    const int q = static_cast<int>(ideal.generators.size());
    M2OfIdeal out;
    out.ambient = build_mq2(q);

    const auto& pairs = out.ambient.vertex_pairs;
    const std::size_t n = pairs.size();
    std::vector<Monomial> prod;
    prod.reserve(n);
    for (const auto& [i, j] : pairs)
        prod.push_back(product(ideal.generators[static_cast<std::size_t>(i)],
                               ideal.generators[static_cast<std::size_t>(j)]));

    std::vector<int> keep;
    for (std::size_t a = 0; a < n; ++a) {
        // strict rule first: any strictly dividing product deletes this vertex
        std::optional<std::size_t> strict_cause;
        for (std::size_t b = 0; b < n && !strict_cause; ++b)
            if (b != a && !(prod[b] == prod[a]) && divides(prod[b], prod[a]))
                strict_cause = b;
        if (strict_cause) {
            out.log.push_back({pairs[a], pairs[*strict_cause], Relation::strict});
            continue;
        }
        // equal rule: within an equal class the survivor is the pair whose
        // minimum index is largest (pairwise deletion of the global-min pair,
        // run to its fixpoint)
        std::size_t survivor = a;
        for (std::size_t b = 0; b < n; ++b)
            if (b != a && prod[b] == prod[a] &&
                std::min(pairs[b].first, pairs[b].second) >
                    std::min(pairs[survivor].first, pairs[survivor].second))
                survivor = b;
        if (survivor != a) {
            out.log.push_back({pairs[a], pairs[survivor], Relation::equal});
            continue;
        }
        keep.push_back(static_cast<int>(a));
    }

    for (const auto& d : out.log)
        (d.vertex.first == d.vertex.second ? out.t : out.s) += 1;

    std::map<int, Monomial> labels;
    for (int id : keep) labels.emplace(id, prod[static_cast<std::size_t>(id)]);
    SimplicialComplex sub = out.ambient.complex.induced(keep);
    out.labeled = make_labeled(std::move(sub), std::move(labels));
    return out;
}

L32Fixture l32_fixture() {
    L32Fixture out;
    out.complex = SimplicialComplex::from_facets({
        Face({0, 1, 5}),  // v1 v2 v6
        Face({1, 2, 3}),  // v2 v3 v4
        Face({3, 4, 5}),  // v4 v5 v6
        Face({1, 3, 5}),  // v2 v4 v6
    });
    out.vertex_pairs = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {0, 2}};
    return out;
}

}  // namespace monores
