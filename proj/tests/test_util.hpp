#ifndef MONORES_TEST_UTIL_HPP
#define MONORES_TEST_UTIL_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monores/ideal_io.hpp"
#include "monores/monomial.hpp"
#include "monores/simplicial.hpp"

namespace testutil {

inline monores::RingPtr ring_n(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return monores::VariableSet::make(std::move(names));
}

inline monores::Monomial mono(const monores::RingPtr& ring,
                              const std::vector<std::int64_t>& exps) {
    return monores::Monomial::from_dense(ring, exps);
}

inline std::string fixture_path(const std::string& name) {
    return std::string(MONORES_FIXTURES) + "/" + name;
}

inline monores::LoadedIdeal load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return monores::load_ideal(monores::parse_document(ss.str()));
}

/// Random ideal with exactly q minimal generators over n variables.
/// Throws when the (n, q, max_exp) combination keeps failing.
inline monores::MonomialIdeal random_minimal_ideal(std::mt19937_64& rng, int n, int q,
                                                   int max_exp) {
    monores::RingPtr ring = ring_n(n);
    std::uniform_int_distribution<std::int64_t> exp(0, max_exp);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<monores::Monomial> gens;
        for (int tries = 0; static_cast<int>(gens.size()) < q && tries < 400; ++tries) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(n));
            std::int64_t total = 0;
            for (auto& v : e) total += (v = exp(rng));
            if (total == 0) continue;
            gens.push_back(mono(ring, e));
            if (monores::minimalize(gens).ideal.generators.size() != gens.size())
                gens.pop_back();
        }
        if (static_cast<int>(gens.size()) == q)
            return monores::MonomialIdeal{ring, std::move(gens), true};
    }
    throw monores::Error("random_minimal_ideal: no antichain of the requested size found");
}

/// Random small complex: up to `facets` facets over `verts` vertices.
inline monores::SimplicialComplex random_complex(std::mt19937_64& rng, int verts, int facets,
                                                 int max_facet_size) {
    std::uniform_int_distribution<int> nf(1, facets);
    std::uniform_int_distribution<int> sz(1, max_facet_size);
    std::uniform_int_distribution<int> pick(0, verts - 1);
    std::vector<monores::Face> out;
    const int k = nf(rng);
    for (int f = 0; f < k; ++f) {
        std::vector<int> vs;
        const int s = sz(rng);
        for (int i = 0; i < s; ++i) vs.push_back(pick(rng));
        out.emplace_back(std::move(vs));
    }
    return monores::SimplicialComplex::from_facets(std::move(out));
}

}  // namespace testutil

#endif
