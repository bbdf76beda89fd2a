#include "monores/polarization.hpp"

#include <algorithm>

namespace monores {

PolarizeResult polarize(const MonomialIdeal& ideal) {
    if (!ideal.minimal) throw Error("polarize: ideal must be minimal");
    if (ideal.generators.empty()) throw EmptyIdealError("polarize: empty ideal");

    const std::size_t n = ideal.ring->size();
    std::vector<std::int64_t> max_exp(n, 0);
    for (const Monomial& g : ideal.generators)
        for (const auto& [var, e] : g.terms())
            max_exp[var] = std::max(max_exp[var], e);

    PolarizeResult out;
    out.map.source = ideal.ring;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t k = 1; k <= max_exp[i]; ++k) {
            out.map.target_vars.emplace_back(i, k);
            names.push_back(ideal.ring->name(i) + "_" + std::to_string(k));
        }
    out.map.target = VariableSet::make(std::move(names));

    // first copy index of each source variable in the target ring
    std::vector<std::size_t> offset(n, 0);
    for (std::size_t i = 1; i < n; ++i)
        offset[i] = offset[i - 1] + static_cast<std::size_t>(max_exp[i - 1]);

    for (const Monomial& g : ideal.generators) {
        std::vector<Monomial::Term> terms;
        for (const auto& [var, e] : g.terms())
            for (std::int64_t k = 0; k < e; ++k)
                terms.emplace_back(static_cast<std::uint32_t>(offset[var] + static_cast<std::size_t>(k)), 1);
        out.map.images.emplace_back(out.map.target, std::move(terms));
    }
    out.ideal.ring = out.map.target;
    out.ideal.generators = out.map.images;
    out.ideal.minimal = true;
    return out;
}

Monomial depolarize(const PolarizationMap& map, const Monomial& target_monomial) {
    require_same_ring(map.target, target_monomial.ring(), "depolarize");
    std::vector<std::int64_t> dense(map.source->size(), 0);
    for (const auto& [var, e] : target_monomial.terms())
        dense[map.target_vars.at(var).first] += e;
    return Monomial::from_dense(map.source, dense);
}

}  // namespace monores
