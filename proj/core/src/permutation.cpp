#include "monores/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace monores {

std::vector<Permutation> all_permutations(int q) {
    std::vector<int> base(static_cast<std::size_t>(q));
    std::iota(base.begin(), base.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back({base});
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

namespace {

RingPtr permutation_ring(const std::vector<Permutation>& perms) {
    std::vector<std::string> names;
    names.reserve(perms.size());
    for (const Permutation& sigma : perms) {
        std::string name = "x";
        for (int v : sigma.one_line) name += std::to_string(v);
        names.push_back(std::move(name));
    }
    return VariableSet::make(std::move(names));
}

}  // namespace

PermutationIdeal build_permutation_ideal(int q) {
    if (q < 1 || q > 5)
        throw CapacityError("build_permutation_ideal: q must be between 1 and 5");
    PermutationIdeal out;
    out.q = q;
    out.permutations = all_permutations(q);
    out.ring = permutation_ring(out.permutations);

    for (int i = 1; i <= q; ++i) {
        std::vector<Monomial::Term> terms;
        for (std::size_t s = 0; s < out.permutations.size(); ++s)
            terms.emplace_back(static_cast<std::uint32_t>(s), out.permutations[s](i));
        out.ideal.generators.emplace_back(out.ring, std::move(terms));
    }
    out.ideal.ring = out.ring;
    out.ideal.minimal = true;
    return out;
}

PermutationIdeal build_reduced_permutation_ideal(int q) {
    if (q < 2 || q > 5)
        throw CapacityError("build_reduced_permutation_ideal: q must be between 2 and 5");
    PermutationIdeal out;
    out.q = q;
    out.permutations = all_permutations(q);
    out.ring = permutation_ring(out.permutations);

    for (int i = 1; i <= q; ++i) {
        std::vector<Monomial::Term> terms;
        for (std::size_t s = 0; s < out.permutations.size(); ++s) {
            const int v = out.permutations[s](i);
            if (v == q - 1 || v == q)
                terms.emplace_back(static_cast<std::uint32_t>(s), v);
        }
        out.ideal.generators.emplace_back(out.ring, std::move(terms));
    }
    out.ideal.ring = out.ring;
    out.ideal.minimal = true;
    return out;
}

EquivalenceCheck check_divisibility_equivalences(const PermutationIdeal& perm) {
    EquivalenceCheck out;
    const int q = perm.q;
    std::map<std::pair<int, int>, Monomial> pairs;
    for (int i = 1; i <= q; ++i)
        for (int j = i; j <= q; ++j)
            pairs.emplace(std::make_pair(i, j),
                          product(perm.ideal.generators[static_cast<std::size_t>(i - 1)],
                                  perm.ideal.generators[static_cast<std::size_t>(j - 1)]));
    for (std::size_t s = 0; s < perm.permutations.size(); ++s) {
        const Permutation& sigma = perm.permutations[s];
        for (int i = 1; i <= q; ++i) {
            for (int j = i; j <= q; ++j) {
                const std::int64_t e = pairs.at({i, j}).exponent(s);
                const bool high = e >= 2 * q;
                const bool high_rhs = (i == j && sigma(i) == q);
                if (high != high_rhs) {
                    out.ok = false;
                    out.counterexample = EquivalenceCheck::Counterexample{s, i, j, 1};
                    return out;
                }
                const bool near = !high && e >= 2 * q - 1;
                const bool near_rhs =
                    (std::min(sigma(i), sigma(j)) == q - 1 && std::max(sigma(i), sigma(j)) == q);
                if (near != near_rhs) {
                    out.ok = false;
                    out.counterexample = EquivalenceCheck::Counterexample{s, i, j, 2};
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace monores
