#ifndef MONORES_POLARIZATION_HPP
#define MONORES_POLARIZATION_HPP

#include <utility>
#include <vector>

#include "monores/monomial.hpp"

namespace monores {

/// Exponent splitting x_i^a -> x_{i,1} ... x_{i,a}: the target ring has one
/// variable (i, k) per source variable i and copy 1 <= k <= max exponent of
/// x_i across the generators, ordered i-major then k-minor.
struct PolarizationMap {
    RingPtr source;
    RingPtr target;
    std::vector<std::pair<std::size_t, std::int64_t>> target_vars;  // index -> (source var, copy)
    std::vector<Monomial> images;                                   // per source generator
};

struct PolarizeResult {
    MonomialIdeal ideal;  // squarefree, same generator count, minimal
    PolarizationMap map;
};

PolarizeResult polarize(const MonomialIdeal& ideal);

/// Substitute every x_{i,k} -> x_i; inverse of polarize on generator images.
Monomial depolarize(const PolarizationMap& map, const Monomial& target_monomial);

}  // namespace monores

#endif
