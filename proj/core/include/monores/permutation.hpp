#ifndef MONORES_PERMUTATION_HPP
#define MONORES_PERMUTATION_HPP

#include <optional>
#include <vector>

#include "monores/monomial.hpp"

namespace monores {

/// One-line notation: sigma(j) is the entry in position j (1-based).
struct Permutation {
    std::vector<int> one_line;

    int operator()(int j) const { return one_line.at(static_cast<std::size_t>(j - 1)); }
    int size() const { return static_cast<int>(one_line.size()); }
};

/// All permutations of [q] in lexicographic one-line order.
std::vector<Permutation> all_permutations(int q);

/// The ideal in q! variables (one per permutation, lexicographic one-line
/// order) whose i-th generator has exponent sigma(i) on the variable of sigma.
struct PermutationIdeal {
    int q = 0;
    RingPtr ring;
    std::vector<Permutation> permutations;  // variable order
    MonomialIdeal ideal;                    // generators tau_1..tau_q, minimal
};

/// Guard: 1 <= q <= 5 (the ring has q! variables).
PermutationIdeal build_permutation_ideal(int q);

/// Variant keeping only the exponents sigma(i) in {q-1, q}; same ring.
/// Guard: 2 <= q <= 5.
PermutationIdeal build_reduced_permutation_ideal(int q);

/// Exhaustive check of the two divisibility equivalences over all sigma and
/// all pairs i <= j:
///   x_sigma^(2q)  | tau_i tau_j  <=>  i = j and sigma(i) = q
///   x_sigma^(2q) does not divide but x_sigma^(2q-1) does  <=>  {sigma(i), sigma(j)} = {q, q-1}
struct EquivalenceCheck {
    bool ok = true;
    struct Counterexample {
        std::size_t sigma_index;
        int i, j;          // 1-based generator indices
        int which;         // 1 or 2: the equivalence that failed
    };
    std::optional<Counterexample> counterexample;
};

EquivalenceCheck check_divisibility_equivalences(const PermutationIdeal& perm);

}  // namespace monores

#endif
