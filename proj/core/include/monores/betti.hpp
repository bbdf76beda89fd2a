#ifndef MONORES_BETTI_HPP
#define MONORES_BETTI_HPP

#include <map>
#include <utility>
#include <vector>

#include "monores/labeled.hpp"

namespace monores {

/// Multigraded Betti numbers of an ideal (resolving I, not S/I): beta_0
/// counts minimal generators and pd is the resolution length.
struct BettiTable {
    std::map<std::pair<int, Monomial>, long long> entries;  // (i, degree) -> dim, dims > 0 only
    std::vector<long long> totals;                          // beta_0..beta_pd
    int pd = 0;
};

/// The upper Koszul complex of I at degree a: squarefree tau <= a on supp(a)
/// with x^(a - tau) in I.  Guard: |supp(a)| <= 25.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a);

/// beta_{i,a}(I) = dim H~_{i-1}(upper_koszul(I, a)) over the lcm lattice of G(I).
BettiTable betti_koszul(const MonomialIdeal& ideal, const FieldConfig& field);

/// beta_{i,m}(I) = dim H~_{i-1}(strict_restrict(L, m)) for a labeled complex L
/// that supports a resolution of I; the support precondition is verified and a
/// SupportError carrying the witness is thrown when it fails.
BettiTable betti_supported(const LabeledComplex& lc, const MonomialIdeal& ideal,
                           const FieldConfig& field);

int projective_dimension(const BettiTable& table);

/// Generator-count bound: entry d is C(q(q-1)/2, d+1) + q*C(q(q-1)/2, d),
/// for d = 0..C(q,2).  Requires q >= 2.
std::vector<long long> bound_cor1(int q);

/// Deletion-aware bound: entry d is C((q^2-q-2s)/2, d+1) + (q-t)*C(..., d),
/// for d = 0..C(q,2).  Requires 0 <= s <= C(q,2) and 0 <= t <= q.
std::vector<long long> bound_cor2(int q, int s, int t);

}  // namespace monores

#endif
