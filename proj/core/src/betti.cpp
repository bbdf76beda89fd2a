#include "monores/betti.hpp"

#include <algorithm>

namespace monores {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

void accumulate_homology(BettiTable& table, const Monomial& degree,
                         const std::vector<long long>& h) {
    // h[k] = dim H~_{k-1}, which contributes to beta_k
    for (std::size_t k = 0; k < h.size(); ++k)
        if (h[k] != 0) table.entries[{static_cast<int>(k), degree}] += h[k];
}

void finalize(BettiTable& table) {
    int pd = 0;
    for (const auto& [key, v] : table.entries) pd = std::max(pd, key.first);
    table.pd = pd;
    table.totals.assign(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [key, v] : table.entries)
        table.totals[static_cast<std::size_t>(key.first)] += v;
}

}  // namespace

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a) {
    require_same_ring(ideal.ring, a.ring(), "upper_koszul");
    std::vector<std::uint32_t> supp;
    for (const auto& [var, e] : a.terms()) supp.push_back(var);
    if (supp.size() > 25)
        throw CapacityError("upper_koszul: support larger than 25 variables");

    std::vector<std::int64_t> dense = a.dense();
    std::vector<Face> faces;
    const std::size_t total = std::size_t(1) << supp.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<std::int64_t> b = dense;
        std::vector<int> verts;
        for (std::size_t k = 0; k < supp.size(); ++k)
            if (mask >> k & 1) {
                b[supp[k]] -= 1;
                verts.push_back(static_cast<int>(supp[k]));
            }
        Monomial quotient = Monomial::from_dense(a.ring(), b);
        bool inside = false;
        for (const Monomial& g : ideal.generators)
            if (divides(g, quotient)) { inside = true; break; }
        if (inside) faces.emplace_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(std::move(faces));
}

BettiTable betti_koszul(const MonomialIdeal& ideal, const FieldConfig& field) {
    if (!ideal.minimal) throw Error("betti_koszul: ideal must be minimal");
    validate(field);
    BettiTable table;
    for (const Monomial& a : lcm_lattice(ideal.generators)) {
        SimplicialComplex K = upper_koszul(ideal, a);
        if (K.is_void()) continue;
        accumulate_homology(table, a, reduced_homology_dims(K, field));
    }
    finalize(table);
    return table;
}

BettiTable betti_supported(const LabeledComplex& lc, const MonomialIdeal& ideal,
                           const FieldConfig& field) {
    if (!ideal.minimal) throw Error("betti_supported: ideal must be minimal");
    SupportReport support =
        supports_resolution(lc, ideal.generators, SupportMethod::automatic, field);
    if (!support.supports)
        throw SupportError("betti_supported: complex does not support a resolution "
                           "(failing degree " + support.witness->degree.str() + ")");

    BettiTable table;
    for (const Monomial& m : lcm_lattice(ideal.generators)) {
        SimplicialComplex strict = strict_restrict(lc, m);
        if (strict.is_void()) continue;
        accumulate_homology(table, m, reduced_homology_dims(strict, field));
    }
    finalize(table);
    return table;
}

int projective_dimension(const BettiTable& table) { return table.pd; }

std::vector<long long> bound_cor1(int q) {
    if (q < 2) throw Error("bound_cor1: q must be at least 2");
    const long long off = static_cast<long long>(q) * (q - 1) / 2;
    std::vector<long long> out;
    for (long long d = 0; d <= off; ++d)
        out.push_back(binom(off, d + 1) + q * binom(off, d));
    return out;
}

std::vector<long long> bound_cor2(int q, int s, int t) {
    if (q < 2) throw Error("bound_cor2: q must be at least 2");
    const long long off = static_cast<long long>(q) * (q - 1) / 2;
    if (s < 0 || s > off) throw Error("bound_cor2: s out of range");
    if (t < 0 || t > q) throw Error("bound_cor2: t out of range");
    const long long kept = off - s;
    std::vector<long long> out;
    for (long long d = 0; d <= off; ++d)
        out.push_back(binom(kept, d + 1) + (q - t) * binom(kept, d));
    return out;
}

}  // namespace monores
