#include "monores/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace monores {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [_, inserted] = index_.emplace(names_[i], i);
        if (!inserted)
            throw Error("duplicate variable name '" + names_[i] + "'");
    }
}

RingPtr VariableSet::make(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!same_ring(a, b))
        throw RingMismatchError(std::string(op) + ": operands live over different variable sets");
}

Monomial::Monomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error("monomial requires a variable set");
}

Monomial::Monomial(RingPtr ring, std::vector<Term> exponents)
    : ring_(std::move(ring)), terms_(std::move(exponents)) {
    if (!ring_) throw Error("monomial requires a variable set");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.first >= ring_->size())
            throw Error("variable index out of range");
        if (t.second < 0)
            throw Error("negative exponent");
        if (t.second == 0) continue;
        if (!merged.empty() && merged.back().first == t.first) {
            if (__builtin_add_overflow(merged.back().second, t.second, &merged.back().second))
                throw OverflowError("exponent overflow");
        } else {
            merged.push_back(t);
        }
    }
    terms_ = std::move(merged);
}

Monomial Monomial::from_dense(RingPtr ring, std::span<const std::int64_t> exponents) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] != 0)
            terms.emplace_back(static_cast<std::uint32_t>(i), exponents[i]);
    return Monomial(std::move(ring), std::move(terms));
}

std::int64_t Monomial::exponent(std::size_t var) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                               [](const Term& t, std::size_t v) { return t.first < v; });
    if (it == terms_.end() || it->first != var) return 0;
    return it->second;
}

std::int64_t Monomial::degree() const {
    std::int64_t sum = 0;
    for (const Term& t : terms_)
        if (__builtin_add_overflow(sum, t.second, &sum))
            throw OverflowError("degree overflow");
    return sum;
}

std::vector<std::int64_t> Monomial::dense() const {
    std::vector<std::int64_t> out(ring_->size(), 0);
    for (const Term& t : terms_) out[t.first] = t.second;
    return out;
}

std::string Monomial::str() const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += '*';
        out += ring_->name(t.first);
        if (t.second != 1) {
            out += '^';
            out += std::to_string(t.second);
        }
    }
    return out;
}

bool operator==(const Monomial& a, const Monomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    // Sparse walk equivalent to lexicographic comparison of dense vectors.
    std::size_t ia = 0, ib = 0;
    while (ia < a.terms_.size() || ib < b.terms_.size()) {
        std::uint32_t va = ia < a.terms_.size() ? a.terms_[ia].first
                                                : std::numeric_limits<std::uint32_t>::max();
        std::uint32_t vb = ib < b.terms_.size() ? b.terms_[ib].first
                                                : std::numeric_limits<std::uint32_t>::max();
        if (va < vb) return std::strong_ordering::greater;  // a has extra positive exponent first
        if (vb < va) return std::strong_ordering::less;
        if (a.terms_[ia].second != b.terms_[ib].second)
            return a.terms_[ia].second < b.terms_[ib].second ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
        ++ia;
        ++ib;
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (8 * k)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const Term& t : terms_) {
        mix(t.first);
        mix(static_cast<std::uint64_t>(t.second));
    }
    return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "lcm");
    std::vector<Monomial::Term> out;
    auto ta = a.terms(), tb = b.terms();
    std::size_t ia = 0, ib = 0;
    while (ia < ta.size() || ib < tb.size()) {
        if (ib == tb.size() || (ia < ta.size() && ta[ia].first < tb[ib].first)) {
            out.push_back(ta[ia++]);
        } else if (ia == ta.size() || tb[ib].first < ta[ia].first) {
            out.push_back(tb[ib++]);
        } else {
            out.emplace_back(ta[ia].first, std::max(ta[ia].second, tb[ib].second));
            ++ia;
            ++ib;
        }
    }
    return Monomial(a.ring(), std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "divides");
    auto ta = a.terms(), tb = b.terms();
    std::size_t ib = 0;
    for (const auto& t : ta) {
        while (ib < tb.size() && tb[ib].first < t.first) ++ib;
        if (ib == tb.size() || tb[ib].first != t.first || tb[ib].second < t.second)
            return false;
    }
    return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring(), "product");
    std::vector<Monomial::Term> out;
    auto ta = a.terms(), tb = b.terms();
    std::size_t ia = 0, ib = 0;
    while (ia < ta.size() || ib < tb.size()) {
        if (ib == tb.size() || (ia < ta.size() && ta[ia].first < tb[ib].first)) {
            out.push_back(ta[ia++]);
        } else if (ia == ta.size() || tb[ib].first < ta[ia].first) {
            out.push_back(tb[ib++]);
        } else {
            std::int64_t sum;
            if (__builtin_add_overflow(ta[ia].second, tb[ib].second, &sum))
                throw OverflowError("exponent overflow in product");
            out.emplace_back(ta[ia].first, sum);
            ++ia;
            ++ib;
        }
    }
    return Monomial(a.ring(), std::move(out));
}

MinimalizeResult minimalize(const std::vector<Monomial>& generators) {
    if (generators.empty())
        throw EmptyIdealError("minimalize: empty generator list");
    const RingPtr& ring = generators.front().ring();
    for (const Monomial& g : generators)
        require_same_ring(ring, g.ring(), "minimalize");

    const std::size_t n = generators.size();
    MinimalizeResult res;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<std::size_t> by;
        for (std::size_t j = 0; j < n && !by; ++j) {
            if (j == i) continue;
            if (generators[j] == generators[i]) {
                if (j < i) by = j;  // earliest duplicate survives
            } else if (divides(generators[j], generators[i])) {
                by = j;
            }
        }
        if (by)
            res.removals.push_back({i, *by});
        else
            res.ideal.generators.push_back(generators[i]);
    }
    res.ideal.ring = ring;
    res.ideal.minimal = true;
    return res;
}

SquarePresentation square(const MonomialIdeal& ideal) {
    if (!ideal.minimal)
        throw Error("square: ideal must be minimally generated");
    if (ideal.generators.empty())
        throw EmptyIdealError("square: empty ideal");

    SquarePresentation out;
    out.base = ideal;
    const std::size_t q = ideal.generators.size();
    std::vector<Monomial> products;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i; j < q; ++j) {
            out.pairs.push_back({i, j, product(ideal.generators[i], ideal.generators[j]),
                                 true, std::nullopt, std::nullopt});
            products.push_back(out.pairs.back().value);
        }

    MinimalizeResult min = minimalize(products);
    for (const Removal& r : min.removals) {
        PairProduct& p = out.pairs[r.removed];
        p.kept = false;
        p.cause = std::make_pair(out.pairs[r.by].i, out.pairs[r.by].j);
        p.relation = (out.pairs[r.by].value == p.value) ? Relation::equal : Relation::strict;
    }
    out.minimal_square = std::move(min.ideal);
    return out;
}

std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& generators) {
    if (generators.empty())
        throw EmptyIdealError("lcm_lattice: empty generator list");
    const std::size_t q = generators.size();
    if (q > 22)
        throw CapacityError("lcm_lattice: more than 22 generators");
    const RingPtr& ring = generators.front().ring();
    for (const Monomial& g : generators)
        require_same_ring(ring, g.ring(), "lcm_lattice");

    // labels[mask] = lcm of generators in mask, built from the low-bit recurrence
    std::vector<Monomial> labels;
    labels.reserve(std::size_t(1) << q);
    labels.emplace_back(ring);  // mask 0: unused placeholder (the unit)
    for (std::size_t mask = 1; mask < (std::size_t(1) << q); ++mask) {
        std::size_t low = mask & (~mask + 1);
        std::size_t k = std::countr_zero(mask);
        if (mask == low)
            labels.push_back(generators[k]);
        else
            labels.push_back(lcm(labels[mask ^ low], generators[k]));
    }
    labels.erase(labels.begin());
    std::sort(labels.begin(), labels.end(),
              [](const Monomial& a, const Monomial& b) { return a > b; });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

}  // namespace monores
