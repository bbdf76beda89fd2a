#ifndef MONORES_MONOMIAL_HPP
#define MONORES_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monores/errors.hpp"

namespace monores {

/// Ordered set of distinct variable names.  Order is fixed at construction;
/// instances are shared immutably via RingPtr.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    static std::shared_ptr<const VariableSet> make(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const VariableSet>;

/// Same ring = same object or identical name lists.
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op);

/// A monomial as a sparse exponent vector over a VariableSet.  Stored
/// exponents are >= 1 (zeros elided); the empty vector is the unit monomial.
class Monomial {
public:
    using Term = std::pair<std::uint32_t, std::int64_t>;  // (variable index, exponent)

    explicit Monomial(RingPtr ring);  // the unit 1
    Monomial(RingPtr ring, std::vector<Term> exponents);
    static Monomial from_dense(RingPtr ring, std::span<const std::int64_t> exponents);

    const RingPtr& ring() const noexcept { return ring_; }
    bool is_one() const noexcept { return terms_.empty(); }
    std::int64_t exponent(std::size_t var) const;
    std::int64_t degree() const;
    std::span<const Term> terms() const noexcept { return terms_; }
    std::vector<std::int64_t> dense() const;

    /// Grammar form: "x^2*y", or "1" for the unit.
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b);
    /// Lexicographic comparison of dense exponent vectors.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const noexcept;

private:
    RingPtr ring_;
    std::vector<Term> terms_;  // sorted by variable index, exponents >= 1
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

struct MonomialIdeal {
    RingPtr ring;
    std::vector<Monomial> generators;
    bool minimal = false;
};

struct Removal {
    std::size_t removed;  // index into the input list
    std::size_t by;       // index of the generator that made it redundant
};

struct MinimalizeResult {
    MonomialIdeal ideal;  // survivors in input order, minimal = true
    std::vector<Removal> removals;
};

/// Remove duplicates (earliest occurrence kept) and generators divisible by
/// another.  The "by" index is the first divisor in input order.
MinimalizeResult minimalize(const std::vector<Monomial>& generators);

enum class Relation { equal, strict };

struct PairProduct {
    std::size_t i, j;  // i <= j, indices into the base generators
    Monomial value;
    bool kept;
    std::optional<std::pair<std::size_t, std::size_t>> cause;
    std::optional<Relation> relation;
};

/// The square of an ideal presented through its generator pair products.
struct SquarePresentation {
    MonomialIdeal base;
    std::vector<PairProduct> pairs;  // (i <= j) in lexicographic order
    MonomialIdeal minimal_square;
};

/// All pair products m_i m_j with redundancy provenance; requires I minimal.
SquarePresentation square(const MonomialIdeal& ideal);

/// Deduplicated lcms over all non-empty generator subsets, in descending
/// lexicographic order of exponent vectors (the canonical lattice order).
std::vector<Monomial> lcm_lattice(const std::vector<Monomial>& generators);

}  // namespace monores

#endif
