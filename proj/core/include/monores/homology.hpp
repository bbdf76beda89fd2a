#ifndef MONORES_HOMOLOGY_HPP
#define MONORES_HOMOLOGY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "monores/simplicial.hpp"

namespace monores {

/// Coefficient field F_p for homology; p must be prime.
struct FieldConfig {
    std::int64_t characteristic = 32003;
};

void validate(const FieldConfig& field);

/// Column-major sparse matrix with entries mod p.
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

/// Reduced simplicial chain complex: bases[k] holds the faces of dimension
/// k - 1 (so bases[0] = [empty face]), each basis sorted in canonical face
/// order; boundaries[d] maps dimension d to dimension d - 1 with the
/// (-1)^position sign convention on ascending vertex lists.
struct ChainComplexData {
    FieldConfig field;
    std::vector<std::vector<Face>> bases;
    std::vector<SparseMatrix> boundaries;  // index = source dimension, 0..top

    int top_dim() const noexcept { return static_cast<int>(bases.size()) - 2; }
};

/// Build the reduced chain complex; guards total face count at
/// SimplicialComplex::kDefaultFaceCap.
ChainComplexData chain_complex(const SimplicialComplex& complex, const FieldConfig& field);

/// dim H~_d for d = -1..dim as a vector (index 0 <-> d = -1).
/// The void complex yields an empty vector; the empty-face-only complex
/// yields {1}.
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldConfig& field);

bool is_acyclic(const SimplicialComplex& complex, const FieldConfig& field);

/// Exact rank over F_p.  Dense elimination up to 5000 columns, sparse
/// row-echelon elimination beyond.
std::size_t rank_mod_p(const SparseMatrix& m, std::int64_t p);

namespace detail {
std::size_t rank_dense(const SparseMatrix& m, std::int64_t p);
std::size_t rank_sparse(const SparseMatrix& m, std::int64_t p);
}  // namespace detail

}  // namespace monores

#endif
