#ifndef MONORES_SIMPLICIAL_HPP
#define MONORES_SIMPLICIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monores/errors.hpp"

namespace monores {

/// A face: sorted, duplicate-free vertex ids.  May be empty.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<int> vertices);

    std::size_t size() const noexcept { return verts_.size(); }
    int dim() const noexcept { return static_cast<int>(verts_.size()) - 1; }
    bool empty_face() const noexcept { return verts_.empty(); }
    bool contains(int v) const;
    bool subset_of(const Face& other) const;
    const std::vector<int>& vertices() const noexcept { return verts_; }

    Face with(int v) const;
    Face without(int v) const;

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    /// Order by (size, lexicographic vertex list); gives the canonical face order.
    friend std::strong_ordering operator<=>(const Face& a, const Face& b);

private:
    std::vector<int> verts_;
};

/// Abstract simplicial complex in facet representation.  The default-constructed
/// complex is void (no faces at all); from_facets({Face{}}) is the complex whose
/// only face is the empty face.
class SimplicialComplex {
public:
    static constexpr std::size_t kDefaultFaceCap = 2'000'000;

    SimplicialComplex() = default;

    /// Drops duplicate and non-maximal input faces; keeps first-appearance order.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    bool is_void() const noexcept { return facets_.empty(); }
    bool empty_face_only() const noexcept {
        return facets_.size() == 1 && facets_[0].empty_face();
    }
    /// Dimension of the largest facet; requires a non-void complex.
    int dim() const;

    const std::vector<Face>& facets() const noexcept { return facets_; }
    const std::vector<int>& vertices() const noexcept { return vertices_; }
    bool has_vertex(int v) const;
    bool contains(const Face& f) const;

    /// All faces of dimension d (d >= -1), each once, lexicographic order.
    std::vector<Face> faces_of_dim(int d) const;

    /// (f_0, ..., f_dim); requires a non-void complex.
    std::vector<long long> f_vector() const;

    /// Every face including the empty one, sorted by (size, lex).
    /// Throws CapacityError past `cap` faces.
    std::vector<Face> all_faces(std::size_t cap = kDefaultFaceCap) const;

    /// Faces of this complex contained in W; void when no facet meets W.
    SimplicialComplex induced(std::span<const int> keep) const;

private:
    std::vector<int> vertices_;  // sorted
    std::vector<Face> facets_;   // pairwise incomparable, input order
};

/// Facet-intersection-graph connectivity; requires >= 1 facet.
bool is_connected(const SimplicialComplex& complex);

struct LeafInfo {
    std::size_t leaf;                  // facet index
    std::optional<std::size_t> joint;  // absent when the leaf is the only facet
};

/// Lowest-indexed leaf facet with its lowest-indexed witnessing joint,
/// or nullopt when no facet is a leaf.
std::optional<LeafInfo> find_leaf(const SimplicialComplex& complex);

/// First (in subset-mask order) non-empty subcollection without a leaf,
/// as facet indices; nullopt when the complex is a forest.
/// Guard: at most 25 facets.
std::optional<std::vector<std::size_t>> leafless_subcollection(const SimplicialComplex& complex);

bool is_forest(const SimplicialComplex& complex);
bool is_tree(const SimplicialComplex& complex);

}  // namespace monores

#endif
