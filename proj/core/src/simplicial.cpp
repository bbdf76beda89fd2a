#include "monores/simplicial.hpp"

#include <algorithm>
#include <set>

namespace monores {

Face::Face(std::vector<int> vertices) : verts_(std::move(vertices)) {
    for (int v : verts_)
        if (v < 0) throw Error("negative vertex id");
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

bool Face::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(),
                         verts_.begin(), verts_.end());
}

Face Face::with(int v) const {
    std::vector<int> out = verts_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it == out.end() || *it != v) out.insert(it, v);
    return Face(std::move(out));
}

Face Face::without(int v) const {
    std::vector<int> out = verts_;
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it != out.end() && *it == v) out.erase(it);
    return Face(std::move(out));
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (a.verts_.size() != b.verts_.size())
        return a.verts_.size() < b.verts_.size() ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    return a.verts_ <=> b.verts_;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
    SimplicialComplex out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
            if (i == j) continue;
            if (faces[i] == faces[j]) {
                if (j < i) maximal = false;  // duplicate: first one stays
            } else if (faces[i].subset_of(faces[j])) {
                maximal = false;
            }
        }
        if (maximal) out.facets_.push_back(faces[i]);
    }
    std::set<int> verts;
    for (const Face& f : out.facets_)
        verts.insert(f.vertices().begin(), f.vertices().end());
    out.vertices_.assign(verts.begin(), verts.end());
    return out;
}

int SimplicialComplex::dim() const {
    if (is_void()) throw Error("dim: void complex");
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::contains(const Face& f) const {
    if (is_void()) return false;
    for (const Face& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
    if (d < -1) throw Error("faces_of_dim: dimension below -1");
    std::set<Face> out;
    if (d == -1) {
        if (!is_void()) out.insert(Face());
    } else {
        const std::size_t k = static_cast<std::size_t>(d) + 1;
        for (const Face& facet : facets_) {
            const auto& fv = facet.vertices();
            if (fv.size() < k) continue;
            // enumerate k-subsets of fv
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                std::vector<int> sub(k);
                for (std::size_t i = 0; i < k; ++i) sub[i] = fv[idx[i]];
                out.insert(Face(std::move(sub)));
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == fv.size() - k + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
    std::set<Face> out;
    if (!is_void()) out.insert(Face());
    for (const Face& facet : facets_) {
        const auto& fv = facet.vertices();
        if (fv.size() > 62) throw CapacityError("all_faces: facet too large to enumerate");
        const std::size_t total = std::size_t(1) << fv.size();
        for (std::size_t mask = 1; mask < total; ++mask) {
            std::vector<int> sub;
            for (std::size_t k = 0; k < fv.size(); ++k)
                if (mask >> k & 1) sub.push_back(fv[k]);
            out.insert(Face(std::move(sub)));
            if (out.size() > cap) throw CapacityError("all_faces: face count above cap");
        }
    }
    return {out.begin(), out.end()};
}

std::vector<long long> SimplicialComplex::f_vector() const {
    if (is_void()) throw Error("f_vector: void complex");
    std::vector<long long> fv(static_cast<std::size_t>(dim() + 1), 0);
    for (const Face& f : all_faces())
        if (!f.empty_face()) ++fv[static_cast<std::size_t>(f.dim())];
    return fv;
}

SimplicialComplex SimplicialComplex::induced(std::span<const int> keep) const {
    std::set<int> W(keep.begin(), keep.end());
    std::vector<Face> cut;
    for (const Face& f : facets_) {
        std::vector<int> sub;
        for (int v : f.vertices())
            if (W.count(v)) sub.push_back(v);
        if (!sub.empty()) cut.emplace_back(std::move(sub));
    }
    return from_facets(std::move(cut));  // void when nothing survives
}

bool is_connected(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    if (facets.empty()) throw Error("is_connected: void complex");
    std::vector<bool> seen(facets.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    auto meet = [](const Face& a, const Face& b) {
        const auto& av = a.vertices();
        for (int v : av)
            if (b.contains(v)) return true;
        return false;
    };
    while (!stack.empty()) {
        std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < facets.size(); ++k) {
            if (!seen[k] && meet(facets[cur], facets[k])) {
                seen[k] = true;
                ++reached;
                stack.push_back(k);
            }
        }
    }
    return reached == facets.size();
}

namespace {

// Leaf test on an arbitrary list of facets (a subcollection).
std::optional<LeafInfo> find_leaf_in(const std::vector<const Face*>& facets) {
    if (facets.empty()) return std::nullopt;
    if (facets.size() == 1) return LeafInfo{0, std::nullopt};
    for (std::size_t f = 0; f < facets.size(); ++f) {
        // union of intersections with all other facets
        std::set<int> touched;
        for (std::size_t h = 0; h < facets.size(); ++h) {
            if (h == f) continue;
            for (int v : facets[f]->vertices())
                if (facets[h]->contains(v)) touched.insert(v);
        }
        for (std::size_t g = 0; g < facets.size(); ++g) {
            if (g == f) continue;
            bool inside = true;
            for (int v : touched)
                if (!facets[g]->contains(v)) { inside = false; break; }
            if (inside) return LeafInfo{f, g};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LeafInfo> find_leaf(const SimplicialComplex& complex) {
    std::vector<const Face*> ptrs;
    ptrs.reserve(complex.facets().size());
    for (const Face& f : complex.facets()) ptrs.push_back(&f);
    return find_leaf_in(ptrs);
}

std::optional<std::vector<std::size_t>> leafless_subcollection(const SimplicialComplex& complex) {
    const auto& facets = complex.facets();
    if (facets.empty()) throw Error("leafless_subcollection: void complex");
    if (facets.size() > 25)
        throw CapacityError("leafless_subcollection: more than 25 facets");
    const std::size_t n = facets.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<const Face*> sub;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) {
                sub.push_back(&facets[k]);
                idx.push_back(k);
            }
        if (!find_leaf_in(sub)) return idx;
    }
    return std::nullopt;
}

bool is_forest(const SimplicialComplex& complex) {
    return !leafless_subcollection(complex).has_value();
}

bool is_tree(const SimplicialComplex& complex) {
    return is_forest(complex) && is_connected(complex);
}

}  // namespace monores
