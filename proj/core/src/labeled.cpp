#include "monores/labeled.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace monores {

LabeledComplex make_labeled(SimplicialComplex complex, std::map<int, Monomial> labels) {
    LabeledComplex lc{std::move(complex), std::move(labels), nullptr};
    for (int v : lc.complex.vertices()) {
        auto it = lc.labels.find(v);
        if (it == lc.labels.end())
            throw Error("make_labeled: vertex " + std::to_string(v) + " has no label");
        if (!lc.ring)
            lc.ring = it->second.ring();
        else
            require_same_ring(lc.ring, it->second.ring(), "make_labeled");
    }
    if (!lc.ring && !lc.labels.empty()) lc.ring = lc.labels.begin()->second.ring();
    if (!lc.ring) throw Error("make_labeled: cannot infer the variable set");
    return lc;
}

Monomial face_label(const LabeledComplex& lc, const Face& face) {
    if (!lc.complex.contains(face))
        throw Error("face_label: not a face of the complex");
    Monomial out(lc.ring);
    for (int v : face.vertices()) out = lcm(out, lc.labels.at(v));
    return out;
}

LabeledComplex restrict_to_degree(const LabeledComplex& lc, const Monomial& m) {
    require_same_ring(lc.ring, m.ring(), "restrict_to_degree");
    std::vector<int> keep;
    for (int v : lc.complex.vertices())
        if (divides(lc.labels.at(v), m)) keep.push_back(v);
    LabeledComplex out;
    out.complex = lc.complex.induced(keep);
    out.ring = lc.ring;
    for (int v : out.complex.vertices()) out.labels.emplace(v, lc.labels.at(v));
    return out;
}

SimplicialComplex strict_restrict(const LabeledComplex& lc, const Monomial& m) {
    require_same_ring(lc.ring, m.ring(), "strict_restrict");
    LabeledComplex sub = restrict_to_degree(lc, m);
    if (sub.complex.is_void()) {
        // only the empty face can remain, and only when m != 1
        if (!m.is_one()) return SimplicialComplex::from_facets({Face()});
        return SimplicialComplex();
    }
    std::vector<Face> kept;
    for (const Face& f : sub.complex.all_faces()) {
        Monomial label(lc.ring);
        for (int v : f.vertices()) label = lcm(label, lc.labels.at(v));
        if (!(label == m)) kept.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(kept));
}

LabeledComplex taylor_complex(const MonomialIdeal& ideal) {
    if (!ideal.minimal) throw Error("taylor_complex: ideal must be minimal");
    const std::size_t q = ideal.generators.size();
    if (q == 0) throw EmptyIdealError("taylor_complex: empty ideal");
    if (q > 20) throw CapacityError("taylor_complex: more than 20 generators");
    std::vector<int> all(q);
    for (std::size_t i = 0; i < q; ++i) all[i] = static_cast<int>(i);
    std::map<int, Monomial> labels;
    for (std::size_t i = 0; i < q; ++i)
        labels.emplace(static_cast<int>(i), ideal.generators[i]);
    return make_labeled(SimplicialComplex::from_facets({Face(all)}), std::move(labels));
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal) {
    if (!ideal.minimal) throw Error("scarf_complex: ideal must be minimal");
    const std::size_t q = ideal.generators.size();
    if (q == 0) throw EmptyIdealError("scarf_complex: empty ideal");
    if (q > 16) throw CapacityError("scarf_complex: more than 16 generators");

    const std::size_t total = std::size_t(1) << q;
    std::vector<Monomial> label(total, Monomial(ideal.ring));
    std::unordered_map<Monomial, std::size_t, MonomialHash> count;
    count.reserve(total * 2);
    count[label[0]] = 1;  // the empty face, labeled 1
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t k = static_cast<std::size_t>(std::countr_zero(mask));
        label[mask] = (mask == low) ? ideal.generators[k]
                                    : lcm(label[mask ^ low], ideal.generators[k]);
        ++count[label[mask]];
    }

    std::vector<bool> unique(total);
    for (std::size_t mask = 0; mask < total; ++mask)
        unique[mask] = (count.at(label[mask]) == 1);

    // downward-closure check: a unique face must have unique codimension-1 subfaces
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (!unique[mask]) continue;
        for (std::size_t k = 0; k < q; ++k)
            if ((mask >> k & 1) && !unique[mask ^ (std::size_t(1) << k)])
                throw Error("scarf_complex: unique-label face set is not downward closed");
    }

    std::vector<Face> faces;
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (!unique[mask]) continue;
        std::vector<int> verts;
        for (std::size_t k = 0; k < q; ++k)
            if (mask >> k & 1) verts.push_back(static_cast<int>(k));
        faces.emplace_back(std::move(verts));
    }
    std::map<int, Monomial> labels;
    for (std::size_t i = 0; i < q; ++i)
        labels.emplace(static_cast<int>(i), ideal.generators[i]);
    if (faces.empty()) faces.push_back(Face());  // only the empty face is Scarf
    SimplicialComplex sc = SimplicialComplex::from_facets(std::move(faces));
    std::map<int, Monomial> present;
    for (int v : sc.vertices()) present.emplace(v, labels.at(v));
    return make_labeled(std::move(sc), std::move(present));
}

SupportReport supports_resolution(const LabeledComplex& lc,
                                  const std::vector<Monomial>& generators,
                                  SupportMethod method, const FieldConfig& field,
                                  bool check_minimality) {
    validate(field);
    if (generators.empty()) throw EmptyIdealError("supports_resolution: no generators");
    for (const Monomial& g : generators)
        require_same_ring(lc.ring, g.ring(), "supports_resolution");

    // vertex labels must equal the generators as multisets
    std::vector<Monomial> a, b = generators;
    for (int v : lc.complex.vertices()) a.push_back(lc.labels.at(v));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw Error("supports_resolution: vertex labels differ from the generators");

    SupportReport report;
    const bool forest = is_forest(lc.complex);
    switch (method) {
        case SupportMethod::automatic:
            report.method_used = forest ? SupportMethod::connectivity : SupportMethod::homology;
            break;
        case SupportMethod::connectivity:
            if (!forest)
                throw MethodError("connectivity criterion requires a simplicial forest");
            report.method_used = SupportMethod::connectivity;
            break;
        case SupportMethod::homology:
            report.method_used = SupportMethod::homology;
            break;
    }

    report.supports = true;
    for (const Monomial& m : lcm_lattice(generators)) {
        ++report.checked_degrees;
        LabeledComplex sub = restrict_to_degree(lc, m);
        if (sub.complex.is_void()) continue;  // empty restriction passes
        if (report.method_used == SupportMethod::connectivity) {
            if (!is_connected(sub.complex)) {
                report.supports = false;
                report.witness = SupportReport::Witness{m, SupportReport::Reason::disconnected};
                break;
            }
        } else {
            std::vector<long long> h = reduced_homology_dims(sub.complex, field);
            bool bad = false, h0 = false;
            for (std::size_t d = 0; d < h.size(); ++d)
                if (h[d] != 0) {
                    bad = true;
                    h0 = (d == 1);  // index 1 <-> reduced H_0
                    break;
                }
            if (bad) {
                report.supports = false;
                report.witness = SupportReport::Witness{
                    m, h0 ? SupportReport::Reason::disconnected
                          : SupportReport::Reason::not_acyclic};
                break;
            }
        }
    }

    if (check_minimality && report.supports) {
        MinimalityResult mr = is_minimal_support(lc);
        report.minimal = mr.minimal;
        report.minimality_witness = mr.witness;
    }
    return report;
}

MinimalityResult is_minimal_support(const LabeledComplex& lc) {
    MinimalityResult out;
    if (lc.complex.is_void()) return out;
    std::vector<Face> faces = lc.complex.all_faces();
    std::map<Face, Monomial> label;
    for (const Face& f : faces) {
        // faces are sorted by (size, lex): subfaces are already labeled
        if (f.empty_face()) {
            label.emplace(f, Monomial(lc.ring));
            continue;
        }
        const int last = f.vertices().back();
        label.emplace(f, lcm(label.at(f.without(last)), lc.labels.at(last)));
    }
    for (const Face& f : faces) {
        for (int v : lc.complex.vertices()) {
            if (f.contains(v)) continue;
            Face up = f.with(v);
            auto it = label.find(up);
            if (it == label.end()) continue;  // not a face
            if (it->second == label.at(f)) {
                out.minimal = false;
                out.witness = std::make_pair(f, up);
                return out;
            }
        }
    }
    return out;
}

}  // namespace monores
