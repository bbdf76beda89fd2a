#ifndef MONORES_LABELED_HPP
#define MONORES_LABELED_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monores/homology.hpp"
#include "monores/monomial.hpp"
#include "monores/simplicial.hpp"

namespace monores {

/// A simplicial complex with a monomial label on every vertex.  The label of
/// a face is the lcm of its vertex labels; the empty face is labeled 1.
struct LabeledComplex {
    SimplicialComplex complex;
    std::map<int, Monomial> labels;  // vertex id -> monomial
    RingPtr ring;
};

LabeledComplex make_labeled(SimplicialComplex complex, std::map<int, Monomial> labels);

Monomial face_label(const LabeledComplex& lc, const Face& face);

/// Subcomplex of faces whose label divides m (the induced subcomplex on the
/// vertices whose labels divide m).
LabeledComplex restrict_to_degree(const LabeledComplex& lc, const Monomial& m);

/// Faces with label dividing m and different from m; contains the empty face
/// whenever m != 1.
SimplicialComplex strict_restrict(const LabeledComplex& lc, const Monomial& m);

/// Full simplex on the generators of a minimal ideal; guard q <= 20.
LabeledComplex taylor_complex(const MonomialIdeal& ideal);

/// Faces of the Taylor complex whose labels are unique among all Taylor face
/// labels; guard q <= 16.  Downward closure is verified and violation is an
/// error rather than silently repaired.
LabeledComplex scarf_complex(const MonomialIdeal& ideal);

enum class SupportMethod { automatic, homology, connectivity };

struct SupportReport {
    bool supports = false;
    SupportMethod method_used = SupportMethod::automatic;
    std::size_t checked_degrees = 0;

    enum class Reason { disconnected, not_acyclic };
    struct Witness {
        Monomial degree;
        Reason reason;
    };
    std::optional<Witness> witness;  // present exactly when supports == false

    std::optional<bool> minimal;  // set when minimality was requested and supports
    std::optional<std::pair<Face, Face>> minimality_witness;
};

/// Checks whether the labeled complex supports a free resolution of the ideal
/// generated by `generators`: every degree restriction over the lcm lattice of
/// the labels must be empty or acyclic (tree variant: empty or connected).
/// The vertex labels must equal `generators` as multisets.  Degrees are
/// scanned in descending lexicographic order and the first failure is the
/// witness.
SupportReport supports_resolution(const LabeledComplex& lc,
                                  const std::vector<Monomial>& generators,
                                  SupportMethod method, const FieldConfig& field,
                                  bool check_minimality = false);

struct MinimalityResult {
    bool minimal = true;
    std::optional<std::pair<Face, Face>> witness;  // equal-label cover pair
};

/// True iff every covering pair of faces has distinct labels.
MinimalityResult is_minimal_support(const LabeledComplex& lc);

}  // namespace monores

#endif
