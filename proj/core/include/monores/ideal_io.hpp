#ifndef MONORES_IDEAL_IO_HPP
#define MONORES_IDEAL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "monores/monomial.hpp"

namespace monores {

/// Raw generator matrix over an ordered variable list; rows are kept exactly
/// as written (no minimalization).
struct IdealDocument {
    std::vector<std::string> variables;             // first-appearance order
    std::vector<std::vector<std::int64_t>> rows;    // rectangular, non-negative
};

bool operator==(const IdealDocument& a, const IdealDocument& b);

/// Parses the text grammar (one monomial per line, terms joined by '*',
/// optional '^' exponents, '#' comments, blank lines ignored, a lone "1" for
/// the unit monomial) or, when the first non-space byte is '{', the JSON form
/// {"variables": [...], "generators": [[...]]}.
IdealDocument parse_document(std::string_view text);

/// Canonical text form; parse_document(serialize_document(d)) == d.
std::string serialize_document(const IdealDocument& doc);

struct LoadedIdeal {
    MonomialIdeal ideal;             // minimalized
    std::vector<Removal> removals;   // warnings: dropped input rows
};

/// Builds the ring in the document's variable order and minimalizes.
LoadedIdeal load_ideal(const IdealDocument& doc);

IdealDocument document_from_ideal(const MonomialIdeal& ideal);

/// FNV-1a 64 hash of raw bytes, as fixed-width hex (input digests in reports).
std::string content_digest(std::string_view bytes);

}  // namespace monores

#endif
