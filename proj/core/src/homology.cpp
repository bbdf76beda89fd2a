#include "monores/homology.hpp"

#include <algorithm>
#include <map>

namespace monores {

void validate(const FieldConfig& field) {
    const std::int64_t p = field.characteristic;
    if (p < 2) throw Error("field characteristic must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("field characteristic must be prime");
}

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod_pos(t, p);
}

}  // namespace

ChainComplexData chain_complex(const SimplicialComplex& complex, const FieldConfig& field) {
    validate(field);
    ChainComplexData data;
    data.field = field;
    if (complex.is_void()) return data;

    std::vector<Face> faces = complex.all_faces();
    const int top = complex.dim();
    data.bases.resize(static_cast<std::size_t>(top + 2));
    for (Face& f : faces)
        data.bases[static_cast<std::size_t>(f.dim() + 1)].push_back(std::move(f));
    for (auto& basis : data.bases) std::sort(basis.begin(), basis.end());

    // position lookup per dimension
    std::vector<std::map<Face, std::size_t>> index(data.bases.size());
    for (std::size_t k = 0; k < data.bases.size(); ++k)
        for (std::size_t i = 0; i < data.bases[k].size(); ++i)
            index[k].emplace(data.bases[k][i], i);

    const std::int64_t p = field.characteristic;
    data.boundaries.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        SparseMatrix& m = data.boundaries[static_cast<std::size_t>(d)];
        const auto& src = data.bases[static_cast<std::size_t>(d + 1)];
        const auto& dst_index = index[static_cast<std::size_t>(d)];
        m.rows = data.bases[static_cast<std::size_t>(d)].size();
        m.cols = src.size();
        m.columns.resize(m.cols);
        for (std::size_t j = 0; j < src.size(); ++j) {
            const auto& fv = src[j].vertices();
            for (std::size_t pos = 0; pos < fv.size(); ++pos) {
                Face sub = src[j].without(fv[pos]);
                std::size_t i = dst_index.at(sub);
                std::int64_t sign = (pos % 2 == 0) ? 1 : p - 1;
                m.columns[j].emplace_back(i, sign);
            }
            std::sort(m.columns[j].begin(), m.columns[j].end());
        }
    }
    return data;
}

std::size_t detail::rank_dense(const SparseMatrix& m, std::int64_t p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[j]) a[i][j] = mod_pos(v, p);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[rank], a[piv]);
        const std::int64_t inv = mod_inv(a[rank][col], p);
        for (std::size_t j = col; j < m.cols; ++j)
            a[rank][j] = mod_pos(a[rank][j] * inv, p);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::int64_t f = a[i][col];
            for (std::size_t j = col; j < m.cols; ++j)
                a[i][j] = mod_pos(a[i][j] - f * a[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

std::size_t detail::rank_sparse(const SparseMatrix& m, std::int64_t p) {
    // row-echelon elimination on sorted sparse rows
    using Row = std::vector<std::pair<std::size_t, std::int64_t>>;  // (col, val)
    std::vector<Row> rows(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.columns[j])
            rows[i].emplace_back(j, mod_pos(v, p));
    for (Row& r : rows) std::sort(r.begin(), r.end());
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Row& r) { return r.empty(); }),
               rows.end());

    auto axpy = [p](const Row& a, std::int64_t f, const Row& b) {
        // a + f*b, merged
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
            if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
                out.push_back(a[ia++]);
            } else if (ia == a.size() || b[ib].first < a[ia].first) {
                out.emplace_back(b[ib].first, mod_pos(f * b[ib].second, p));
                ++ib;
            } else {
                std::int64_t v = mod_pos(a[ia].second + f * b[ib].second, p);
                if (v != 0) out.emplace_back(a[ia].first, v);
                ++ia;
                ++ib;
            }
        }
        return out;
    };

    std::size_t rank = 0;
    while (!rows.empty()) {
        // pivot: smallest leading column, fewest entries as tie-break
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i][0].first < rows[best][0].first ||
                (rows[i][0].first == rows[best][0].first &&
                 rows[i].size() < rows[best].size()))
                best = i;
        }
        Row pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        ++rank;
        const std::size_t lead = pivot[0].first;
        const std::int64_t inv = mod_inv(pivot[0].second, p);
        for (auto& [c, v] : pivot) v = mod_pos(v * inv, p);
        std::vector<Row> next;
        next.reserve(rows.size());
        for (Row& r : rows) {
            if (r[0].first == lead) {
                Row reduced = axpy(r, p - r[0].second, pivot);
                if (!reduced.empty()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    return rank;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::int64_t p) {
    constexpr std::size_t kDenseColLimit = 5000;
    constexpr std::size_t kDenseCellLimit = 50'000'000;
    if (m.cols <= kDenseColLimit && m.rows * m.cols <= kDenseCellLimit)
        return detail::rank_dense(m, p);
    return detail::rank_sparse(m, p);
}

std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const FieldConfig& field) {
    if (complex.is_void()) return {};
    ChainComplexData data = chain_complex(complex, field);
    const int top = data.top_dim();
    const std::int64_t p = field.characteristic;
    std::vector<std::size_t> rk(static_cast<std::size_t>(top + 2), 0);  // rank of boundary_d
    for (int d = 0; d <= top; ++d)
        rk[static_cast<std::size_t>(d)] = rank_mod_p(data.boundaries[static_cast<std::size_t>(d)], p);

    std::vector<long long> h(static_cast<std::size_t>(top + 2), 0);
    for (int d = -1; d <= top; ++d) {
        const long long fd = static_cast<long long>(data.bases[static_cast<std::size_t>(d + 1)].size());
        const long long r_d = (d >= 0) ? static_cast<long long>(rk[static_cast<std::size_t>(d)]) : 0;
        const long long r_up = (d + 1 <= top) ? static_cast<long long>(rk[static_cast<std::size_t>(d + 1)]) : 0;
        h[static_cast<std::size_t>(d + 1)] = fd - r_d - r_up;
    }
    return h;
}

bool is_acyclic(const SimplicialComplex& complex, const FieldConfig& field) {
    for (long long v : reduced_homology_dims(complex, field))
        if (v != 0) return false;
    return true;
}

}  // namespace monores
