#include "monores/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

namespace monores {

bool operator==(const IdealDocument& a, const IdealDocument& b) {
    return a.variables == b.variables && a.rows == b.rows;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct LineParser {
    std::string_view line;
    std::size_t lineno;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, lineno, pos + 1);
    }
    void skip_space() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= line.size();
    }
    char peek() const { return line[pos]; }
};

IdealDocument parse_text(std::string_view text) {
    IdealDocument doc;
    std::map<std::string, std::size_t, std::less<>> var_index;
    auto var_id = [&](const std::string& name) {
        auto it = var_index.find(name);
        if (it != var_index.end()) return it->second;
        var_index.emplace(name, doc.variables.size());
        doc.variables.push_back(name);
        return doc.variables.size() - 1;
    };

    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
        if (end == text.size()) break;
    }

    std::size_t lineno = 0;
    for (std::string_view raw : lines) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        while (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        LineParser p{raw, lineno};
        if (p.done()) continue;

        // (variable id, exponent) in appearance order
        std::vector<std::pair<std::size_t, std::int64_t>> terms;
        bool unit_row = false;
        while (true) {
            p.skip_space();
            if (p.pos >= p.line.size()) p.fail("expected a term");
            if (p.peek() == '1' && terms.empty() && !unit_row) {
                ++p.pos;
                unit_row = true;
            } else if (ident_start(p.peek())) {
                std::size_t b = p.pos;
                while (p.pos < p.line.size() && ident_char(p.line[p.pos])) ++p.pos;
                std::string name(p.line.substr(b, p.pos - b));
                std::int64_t exp = 1;
                p.skip_space();
                if (p.pos < p.line.size() && p.peek() == '^') {
                    ++p.pos;
                    p.skip_space();
                    if (p.pos >= p.line.size() ||
                        !std::isdigit(static_cast<unsigned char>(p.peek())))
                        p.fail("expected a non-negative integer exponent");
                    std::size_t eb = p.pos;
                    while (p.pos < p.line.size() &&
                           std::isdigit(static_cast<unsigned char>(p.line[p.pos])))
                        ++p.pos;
                    exp = std::stoll(std::string(p.line.substr(eb, p.pos - eb)));
                }
                terms.emplace_back(var_id(name), exp);
            } else {
                p.fail(std::string("unexpected character '") + p.peek() + "'");
            }
            p.skip_space();
            if (p.pos >= p.line.size()) break;
            if (p.peek() != '*') p.fail("expected '*' between terms");
            ++p.pos;
            if (unit_row) p.fail("'1' cannot be combined with other terms");
        }

        doc.rows.emplace_back();
        auto& out = doc.rows.back();
        out.assign(doc.variables.size(), 0);
        for (const auto& [id, e] : terms) out[id] += e;
    }
    // pad earlier rows to the final variable count
    for (auto& row : doc.rows) row.resize(doc.variables.size(), 0);
    if (doc.rows.empty()) throw ParseError("no generators in input", lineno ? lineno : 1, 1);
    return doc;
}

IdealDocument parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw ParseError("expected {\"variables\": [...], \"generators\": [[...]]}", 1, 1);
    IdealDocument doc;
    for (const auto& v : j.at("variables")) {
        if (!v.is_string()) throw ParseError("variable names must be strings", 1, 1);
        std::string name = v.get<std::string>();
        if (name.empty() || !ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), ident_char))
            throw ParseError("invalid variable name '" + name + "'", 1, 1);
        doc.variables.push_back(std::move(name));
    }
    for (const auto& row : j.at("generators")) {
        if (!row.is_array() || row.size() != doc.variables.size())
            throw ParseError("generator rows must match the variable count", 1, 1);
        std::vector<std::int64_t> exps;
        for (const auto& e : row) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
                throw ParseError("exponents must be non-negative integers", 1, 1);
            exps.push_back(e.get<std::int64_t>());
        }
        doc.rows.push_back(std::move(exps));
    }
    if (doc.rows.empty()) throw ParseError("no generators in input", 1, 1);
    return doc;
}

}  // namespace

IdealDocument parse_document(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_text(text);
}

std::string serialize_document(const IdealDocument& doc) {
    std::string out;
    for (const auto& row : doc.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0) continue;
            if (!line.empty()) line += '*';
            line += doc.variables[i];
            if (row[i] != 1) {
                line += '^';
                line += std::to_string(row[i]);
            }
        }
        if (line.empty()) line = "1";
        out += line;
        out += '\n';
    }
    return out;
}

LoadedIdeal load_ideal(const IdealDocument& doc) {
    RingPtr ring = VariableSet::make(doc.variables);
    std::vector<Monomial> gens;
    gens.reserve(doc.rows.size());
    for (const auto& row : doc.rows) gens.push_back(Monomial::from_dense(ring, row));
    MinimalizeResult min = minimalize(gens);
    return {std::move(min.ideal), std::move(min.removals)};
}

IdealDocument document_from_ideal(const MonomialIdeal& ideal) {
    IdealDocument doc;
    doc.variables = ideal.ring->names();
    for (const Monomial& g : ideal.generators) doc.rows.push_back(g.dense());
    return doc;
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace monores
