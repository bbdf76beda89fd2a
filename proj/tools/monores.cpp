// monores - construct and verify simplicial complexes supporting free
// resolutions of squares of monomial ideals.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monores/betti.hpp"
#include "monores/ideal_io.hpp"
#include "monores/msquare.hpp"
#include "monores/permutation.hpp"
#include "monores/polarization.hpp"

using json = nlohmann::json;
using namespace monores;

namespace {

constexpr const char* kVersion = "monores 0.1.0";

struct CheckFailure {};  // verified claim does not hold -> exit 1

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedIdeal read_ideal(const std::string& path, json& inputs) {
    std::string text = slurp(path);
    inputs["ideal"] = content_digest(text);
    return load_ideal(parse_document(text));
}

void emit(const std::string& command, const json& inputs, const json& result) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["result"] = result;
    report["version"] = kVersion;
    std::cout << report.dump(2) << '\n';
}

json monomial_json(const Monomial& m) {
    return json{{"str", m.str()}, {"exponents", m.dense()}};
}

json gens_json(const std::vector<Monomial>& gens) {
    json out = json::array();
    for (const Monomial& g : gens) out.push_back(g.str());
    return out;
}

const char* relation_name(Relation r) {
    return r == Relation::equal ? "equal" : "strict";
}

const char* method_name(SupportMethod m) {
    switch (m) {
        case SupportMethod::connectivity: return "connectivity";
        case SupportMethod::homology: return "homology";
        default: return "auto";
    }
}

json support_json(const SupportReport& r) {
    json out;
    out["supports"] = r.supports;
    out["method"] = method_name(r.method_used);
    out["checked_degrees"] = r.checked_degrees;
    if (r.witness) {
        out["witness"] = monomial_json(r.witness->degree);
        out["witness"]["reason"] =
            r.witness->reason == SupportReport::Reason::disconnected ? "disconnected"
                                                                     : "not-acyclic";
    } else {
        out["witness"] = nullptr;
    }
    if (r.minimal.has_value()) out["minimal"] = *r.minimal;
    return out;
}

json betti_json(const BettiTable& t) {
    json out;
    out["totals"] = t.totals;
    out["pd"] = t.pd;
    json entries = json::array();
    for (const auto& [key, dim] : t.entries)
        entries.push_back(json{{"i", key.first},
                               {"degree", key.second.str()},
                               {"dim", dim}});
    out["entries"] = entries;
    return out;
}

MonomialIdeal square_ideal(const MonomialIdeal& ideal) {
    return square(ideal).minimal_square;
}

// ---- subcommand handlers -------------------------------------------------

void cmd_ideal_show(const std::string& path) {
    json inputs;
    std::string text = slurp(path);
    inputs["ideal"] = content_digest(text);
    IdealDocument doc = parse_document(text);
    LoadedIdeal loaded = load_ideal(doc);

    json result;
    result["variables"] = doc.variables;
    json raw = json::array();
    RingPtr ring = VariableSet::make(doc.variables);
    for (const auto& row : doc.rows) raw.push_back(Monomial::from_dense(ring, row).str());
    result["generators"] = raw;
    result["minimal_generators"] = gens_json(loaded.ideal.generators);
    json removed = json::array();
    for (const Removal& r : loaded.removals)
        removed.push_back(json{{"generator", Monomial::from_dense(ring, doc.rows[r.removed]).str()},
                               {"by", Monomial::from_dense(ring, doc.rows[r.by]).str()}});
    result["removed"] = removed;
    emit("ideal show", inputs, result);
}

void cmd_square(const std::string& path, bool with_log) {
    json inputs;
    LoadedIdeal loaded = read_ideal(path, inputs);
    SquarePresentation sq = square(loaded.ideal);

    json result;
    result["base"] = gens_json(sq.base.generators);
    result["minimal_square"] = gens_json(sq.minimal_square.generators);
    std::size_t kept = 0;
    for (const PairProduct& p : sq.pairs) kept += p.kept;
    result["kept"] = kept;
    result["deleted"] = sq.pairs.size() - kept;
    if (with_log) {
        json log = json::array();
        for (const PairProduct& p : sq.pairs) {
            json e;
            e["pair"] = {p.i, p.j};
            e["product"] = p.value.str();
            e["kept"] = p.kept;
            e["cause"] = p.cause ? json({p.cause->first, p.cause->second}) : json(nullptr);
            e["relation"] = p.relation ? json(relation_name(*p.relation)) : json(nullptr);
            log.push_back(e);
        }
        result["log"] = log;
    }
    emit("square", inputs, result);
}

void cmd_msq(int q, bool with_fvector) {
    json inputs{{"q", q}};
    MSquareComplex mq = build_mq2(q);
    json result;
    result["q"] = q;
    result["vertices"] = mq.vertex_pairs.size();
    result["facet_count"] = mq.complex.facets().size();
    result["dim"] = mq.complex.dim();
    json pairs = json::array();
    for (const auto& [i, j] : mq.vertex_pairs) pairs.push_back({i, j});
    result["vertex_pairs"] = pairs;
    json facets = json::array();
    for (const Face& f : mq.complex.facets()) facets.push_back(f.vertices());
    result["facets"] = facets;
    if (with_fvector) result["f_vector"] = mq.complex.f_vector();
    emit("msq", inputs, result);
}

void cmd_m2(const std::string& path) {
    json inputs;
    LoadedIdeal loaded = read_ideal(path, inputs);
    M2OfIdeal m2 = build_m2_of_ideal(loaded.ideal);

    json result;
    result["q"] = m2.ambient.q;
    result["s"] = m2.s;
    result["t"] = m2.t;
    result["surviving_vertices"] = m2.labeled.complex.vertices().size();
    json survivors = json::array();
    for (int v : m2.labeled.complex.vertices()) {
        const auto& [i, j] = m2.ambient.vertex_pairs[static_cast<std::size_t>(v)];
        survivors.push_back(json{{"pair", {i, j}}, {"label", m2.labeled.labels.at(v).str()}});
    }
    result["survivors"] = survivors;
    json deletions = json::array();
    for (const auto& d : m2.log)
        deletions.push_back(json{{"vertex", {d.vertex.first, d.vertex.second}},
                                 {"cause", {d.cause.first, d.cause.second}},
                                 {"relation", relation_name(d.relation)}});
    result["deletions"] = deletions;
    result["f_vector"] = m2.labeled.complex.is_void() ? json::array()
                                                      : json(m2.labeled.complex.f_vector());
    result["bound"] = bound_cor2(m2.ambient.q, m2.s, m2.t);
    emit("m2", inputs, result);
}

void cmd_support(const std::string& complex_kind, const std::string& path, int power,
                 const std::string& method_str, std::int64_t characteristic) {
    json inputs;
    LoadedIdeal loaded = read_ideal(path, inputs);
    inputs["complex"] = complex_kind;
    inputs["power"] = power;
    inputs["method"] = method_str;
    inputs["char"] = characteristic;

    SupportMethod method = SupportMethod::automatic;
    if (method_str == "homology") method = SupportMethod::homology;
    else if (method_str == "connectivity") method = SupportMethod::connectivity;

    FieldConfig field{characteristic};
    const MonomialIdeal& base = loaded.ideal;
    const int q = static_cast<int>(base.generators.size());

    LabeledComplex lc;
    std::vector<Monomial> gens;
    if (complex_kind == "mq2" || complex_kind == "m2i" || complex_kind == "l32") {
        if (power != 2)
            throw CLI::ValidationError("--power", "complex '" + complex_kind +
                                                      "' is a squared-ideal complex; use --power 2");
    }
    if (complex_kind == "mq2") {
        lc = labeled_by_pair_products(build_mq2(q), base);
        for (const PairProduct& p : square(base).pairs) gens.push_back(p.value);
    } else if (complex_kind == "m2i") {
        M2OfIdeal m2 = build_m2_of_ideal(base);
        lc = m2.labeled;
        gens = square_ideal(base).generators;
    } else if (complex_kind == "l32") {
        if (q != 3)
            throw CLI::ValidationError("--ideal", "the l32 complex needs exactly 3 generators");
        L32Fixture fx = l32_fixture();
        std::map<int, Monomial> labels;
        for (std::size_t v = 0; v < fx.vertex_pairs.size(); ++v) {
            const auto& [i, j] = fx.vertex_pairs[v];
            labels.emplace(static_cast<int>(v),
                           product(base.generators[static_cast<std::size_t>(i)],
                                   base.generators[static_cast<std::size_t>(j)]));
        }
        lc = make_labeled(fx.complex, labels);
        for (const auto& [v, m] : lc.labels) gens.push_back(m);
    } else {
        MonomialIdeal target = (power == 2) ? square_ideal(base) : base;
        lc = (complex_kind == "taylor") ? taylor_complex(target) : scarf_complex(target);
        gens = target.generators;
    }

    SupportReport report = supports_resolution(lc, gens, method, field);
    json result = support_json(report);
    result["complex"] = complex_kind;
    result["power"] = power;
    emit("support", inputs, result);
    if (!report.supports) throw CheckFailure{};
}

void cmd_betti(const std::string& path, int power, const std::string& method,
               std::int64_t characteristic) {
    json inputs;
    LoadedIdeal loaded = read_ideal(path, inputs);
    inputs["power"] = power;
    inputs["method"] = method;
    inputs["char"] = characteristic;

    FieldConfig field{characteristic};
    MonomialIdeal target = (power == 2) ? square_ideal(loaded.ideal) : loaded.ideal;

    BettiTable table;
    if (method == "koszul") {
        table = betti_koszul(target, field);
    } else {
        LabeledComplex lc = (power == 2) ? build_m2_of_ideal(loaded.ideal).labeled
                                         : taylor_complex(target);
        table = betti_supported(lc, target, field);
    }
    json result = betti_json(table);
    result["power"] = power;
    result["method"] = method;
    emit("betti", inputs, result);
}

json binomial_row(long long n, long long top_d) {
    auto binom = [](long long nn, long long kk) {
        if (kk < 0 || kk > nn) return 0LL;
        kk = std::min(kk, nn - kk);
        long long out = 1;
        for (long long i = 1; i <= kk; ++i) out = out * (nn - kk + i) / i;
        return out;
    };
    json row = json::array();
    for (long long d = 0; d <= top_d; ++d) row.push_back(binom(n, d + 1));
    return row;
}

void cmd_bounds(const std::string& path, int q_flag) {
    json inputs, result;
    if (!path.empty()) {
        LoadedIdeal loaded = read_ideal(path, inputs);
        const int q = static_cast<int>(loaded.ideal.generators.size());
        M2OfIdeal m2 = build_m2_of_ideal(loaded.ideal);
        const long long top_d = static_cast<long long>(q) * (q - 1) / 2;
        result["q"] = q;
        result["s"] = m2.s;
        result["t"] = m2.t;
        result["taylor"] =
            binomial_row(static_cast<long long>(square_ideal(loaded.ideal).generators.size()), top_d);
        result["mq2"] = bound_cor1(q);
        result["m2i"] = bound_cor2(q, m2.s, m2.t);
    } else {
        inputs["q"] = q_flag;
        const long long top_d = static_cast<long long>(q_flag) * (q_flag - 1) / 2;
        result["q"] = q_flag;
        result["taylor"] = binomial_row(top_d + q_flag, top_d);
        result["mq2"] = bound_cor1(q_flag);
    }
    json dcol = json::array();
    for (long long d = 0; d < static_cast<long long>(result["mq2"].size()); ++d) dcol.push_back(d);
    result["d"] = dcol;
    emit("bounds", inputs, result);
}

void cmd_perm(int q, bool reduced, const std::string& out_path) {
    json inputs{{"q", q}, {"reduced", reduced}};
    PermutationIdeal perm =
        reduced ? build_reduced_permutation_ideal(q) : build_permutation_ideal(q);
    json result;
    result["q"] = q;
    result["reduced"] = reduced;
    result["variables"] = perm.ring->names();
    result["generators"] = gens_json(perm.ideal.generators);
    result["generator_degree"] = perm.ideal.generators.front().degree();
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << serialize_document(document_from_ideal(perm.ideal));
        result["written"] = out_path;
    }
    emit("perm", inputs, result);
}

void cmd_polarize(const std::string& path, const std::string& out_path) {
    json inputs;
    LoadedIdeal loaded = read_ideal(path, inputs);
    PolarizeResult pol = polarize(loaded.ideal);
    json result;
    result["source_variables"] = pol.map.source->names();
    result["target_variables"] = pol.map.target->names();
    result["generators"] = gens_json(pol.ideal.generators);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << serialize_document(document_from_ideal(pol.ideal));
        result["written"] = out_path;
    }
    emit("polarize", inputs, result);
}

// Built-in 4-generator comparison ideal behind `tables --which 2`.
MonomialIdeal tables_ideal() {
    IdealDocument doc;
    doc.variables = {"x1", "x2", "x3", "x4"};
    doc.rows = {{5, 0, 0, 0}, {2, 4, 3, 0}, {3, 3, 5, 2}, {4, 2, 3, 3}};
    return load_ideal(doc).ideal;
}

void cmd_tables(int which, const std::string& format) {
    json rows;
    std::string second_name;
    if (which == 1) {
        rows["taylor"] = binomial_row(10, 6);
        rows["mq2"] = bound_cor1(4);
        second_name = "mq2";
    } else {
        MonomialIdeal ideal = tables_ideal();
        M2OfIdeal m2 = build_m2_of_ideal(ideal);
        rows["taylor"] = binomial_row(
            static_cast<long long>(square_ideal(ideal).generators.size()), 6);
        rows["m2i"] = bound_cor2(4, m2.s, m2.t);
        second_name = "m2i";
    }
    if (format == "csv") {
        std::string out = "d";
        const std::size_t cols = rows["taylor"].size();
        for (std::size_t d = 0; d < cols; ++d) out += "," + std::to_string(d);
        out += "\ntaylor";
        for (const auto& v : rows["taylor"]) out += "," + v.dump();
        out += "\n" + second_name;
        for (const auto& v : rows[second_name]) out += "," + v.dump();
        std::cout << out << "\n";
    } else {
        json inputs{{"which", which}};
        json result = rows;
        json dcol = json::array();
        for (std::size_t d = 0; d < rows["taylor"].size(); ++d) dcol.push_back(d);
        result["d"] = dcol;
        emit("tables", inputs, result);
    }
}

void cmd_scarfcheck(int q, bool deep) {
    if (q == 5 && !deep)
        throw CLI::ValidationError("--q", "q = 5 runs for minutes; pass --deep to confirm");
    json inputs{{"q", q}, {"deep", deep}};

    PermutationIdeal perm = build_permutation_ideal(q);
    MonomialIdeal squared = square_ideal(perm.ideal);
    LabeledComplex scarf = scarf_complex(squared);
    MSquareComplex mq = build_mq2(q);

    // G(T_q^2) keeps the (i <= j) pair order, so vertex ids line up with mq
    std::vector<Face> scarf_faces = scarf.complex.all_faces();
    std::vector<Face> mq_faces = mq.complex.all_faces();
    const bool equal = scarf_faces == mq_faces;

    bool labels_distinct = true;
    if (q <= 4) {
        LabeledComplex labeled = labeled_by_pair_products(mq, perm.ideal);
        std::unordered_map<Monomial, int, MonomialHash> seen;
        for (const Face& f : mq_faces)
            if (++seen[face_label(labeled, f)] > 1) labels_distinct = false;
    }

    json result;
    result["q"] = q;
    result["generators"] = squared.generators.size();
    result["scarf_faces"] = scarf_faces.size();
    result["mq2_faces"] = mq_faces.size();
    result["scarf_equals_mq2"] = equal;
    result["labels_distinct"] = labels_distinct;
    emit("scarfcheck", inputs, result);
    if (!equal || !labels_distinct) throw CheckFailure{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions and checks for resolutions of squares of monomial ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // ideal show
    auto* sub_ideal = app.add_subcommand("ideal", "inspect an ideal file");
    sub_ideal->require_subcommand(1);
    auto* sub_show = sub_ideal->add_subcommand("show", "parse and minimalize an ideal");
    std::string show_file;
    sub_show->add_option("file", show_file, "ideal file")->required();

    auto* sub_square = app.add_subcommand("square", "pair products and minimal generators of I^2");
    std::string square_file;
    bool square_log = false;
    sub_square->add_option("file", square_file)->required();
    sub_square->add_flag("--log", square_log, "include the deletion log");

    auto* sub_msq = app.add_subcommand("msq", "the q-facet pair complex");
    int msq_q = 0;
    bool msq_fvec = false;
    sub_msq->add_option("--q", msq_q, "number of generators")->required();
    sub_msq->add_flag("--f-vector", msq_fvec, "include the f-vector");

    auto* sub_m2 = app.add_subcommand("m2", "generator-aware subcomplex for I^2");
    std::string m2_file;
    sub_m2->add_option("file", m2_file)->required();

    auto* sub_support = app.add_subcommand("support", "check that a complex supports a resolution");
    std::string support_complex, support_file, support_method = "auto";
    int support_power = 1;
    std::int64_t support_char = 32003;
    sub_support->add_option("--complex", support_complex)
        ->required()
        ->check(CLI::IsMember({"mq2", "m2i", "taylor", "scarf", "l32"}));
    sub_support->add_option("--ideal", support_file)->required();
    sub_support->add_option("--power", support_power)->check(CLI::IsMember({1, 2}));
    sub_support->add_option("--method", support_method)
        ->check(CLI::IsMember({"auto", "homology", "connectivity"}));
    sub_support->add_option("--char", support_char, "field characteristic");

    auto* sub_betti = app.add_subcommand("betti", "multigraded Betti numbers");
    std::string betti_file, betti_method = "koszul";
    int betti_power = 1;
    std::int64_t betti_char = 32003;
    sub_betti->add_option("file", betti_file)->required();
    sub_betti->add_option("--power", betti_power)->check(CLI::IsMember({1, 2}));
    sub_betti->add_option("--method", betti_method)
        ->check(CLI::IsMember({"koszul", "supported"}));
    sub_betti->add_option("--char", betti_char, "field characteristic");

    auto* sub_bounds = app.add_subcommand("bounds", "Betti number bound rows");
    std::string bounds_file;
    int bounds_q = 0;
    auto* bounds_file_opt = sub_bounds->add_option("--ideal", bounds_file);
    auto* bounds_q_opt = sub_bounds->add_option("--q", bounds_q)->check(CLI::Range(2, 8));
    bounds_file_opt->excludes(bounds_q_opt);

    auto* sub_perm = app.add_subcommand("perm", "permutation ideal generators");
    int perm_q = 0;
    bool perm_reduced = false;
    std::string perm_out;
    sub_perm->add_option("--q", perm_q)->required();
    sub_perm->add_flag("--reduced", perm_reduced, "two-value variant");
    sub_perm->add_option("--out", perm_out, "write the generators as an ideal file");

    auto* sub_pol = app.add_subcommand("polarize", "squarefree polarization");
    std::string pol_file, pol_out;
    sub_pol->add_option("file", pol_file)->required();
    sub_pol->add_option("--out", pol_out, "write the polarized ideal file");

    auto* sub_tables = app.add_subcommand("tables", "bound comparison tables");
    int tables_which = 1;
    std::string tables_format = "json";
    sub_tables->add_option("--which", tables_which)->required()->check(CLI::IsMember({1, 2}));
    sub_tables->add_option("--format", tables_format)->check(CLI::IsMember({"csv", "json"}));

    auto* sub_scarf = app.add_subcommand("scarfcheck", "Scarf complex of the squared permutation ideal");
    int scarf_q = 0;
    bool scarf_deep = false;
    sub_scarf->add_option("--q", scarf_q)->required()->check(CLI::Range(1, 5));
    sub_scarf->add_flag("--deep", scarf_deep, "allow the long q = 5 run");

    try {
        app.parse(argc, argv);
        if (*sub_show) cmd_ideal_show(show_file);
        else if (*sub_square) cmd_square(square_file, square_log);
        else if (*sub_msq) cmd_msq(msq_q, msq_fvec);
        else if (*sub_m2) cmd_m2(m2_file);
        else if (*sub_support)
            cmd_support(support_complex, support_file, support_power, support_method, support_char);
        else if (*sub_betti) cmd_betti(betti_file, betti_power, betti_method, betti_char);
        else if (*sub_bounds) {
            if (bounds_file.empty() && bounds_q == 0)
                throw CLI::ValidationError("bounds", "pass either --ideal or --q");
            cmd_bounds(bounds_file, bounds_q);
        } else if (*sub_perm) cmd_perm(perm_q, perm_reduced, perm_out);
        else if (*sub_pol) cmd_polarize(pol_file, pol_out);
        else if (*sub_tables) cmd_tables(tables_which, tables_format);
        else if (*sub_scarf) cmd_scarfcheck(scarf_q, scarf_deep);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help / --version
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CheckFailure&) {
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
