#include "alexmod/json_io.hpp"

#include <cctype>
#include <limits>

namespace alexmod::io {

namespace {

constexpr long long kI64Min = std::numeric_limits<long long>::min();
constexpr long long kI64Max = std::numeric_limits<long long>::max();

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::size_t count_as_size(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

}  // namespace

json int_to_json(const Int& v) {
    if (v >= kI64Min && v <= kI64Max) return v.convert_to<long long>();
    return v.str();
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
        return Int(j.get<long long>());
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) fail(where, "empty integer string");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) fail(where, "malformed integer string");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                fail(where, "malformed integer string '" + s + "'");
        return Int(s);
    }
    fail(where, "expected an integer (number or decimal string)");
}

json poly_to_json(const laurent::LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, int_to_json(c)}));
    return arr;
}

laurent::LaurentPoly poly_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list of [exponent, coefficient] pairs");
    std::vector<std::pair<int, Int>> pairs;
    bool have_prev = false;
    int prev = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        const json& pr = j[i];
        if (!pr.is_array() || pr.size() != 2) fail(at, "expected an [exponent, coefficient] pair");
        if (!pr[0].is_number_integer() && !pr[0].is_number_unsigned())
            fail(at + "[0]", "exponent must be an integer");
        long long e = pr[0].get<long long>();
        if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max())
            fail(at + "[0]", "exponent out of range");
        if (have_prev && e <= prev) fail(at + "[0]", "exponents must be strictly increasing");
        have_prev = true;
        prev = static_cast<int>(e);
        Int c = int_from_json(pr[1], at + "[1]");
        if (c == 0) fail(at + "[1]", "coefficients must be nonzero");
        pairs.emplace_back(static_cast<int>(e), std::move(c));
    }
    return laurent::LaurentPoly::from_pairs(pairs);
}

json matrix_to_json(const exactlin::IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

exactlin::IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a matrix (list of rows)");
    const std::size_t r = j.size();
    std::size_t c = 0;
    std::vector<Int> entries;
    for (std::size_t i = 0; i < r; ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) fail(at, "expected a row (list of integers)");
        if (i == 0)
            c = j[i].size();
        else if (j[i].size() != c)
            fail(at, "ragged rows");
        for (std::size_t k = 0; k < j[i].size(); ++k)
            entries.push_back(int_from_json(j[i][k], at + "[" + std::to_string(k) + "]"));
    }
    return exactlin::IntMatrix(r, c, std::move(entries));
}

json presentation_to_json(const present::LambdaPresentation& p) {
    json m = json::array();
    for (std::size_t i = 0; i < p.relators; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.generators; ++j) row.push_back(poly_to_json(p.matrix(i, j)));
        m.push_back(std::move(row));
    }
    return json{{"generators", p.generators}, {"matrix", std::move(m)}, {"relators", p.relators}};
}

present::LambdaPresentation presentation_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const char* key : {"relators", "generators", "matrix"})
        if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    std::size_t r = count_as_size(j["relators"], where + ".relators");
    std::size_t s = count_as_size(j["generators"], where + ".generators");
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != r)
        fail(where + ".matrix", "expected " + std::to_string(r) + " rows");
    laurent::LaurentMatrix mat(r, s);
    for (std::size_t i = 0; i < r; ++i) {
        const std::string at = where + ".matrix[" + std::to_string(i) + "]";
        if (!m[i].is_array() || m[i].size() != s)
            fail(at, "expected " + std::to_string(s) + " entries");
        for (std::size_t k = 0; k < s; ++k)
            mat(i, k) = poly_from_json(m[i][k], at + "[" + std::to_string(k) + "]");
    }
    return present::LambdaPresentation(r, s, std::move(mat));
}

json group_to_json(const abgrp::FgAbGroup& g) {
    return json{{"generators", g.gens}, {"relations", matrix_to_json(g.relations)}};
}

json amalgam_to_json(const decomp::AmalgamData& a) {
    json prov = json::array();
    for (const auto& o : a.provenance)
        prov.push_back(json::array({o.generator, o.level}));
    return json{{"B", group_to_json(a.B)},
                {"U", group_to_json(a.U)},
                {"f", matrix_to_json(a.f.matrix)},
                {"g", matrix_to_json(a.g.matrix)},
                {"provenance", std::move(prov)},
                {"reduction_steps", a.reduction_steps}};
}

json lattice_to_json(const decomp::LatticePair& l) {
    return json{{"F", matrix_to_json(l.F)}, {"G", matrix_to_json(l.G)}, {"d", l.d}};
}

json report_to_json(const decomp::DecompositionReport& r) {
    json j;
    j["order"] = poly_to_json(r.order);
    j["display"] = r.order.str();
    j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
    j["c0"] = r.c0 ? int_to_json(*r.c0) : json(nullptr);
    j["cd"] = r.cd ? int_to_json(*r.cd) : json(nullptr);
    j["content"] = int_to_json(r.content);
    j["amalgam"] = amalgam_to_json(r.amalgam);
    j["lattice"] = r.lattice ? lattice_to_json(*r.lattice) : json(nullptr);
    j["lattice_reason"] = r.lattice ? json(nullptr) : json(r.lattice_reason);
    j["char_poly"] = r.char_poly ? poly_to_json(*r.char_poly) : json(nullptr);
    j["index_f"] = r.index_f ? int_to_json(*r.index_f) : json(nullptr);
    j["index_g"] = r.index_g ? int_to_json(*r.index_g) : json(nullptr);
    j["q"] = r.q;
    j["checks"] = json{{"c0_index", r.checks.c0_index},
                       {"cd_index", r.checks.cd_index},
                       {"degree_bound", r.checks.degree_bound},
                       {"monic", r.checks.monic},
                       {"order_match", r.checks.order_match},
                       {"palindromic", r.checks.palindromic}};
    return j;
}

json knot_report_to_json(const knot::KnotReport& r) {
    json j;
    j["alexander"] = poly_to_json(r.alexander);
    j["display"] = r.alexander.str();
    j["content"] = int_to_json(r.content);
    j["monic"] = r.monic;
    j["palindromic"] = r.palindromic;
    j["decomposition"] = r.decomposition ? report_to_json(*r.decomposition) : json(nullptr);
    return j;
}

InputFile parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // report the line of the failure rather than a byte offset
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        fail("line " + std::to_string(line), e.what());
    }
    if (!j.is_object()) fail("input", "expected a JSON object");
    InputFile in;
    if (j.contains("presentation")) {
        in.presentation = presentation_from_json(j["presentation"], "presentation");
        return in;
    }
    if (j.contains("seifert")) {
        exactlin::IntMatrix v = matrix_from_json(j["seifert"], "seifert");
        if (!v.is_square()) fail("seifert", "matrix is not square");
        if (v.rows() % 2 != 0) fail("seifert", "dimension is odd");
        in.seifert = knot::SeifertMatrix{std::move(v)};
        return in;
    }
    fail("input", "expected a 'presentation' or 'seifert' field");
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace alexmod::io
