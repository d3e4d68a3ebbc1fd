#include "motzeta/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace motzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json must_parse(std::string_view text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("invalid JSON");
    return j;
}

// numbers may arrive as JSON ints or as decimal strings
Rational rational_from_json(const ordered_json& v, const char* what) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    throw std::invalid_argument(std::string(what) + ": expected integer or decimal string");
}

mpz_class integer_from_json(const ordered_json& v, const char* what) {
    const Rational r = rational_from_json(v, what);
    if (!r.is_integer()) throw std::invalid_argument(std::string(what) + ": expected an integer");
    return r.numerator();
}

ordered_json coeff_array(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    const int d = std::max(p.degree(), 0);  // zero polynomial prints as ["0"]
    for (int i = 0; i <= d; ++i) arr.push_back(p.coeff(i).str());
    return arr;
}

Polynomial poly_from_array(const ordered_json& arr, const char* what) {
    if (!arr.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& v : arr) c.push_back(rational_from_json(v, what));
    return Polynomial(std::move(c));
}

}  // namespace

std::string witt_to_json(const WittVector& w) {
    ordered_json j;
    j["num"] = coeff_array(w.num());
    j["den"] = coeff_array(w.den());
    return j.dump();
}

WittVector witt_from_json(std::string_view text) {
    const ordered_json j = must_parse(text);
    if (!j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("witt: missing 'num' or 'den'");
    return WittVector(poly_from_array(j["num"], "witt.num"), poly_from_array(j["den"], "witt.den"));
}

std::string counts_to_json(const GhostSequence& g) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : g.values) arr.push_back(v.str());
    ordered_json j;
    j["counts"] = arr;
    return j.dump();
}

GhostSequence counts_from_json(std::string_view text) {
    const ordered_json j = must_parse(text);
    if (!j.contains("counts") || !j["counts"].is_array())
        throw std::invalid_argument("counts: missing 'counts' array");
    std::vector<Rational> values;
    for (const auto& v : j["counts"]) values.push_back(rational_from_json(v, "counts"));
    return GhostSequence(std::move(values));
}

VarietySpec variety_from_json(std::string_view text) {
    const ordered_json j = must_parse(text);
    VarietySpec v;
    if (!j.contains("ambient") || !j["ambient"].is_string())
        throw std::invalid_argument("variety: missing 'ambient'");
    const std::string ambient = j["ambient"].get<std::string>();
    if (ambient == "affine")
        v.ambient = Ambient::affine;
    else if (ambient == "projective")
        v.ambient = Ambient::projective;
    else
        throw std::invalid_argument("variety: ambient must be 'affine' or 'projective'");
    if (!j.contains("dim")) throw std::invalid_argument("variety: missing 'dim'");
    v.dim = static_cast<unsigned>(integer_from_json(j["dim"], "variety.dim").get_ui());
    if (!j.contains("p")) throw std::invalid_argument("variety: missing 'p'");
    v.p = integer_from_json(j["p"], "variety.p").get_ui();
    if (j.contains("equations")) {
        if (!j["equations"].is_array()) throw std::invalid_argument("variety: equations must be an array");
        for (const auto& jeq : j["equations"]) {
            if (!jeq.is_array()) throw std::invalid_argument("variety: each equation must be an array of terms");
            Equation eq;
            for (const auto& jterm : jeq) {
                if (!jterm.is_array() || jterm.size() != 2 || !jterm[1].is_array())
                    throw std::invalid_argument("variety: each term must be [coeff, [exponents...]]");
                MonomialTerm term;
                term.coeff = integer_from_json(jterm[0], "variety.coeff");
                for (const auto& e : jterm[1])
                    term.exponents.push_back(
                        static_cast<unsigned>(integer_from_json(e, "variety.exponent").get_ui()));
                eq.push_back(std::move(term));
            }
            v.equations.push_back(std::move(eq));
        }
    }
    v.validate();
    return v;
}

CohomologyData cohomology_from_json(std::string_view text) {
    const ordered_json j = must_parse(text);
    CohomologyData out;
    if (j.contains("q")) out.q = integer_from_json(j["q"], "cohomology.q").get_ui();
    long twist = 0;
    if (j.contains("twist")) twist = integer_from_json(j["twist"], "cohomology.twist").get_si();
    if (!j.contains("components") || !j["components"].is_array())
        throw std::invalid_argument("cohomology: missing 'components' array");
    std::map<int, Matrix> comps;
    for (const auto& jc : j["components"]) {
        if (!jc.contains("degree") || !jc.contains("matrix"))
            throw std::invalid_argument("cohomology: component needs 'degree' and 'matrix'");
        const int degree = static_cast<int>(integer_from_json(jc["degree"], "cohomology.degree").get_si());
        const auto& jm = jc["matrix"];
        if (!jm.is_array()) throw std::invalid_argument("cohomology: matrix must be an array of rows");
        const int dim = static_cast<int>(jm.size());
        std::vector<Rational> entries;
        entries.reserve(static_cast<size_t>(dim) * static_cast<size_t>(dim));
        for (const auto& row : jm) {
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                throw std::invalid_argument("cohomology: matrix must be square");
            for (const auto& v : row) entries.push_back(rational_from_json(v, "cohomology.entry"));
        }
        if (comps.count(degree))
            throw std::invalid_argument("cohomology: duplicate degree");
        comps.emplace(degree, Matrix(dim, std::move(entries)));
    }
    out.complex = EndoComplex(std::move(comps), twist);
    return out;
}

std::string report_to_json(const LefschetzReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json jr;
        jr["n"] = row.n;
        jr["brute"] = row.brute.str();
        jr["predicted"] = row.predicted.str();
        jr["pass"] = row.pass;
        rows.push_back(std::move(jr));
    }
    ordered_json j;
    j["rows"] = std::move(rows);
    j["pass"] = r.pass;
    return j.dump();
}

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace motzeta
