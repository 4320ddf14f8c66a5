#include "bowlab/json_io.hpp"

#include "bowlab/errors.hpp"

#include <limits>

namespace bowlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonSchemaError(what); }

} // namespace

Json rational_to_json(const Rational& x) {
    if (rat_is_integer(x)) {
        const mpz_class& num = x.get_num();
        if (num.fits_slong_p()) {
            return Json(static_cast<std::int64_t>(num.get_si()));
        }
    }
    return Json(rat_str(x));
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return rat(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return rat_parse(j.get<std::string>());
        } catch (const ValidationError& e) {
            bad(std::string("bad rational: ") + e.what());
        }
    }
    bad("rational must be an integer or a \"p/q\" string");
}

Json rat_mat_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat rat_mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty arrays");
    int cols = static_cast<int>(j[0].size());
    RatMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            bad("matrix rows must all have the same length");
        }
        for (int c = 0; c < cols; ++c) {
            m.at(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json poly_to_json(const Polynomial& p) { return Json(p.str()); }

Polynomial poly_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return poly_parse(j.get<std::string>());
        } catch (const ValidationError& e) {
            bad(std::string("bad polynomial: ") + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Polynomial(std::vector<Rational>{rat(j.get<std::int64_t>())});
    }
    if (j.is_array()) {
        std::vector<Rational> coeffs;
        for (const Json& c : j) coeffs.push_back(rational_from_json(c));
        return Polynomial(coeffs);
    }
    bad("polynomial must be a string, an integer, or a coefficient array");
}

Json poly_mat_to_json(const PolyMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMat poly_mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty arrays");
    int cols = static_cast<int>(j[0].size());
    PolyMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            bad("matrix rows must all have the same length");
        }
        for (int c = 0; c < cols; ++c) {
            m.at(r, c) = poly_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json mu_to_json(const Mu& mu) {
    Json arr = Json::array();
    for (int p : mu.parts()) arr.push_back(p);
    return arr;
}

Mu mu_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("composition must be a non-empty array");
    std::vector<int> parts;
    for (const Json& p : j) {
        if (!p.is_number_integer()) bad("composition parts must be integers");
        std::int64_t v = p.get<std::int64_t>();
        if (v < 1 || v > 64) bad("composition parts must be in [1, 64]");
        parts.push_back(static_cast<int>(v));
    }
    return Mu(parts);
}

Json membership_report_to_json(const MembershipReport& rep) {
    Json out;
    out["ok"] = rep.ok;
    out["violation_count"] = rep.violation_count;
    Json list = Json::array();
    for (const Violation& v : rep.violations) {
        Json item;
        item["row"] = v.row;
        item["col"] = v.col;
        item["expected"] = v.expected;
        item["found"] = v.found;
        list.push_back(std::move(item));
    }
    out["violations"] = std::move(list);
    return out;
}

Presentation presentation_from_json(const Json& j) {
    if (!j.is_object()) bad("presentation must be an object");
    if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty()) {
        bad("presentation needs a non-empty \"gens\" array");
    }
    Presentation pres;
    for (const Json& g : j["gens"]) {
        if (!g.is_string()) bad("generator names must be strings");
        pres.variables.push_back(g.get<std::string>());
    }
    if (!j.contains("rels") || !j["rels"].is_array()) {
        bad("presentation needs a \"rels\" array");
    }
    for (const Json& rel : j["rels"]) {
        if (!rel.is_array() || rel.empty()) {
            bad("each relation must be a non-empty array of terms");
        }
        MultiPoly poly;
        for (const Json& term : rel) {
            if (!term.is_object() || !term.contains("coef") || !term.contains("exps")) {
                bad("each term needs \"coef\" and \"exps\"");
            }
            MonomialTerm t;
            t.coef = rational_from_json(term["coef"]);
            const Json& exps = term["exps"];
            if (!exps.is_array() || exps.size() != pres.variables.size()) {
                bad("\"exps\" must list one exponent per generator");
            }
            for (const Json& e : exps) {
                if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
                    bad("exponents must be non-negative integers");
                }
                t.exps.push_back(static_cast<int>(e.get<std::int64_t>()));
            }
            poly.terms.push_back(std::move(t));
        }
        pres.relations.push_back(std::move(poly));
    }
    return pres;
}

Json presentation_to_json(const Presentation& pres) {
    Json out;
    Json gens = Json::array();
    for (const std::string& v : pres.variables) gens.push_back(v);
    out["gens"] = std::move(gens);
    Json rels = Json::array();
    for (const MultiPoly& rel : pres.relations) {
        Json terms = Json::array();
        for (const MonomialTerm& t : rel.terms) {
            Json term;
            term["coef"] = rational_to_json(t.coef);
            Json exps = Json::array();
            for (int e : t.exps) exps.push_back(e);
            term["exps"] = std::move(exps);
            terms.push_back(std::move(term));
        }
        rels.push_back(std::move(terms));
    }
    out["rels"] = std::move(rels);
    return out;
}

} // namespace bowlab
