#pragma once

// JSON and CSV serialization for coefficient vectors, graphs, transform
// audit trails and the verification reports. Needs nlohmann/json on the
// include path as <json.hpp>.
//
// Big integers are written as decimal strings. A report envelope has the
// shape {command, params, results[], violations[], provenance, elapsed_ms};
// elapsed_ms is the only run-dependent field and comparable_json() drops it.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slc/charpoly.hpp"
#include "slc/enumerator.hpp"
#include "slc/error.hpp"
#include "slc/families.hpp"
#include "slc/graph.hpp"
#include "slc/oracle.hpp"
#include "slc/poly.hpp"
#include "slc/spectral.hpp"
#include "slc/transforms.hpp"

namespace slc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchemaVersion = "1";

inline Json big_json(const BigInt& v) { return to_decimal(v); }

inline Json coeffs_json(const CoeffVector& c) {
    Json a = Json::array();
    for (const auto& v : c.values) a.push_back(big_json(v));
    return a;
}

inline CoeffVector coeffs_from_json(const Json& j, MatrixKind kind = MatrixKind::Signless) {
    if (!j.is_array()) throw Error(Errc::ParseError, "coefficient vector must be an array");
    CoeffVector c;
    c.kind = kind;
    for (const auto& x : j) {
        if (!x.is_string()) throw Error(Errc::ParseError, "coefficients are decimal strings");
        c.values.push_back(from_decimal(x.get<std::string>()));
    }
    return c;
}

/// Coefficients from x^deg down to x^0.
inline Json poly_json(const IntPoly& p) {
    Json a = Json::array();
    for (int i = p.degree(); i >= 0; --i) a.push_back(big_json(p.coeff(i)));
    return a;
}

inline IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be an array");
    std::vector<BigInt> c;
    for (const auto& x : j) {
        if (!x.is_string()) throw Error(Errc::ParseError, "coefficients are decimal strings");
        c.push_back(from_decimal(x.get<std::string>()));
    }
    std::reverse(c.begin(), c.end());
    return IntPoly(std::move(c));
}

inline Json graph_json(const Graph& g) {
    Json es = Json::array();
    for (const auto& e : g.edges()) es.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", es}};
}

inline Graph graph_from_json(const Json& j) {
    try {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Graph(j.at("n").get<int>(), pairs);
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, std::string("graph json: ") + e.what());
    }
}

inline Json family_spec_json(const FamilySpec& s) {
    return {{"family", to_string(s.family)}, {"pendants", s.pendants}};
}

inline FamilySpec family_spec_from_json(const Json& j) {
    FamilySpec s;
    try {
        s.family = parse_family(j.at("family").get<std::string>());
        s.pendants = j.at("pendants").get<std::vector<int>>();
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, std::string("family spec json: ") + e.what());
    }
    if (static_cast<int>(s.pendants.size()) != family_base_order(s.family))
        throw Error(Errc::InvalidSpec, to_string(s.family) + " takes " + std::to_string(family_base_order(s.family)) +
                                           " pendant counts");
    return s;
}

inline Json dominance_json(const Dominance& d) {
    return {{"relation", to_string(d.relation)}, {"equal_indices", d.equal_indices}};
}

inline Json record_json(const TransformRecord& r) {
    return {{"kind", to_string(r.kind)},
            {"detail", r.detail},
            {"input", graph_json(r.input)},
            {"output", graph_json(r.output)},
            {"dominance", dominance_json(r.dominance)}};
}

inline Json reduction_json(const Reduction& r) {
    Json recs = Json::array();
    for (const auto& rec : r.records) recs.push_back(record_json(rec));
    Json j{{"parity", to_string(r.parity)},
           {"family", r.family ? Json(to_string(*r.family)) : Json(nullptr)},
           {"reached_extremal", r.reached_extremal},
           {"final_graph", graph_json(r.final_graph)},
           {"records", recs}};
    if (r.stuck) j["stuck"] = *r.stuck;
    return j;
}

inline Json verification_json(const VerificationReport& r) {
    Json inst = Json::array();
    for (const auto& f : r.instances)
        inst.push_back({{"code", f.code},
                        {"coefficients", coeffs_json(f.coeffs)},
                        {"is_extremal", f.is_extremal},
                        {"equal_indices", f.equal_indices},
                        {"expected_indices", f.expected_indices},
                        {"clause_matches", f.clause_matches}});
    return {{"claim", r.claim},
            {"n", r.n},
            {"class", to_string(r.parity)},
            {"instance_count", r.instance_count},
            {"minimizers", r.minimizers},
            {"unique_minimizer", r.unique_minimizer},
            {"clause_mismatches", r.clause_mismatches},
            {"verified", r.verified},
            {"instances", inst}};
}

inline Json violations_json(const VerificationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"claim", r.claim},
                     {"n", r.n},
                     {"code", x.code},
                     {"edges", x.edges},
                     {"index", x.index},
                     {"value", big_json(x.value)},
                     {"extremal", big_json(x.extremal)}});
    return v;
}

inline Json scan_row_json(const IeScanRow& r) {
    return {{"n", r.n},
            {"ie_odd", r.ie_odd},
            {"ie_even", r.ie_even},
            {"ie_odd_closed", r.ie_odd_closed},
            {"ie_even_closed", r.ie_even_closed},
            {"path_gap", r.path_gap},
            {"diff", r.diff},
            {"winner", r.winner}};
}

inline Json bounds_json(const RootBoundsReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"lo", c.lo}, {"hi", c.hi}, {"value", c.value}, {"holds", c.holds}});
    return {{"n", r.n},
            {"alpha", r.alpha.roots},
            {"beta", r.beta.roots},
            {"checks", checks},
            {"all_hold", r.all_hold}};
}

// ---------------------------------------------------------------------------
// Report envelope

struct Report {
    std::string command;
    Json params = Json::object();
    Json results = Json::array();
    Json violations = Json::array();
    Json provenance = Json::object();
    double elapsed_ms = 0;

    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    bool passed() const { return violations.empty(); }

    Json comparable_json() const {
        return {{"command", command},
                {"params", params},
                {"results", results},
                {"violations", violations},
                {"provenance", provenance}};
    }

    Json to_json() const {
        Json j = comparable_json();
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string to_csv(const Report& r) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
        os << '\n';
    };
    line(r.csv_header);
    for (const auto& row : r.csv_rows) line(row);
    return os.str();
}

inline std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace slc
