// slc: command-line front end for the coefficient library.
//
//   slc coeffs --input G.edgelist [--method oracle|charpoly|both] [--kind signless|laplacian]
//   slc enumerate --n N [--class odd|even|all]
//   slc verify extremal --n N | --from A --to B [--class ...]
//   slc verify closed-forms|identities [--max-n 16]
//   slc verify transforms [--count 500] [--min-n 4] [--max-n 8]
//   slc ie scan --from 5 --to 60
//   slc ie bounds --from 31 --to 200
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad invocation or input.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slc/identities.hpp"
#include "slc/report.hpp"
#include "slc/slc.hpp"

namespace {

using namespace slc;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
    std::string command;
    std::string input;
    int n = 0;
    int from = 0;
    int to = 0;
    std::string cls = "all";
    std::string method = "both";
    std::string kind = "signless";
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
    int count = 500;
    int min_n = 4;
    int max_n = 0;
    bool allow_large = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return parse_edge_list(in);
}

std::vector<ParityClass> classes(const std::string& cls) {
    if (cls == "odd") return {ParityClass::OddClass};
    if (cls == "even") return {ParityClass::EvenClass};
    return {ParityClass::OddClass, ParityClass::EvenClass};
}

std::string vec_string(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

// Range from --n or --from/--to.
std::pair<int, int> order_range(const RunConfig& c) {
    if (c.n > 0) return {c.n, c.n};
    if (c.from > 0 && c.to >= c.from) return {c.from, c.to};
    throw ConfigError("give --n or --from/--to");
}

Report run_coeffs(const RunConfig& c, std::ostream& out) {
    Report r;
    const Graph g = read_graph(c.input);
    const MatrixKind kind = c.kind == "laplacian" ? MatrixKind::Laplacian : MatrixKind::Signless;
    r.params = {{"input", c.input}, {"method", c.method}, {"kind", c.kind}};

    Json res{{"n", g.order()}, {"m", g.size()}, {"kind", c.kind}};
    std::optional<CoeffVector> oracle, algebra;
    if (c.method != "charpoly")
        oracle = kind == MatrixKind::Signless ? signless_coeffs_oracle(g) : laplacian_coeffs_oracle(g);
    if (c.method != "oracle") algebra = kind == MatrixKind::Signless ? signless_coeffs(g) : laplacian_coeffs(g);
    const CoeffVector& shown = algebra ? *algebra : *oracle;
    res["coefficients"] = coeffs_json(shown);
    if (oracle && algebra) {
        res["oracle"] = coeffs_json(*oracle);
        res["charpoly"] = coeffs_json(*algebra);
        res["agree"] = *oracle == *algebra;
        if (!(*oracle == *algebra))
            r.violations.push_back({{"check", "oracle_vs_charpoly"}, {"oracle", oracle->to_string()},
                                    {"charpoly", algebra->to_string()}});
    }

    if (kind == MatrixKind::Signless && is_bicyclic(g)) {
        const PhiExtremes p = phi_extremes_bicyclic(g);
        const int n = g.order();
        Json s{{"phi1", big_json(p.phi1)},
               {"phi_n", big_json(p.phi_n)},
               {"spanning_trees", big_json(p.spanning_trees)},
               {"bipartite", p.bipartite},
               {"formula_phi_n", big_json(p.formula_phi_n)},
               {"formula_phi_n_weighted", big_json(p.formula_phi_n_weighted)}};
        if (p.phi_n_minus_1_if_bipartite) s["phi_n_minus_1"] = big_json(*p.phi_n_minus_1_if_bipartite);
        if (p.formula_phi_n_minus_1) s["formula_phi_n_minus_1"] = big_json(*p.formula_phi_n_minus_1);
        bool ok = p.phi1 == shown[1] && p.phi_n == shown[n];
        if (p.phi_n_minus_1_if_bipartite) ok = ok && *p.phi_n_minus_1_if_bipartite == shown[n - 1];
        s["match"] = ok;
        if (!ok) r.violations.push_back({{"check", "structural_shortcuts"}, {"coefficients", shown.to_string()}});
        res["shortcuts"] = s;
    }
    r.results.push_back(res);

    r.csv_header = {"index", "coefficient"};
    if (oracle && algebra) r.csv_header = {"index", "oracle", "charpoly"};
    for (std::size_t i = 0; i < shown.values.size(); ++i) {
        if (oracle && algebra)
            r.csv_rows.push_back({std::to_string(i), to_decimal(oracle->values[i]), to_decimal(algebra->values[i])});
        else
            r.csv_rows.push_back({std::to_string(i), to_decimal(shown.values[i])});
    }
    out << shown.to_string() << '\n';
    if (!r.passed()) out << "MISMATCH between oracle and charpoly or structural shortcuts\n";
    return r;
}

Report run_enumerate(const RunConfig& c, std::ostream& out) {
    Report r;
    r.params = {{"n", c.n}, {"class", c.cls}, {"allow_large", c.allow_large}};
    const auto all = generate_all_bicyclic(c.n, {.allow_large = c.allow_large, .threads = 0});
    auto [odd, even] = partition_by_parity(all);
    r.csv_header = {"code", "class", "coefficients", "relation_to_extremal", "equal_indices"};
    for (ParityClass cls : classes(c.cls)) {
        const auto& members = cls == ParityClass::OddClass ? odd : even;
        if (members.empty()) continue;
        const CoeffVector ext = signless_coeffs(extremal_graph(c.n, cls));
        for (const auto& g : members) {
            const CoeffVector v = signless_coeffs(g);
            const Dominance d = compare_dominance(v, ext);
            const std::string code = canonical_form(g).hex();
            r.results.push_back({{"code", code},
                                 {"class", to_string(cls)},
                                 {"graph", graph_json(g)},
                                 {"coefficients", coeffs_json(v)},
                                 {"relation_to_extremal", to_string(d.relation)},
                                 {"equal_indices", d.equal_indices}});
            r.csv_rows.push_back({code, std::string(to_string(cls)), v.to_string(), std::string(to_string(d.relation)),
                                  vec_string(d.equal_indices)});
        }
    }
    r.provenance["instance_counts"] = {{"all", all.size()}, {"odd", odd.size()}, {"even", even.size()}};
    out << "n=" << c.n << ": " << all.size() << " connected bicyclic graphs (odd " << odd.size() << ", even "
        << even.size() << ")\n";
    return r;
}

Report run_verify_extremal(const RunConfig& c, std::ostream& out) {
    Report r;
    auto [lo, hi] = order_range(c);
    r.params = {{"from", lo}, {"to", hi}, {"class", c.cls}, {"allow_large", c.allow_large}};
    r.csv_header = {"n", "class", "code", "coefficients", "is_extremal", "equal_indices", "expected_indices",
                    "clause_matches"};
    Json counts = Json::object();
    for (int n = lo; n <= hi; ++n) {
        auto [odd, even] = partition_by_parity(generate_all_bicyclic(n, {.allow_large = c.allow_large, .threads = 0}));
        for (ParityClass cls : classes(c.cls)) {
            if (cls == ParityClass::EvenClass && n < 5) continue;
            const VerificationReport v = verify_extremal_on(cls == ParityClass::OddClass ? odd : even, n, cls);
            r.results.push_back(verification_json(v));
            for (auto& x : violations_json(v)) r.violations.push_back(x);
            if (!v.unique_minimizer)
                r.violations.push_back({{"claim", v.claim}, {"n", n}, {"check", "unique_minimizer"},
                                        {"minimizers", v.minimizers}});
            for (const auto& f : v.instances)
                r.csv_rows.push_back({std::to_string(n), std::string(to_string(cls)), f.code, f.coeffs.to_string(),
                                      f.is_extremal ? "1" : "0", vec_string(f.equal_indices),
                                      vec_string(f.expected_indices), f.clause_matches ? "1" : "0"});
            counts[v.claim + "/" + std::to_string(n)] = v.instance_count;
            out << "n=" << n << " " << to_string(cls) << ": " << v.instance_count << " graphs, "
                << (v.verified ? "verified" : "VIOLATED") << ", "
                << (v.unique_minimizer ? "unique minimizer " + v.minimizers.front()
                                       : "minimizers " + std::to_string(v.minimizers.size()))
                << ", equality-clause mismatches " << v.clause_mismatches << '\n';
        }
    }
    r.provenance["instance_counts"] = counts;
    return r;
}

Report run_verify_closed_forms(const RunConfig& c, std::ostream& out) {
    Report r;
    const int max_n = c.max_n > 0 ? c.max_n : 16;
    r.params = {{"max_n", max_n}};
    r.csv_header = {"family", "n", "match"};
    int checked = 0;
    for (Family f : kAllFamilies)
        for (int n = closed_form_min_order(f); n <= max_n; ++n) {
            const IntPoly cf = closed_form_poly(f, n);
            const IntPoly exact = signless_charpoly(build_family(hub_family(f, n)));
            const bool ok = cf == exact;
            r.results.push_back({{"family", to_string(f)}, {"n", n}, {"closed_form", poly_json(cf)}, {"match", ok}});
            r.csv_rows.push_back({to_string(f), std::to_string(n), ok ? "1" : "0"});
            if (!ok)
                r.violations.push_back({{"family", to_string(f)}, {"n", n}, {"closed_form", poly_json(cf)},
                                        {"charpoly", poly_json(exact)}});
            ++checked;
        }
    r.provenance["instance_counts"] = {{"checked", checked}};
    out << checked << " closed forms checked, " << r.violations.size() << " mismatches\n";
    return r;
}

Report run_verify_identities(const RunConfig& c, std::ostream& out) {
    Report r;
    const int max_n = c.max_n > 0 ? c.max_n : 16;
    r.params = {{"max_n", max_n}, {"count", c.count}, {"seed", c.seed}};
    r.csv_header = {"identity", "instance", "holds"};
    int diff_checked = 0;
    for (int eq = 1; eq <= 6; ++eq)
        for (int n = difference_identity_min_order(eq); n <= max_n; ++n) {
            const DifferenceIdentity d = difference_identity(eq, n);
            const std::string name = "difference-" + std::to_string(eq);
            r.results.push_back({{"identity", name},
                                 {"n", n},
                                 {"minuend", to_string(d.minuend)},
                                 {"subtrahend", to_string(d.subtrahend)},
                                 {"holds", d.holds()}});
            r.csv_rows.push_back({name, "n=" + std::to_string(n), d.holds() ? "1" : "0"});
            if (!d.holds()) r.violations.push_back({{"identity", name}, {"n", n}});
            ++diff_checked;
        }

    std::mt19937_64 rng(c.seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int k = 0; k < c.count; ++k) {
        const Graph g1 = random_connected_graph(pick(2, 5), pick(0, 2), rng);
        const Graph g2 = random_connected_graph(pick(2, 4), pick(0, 1), rng);
        const Vertex u = pick(0, g1.order() - 1), v = pick(0, g2.order() - 1);
        const bool join = identity_check_join(g1, u, g2, v);
        const Graph h = random_connected_graph(pick(2, 5), pick(0, 3), rng);
        const Vertex w = pick(0, h.order() - 1);
        const int pendants = pick(1, 3);
        const bool pend = identity_check_pendants(h, w, pendants);
        r.results.push_back({{"identity", "join"}, {"instance", k}, {"g1", graph_json(g1)}, {"u", u},
                             {"g2", graph_json(g2)}, {"v", v}, {"holds", join}});
        r.results.push_back({{"identity", "pendants"}, {"instance", k}, {"h", graph_json(h)}, {"v", w},
                             {"k", pendants}, {"holds", pend}});
        r.csv_rows.push_back({"join", std::to_string(k), join ? "1" : "0"});
        r.csv_rows.push_back({"pendants", std::to_string(k), pend ? "1" : "0"});
        if (!join) r.violations.push_back({{"identity", "join"}, {"instance", k}});
        if (!pend) r.violations.push_back({{"identity", "pendants"}, {"instance", k}});
    }
    r.provenance["instance_counts"] = {{"difference", diff_checked}, {"join", c.count}, {"pendants", c.count}};
    out << diff_checked << " difference identities and " << 2 * c.count << " randomized identities checked, "
        << r.violations.size() << " failures\n";
    return r;
}

Report run_verify_transforms(const RunConfig& c, std::ostream& out) {
    Report r;
    const int max_n = c.max_n > 0 ? c.max_n : 8;
    if (c.min_n < 4 || max_n < c.min_n) throw ConfigError("need 4 <= --min-n <= --max-n");
    r.params = {{"count", c.count}, {"min_n", c.min_n}, {"max_n", max_n}, {"seed", c.seed}};
    r.csv_header = {"instance", "n", "step", "kind", "detail", "relation", "equal_indices", "ie_conforms"};
    std::mt19937_64 rng(c.seed);
    std::map<std::string, int> by_kind;
    int certified = 0, ie_ok = 0, last_index_ties = 0;
    for (int k = 0; k < c.count; ++k) {
        const int n = std::uniform_int_distribution<int>(c.min_n, max_n)(rng);
        const Graph g = random_bicyclic(n, rng);
        const Reduction red = reduce_to_extremal(g);
        Json steps = Json::array();
        int step = 0;
        for (const auto& rec : red.records) {
            ++by_kind[std::string(to_string(rec.kind))];
            Json s{{"kind", to_string(rec.kind)}, {"detail", rec.detail}, {"dominance", dominance_json(rec.dominance)}};
            bool ie = true;
            if (rec.dominance.relation == Relation::Dominates) {
                ++certified;
                ie = ie_dominance_spot_check(rec.output, rec.input);
                ie_ok += ie;
                s["ie_conforms"] = ie;
            } else {
                r.violations.push_back({{"instance", k}, {"check", "dominance"}, {"kind", to_string(rec.kind)},
                                        {"input", graph_json(rec.input)}, {"output", graph_json(rec.output)},
                                        {"relation", to_string(rec.dominance.relation)}});
            }
            if (!ie) r.violations.push_back({{"instance", k}, {"check", "ie_order"}, {"input", graph_json(rec.input)}});
            if (parity_class(rec.output) != red.parity)
                r.violations.push_back({{"instance", k}, {"check", "parity"}, {"input", graph_json(rec.input)}});
            const auto& eq = rec.dominance.equal_indices;
            if (rec.kind == TransformKind::ContractToPendant || rec.kind == TransformKind::Sigma) {
                const auto claimed = claimed_equality_indices(rec.kind, rec.input);
                if (!std::includes(claimed.begin(), claimed.end(), eq.begin(), eq.end()))
                    r.violations.push_back({{"instance", k}, {"check", "equality_indices"},
                                            {"kind", to_string(rec.kind)}, {"equal_indices", eq}});
            } else if (rec.kind == TransformKind::ShortenCycle) {
                if (eq != std::vector<int>{0, 1}) ++last_index_ties;
            }
            r.csv_rows.push_back({std::to_string(k), std::to_string(n), std::to_string(step++),
                                  std::string(to_string(rec.kind)), rec.detail, std::string(to_string(rec.dominance.relation)),
                                  vec_string(eq), ie ? "1" : "0"});
            steps.push_back(s);
        }
        if (!red.reached_extremal)
            r.violations.push_back({{"instance", k}, {"check", "reached_extremal"}, {"graph", graph_json(g)},
                                    {"stuck", red.stuck.value_or("")}});
        r.results.push_back({{"instance", k},
                             {"graph", graph_json(g)},
                             {"parity", to_string(red.parity)},
                             {"family", red.family ? Json(to_string(*red.family)) : Json(nullptr)},
                             {"reached_extremal", red.reached_extremal},
                             {"steps", steps}});
    }
    r.provenance["instance_counts"] = {{"instances", c.count}, {"dominance_certified_pairs", certified},
                                       {"ie_conforming", ie_ok}, {"records_by_kind", by_kind},
                                       {"shorten_equality_beyond_0_1", last_index_ties}};
    r.provenance["tolerances"] = {{"ie_margin", kIeMargin}};
    out << c.count << " instances, " << certified << " dominance-certified steps, " << ie_ok
        << " IE-consistent, " << r.violations.size() << " violations\n";
    return r;
}

Report run_ie_scan(const RunConfig& c, std::ostream& out) {
    Report r;
    const int lo = c.from > 0 ? c.from : 5, hi = c.to > 0 ? c.to : 60;
    r.params = {{"from", lo}, {"to", hi}};
    const IeScanReport s = ie_threshold_scan(lo, hi);
    r.csv_header = {"n", "IE1", "IE2", "diff", "winner"};
    for (const auto& row : s.rows) {
        r.results.push_back(scan_row_json(row));
        r.csv_rows.push_back({std::to_string(row.n), fmt_double(row.ie_odd), fmt_double(row.ie_even),
                              fmt_double(row.diff), row.winner});
        if (row.path_gap > kIePathTolerance)
            r.violations.push_back({{"n", row.n}, {"check", "path_agreement"}, {"gap", row.path_gap}});
        const std::string expected = row.n <= 30 ? "even" : "odd";
        if (row.winner != expected)
            r.violations.push_back({{"n", row.n}, {"check", "winner"}, {"winner", row.winner}, {"expected", expected}});
    }
    r.provenance["summary"] = {{"crossover", s.crossover ? Json(*s.crossover) : Json(nullptr)},
                               {"min_abs_diff", s.min_abs_diff},
                               {"min_abs_diff_n", s.min_abs_diff_n},
                               {"max_path_gap", s.max_path_gap}};
    r.provenance["tolerances"] = {{"path_agreement", kIePathTolerance}, {"ie_margin", kIeMargin}};
    out << "n=" << lo << ".." << hi << ": crossover at "
        << (s.crossover ? std::to_string(*s.crossover) : std::string("none")) << ", min |IE2-IE1| "
        << fmt_double(s.min_abs_diff) << " at n=" << s.min_abs_diff_n << ", max path gap "
        << fmt_double(s.max_path_gap) << '\n';
    return r;
}

Report run_ie_bounds(const RunConfig& c, std::ostream& out) {
    Report r;
    int lo = 31, hi = 200;
    if (c.n > 0) lo = hi = c.n;
    if (c.from > 0) lo = c.from;
    if (c.to > 0) hi = c.to;
    if (hi < lo) throw ConfigError("empty range");
    r.params = {{"from", lo}, {"to", hi}};
    r.csv_header = {"n", "bound", "lo", "hi", "value", "holds"};
    int failing_n = 0;
    for (int n = lo; n <= hi; ++n) {
        const RootBoundsReport b = cubic_root_bounds(n);
        r.results.push_back(bounds_json(b));
        for (const auto& chk : b.checks) {
            r.csv_rows.push_back({std::to_string(n), chk.name, fmt_double(chk.lo), fmt_double(chk.hi),
                                  fmt_double(chk.value), chk.holds ? "1" : "0"});
            if (!chk.holds)
                r.violations.push_back({{"n", n}, {"bound", chk.name}, {"lo", chk.lo}, {"hi", chk.hi},
                                        {"value", chk.value}});
        }
        failing_n += !b.all_hold;
    }
    out << "n=" << lo << ".." << hi << ": " << failing_n << " orders with a violated interval, "
        << r.violations.size() << " violations\n";
    return r;
}

void write_report(const Report& r, const RunConfig& c) {
    if (c.output.empty()) return;
    std::ofstream f(c.output);
    if (!f) throw ConfigError("cannot write " + c.output);
    if (c.format == "csv")
        f << to_csv(r);
    else
        f << r.to_json().dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Signless Laplacian coefficient toolkit for bicyclic graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "Seed for randomized instances");
    app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", cfg.output, "Report path (written whether or not checks pass)");

    auto* coeffs = app.add_subcommand("coeffs", "Coefficient vector of one graph");
    coeffs->add_option("--input,-i", cfg.input, "Edge-list file")->required();
    coeffs->add_option("--method", cfg.method)->check(CLI::IsMember({"oracle", "charpoly", "both"}));
    coeffs->add_option("--kind", cfg.kind)->check(CLI::IsMember({"signless", "laplacian"}));

    auto* enumerate = app.add_subcommand("enumerate", "All connected bicyclic graphs of one order");
    enumerate->add_option("--n", cfg.n)->required();
    enumerate->add_option("--class", cfg.cls)->check(CLI::IsMember({"odd", "even", "all"}));
    enumerate->add_flag("--allow-large", cfg.allow_large, "Admit n = 9");

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* extremal = verify->add_subcommand("extremal", "Extremal graphs of both parity classes");
    extremal->add_option("--n", cfg.n);
    extremal->add_option("--from", cfg.from);
    extremal->add_option("--to", cfg.to);
    extremal->add_option("--class", cfg.cls)->check(CLI::IsMember({"odd", "even", "all"}));
    extremal->add_flag("--allow-large", cfg.allow_large);
    auto* closed = verify->add_subcommand("closed-forms", "Family closed forms against exact polynomials");
    closed->add_option("--max-n", cfg.max_n);
    auto* idents = verify->add_subcommand("identities", "Difference, join and pendant identities");
    idents->add_option("--max-n", cfg.max_n);
    idents->add_option("--count", cfg.count, "Randomized join/pendant instances");
    auto* transforms = verify->add_subcommand("transforms", "Reductions of random bicyclic graphs");
    transforms->add_option("--count", cfg.count);
    transforms->add_option("--min-n", cfg.min_n);
    transforms->add_option("--max-n", cfg.max_n);

    auto* ie = app.add_subcommand("ie", "Incidence energy of the extremal graphs");
    ie->require_subcommand(1);
    ie->fallthrough();
    auto* scan = ie->add_subcommand("scan", "IE of both extremal graphs over a range of n");
    scan->add_option("--from", cfg.from);
    scan->add_option("--to", cfg.to);
    auto* bounds = ie->add_subcommand("bounds", "Root interval bounds of the extremal cubics");
    bounds->add_option("--n", cfg.n);
    bounds->add_option("--from", cfg.from);
    bounds->add_option("--to", cfg.to);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    try {
        if (*coeffs) {
            report = run_coeffs(cfg, std::cout);
            report.command = "coeffs";
        } else if (*enumerate) {
            report = run_enumerate(cfg, std::cout);
            report.command = "enumerate";
        } else if (*extremal) {
            report = run_verify_extremal(cfg, std::cout);
            report.command = "verify extremal";
        } else if (*closed) {
            report = run_verify_closed_forms(cfg, std::cout);
            report.command = "verify closed-forms";
        } else if (*idents) {
            report = run_verify_identities(cfg, std::cout);
            report.command = "verify identities";
        } else if (*transforms) {
            report = run_verify_transforms(cfg, std::cout);
            report.command = "verify transforms";
        } else if (*scan) {
            report = run_ie_scan(cfg, std::cout);
            report.command = "ie scan";
        } else if (*bounds) {
            report = run_ie_bounds(cfg, std::cout);
            report.command = "ie bounds";
        }
        report.provenance["tool"] = "slc";
        report.provenance["schema"] = kReportSchemaVersion;
        report.provenance["seed"] = cfg.seed;
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        write_report(report, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "slc: " << e.what() << '\n';
        return kExitConfig;
    } catch (const slc::Error& e) {
        std::cerr << "slc: " << e.what() << '\n';
        return kExitConfig;
    }
    if (!report.passed()) std::cerr << "slc: " << report.violations.size() << " check(s) failed\n";
    return report.passed() ? kExitOk : kExitFailed;
}
