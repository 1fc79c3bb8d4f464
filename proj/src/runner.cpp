#include "zafa/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "zafa/amenability.hpp"
#include "zafa/hypergroup.hpp"
#include "zafa/io.hpp"
#include "zafa/su2.hpp"
#include "zafa/za.hpp"

namespace zafa {

using nlohmann::json;

namespace {

std::string fmt_real(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

// reports print the real part alone when the imaginary part is negligible
std::string fmt_cplx(cplx v) {
    if (std::abs(v.imag()) < 1e-10) return fmt_real(v.real());
    std::string s = fmt_real(v.real());
    s += (v.imag() < 0 ? "-" : "+");
    s += fmt_real(std::abs(v.imag()));
    s += "i";
    return s;
}

double wall_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string csv_cell(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find(',') != std::string::npos) s = "\"" + s + "\"";
        return s;
    }
    return v.dump();
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<json>& rows) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const json& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "");
            if (row.contains(columns[i])) out << csv_cell(row.at(columns[i]));
        }
        out << '\n';
    }
}

struct NamedGroup {
    std::string name;
    FiniteGroup group;
    std::string error;  // construction failure, reported as a row
};

std::vector<double> theta_grid(int count) {
    std::vector<double> thetas;
    if (count <= 1) {
        thetas.push_back(std::numbers::pi / 2);
        return thetas;
    }
    const double lo = 0.12, hi = std::numbers::pi - 0.12;
    for (int t = 0; t < count; ++t)
        thetas.push_back(lo + (hi - lo) * t / (count - 1));
    return thetas;
}

CentralElement random_element(const TablePtr& table, std::uint64_t& state) {
    CentralElement u(table);
    for (int p = 0; p < table->k; ++p)
        u.set(p, cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0));
    return u;
}

}  // namespace

int run(const RunConfig& config) {
    static const std::vector<std::string> known_tasks = {"table", "am", "fusion",
                                                         "su2-deriv", "hypergroup-check"};
    if (std::find(known_tasks.begin(), known_tasks.end(), config.task) == known_tasks.end()) {
        std::cerr << "zafa: unknown task: " << config.task << '\n';
        return 2;
    }
    if (config.format != "json" && config.format != "csv") {
        std::cerr << "zafa: unknown format: " << config.format << '\n';
        return 2;
    }

    CharTableOptions table_opt;
    table_opt.orthogonality_tol = config.tolerance;
    table_opt.exec = config.exec;
    const auto cache_dir = io::cache_directory(config.cache_dir);

    // validation phase: every input is parsed and constructed before any
    // computation starts; malformed input aborts with no partial report
    std::vector<NamedGroup> groups;
    std::vector<json> hyper_specs;
    try {
        std::vector<std::string> names = config.catalog;
        if (names.size() == 1 && names[0] == "none") names.clear();
        // group tasks default to the catalog; hypergroup-check falls back to
        // its built-in instances and su2-deriv needs no inputs
        if (names.empty() && config.spec_files.empty() && config.task != "su2-deriv" &&
            config.task != "hypergroup-check")
            names = default_catalog();
        for (const auto& name : names) {
            if (config.task == "hypergroup-check") {
                hyper_specs.push_back({{"kind", "dual"}, {"group", {{"catalog", name}}}});
            } else {
                try {
                    groups.push_back({name, catalog_group(name), ""});
                } catch (const std::runtime_error& err) {
                    groups.push_back({name, FiniteGroup(), err.what()});
                }
            }
        }
        for (const auto& path : config.spec_files) {
            std::ifstream in(path);
            if (!in) {
                std::cerr << "zafa: cannot open spec file: " << path << '\n';
                return 2;
            }
            json doc;
            try {
                in >> doc;
            } catch (const json::exception&) {
                std::cerr << "zafa: malformed spec file: " << path << '\n';
                return 2;
            }
            if (config.task == "hypergroup-check" && doc.is_object() && doc.contains("kind")) {
                hyper_specs.push_back(doc);
            } else {
                const std::string fallback = std::filesystem::path(path).stem().string();
                try {
                    FiniteGroup g = io::group_from_spec(doc);
                    groups.push_back({g.label(), std::move(g), ""});
                } catch (const std::runtime_error& err) {
                    groups.push_back({fallback, FiniteGroup(), err.what()});
                }
            }
        }
    } catch (const std::exception& err) {
        std::cerr << "zafa: " << err.what() << '\n';
        return 2;
    }

    bool any_failed = false;
    std::vector<json> rows;
    std::vector<std::string> columns;

    if (config.task == "su2-deriv") {
        std::vector<long> levels(static_cast<std::size_t>(config.su2_lmax) + 1);
        for (std::size_t i = 0; i < levels.size(); ++i) levels[i] = static_cast<long>(i);
        const auto samples =
            su2::derivation_bound_sweep(levels, theta_grid(config.su2_grid), config.exec);
        for (const auto& s : samples) {
            const bool ok = s.slack >= -1e-9;
            any_failed |= !ok;
            const cplx z = std::polar(1.0, s.theta);
            rows.push_back({{"l", s.l},
                            {"z", fmt_cplx(z)},
                            {"magnitude", s.magnitude},
                            {"bound", s.bound},
                            {"slack", s.slack},
                            {"ok", ok}});
        }
        columns = {"l", "z", "magnitude", "bound", "slack", "ok"};
    } else if (config.task == "hypergroup-check") {
        if (hyper_specs.empty()) {
            hyper_specs.push_back({{"kind", "dual"}, {"group", {{"catalog", "S3"}}}});
            hyper_specs.push_back({{"kind", "poly-n0"}});
            hyper_specs.push_back(
                {{"kind", "orbit"}, {"dimension", 1}, {"matrices", {{{1}}, {{-1}}}}});
        }
        for (const json& spec : hyper_specs) {
            json row;
            try {
                std::unique_ptr<DiscreteHypergroup> h;
                const std::string kind = spec.at("kind").get<std::string>();
                if (kind == "dual") {
                    FiniteGroup g = io::group_from_spec(spec.at("group"));
                    auto table = std::make_shared<const CharacterTable>(
                        io::table_for_group(g, cache_dir, table_opt));
                    h = dual_of_group(table);
                } else if (kind == "poly-n0") {
                    h = polynomial_N0();
                } else if (kind == "orbit") {
                    h = orbit_hypergroup(
                        spec.at("dimension").get<int>(),
                        spec.at("matrices")
                            .get<std::vector<std::vector<std::vector<long long>>>>());
                } else {
                    throw std::runtime_error("unknown hypergroup kind: " + kind);
                }
                const int points = spec.value("support", 24);
                const auto chk = verify_hypergroup(*h, points, 1000);
                const bool ok = chk.max_probability_residual < 1e-12 &&
                                chk.min_coefficient > -1e-15 &&
                                chk.max_identity_deviation < 1e-12 &&
                                chk.max_associativity_deviation < 1e-10;
                any_failed |= !ok;
                row = {{"name", h->name()},
                       {"points", chk.points},
                       {"triples", chk.triples},
                       {"prob_residual", chk.max_probability_residual},
                       {"identity_dev", chk.max_identity_deviation},
                       {"assoc_dev", chk.max_associativity_deviation},
                       {"ok", ok}};
            } catch (const std::exception& err) {
                any_failed = true;
                row = {{"name", spec.value("kind", std::string("?"))}, {"error", err.what()}};
            }
            rows.push_back(std::move(row));
        }
        columns = {"name", "points", "triples", "prob_residual",
                   "identity_dev", "assoc_dev", "ok", "error"};
    } else {
        rows.resize(groups.size());
        std::vector<char> failed(groups.size(), 0);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const auto t0 = std::chrono::steady_clock::now();
            json row;
            if (!groups[i].error.empty()) {
                rows[i] = {{"group", groups[i].name}, {"error", groups[i].error}};
                failed[i] = 1;
                continue;
            }
            try {
                const FiniteGroup& g = groups[i].group;
                auto table = std::make_shared<const CharacterTable>(
                    io::table_for_group(g, cache_dir, table_opt));
                if (config.task == "table") {
                    json values = json::array();
                    for (int p = 0; p < table->k; ++p) {
                        json vr = json::array();
                        for (int j = 0; j < table->k; ++j) vr.push_back(fmt_cplx(table->at(p, j)));
                        values.push_back(std::move(vr));
                    }
                    row = {{"group", groups[i].name},
                           {"order", table->group_order},
                           {"k", table->k},
                           {"hash", io::hash_hex(table->group_hash)},
                           {"degrees", table->degrees},
                           {"class_sizes", table->class_sizes},
                           {"values", std::move(values)}};
                } else if (config.task == "am") {
                    const AmenabilityReport rep = amenability_report(table, config.exec);
                    const bool diagonal_ok =
                        std::abs(rep.am_za - rep.diagonal_norm) <= 1e-9 * std::max(1.0, rep.am_za);
                    row = {{"group", groups[i].name},
                           {"order", rep.order},
                           {"k", rep.k},
                           {"am_za", rep.am_za},
                           {"am_zl1", rep.am_zl1},
                           {"abelian", rep.is_abelian},
                           {"lower_bound_ok", rep.lower_bound_ok},
                           {"diagonal_ok", diagonal_ok}};
                    if (!rep.lower_bound_ok || !diagonal_ok) failed[i] = 1;
                } else {  // fusion
                    const auto ft = fusion_tensor(*table);
                    json entries = json::array();
                    for (int p = 0; p < ft.k; ++p)
                        for (int q = 0; q < ft.k; ++q)
                            for (const auto& [s, mult] : ft.at(p, q))
                                entries.push_back({p, q, s, mult});
                    row = {{"group", groups[i].name},
                           {"order", table->group_order},
                           {"k", table->k},
                           {"entries", std::move(entries)}};
                }
            } catch (const std::exception& err) {
                row = {{"group", groups[i].name}, {"error", err.what()}};
                failed[i] = 1;
            }
            if (config.timings) row["wall_ms"] = wall_ms(t0);
            rows[i] = std::move(row);
        }
        for (char f : failed) any_failed |= (f != 0);
        if (config.task == "table")
            columns = {"group", "order", "k", "hash", "error"};
        else if (config.task == "am")
            columns = {"group", "order", "k",
                       "am_za", "am_zl1", "abelian",
                       "lower_bound_ok", "diagonal_ok", "error"};
        else
            columns = {"group", "order", "k", "error"};
        if (config.timings) columns.push_back("wall_ms");
    }

    // emit the single report document
    std::ostringstream body;
    if (config.format == "json") {
        json doc = {{"schema", "zafa-report/1"}, {"task", config.task}, {"rows", rows}};
        body << doc.dump(2) << '\n';
    } else {
        write_csv(body, columns, rows);
    }
    if (config.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(config.out_path);
        if (!out) {
            std::cerr << "zafa: cannot write report: " << config.out_path << '\n';
            return 2;
        }
        out << body.str();
        if (!out.good()) return 2;
    }
    return any_failed ? 1 : 0;
}

namespace {

struct CheckSink {
    std::ostream& out;
    VerifySummary summary;

    void report(const std::string& check, const std::string& subject, double residual,
                bool pass) {
        ++summary.checks;
        if (!pass) ++summary.failures;
        summary.max_residual = std::max(summary.max_residual, residual);
        out << (pass ? "[PASS] " : "[FAIL] ") << check << "  subject=" << subject
            << "  residual=" << fmt_real(residual) << '\n';
    }
};

}  // namespace

VerifySummary verify_suite(const RunConfig& config, std::ostream& out) {
    std::vector<std::string> names = config.catalog;
    if (names.size() == 1 && names[0] == "none") names.clear();
    else if (names.empty()) names = default_catalog();

    CheckSink sink{out, {}};
    CharTableOptions opt;
    opt.exec = config.exec;

    std::vector<std::pair<std::string, TablePtr>> tables;
    for (std::size_t gi = 0; gi < names.size(); ++gi) {
        const std::string& name = names[gi];
        try {
            const FiniteGroup g = catalog_group(name);
            CharacterTable ct = compute_character_table(g, opt);
            if (config.inject_corruption && gi == 0 && ct.k > 1)
                ct.values[1] += 0.5;  // negative-control hook
            auto table = std::make_shared<const CharacterTable>(std::move(ct));
            tables.emplace_back(name, table);

            // orthogonality + degree identity
            std::int64_t d2 = 0;
            for (int d : table->degrees) d2 += static_cast<std::int64_t>(d) * d;
            const double orth = orthogonality_residual(*table);
            sink.report("orthogonality", name, orth,
                        orth < 1e-9 && d2 == table->group_order);

            // fusion integrality + dimension count
            double fusion_residual = 0.0;
            bool fusion_ok = true;
            try {
                const FusionTensor ft = fusion_tensor(*table);
                for (int p = 0; p < ft.k && fusion_ok; ++p)
                    for (int q = 0; q < ft.k; ++q) {
                        std::int64_t dim = 0;
                        for (const auto& [s, mult] : ft.at(p, q))
                            dim += static_cast<std::int64_t>(mult) * table->degrees[s];
                        if (dim != static_cast<std::int64_t>(table->degrees[p]) *
                                       table->degrees[q]) {
                            fusion_ok = false;
                            break;
                        }
                    }
            } catch (const std::exception&) {
                fusion_ok = false;
                fusion_residual = 1.0;
            }
            sink.report("fusion-dimension", name, fusion_residual, fusion_ok);

            // norm submultiplicativity and pointwise agreement of the product
            std::uint64_t state = 0x5afa2000u + gi;
            double submult = 0.0, pointwise = 0.0;
            for (int trial = 0; trial < 10; ++trial) {
                const CentralElement u = random_element(table, state);
                const CentralElement v = random_element(table, state);
                const CentralElement uv = multiply(u, v);
                submult = std::max(
                    submult, (za_norm(uv) - za_norm(u) * za_norm(v)) /
                                 std::max(1.0, za_norm(u) * za_norm(v)));
                const ClassFunction fu = to_class_function(u);
                const ClassFunction fv = to_class_function(v);
                const ClassFunction fuv = to_class_function(uv);
                for (int j = 0; j < table->k; ++j)
                    pointwise = std::max(pointwise,
                                         std::abs(fuv.values[j] - fu.values[j] * fv.values[j]));
            }
            sink.report("norm-submultiplicative", name, std::max(0.0, submult),
                        submult <= 1e-10);
            sink.report("product-pointwise", name, pointwise, pointwise < 1e-8);

            // transform round-trip
            ClassFunction f;
            for (int j = 0; j < table->k; ++j)
                f.values.push_back(cplx(2.0 * uniform01(state) - 1.0,
                                        2.0 * uniform01(state) - 1.0));
            const ClassFunction back = to_class_function(from_class_function(table, f));
            double rt = 0.0;
            for (int j = 0; j < table->k; ++j)
                rt = std::max(rt, std::abs(back.values[j] - f.values[j]));
            sink.report("transform-roundtrip", name, rt, rt < 1e-9);

            // two-path diagonal identity
            const double am = am_za(*table, config.exec);
            const double dn = za_norm(diagonal_element(table));
            const double diag_dev = std::abs(am - dn) / std::max(1.0, am);
            sink.report("diagonal-two-path", name, diag_dev, diag_dev < 1e-9);

            // hypergroup axioms on the dual
            const auto dual = dual_of_group(table);
            const auto chk = verify_hypergroup(*dual, table->k, 1000);
            const double hg = std::max({chk.max_probability_residual,
                                        chk.max_identity_deviation,
                                        chk.max_associativity_deviation});
            sink.report("dual-hypergroup-axioms", name, hg,
                        chk.max_probability_residual < 1e-12 &&
                            chk.min_coefficient > -1e-15 &&
                            chk.max_associativity_deviation < 1e-10);
        } catch (const std::exception& err) {
            out << "[FAIL] group-pipeline  subject=" << name << "  error=" << err.what()
                << '\n';
            ++sink.summary.checks;
            ++sink.summary.failures;
        }
    }

    if (!names.empty()) {
        // product law on literal product groups
        try {
            const double am_s3 = am_za(compute_character_table(catalog_group("S3"), opt));
            const double am_s3z2 =
                am_za(compute_character_table(catalog_group("S3xZ2"), opt));
            const double am_s3s3 =
                am_za(compute_character_table(catalog_group("S3xS3"), opt));
            const double dev = std::max(std::abs(am_s3z2 - am_s3),
                                        std::abs(am_s3s3 - am_s3 * am_s3));
            sink.report("product-law", "S3xZ2,S3xS3", dev, dev < 1e-6);
        } catch (const std::exception&) {
            sink.report("product-law", "S3xZ2,S3xS3", 1.0, false);
        }

        // SU(2) derivation identity and bound sweep
        std::uint64_t state = 0x5afa3000u;
        double ident = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            su2::CentralTrigPoly u, v;
            for (int t = 0; t < 6; ++t) {
                u.set(static_cast<long>(splitmix64(state) % 21),
                      cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0));
                v.set(static_cast<long>(splitmix64(state) % 21),
                      cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0));
            }
            for (double theta : theta_grid(5))
                ident = std::max(ident, su2::derivation_identity_deviation(
                                            su2::CirclePoint::from_angle(theta), u, v));
        }
        sink.report("derivation-identity", "su2", ident, ident < 1e-8);

        std::vector<long> levels;
        for (long l = 0; l <= 200; ++l) levels.push_back(l);
        const auto sweep = su2::derivation_bound_sweep(levels, theta_grid(100), config.exec);
        double worst_slack = 0.0;
        for (const auto& s : sweep) worst_slack = std::min(s.slack, worst_slack);
        sink.report("derivation-bound", "su2", std::max(0.0, -worst_slack),
                    worst_slack >= -1e-9);

        // polynomial and orbit hypergroups
        const auto poly = polynomial_N0();
        const auto pchk = verify_hypergroup(*poly, 50, 1000);
        sink.report("poly-n0-axioms", "poly-n0",
                    std::max(pchk.max_probability_residual, pchk.max_associativity_deviation),
                    pchk.max_probability_residual < 1e-12 &&
                        pchk.max_associativity_deviation < 1e-10);

        const auto orbit = orbit_hypergroup(1, {{{1}}, {{-1}}});
        const auto ochk = verify_hypergroup(*orbit, 24, 1000);
        sink.report("orbit-z-pm1-axioms", orbit->name(),
                    std::max(ochk.max_probability_residual, ochk.max_associativity_deviation),
                    ochk.max_probability_residual < 1e-12 &&
                        ochk.max_associativity_deviation < 1e-10);

        // the orbit instance reproduces poly-n0 on small support
        double match = 0.0;
        for (long long n = 0; n <= 20; ++n)
            for (long long m = 0; m <= 20; ++m) {
                const auto pm = poly->convolve({n}, {m});
                const auto om = orbit->convolve({-n}, {-m});  // orbit reps are -|v|
                for (const auto& [idx, w] : pm) {
                    const auto it = om.find({-idx[0]});
                    match = std::max(match,
                                     std::abs(w - (it == om.end() ? 0.0 : it->second)));
                }
            }
        sink.report("orbit-matches-poly", "Z/{+-1}", match, match == 0.0);
    }

    out << "verify: " << sink.summary.checks - sink.summary.failures << "/"
        << sink.summary.checks << " checks passed, max residual "
        << fmt_real(sink.summary.max_residual) << '\n';
    return sink.summary;
}

}  // namespace zafa
