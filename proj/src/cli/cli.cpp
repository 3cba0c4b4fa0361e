#include "grtoda/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grtoda/integral.hpp"
#include "grtoda/matelem.hpp"
#include "grtoda/serialize.hpp"

namespace grtoda {

namespace {

nlohmann::json character_table_json(const CharacterTable& t, int vs_sign) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : t.entries) {
        ParamScalar printed = (vs_sign < 0) ? e.printed.subst_vs(-1) : e.printed.subst_vs(1);
        rows.push_back({{"generator", {e.generator.first, e.generator.second}},
                        {"side", e.side == Side::L ? "L" : "R"},
                        {"scalar_action", e.scalar_action},
                        {"realized_scalar", e.realized.str()},
                        {"printed_scalar", printed.str()},
                        {"match", e.realized == printed}});
    }
    return {{"m", t.m}, {"n", t.N}, {"entries", rows}};
}

nlohmann::json relation_report_json(const RelationReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& i : rep.instances)
        rows.push_back({{"relation_id", i.relation_id},
                        {"indices", i.indices},
                        {"residual_text", i.residual_text}});
    return rows;
}

void emit(std::ostream& out, const std::string& mode, const nlohmann::json& j,
          const std::string& text) {
    if (mode == "json") out << j.dump(2) << "\n";
    else out << text;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic and numeric toolkit for Grassmannian Whittaker functions "
                 "and the parabolic Toda lattice"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");

    auto add_common = [&](CLI::App* sub, bool with_mn = true) {
        if (with_mn) {
            sub->add_option("--m", cfg.m, "parabolic index m");
            sub->add_option("--n", cfg.n, "rank N");
        }
        sub->add_option("--epsilon", cfg.epsilon, "sign exponent; vs = (-1)^epsilon");
        sub->add_option("--emit", cfg.emit, "output format: text | json");
        sub->add_option("--config", config_path, "key=value configuration file");
    };

    // graph
    auto* graph = app.add_subcommand("graph", "emit the lattice graph (or the triangular pattern)");
    bool gz = false;
    std::string format = "dot";
    add_common(graph);
    graph->add_flag("--gz", gz, "emit the triangular pattern graph instead");
    graph->add_option("--format", format, "dot | json");

    // phase
    auto* phase = app.add_subcommand("phase", "action phase: symbolic exponential part / numeric data");
    std::string lambda_csv;
    double xval = 0.0;
    add_common(phase);
    phase->add_option("--lambda", lambda_csv, "comma-separated spectral parameters (length n)");
    phase->add_option("--hbar", cfg.hbar, "Planck-type constant");
    phase->add_option("--x", xval, "value of the source coordinate");

    // integral
    auto* integral = app.add_subcommand("integral", "evaluate the stationary-phase integral");
    std::string policy_name = "trapezoid";
    bool with_prefactor = false;
    add_common(integral);
    integral->add_option("--lambda", lambda_csv, "comma-separated spectral parameters (length n)");
    integral->add_option("--hbar", cfg.hbar, "Planck-type constant");
    integral->add_option("--x", xval, "argument of the specialized function");
    integral->add_option("--tol", cfg.tol, "relative tolerance (>= 1e-12)");
    integral->add_option("--policy", policy_name, "trapezoid | midpoint");
    integral->add_flag("--prefactor", with_prefactor,
                       "multiply by e^{-x m(N-m)/2} (the matrix-element normalization)");

    // lax
    auto* lax = app.add_subcommand("lax", "Lax operator / specialized matrix / characteristic polynomial");
    bool specialized = false, charpoly_flag = false;
    std::string chars = "printed";
    add_common(lax);
    lax->add_flag("--specialized", specialized, "emit the specialized polynomial matrix");
    lax->add_flag("--charpoly", charpoly_flag, "emit det(lambda + L) of the specialized matrix");
    lax->add_option("--chars", chars, "character branch: printed | realized");

    // hamiltonian
    auto* ham = app.add_subcommand("hamiltonian", "Toda Hamiltonians from Casimir reduction");
    int kham = 1;
    bool trace = false;
    add_common(ham);
    ham->add_option("--k", kham, "which Hamiltonian (1 or 2)");
    ham->add_flag("--trace", trace, "emit the intermediate Casimir reductions");
    ham->add_option("--chars", chars, "character branch: printed | realized");

    // verify
    auto* verify = app.add_subcommand("verify", "symbolic verification sweeps");
    std::string target;
    verify->add_option("target", target, "whittaker | chevalley | paths | boxes")->required();
    add_common(verify);

    // report
    auto* report = app.add_subcommand("report", "aggregate conformance report");
    int max_n = 5;
    bool heavy = false;
    std::string inject;
    add_common(report);
    report->add_option("--max-n", max_n, "bound for the symbolic sweeps");
    report->add_flag("--heavy", heavy, "include the four-dimensional quadrature consistency");
    report->add_option("--inject-fail", inject, "force one check to fail (test hook)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code;
    }

    try {
        if (!config_path.empty()) {
            RunConfig file_cfg = load_config(config_path);
            // command-line flags override file values
            RunConfig merged = file_cfg;
            if (graph->count("--m") || phase->count("--m") || integral->count("--m") ||
                lax->count("--m") || ham->count("--m") || verify->count("--m") ||
                report->count("--m"))
                merged.m = cfg.m;
            if (graph->count("--n") || phase->count("--n") || integral->count("--n") ||
                lax->count("--n") || ham->count("--n") || verify->count("--n") ||
                report->count("--n"))
                merged.n = cfg.n;
            for (auto* sub : {graph, phase, integral, lax, ham, verify, report}) {
                if (sub->count("--epsilon")) merged.epsilon = cfg.epsilon;
                if (sub->count("--emit")) merged.emit = cfg.emit;
            }
            if (integral->count("--hbar") || phase->count("--hbar")) merged.hbar = cfg.hbar;
            if (integral->count("--tol")) merged.tol = cfg.tol;
            if (lambda_csv.empty() && !merged.lambda.empty()) {
                // keep file lambda
            }
            cfg = merged;
        }
        if (!lambda_csv.empty()) cfg.lambda = parse_csv_doubles(lambda_csv);
        int vs = cfg.vs_sign();

        if (*graph) {
            cfg.validate();
            if (gz) {
                GZGraph g = build_gz_graph(cfg.n);
                if (format == "json") {
                    nlohmann::json j{{"n", g.N},
                                     {"vertices", g.vertices},
                                     {"arrows", g.arrows}};
                    out << j.dump(2) << "\n";
                } else {
                    out << g.dot();
                }
            } else {
                GrGraph g = build_gr_graph(cfg.m, cfg.n);
                if (format == "json") {
                    nlohmann::json arrows = nlohmann::json::array();
                    for (const auto& a : g.arrows)
                        arrows.push_back(to_json(g.arrow_exponential(a))["text"]);
                    nlohmann::json j{{"m", g.m},
                                     {"n", g.N},
                                     {"interior", g.interior},
                                     {"arrow_exponentials", arrows}};
                    out << j.dump(2) << "\n";
                } else {
                    out << g.dot();
                }
            }
            return 0;
        }
        if (*phase) {
            cfg.validate();
            ExpPoly sym = action_exponential_part(cfg.m, cfg.n).subst_vs(vs);
            nlohmann::json j{{"m", cfg.m}, {"n", cfg.n},
                             {"exponential_part", to_json(sym)}};
            std::ostringstream text;
            text << "exponential part: " << to_text(sym) << "\n";
            if (!cfg.lambda.empty()) {
                cfg.validate(true);
                PhaseData p = build_phase(cfg.m, cfg.n, cfg.lambda, cfg.hbar, xval);
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& t : p.terms)
                    terms.push_back({{"exponent", t.exponent}, {"shift", t.shift}});
                j["numeric"] = {{"hbar", p.hbar}, {"x", p.x}, {"terms", terms}};
                text << "variables:";
                for (const auto& v : p.vars) text << " " << v.str();
                text << "\n" << p.terms.size() << " exponential terms\n";
            }
            emit(out, cfg.emit, j, text.str());
            return 0;
        }
        if (*integral) {
            if (cfg.lambda.empty()) cfg.lambda.assign(cfg.n, 0.0);
            cfg.validate(true);
            QuadraturePolicy pol{};
            if (policy_name == "midpoint") pol = QuadraturePolicy{.h0 = 0.8, .t0 = 10.0, .midpoint = true};
            else if (policy_name != "trapezoid")
                throw std::invalid_argument("unknown policy " + policy_name);
            QuadratureResult r =
                evaluate_whittaker(cfg.m, cfg.n, cfg.lambda, cfg.hbar, xval, cfg.tol, pol);
            std::complex<double> value = r.value;
            if (with_prefactor)
                value *= std::exp(-xval * cfg.m * (cfg.n - cfg.m) / 2.0);
            nlohmann::json j{{"m", cfg.m},
                             {"n", cfg.n},
                             {"lambda", cfg.lambda},
                             {"hbar", cfg.hbar},
                             {"x", xval},
                             {"value", {{"re", value.real()}, {"im", value.imag()}}},
                             {"abs_error", r.abs_error},
                             {"evaluations", r.evaluations}};
            std::ostringstream text;
            text.precision(12);
            text << "value = " << value.real();
            if (std::abs(value.imag()) > 0) text << " + " << value.imag() << " i";
            text << "\nabs_error = " << r.abs_error << "\nevaluations = " << r.evaluations << "\n";
            emit(out, cfg.emit, j, text.str());
            return 0;
        }
        if (*lax) {
            cfg.validate();
            ReduceOptions opts{.printed_characters = (chars != "realized")};
            if (specialized || charpoly_flag) {
                PolyMatrix L = specialized_lax(cfg.m, cfg.n);
                nlohmann::json j{{"m", cfg.m}, {"n", cfg.n}};
                std::ostringstream text;
                if (specialized) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (int i = 0; i < cfg.n; ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (int jj = 0; jj < cfg.n; ++jj) {
                            ExpPoly e = L[i][jj].subst_vs(vs);
                            row.push_back(to_text(e));
                            text << (jj ? "  " : "") << to_text(e);
                        }
                        rows.push_back(row);
                        text << "\n";
                    }
                    j["specialized"] = rows;
                }
                if (charpoly_flag) {
                    ExpPoly cp = char_poly(L).subst_vs(vs);
                    j["charpoly"] = to_json(cp);
                    text << "det(lam + L) = " << to_text(cp) << "\n";
                }
                emit(out, cfg.emit, j, text.str());
            } else {
                LaxMatrix L = lax_operator(cfg.m, cfg.n, opts);
                nlohmann::json rows = nlohmann::json::array();
                std::ostringstream text;
                for (int i = 1; i <= cfg.n; ++i) {
                    nlohmann::json row = nlohmann::json::array();
                    for (int jj = 1; jj <= cfg.n; ++jj) {
                        DiffOperator e = L.entry[i - 1][jj - 1].subst_vs(vs);
                        row.push_back(to_json(e));
                        text << "L[" << i << "," << jj << "] = " << to_text(e) << "\n";
                    }
                    rows.push_back(row);
                }
                nlohmann::json j{{"m", cfg.m}, {"n", cfg.n}, {"entries", rows}};
                emit(out, cfg.emit, j, text.str());
            }
            return 0;
        }
        if (*ham) {
            cfg.validate();
            ReduceOptions opts{.printed_characters = (chars != "realized")};
            HamiltonianResult h = hamiltonian(kham, cfg.m, cfg.n, opts);
            DiffOperator op = h.op.subst_vs(vs);
            nlohmann::json j{{"m", cfg.m}, {"n", cfg.n}, {"k", kham},
                             {"hamiltonian", to_json(op)}};
            std::ostringstream text;
            text << "H_" << kham << " = " << to_text(op) << "\n";
            if (trace && kham == 2) {
                HamiltonianTrace t = hamiltonian_trace(cfg.m, cfg.n, opts);
                j["trace"] = {{"diagonal_product", to_json(t.c_upper.subst_vs(vs))},
                              {"mixed_product", to_json(t.c_mixed.subst_vs(vs))},
                              {"linear_part", to_json(t.c_linear.subst_vs(vs))},
                              {"constant", t.constant.str()}};
                text << "diagonal-product part: " << to_text(t.c_upper.subst_vs(vs)) << "\n"
                     << "mixed-product part:    " << to_text(t.c_mixed.subst_vs(vs)) << "\n"
                     << "linear part:           " << to_text(t.c_linear.subst_vs(vs)) << "\n"
                     << "constant:              " << t.constant.str() << "\n";
            }
            emit(out, cfg.emit, j, text.str());
            return 0;
        }
        if (*verify) {
            cfg.validate();
            if (target == "whittaker") {
                CharacterTable t = verify_whittaker(cfg.m, cfg.n);
                nlohmann::json j = character_table_json(t, vs);
                std::ostringstream text;
                for (const auto& e : t.entries) {
                    ParamScalar printed = e.printed.subst_vs(vs);
                    text << "E[" << e.generator.first << "," << e.generator.second << "] on psi_"
                         << (e.side == Side::L ? "L" : "R") << ": realized " << e.realized.str()
                         << ", printed " << printed.str()
                         << (e.realized == printed ? "" : "  (sign deviation)") << "\n";
                }
                emit(out, cfg.emit, j, text.str());
                bool hard_fail = !t.all_scalar() || !t.zero_pattern_ok();
                return hard_fail ? 1 : 0;
            }
            RelationReport r;
            if (target == "chevalley") r = verify_chevalley_relations(std::min(cfg.n, 4));
            else if (target == "paths") r = verify_path_relations(cfg.n);
            else if (target == "boxes") r = verify_box_relations(cfg.m, cfg.n);
            else throw std::invalid_argument("unknown verify target " + target);
            nlohmann::json j = relation_report_json(r);
            std::ostringstream text;
            text << r.instances.size() << " relation instances, " << r.failures()
                 << " failures\n";
            for (const auto& i : r.instances)
                if (!i.ok()) text << i.relation_id << i.indices << ": " << i.residual_text << "\n";
            emit(out, cfg.emit, j, text.str());
            return r.failures() ? 1 : 0;
        }
        if (*report) {
            ConformanceReport r = build_conformance_report(max_n, heavy, inject);
            nlohmann::json j = to_json(r);
            std::ostringstream text;
            for (const auto& c : r.checks)
                text << c.check_id << ": " << c.status << "  [" << c.detail << "]\n";
            emit(out, cfg.emit, j, text.str());
            return r.any_fail() ? 1 : 0;
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (best estimate " << e.best.value.real() << " + "
            << e.best.value.imag() << " i after " << e.best.evaluations << " evaluations)\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace grtoda
