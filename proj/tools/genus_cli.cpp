// Command-line surface for the genus toolkit: exact Hilbert-polynomial
// pipelines, the closed-form genus formulas, and the birational
// counterexample families. Machine-readable reports go to stdout; --pretty
// adds human tables on stderr.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
// 4 verification mismatch, 5 projection exhausted its attempts, 6 internal.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <genus/families.hpp>
#include <genus/groebner.hpp>
#include <genus/report.hpp>

namespace {

using namespace genus;

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

GeneratorFile load_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open generator file: " + path);
    return read_generator_file(in);
}

std::vector<ProdGridEntry> read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open grid file: " + path);
    std::vector<ProdGridEntry> grid;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        ProdGridEntry e;
        if (!(ss >> e.d)) continue; // blank or comment-only line
        if (!(ss >> e.n >> e.l >> e.m))
            throw ParseError("expected four integers 'd n l m'", line_no, 1);
        std::string chaff;
        if (ss >> chaff) throw ParseError("trailing text after tuple", line_no, 1);
        grid.push_back(e);
    }
    return grid;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << std::endl; }

void pretty_variety(const VarietyReport& r, const std::string& heading) {
    std::cerr << heading << " in P^" << r.ambient_index << "\n"
              << "  dimension  " << r.dimension << "\n"
              << "  degree     " << r.degree.str() << "\n"
              << "  P(t)       " << hilbert_polynomial_text(r.hilbert) << "\n"
              << "  p_a        " << r.p_a.str() << "\n"
              << "  chi        " << r.chi.str() << "\n";
}

int run_analyze(const GeneratorFile& file, bool pretty, Json params) {
    Timer timer;
    VarietyReport rep = analyze(file.ideal());
    if (pretty) pretty_variety(rep, "variety");
    emit(make_report_document("analyze", std::move(params), to_json(rep), timer.seconds()));
    return 0;
}

int run_hypersurface(int d, int ambient, std::uint64_t seed, bool pretty) {
    Timer timer;
    HypersurfaceSpec spec = make_hypersurface(d, ambient, seed);
    VarietyReport rep = analyze(spec.ideal());
    BigInt closed = hypersurface_genus(d, ambient);
    bool match = rep.p_a == closed;
    Json result{{"form", print_polynomial(spec.form)},
                {"variety", to_json(rep)},
                {"closed_form_pa", to_json(closed)},
                {"closed_form_match", match}};
    if (pretty) {
        pretty_variety(rep, "hypersurface H_" + std::to_string(d));
        std::cerr << "  closed form binom(d-1, N) = " << closed.str()
                  << (match ? "  [match]" : "  [MISMATCH]") << "\n";
    }
    Json params{{"d", d}, {"ambient", ambient}, {"seed", std::to_string(seed)}};
    emit(make_report_document("hypersurface", std::move(params), std::move(result),
                              timer.seconds()));
    return match ? 0 : 4;
}

int run_product(const GeneratorFile& left, const GeneratorFile& right, bool pipeline,
                bool pretty, Json params) {
    Timer timer;
    Ideal iy = left.ideal();
    Ideal iz = right.ideal();
    VarietyReport ry = analyze(iy);
    VarietyReport rz = analyze(iz);
    BigInt closed = product_genus(ry.p_a, ry.dimension, rz.p_a, rz.dimension);
    Json result{{"left", to_json(ry)},
                {"right", to_json(rz)},
                {"closed_form_pa", to_json(closed)}};
    int code = 0;
    if (pipeline) {
        PipelineBudget budget;
        const int segre_vars = iy.ambient_vars() * iz.ambient_vars();
        int max_deg = 0;
        for (const auto& g : iy.generators()) max_deg = std::max(max_deg, *total_degree(g));
        for (const auto& g : iz.generators()) max_deg = std::max(max_deg, *total_degree(g));
        if (segre_vars > budget.max_segre_ambient_vars) {
            result["pipeline"] =
                Json{{"run", false},
                     {"reason", "segre ambient needs " + std::to_string(segre_vars) +
                                    " variables, budget is " +
                                    std::to_string(budget.max_segre_ambient_vars)}};
        } else if (max_deg > budget.max_factor_degree) {
            result["pipeline"] =
                Json{{"run", false},
                     {"reason", "factor degree " + std::to_string(max_deg) +
                                    " exceeds budget " +
                                    std::to_string(budget.max_factor_degree)}};
        } else {
            VarietyReport product = analyze(segre_product_ideal(iy, iz));
            bool match = product.p_a == closed;
            result["pipeline"] = Json{{"run", true},
                                      {"variety", to_json(product)},
                                      {"match", match}};
            if (!match) code = 4;
        }
    }
    if (pretty) {
        pretty_variety(ry, "left factor");
        pretty_variety(rz, "right factor");
        std::cerr << "product p_a (closed form) = " << closed.str() << "\n";
    }
    emit(make_report_document("product", std::move(params), std::move(result),
                              timer.seconds()));
    return code;
}

int run_family_maincorr(int n_min, int n_max, int l_max, std::optional<int> l_min,
                        bool pretty) {
    Timer timer;
    auto records = maincorr_family(n_min, n_max, l_max, l_min);
    Json rows = Json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    if (pretty) {
        std::cerr << "   n   l dim     pa_Y    chi_Y  gap\n";
        for (const auto& r : records) {
            std::fprintf(stderr, "%4d %3d %3d %8s %8s  %s\n", r.n, r.l, r.dim_y,
                         r.pa_y.str().c_str(), r.chi_y.str().c_str(),
                         r.gap_witness ? "yes" : "no");
        }
    }
    Json params{{"n_min", n_min}, {"n_max", n_max}, {"l_max", l_max}};
    params["l_min"] = l_min ? Json(*l_min) : Json(nullptr);
    emit(make_report_document("family maincorr", std::move(params),
                              Json{{"records", rows}}, timer.seconds()));
    return 0;
}

int run_family_gap(const GeneratorFile& base, const std::vector<int>& degrees,
                   std::optional<int> e, bool pretty, Json params) {
    Timer timer;
    auto records = genus_gap_family(base.ideal(), degrees, e);
    Json rows = Json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    if (pretty) {
        std::cerr << "   d  e+d ambient  pa(H_{e+d})   base_pa      gap\n";
        for (const auto& r : records) {
            std::fprintf(stderr, "%4d %4d %7d %12s %9s %8s\n", r.extra_degree, r.total_degree,
                         r.ambient_index, r.pa_composite.str().c_str(), r.base_pa.str().c_str(),
                         r.gap.str().c_str());
        }
    }
    emit(make_report_document("family gap", std::move(params), Json{{"records", rows}},
                              timer.seconds()));
    return 0;
}

int run_verify_prod(const std::vector<ProdGridEntry>& grid, std::uint64_t seed, bool pretty,
                    Json params) {
    Timer timer;
    ProdVerification report = verify_theorem_prod(grid, PipelineBudget{}, seed);
    if (pretty) {
        std::cerr << "   d   n   l   m closed_form pipeline\n";
        for (const auto& r : report.rows) {
            std::fprintf(stderr, "%4d %3d %3d %3d %11s %s\n", r.tuple.d, r.tuple.n, r.tuple.l,
                         r.tuple.m, r.closed_form.str().c_str(),
                         r.pipeline_run ? (*r.match ? "match" : "MISMATCH") : "skipped");
        }
        std::cerr << report.pipeline_checked << " pipeline-checked, " << report.skipped
                  << " skipped, " << report.mismatches << " mismatches\n";
    }
    emit(make_report_document("verify prod", std::move(params), to_json(report),
                              timer.seconds()));
    return report.mismatches == 0 ? 0 : 4;
}

int run_project(const GeneratorFile& file, std::uint64_t seed, int max_attempts, bool pretty,
                Json params) {
    Timer timer;
    ProjectionResult res = project_to_hypersurface(file.ideal(), seed, max_attempts);
    VarietyReport image = analyze(res.image_ideal);
    Json result = to_json(res);
    result["analysis"] = to_json(image);
    if (pretty) {
        pretty_variety(image, "projected hypersurface");
        std::cerr << "  principal generator of degree " << res.image_degree << " after "
                  << res.attempts << " attempt(s); birationality not certified\n";
    }
    emit(make_report_document("project", std::move(params), std::move(result),
                              timer.seconds()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic-genus toolkit for projective varieties"};
    app.require_subcommand(1);
    int exit_code = 0;

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "invariants of V(I) from generators");
    std::string gens_path;
    int ambient = 0;
    std::vector<std::string> gen_exprs;
    bool pretty = false;
    auto* gens_opt = analyze_cmd->add_option("--gens", gens_path, "generator file");
    auto* ambient_opt = analyze_cmd->add_option("--ambient", ambient, "projective index N");
    auto* gen_opt = analyze_cmd->add_option("--gen", gen_exprs, "generator expression");
    analyze_cmd->add_flag("--pretty", pretty, "human-readable table on stderr");
    gens_opt->excludes(gen_opt);
    gen_opt->needs(ambient_opt);
    analyze_cmd->callback([&] {
        GeneratorFile file;
        Json params;
        if (!gens_path.empty()) {
            file = load_generators(gens_path);
            if (ambient_opt->count() > 0 && ambient != file.ambient_index)
                throw PreconditionError("--ambient " + std::to_string(ambient) +
                                        " disagrees with the file header ambient: " +
                                        std::to_string(file.ambient_index));
            params = Json{{"gens", gens_path}};
        } else {
            if (gen_exprs.empty())
                throw CLI::RequiredError("analyze needs --gens or --ambient with --gen");
            if (ambient < 1) throw PreconditionError("ambient index must be at least 1");
            file.ambient_index = ambient;
            for (int i = 0; i <= ambient; ++i) file.names.push_back("x" + std::to_string(i));
            for (const auto& e : gen_exprs)
                file.generators.push_back(parse_polynomial(e, ambient + 1));
            params = Json{{"ambient", ambient}, {"gen", gen_exprs}};
        }
        exit_code = run_analyze(file, pretty, std::move(params));
    });

    // hypersurface
    auto* hyper_cmd = app.add_subcommand("hypersurface", "random H_d in P^N, pipeline vs Eq. 1");
    int hd = 0, hn = 0;
    std::uint64_t hseed = 1;
    bool hpretty = false;
    hyper_cmd->add_option("--d", hd, "degree")->required();
    hyper_cmd->add_option("--ambient", hn, "projective index N")->required();
    hyper_cmd->add_option("--seed", hseed, "coefficient seed");
    hyper_cmd->add_flag("--pretty", hpretty, "human-readable table on stderr");
    hyper_cmd->callback([&] { exit_code = run_hypersurface(hd, hn, hseed, hpretty); });

    // product
    auto* prod_cmd = app.add_subcommand("product", "p_a of Y x Z via Eq. 2, optionally Segre");
    std::string left_path, right_path;
    bool prod_pipeline = false, prod_pretty = false;
    prod_cmd->add_option("--left", left_path, "left factor generator file")->required();
    prod_cmd->add_option("--right", right_path, "right factor generator file")->required();
    prod_cmd->add_flag("--pipeline", prod_pipeline, "also run the Segre elimination pipeline");
    prod_cmd->add_flag("--pretty", prod_pretty, "human-readable table on stderr");
    prod_cmd->callback([&] {
        Json params{{"left", left_path}, {"right", right_path}, {"pipeline", prod_pipeline}};
        exit_code = run_product(load_generators(left_path), load_generators(right_path),
                                prod_pipeline, prod_pretty, std::move(params));
    });

    // family maincorr | gap
    auto* family_cmd = app.add_subcommand("family", "counterexample families");
    family_cmd->require_subcommand(1);
    auto* maincorr_cmd =
        family_cmd->add_subcommand("maincorr", "pairs (P^1 x H_l, H_e) with unequal genus");
    int n_min = 4, n_max = 4, l_max = 0;
    int l_min_raw = -1;
    bool mc_pretty = false;
    maincorr_cmd->add_option("--n-min", n_min, "smallest n (>= 4)")->required();
    maincorr_cmd->add_option("--n-max", n_max, "largest n")->required();
    maincorr_cmd->add_option("--l-max", l_max, "largest l")->required();
    maincorr_cmd->add_option("--l-min", l_min_raw, "smallest l (default n+1 per n)");
    maincorr_cmd->add_flag("--pretty", mc_pretty, "human-readable table on stderr");
    maincorr_cmd->callback([&] {
        std::optional<int> l_min;
        if (l_min_raw >= 0) l_min = l_min_raw;
        exit_code = run_family_maincorr(n_min, n_max, l_max, l_min, mc_pretty);
    });

    auto* gap_cmd = family_cmd->add_subcommand("gap", "arbitrary-genus family H_{e+d} = Z(fg)");
    std::string base_path;
    std::vector<int> degrees;
    int e_raw = -1;
    bool gap_pretty = false;
    gap_cmd->add_option("--base", base_path, "base variety generator file")->required();
    gap_cmd->add_option("--degrees", degrees, "extra degrees d, comma separated")
        ->required()
        ->delimiter(',');
    gap_cmd->add_option("--e", e_raw, "hypersurface model degree (default: principal base degree)");
    gap_cmd->add_flag("--pretty", gap_pretty, "human-readable table on stderr");
    gap_cmd->callback([&] {
        std::optional<int> e;
        if (e_raw >= 0) e = e_raw;
        Json params{{"base", base_path}, {"degrees", degrees}};
        params["e"] = e ? Json(*e) : Json(nullptr);
        exit_code = run_family_gap(load_generators(base_path), degrees, e, gap_pretty,
                                   std::move(params));
    });

    // verify prod
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the paper's identities");
    verify_cmd->require_subcommand(1);
    auto* vprod_cmd = verify_cmd->add_subcommand("prod", "Theorem prod closed form vs pipeline");
    std::string grid_path;
    bool default_grid = false, vp_pretty = false;
    std::uint64_t vseed = 1;
    auto* grid_opt = vprod_cmd->add_option("--grid", grid_path, "grid file of 'd n l m' rows");
    auto* dg_opt = vprod_cmd->add_flag("--default-grid", default_grid,
                                       "all hypothesis-satisfying tuples, n<=3 l<=7 m<=5");
    vprod_cmd->add_option("--seed", vseed, "hypersurface coefficient seed");
    vprod_cmd->add_flag("--pretty", vp_pretty, "human-readable table on stderr");
    grid_opt->excludes(dg_opt);
    vprod_cmd->callback([&] {
        std::vector<ProdGridEntry> grid;
        Json params{{"seed", std::to_string(vseed)}};
        if (default_grid) {
            grid = default_prod_grid();
            params["grid"] = "default";
        } else if (!grid_path.empty()) {
            grid = read_grid_file(grid_path);
            params["grid"] = grid_path;
        } else {
            throw CLI::RequiredError("verify prod needs --grid FILE or --default-grid");
        }
        exit_code = run_verify_prod(grid, vseed, vp_pretty, std::move(params));
    });

    // project
    auto* project_cmd =
        app.add_subcommand("project", "generic linear projection to a hypersurface model");
    std::string proj_path;
    std::uint64_t pseed = 1;
    int max_attempts = 5;
    bool proj_pretty = false;
    project_cmd->add_option("--gens", proj_path, "generator file")->required();
    project_cmd->add_option("--seed", pseed, "coordinate-change seed");
    project_cmd->add_option("--max-attempts", max_attempts, "retry budget");
    project_cmd->add_flag("--pretty", proj_pretty, "human-readable table on stderr");
    project_cmd->callback([&] {
        Json params{{"gens", proj_path},
                    {"seed", std::to_string(pseed)},
                    {"max_attempts", max_attempts}};
        exit_code = run_project(load_generators(proj_path), pseed, max_attempts, proj_pretty,
                                std::move(params));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const genus::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const genus::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const genus::ProjectionError& e) {
        std::cerr << "projection failed: " << e.what() << "\n";
        for (const auto& line : e.attempt_log) std::cerr << "  " << line << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 6;
    }
    return exit_code;
}
