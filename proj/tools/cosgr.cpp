// Command-line front end: exact spectra, pole tables, chain factorizations,
// operator expansions, eigenspace construction, Monte-Carlo transforms, and
// the verification suites.
//
// Exit codes: 0 pass, 1 falsification or failed suite, 2 usage, 3 I/O.

#include <CLI11.hpp>

#include <cosgr/json_io.hpp>
#include <cosgr/suites.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cosgr;

namespace {

struct Options {
    int n = 3, i = 1, d = 1, degree = 2;
    int cutoff = 12;
    std::string alpha = "1";
    std::string nu = "1/2";
    std::string at;
    std::uint64_t seed = 20240817;
    long long samples = 100000;
    int workers = 1;
    int points = 3;
    double tol = 1e-8;
    std::string format = "text";
    std::string suite = "all";
    bool slow = false;
    std::string out_dir;
    std::string fname = "const";
};

std::string output_dir(const Options& opt) {
    if (!opt.out_dir.empty()) return opt.out_dir;
    if (const char* env = std::getenv("COSGR_OUTPUT_DIR")) return env;
    return ".";
}

void emit(const json& doc, const Options& opt) {
    if (opt.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // plain text rendering: one line per record
    if (doc.is_array()) {
        for (const auto& row : doc) std::cout << row.dump() << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

int cmd_spectrum(const Options& opt) {
    Signature sig(opt.n, opt.i);
    json rows = json::array();
    for (const auto& m : enumerate_weights(sig.r, opt.cutoff)) {
        auto c = cosine_spectrum(sig, m);
        json rec = spectrum_record(sig, m, c);
        if (!opt.at.empty()) {
            Rational l = Rational::from_string(opt.at);
            rec["l"] = l.to_string();
            rec["s_eigenvalue"] = s_eigenvalue(sig, l, m).to_string();
            rec["pole_order"] = -std::min(0, c.order_at(l));
        }
        rows.push_back(rec);
    }
    if (opt.format == "csv") {
        std::cout << "m,unit,factors" << (opt.at.empty() ? "" : ",s_eigenvalue") << "\n";
        for (const auto& rec : rows) {
            std::cout << '"' << json(rec["m"]).dump() << '"' << ',' << rec["unit"].get<std::string>()
                      << ",\"" << json(rec["factors"]).dump() << '"';
            if (!opt.at.empty()) std::cout << ',' << rec["s_eigenvalue"].get<std::string>();
            std::cout << "\n";
        }
    } else {
        emit(rows, opt);
    }
    return 0;
}

int cmd_poles(const Options& opt) {
    Signature sig(opt.n, opt.i);
    json rows = json::array();
    bool all_match = true;
    for (long long twol = -2 * opt.n; twol <= 4; ++twol) {
        Rational l(twol, 2);
        int closed = pole_order(sig, l);
        int oracle = pole_order_oracle(sig, l, opt.cutoff);
        all_match = all_match && closed == oracle;
        rows.push_back({{"l", l.to_string()},
                        {"closed_form", closed},
                        {"oracle", oracle},
                        {"cutoff", opt.cutoff},
                        {"match", closed == oracle}});
    }
    emit(rows, opt);
    return all_match ? 0 : 1;
}

int cmd_chain(const Options& opt) {
    Signature sig(opt.n, opt.i);
    auto ch = chain_factorization(sig, Rational::from_string(opt.alpha));
    json params = json::array();
    for (const auto& p : ch.dhat_params) params.push_back(p.to_string());
    emit({{"alpha", opt.alpha}, {"base_alpha", ch.base_alpha.to_string()}, {"dhat_params", params}},
         opt);
    return 0;
}

int cmd_dnu_coeffs(const Options& opt) {
    Signature sig(opt.n, opt.i);
    auto cs = dhat_coefficients(sig.n, sig.r);
    json rows = json::array();
    for (std::size_t k = 0; k < cs.size(); ++k)
        rows.push_back({{"k", k}, {"c_k", to_json(cs[k], {"nu"})}});
    emit(rows, opt);
    return 0;
}

int cmd_hc_poly(const Options& opt) {
    Signature sig(opt.n, opt.i);
    json doc = {{"n", opt.n},
                {"r", sig.r},
                {"d", opt.d},
                {"gamma_Vd", to_json(gamma_Vd(sig.n, sig.r, opt.d), z_variable_names(sig.r))}};
    emit(doc, opt);
    return 0;
}

int cmd_pfaffian_check(const Options& opt) {
    auto res = suite_pfaffian(opt.seed);
    json rows = json::array();
    for (const auto& c : res.checks) rows.push_back({{"check", c.label}, {"pass", c.pass}});
    emit(rows, opt);
    return res.pass ? 0 : 1;
}

int cmd_eigenspaces(const Options& opt) {
    Signature sig(opt.n, opt.i);
    int nmono = static_cast<int>(ProjectionModel(opt.n).monomials_up_to(opt.degree).size());
    long long samples = std::max<long long>(opt.samples, 4LL * nmono + 64);
    auto dec = build_isotypic(sig, opt.degree, static_cast<int>(samples), opt.seed, opt.tol);
    json rows = json::array();
    for (const auto& comp : dec.components) rows.push_back(to_json(comp));
    emit(rows, opt);
    return 0;
}

int cmd_mc_transform(const Options& opt) {
    Signature sig(opt.n, opt.i);
    double alpha = std::stod(opt.alpha);
    ProjectionModel model(opt.n);
    MultiPoly poly(model.nvars());
    if (opt.fname == "const") {
        poly = MultiPoly::constant(model.nvars(), Rational(1));
    } else if (opt.fname == "zonal2") {
        MultiPoly tr(model.nvars());
        for (int a = 1; a <= opt.n; ++a) tr += model.variable(a, a);
        poly = model.variable(1, 1) - Rational(opt.i, opt.n) * tr;
    } else {
        std::cerr << "unknown --f (use const | zonal2)\n";
        return 2;
    }
    auto f = poly_frame_function(model, poly);
    auto points = sample_uniform(sig, opt.points, derive_stream_seed(opt.seed, 1));
    auto ests = mc_cosine_transform(sig, alpha, f, points, opt.samples, opt.seed, opt.workers);
    json rows = json::array();
    for (const auto& e : ests)
        rows.push_back({{"value", e.value},
                        {"stderr", e.stderr_},
                        {"samples", e.samples},
                        {"seed", e.seed},
                        {"alpha", alpha},
                        {"f", opt.fname}});
    emit(rows, opt);
    return 0;
}

int cmd_verify(const Options& opt) {
    SuiteOptions sopt;
    sopt.seed = opt.seed;
    sopt.workers = opt.workers;
    sopt.weight_cutoff = opt.cutoff;
    IsotypicSet cache;
    std::vector<std::string> fast = {"ab-inverse",   "dhat-identity", "recursion",
                                     "poles",        "step-relations", "support-table",
                                     "funk-hecke",   "identity-middle", "pfaffian",
                                     "vanishing",    "ed-eigen",      "radon-sphere"};
    std::vector<std::string> slow = {"mc-r2", "recursion-functional", "radon-compos"};
    std::vector<std::string> selected;
    if (opt.suite == "all") {
        selected = fast;
        if (opt.slow) selected.insert(selected.end(), slow.begin(), slow.end());
    } else {
        selected = {opt.suite};
    }
    auto run_one = [&](const std::string& name) -> SuiteResult {
        if (name == "ab-inverse") return suite_ab_inverse();
        if (name == "dhat-identity") return suite_dhat_identity();
        if (name == "recursion") return suite_recursion(opt.cutoff);
        if (name == "poles") return suite_poles();
        if (name == "step-relations") return suite_step_relations(opt.cutoff);
        if (name == "support-table") return suite_support_table();
        if (name == "funk-hecke") return suite_funk_hecke(sopt);
        if (name == "identity-middle") return suite_identity_middle(opt.cutoff);
        if (name == "pfaffian") return suite_pfaffian(opt.seed);
        if (name == "vanishing") return suite_vanishing(cache, sopt);
        if (name == "ed-eigen") return suite_ed_eigen(cache, sopt);
        if (name == "radon-sphere") return suite_radon_sphere();
        if (name == "mc-r2") return suite_mc_r2(cache, sopt);
        if (name == "recursion-functional") return suite_recursion_functional(sopt);
        if (name == "radon-compos") return suite_radon_compos(sopt);
        throw std::invalid_argument("unknown suite: " + name);
    };
    bool all_pass = true;
    json report = json::array();
    for (const auto& name : selected) {
        SuiteResult res = run_one(name);
        all_pass = all_pass && res.pass;
        json checks = json::array();
        for (const auto& c : res.checks) {
            json row = {{"check", c.label}, {"pass", c.pass}};
            if (!c.detail.empty()) row["detail"] = c.detail;
            checks.push_back(row);
            if (opt.format == "text")
                std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << res.name << "] " << c.label
                          << (c.detail.empty() ? "" : ("  -- " + c.detail)) << "\n";
        }
        report.push_back({{"suite", res.name}, {"pass", res.pass}, {"checks", checks}});
    }
    if (opt.format != "text") emit(report, opt);
    else std::cout << (all_pass ? "ALL SUITES PASSED" : "SUITE FAILURES PRESENT") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_report(const Options& opt) {
    namespace fs = std::filesystem;
    fs::path dir = output_dir(opt);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create output directory " << dir << "\n";
        return 3;
    }
    // funk-hecke cross-validation table for the sphere in R^3
    fs::path csv_path = dir / "funk_hecke_n3.csv";
    std::ofstream csv(csv_path);
    if (!csv) {
        std::cerr << "cannot write " << csv_path.string() << "\n";
        return 3;
    }
    Signature sig(3, 1);
    ProjectionModel model(3);
    csv << "m,alpha,mc,quadrature,exact_ratio,relerr\n";
    json rows = json::array();
    for (const Rational& alpha_q : {Rational(1, 2), Rational(1), Rational(2)}) {
        double alpha = alpha_q.to_double();
        double lam0q = funk_hecke_eigenvalue(3, alpha, 0);
        auto one = [](const SubspaceFrame&) { return 1.0; };
        SubspaceFrame pole = SubspaceFrame::coordinate(3, {1});
        double lam0mc =
            mc_cosine_transform_at(sig, alpha, one, pole, opt.samples, opt.seed).value;
        for (int m = 0; m <= 8; m += 2) {
            double quad = funk_hecke_eigenvalue(3, alpha, m) / lam0q;
            Rational nu = alpha_q / Rational(2);
            double exact = cosine_spectrum(sig, HighestWeight({m})).evaluate(nu).to_double();
            // MC ratio with the zonal polynomial of degree m (value 1 at the pole)
            auto coeffs = zonal_gegenbauer_coefficients(3, m);
            MultiPoly zon(model.nvars());
            MultiPoly q11 = model.variable(1, 1);
            for (std::size_t k = 0; k < coeffs.size(); k += 2)
                if (!coeffs[k].is_zero()) zon += coeffs[k] * q11.pow(static_cast<int>(k) / 2);
            auto zf = poly_frame_function(model, zon);
            double num =
                mc_cosine_transform_at(sig, alpha, zf, pole, opt.samples, opt.seed + m).value;
            double mc = num / lam0mc;
            double relerr = std::fabs(quad - exact) / std::max(1e-300, std::fabs(exact));
            csv << m << ',' << alpha << ',' << mc << ',' << quad << ',' << exact << ',' << relerr
                << "\n";
            rows.push_back({{"m", m},
                            {"alpha", alpha},
                            {"mc", mc},
                            {"quadrature", quad},
                            {"exact_ratio", exact},
                            {"relerr", relerr}});
        }
    }
    csv.close();
    json doc = {{"table", rows},
                {"seed", opt.seed},
                {"samples", opt.samples},
                {"tolerances", {{"quadrature_abs", 1e-10}, {"mc_band", "3*stderr"}}},
                {"schema_version", 1}};
    fs::path json_path = dir / "report.json";
    std::ofstream out(json_path);
    if (!out) {
        std::cerr << "cannot write " << json_path.string() << "\n";
        return 3;
    }
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << csv_path.string() << " and " << json_path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{
        "cosgr: exact and numeric toolkit for the alpha-cosine transform on real "
        "Grassmannians.\n"
        "Defaults: weight cutoff 12; residual tolerance 1e-8; quadrature error 1e-10;\n"
        "MC band 3*stderr; r=2 MC relative tolerance 3e-2 at 1e6 samples; rank tolerance\n"
        "1e-9; nested-MC (radon-compos) spreads 5%, excluded unless --slow.\n"
        "Rational flags (--alpha for chain, --at) parse as exact 'p/q' strings."};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "ambient dimension");
        sub->add_option("--i", opt.i, "subspace dimension");
        sub->add_option("--cutoff", opt.cutoff, "weight enumeration cutoff (even, default 12)");
        sub->add_option("--seed", opt.seed, "master seed");
        sub->add_option("--samples", opt.samples, "Monte-Carlo samples");
        sub->add_option("--tol", opt.tol, "tolerance override");
        sub->add_option("--format", opt.format, "output format: json | csv | text");
        sub->add_option("--workers", opt.workers, "worker threads (never changes results)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "factored eigenvalues over the weight family");
    add_common(spectrum);
    spectrum->add_option("--at", opt.at, "also evaluate the leading Laurent coefficient at nu=l");

    auto* poles = app.add_subcommand("poles", "closed-form pole orders vs the brute-force oracle");
    add_common(poles);

    auto* chain = app.add_subcommand("chain", "factor the transform through differential steps");
    add_common(chain);
    chain->add_option("--alpha", opt.alpha, "target parameter (exact p/q)")->required();

    auto* dnu = app.add_subcommand("dnu-coeffs", "coefficients of the operator expansion");
    add_common(dnu);

    auto* hc = app.add_subcommand("hc-poly", "Harish-Chandra image of the Pfaffian invariant");
    add_common(hc);
    hc->add_option("--d", opt.d, "invariant index (1..r)");

    auto* pf = app.add_subcommand("pfaffian-check", "Pfaffian operator suite");
    add_common(pf);

    auto* eig = app.add_subcommand("eigenspaces", "isotypic components of the polynomial model");
    add_common(eig);
    eig->add_option("--degree", opt.degree, "polynomial degree bound (1..3)");

    auto* mc = app.add_subcommand("mc-transform", "Monte-Carlo cosine transform estimates");
    add_common(mc);
    mc->add_option("--alpha", opt.alpha, "parameter (float, must be > -1)");
    mc->add_option("--f", opt.fname, "test function: const | zonal2");
    mc->add_option("--points", opt.points, "number of evaluation points");

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    add_common(verify);
    verify->add_option("--suite", opt.suite,
                       "ab-inverse | dhat-identity | recursion | poles | step-relations | "
                       "support-table | funk-hecke | identity-middle | pfaffian | vanishing | "
                       "ed-eigen | radon-sphere | mc-r2 | recursion-functional | radon-compos | all");
    verify->add_flag("--slow", opt.slow, "include the slow nested-MC suites in 'all'");

    auto* report = app.add_subcommand("report", "emit CSV/JSON artifacts");
    add_common(report);
    report->add_option("--out", opt.out_dir, "output directory (default $COSGR_OUTPUT_DIR or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (poles->parsed()) return cmd_poles(opt);
        if (chain->parsed()) return cmd_chain(opt);
        if (dnu->parsed()) return cmd_dnu_coeffs(opt);
        if (hc->parsed()) return cmd_hc_poly(opt);
        if (pf->parsed()) return cmd_pfaffian_check(opt);
        if (eig->parsed()) return cmd_eigenspaces(opt);
        if (mc->parsed()) return cmd_mc_transform(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (report->parsed()) return cmd_report(opt);
    } catch (const falsification_error& e) {
        std::cerr << "FALSIFICATION: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
