// Command-line front end: tensor I/O, random instance generation, cone
// classification, irreducibility certificates, spectra, and the
// Perron-Frobenius verification report.
//
// Exit codes: 0 success, 1 domain errors or failed report items, 2 usage.

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tubal/tubal.hpp"

namespace {

using namespace tubal;
using nlohmann::json;

double resolve_tolerance(const std::optional<double>& flag, double fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TUBAL_TOL")) return std::atof(env);
    return fallback;
}

json complex_to_json(const cdouble& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const TubalVector<cdouble>& v) {
    json tubes_re = json::array(), tubes_im = json::array();
    for (std::size_t i = 0; i < v.n(); ++i) {
        json re = json::array(), im = json::array();
        for (std::size_t k = 0; k < v.tube_length(); ++k) {
            re.push_back(v.at(i, k).real());
            im.push_back(v.at(i, k).imag());
        }
        tubes_re.push_back(std::move(re));
        tubes_im.push_back(std::move(im));
    }
    return json{{"n", v.n()}, {"p", v.tube_length()}, {"tubes_re", tubes_re}, {"tubes_im", tubes_im}};
}

json witness_to_json(const std::vector<std::size_t>& witness) {
    json out = json::array();
    for (std::size_t v : witness) out.push_back(v + 1);  // 1-based for display
    return out;
}

// ---------------------------------------------------------------------------

int run_classify(const std::string& path, std::optional<double> tol_flag, bool as_json) {
    const json doc = tubal::detail::parse_file(path);
    json out;
    ConeClass cls;
    double tol;
    if (is_vector_json(doc)) {
        const auto x = vector_from_json(doc, path);
        tol = resolve_tolerance(tol_flag, default_tolerance(x));
        cls = classify(x, tol);
        json support = json::array();
        for (std::size_t i = 0; i < x.n(); ++i) support.push_back(support_count(x.tube(i), tol));
        out = {{"kind", "vector"}, {"n", x.n()}, {"p", x.tube_length()}, {"support", support}};
    } else {
        const auto a = matrix_from_json(doc, path);
        tol = resolve_tolerance(tol_flag, default_tolerance(a));
        cls = classify(a, tol);
        json support = json::array();
        for (std::size_t i = 0; i < a.n(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < a.n(); ++j) row.push_back(support_count(a.tube(i, j), tol));
            support.push_back(std::move(row));
        }
        out = {{"kind", "matrix"}, {"n", a.n()}, {"p", a.tube_length()}, {"support", support}};
    }
    out["class"] = to_string(cls);
    out["tol"] = tol;
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << to_string(cls) << "\n";
    return 0;
}

int run_irreducible(const std::string& path, const std::string& method,
                    std::optional<double> tol_flag, bool as_json) {
    const auto a = load_matrix(path);
    const double tol = resolve_tolerance(tol_flag, default_tolerance(a));

    ReducibilityCertificate cert;
    if (method == "subset")
        cert = is_reducible_subset(a, tol);
    else if (method == "scc")
        cert = is_reducible_scc(a, tol);
    else if (method == "power") {
        const auto r = is_irreducible_power(a, tol);
        cert.verdict = r.verdict;
        if (r.verdict == Verdict::Reducible) cert = is_reducible_scc(a, tol);
    } else
        throw DomainError("unknown method: " + method);

    json out{{"method", method}, {"verdict", to_string(cert.verdict)}, {"tol", tol}};
    if (cert.verdict == Verdict::Reducible) {
        const auto bt = block_triangularize(a, cert, tol);
        out["witness"] = witness_to_json(cert.witness);
        out["block_sizes"] = json::array({bt.n1, bt.n2});
        json sigma = json::array();
        for (std::size_t i = 0; i < bt.permutation.n(); ++i)
            sigma.push_back(bt.permutation(i) + 1);
        out["permutation"] = sigma;
    }

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(cert.verdict) << "\n";
        if (cert.verdict == Verdict::Reducible) {
            std::cout << "witness I = " << out["witness"].dump()
                      << ", block sizes (" << out["block_sizes"][0] << ", "
                      << out["block_sizes"][1] << ")\n";
        }
    }
    return 0;
}

int run_eig(const std::string& path, bool values_only, std::optional<std::string> vector_at,
            bool left) {
    const auto a = load_matrix(path);
    const Spectrum sp = t_spectrum(a);

    json out;
    out["rho"] = sp.rho;
    json evs = json::array();
    for (const cdouble& l : sp.eigenvalues) evs.push_back(complex_to_json(l));
    out["eigenvalues"] = std::move(evs);
    json clusters = json::array();
    for (const auto& c : sp.clusters)
        clusters.push_back(json{{"value", complex_to_json(c.value)},
                                {"multiplicity", c.multiplicity}});
    out["clusters"] = std::move(clusters);
    json attaining = json::array();
    for (const cdouble& l : sp.rho_attaining) attaining.push_back(complex_to_json(l));
    out["rho_attaining"] = std::move(attaining);

    if (vector_at) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(vector_at->c_str(), "%lf,%lf", &re, &im) < 1)
            throw DomainError("--vectors expects RE or RE,IM");
        const cdouble lambda(re, im);
        const Eigenpair pair = left ? left_t_eigenvector(a, lambda) : t_eigenvector(a, lambda);
        out["vector"] = vector_to_json(pair.vector);
        out["lambda"] = complex_to_json(pair.lambda);
        out["residual"] = pair.residual;
        out["multiplicity"] = pair.multiplicity;
        out["side"] = pair.side == EigSide::Left ? "left" : "right";
    }
    (void)values_only;
    std::cout << out.dump(2) << "\n";
    return 0;
}

json report_to_json(const PFReport& r) {
    json items = json::array();
    for (const ItemVerdict& v : r.items)
        items.push_back(json{{"id", v.id}, {"status", to_string(v.status)},
                             {"evidence", v.evidence}});
    json deltas = json::array();
    for (double d : r.delta_values) deltas.push_back(d);
    return json{{"input_class", to_string(r.input_class)},
                {"irreducible", r.irreducibility == Verdict::Irreducible},
                {"has_strongly_positive_tube", r.has_strongly_positive_tube},
                {"rho", r.rho},
                {"rho_eigenspace_dim", r.rho_eigenspace_dim},
                {"positive_rho_rank", r.positive_rho_rank},
                {"delta_values", deltas},
                {"items", items}};
}

int run_pf_report(const std::string& path, bool as_json) {
    const auto a = load_matrix(path);
    const PFReport report = pf_report(a);

    if (as_json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "input class:            " << to_string(report.input_class) << "\n"
                  << "irreducible:            "
                  << (report.irreducibility == Verdict::Irreducible ? "yes" : "no") << "\n"
                  << "strongly positive tube: "
                  << (report.has_strongly_positive_tube ? "yes" : "no") << "\n"
                  << "rho:                    " << report.rho << "\n"
                  << "rho eigenspace dim:     " << report.rho_eigenspace_dim << "\n"
                  << "positive vectors rank:  " << report.positive_rho_rank << "\n\n";
        for (const ItemVerdict& v : report.items) {
            std::cout << "  [" << to_string(v.status) << "] " << v.id;
            if (!v.evidence.empty()) std::cout << " -- " << v.evidence;
            std::cout << "\n";
        }
    }
    for (const ItemVerdict& v : report.items)
        if (v.status == CheckStatus::Fail) return 1;
    return 0;
}

int run_tprod(const std::string& a_path, const std::string& b_path, const std::string& out_path,
              bool use_fft) {
    const auto a = load_matrix(a_path);
    const json bdoc = tubal::detail::parse_file(b_path);
    if (is_vector_json(bdoc)) {
        const auto x = vector_from_json(bdoc, b_path);
        save(tprod(a, x), out_path);
    } else {
        const auto b = matrix_from_json(bdoc, b_path);
        save(use_fft ? tprod_fft(a, b) : tprod(a, b), out_path);
    }
    return 0;
}

int run_generate(const InstanceSpec& spec, const std::string& out_path) {
    const auto a = generate(spec);
    if (out_path == "-")
        std::cout << to_json(a).dump(2) << "\n";
    else
        save(a, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-product tubal matrix algebra: cones, irreducibility, spectra"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "cone class of a tensor file");
    std::string classify_path;
    std::optional<double> classify_tol;
    bool classify_json = false;
    classify_cmd->add_option("file", classify_path, "tensor JSON file")->required();
    classify_cmd->add_option("--tol", classify_tol, "classification tolerance");
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    // irreducible
    auto* irr_cmd = app.add_subcommand("irreducible", "reducibility verdict and certificate");
    std::string irr_path, irr_method = "scc";
    std::optional<double> irr_tol;
    bool irr_json = false;
    irr_cmd->add_option("file", irr_path, "tensor JSON file")->required();
    irr_cmd->add_option("--method", irr_method, "subset | scc | power")
        ->check(CLI::IsMember({"subset", "scc", "power"}));
    irr_cmd->add_option("--tol", irr_tol, "support tolerance");
    irr_cmd->add_flag("--json", irr_json, "machine-readable output");

    // eig
    auto* eig_cmd = app.add_subcommand("eig", "t-eigenvalues via the transform slices");
    std::string eig_path;
    bool eig_values = false, eig_left = false;
    std::optional<std::string> eig_vectors;
    eig_cmd->add_option("file", eig_path, "tensor JSON file")->required();
    eig_cmd->add_flag("--values", eig_values, "eigenvalues only (default)");
    eig_cmd->add_option("--vectors", eig_vectors, "also return an eigenvector at RE[,IM]");
    eig_cmd->add_flag("--left", eig_left, "left eigenvector (of the transpose)");

    // pf-report
    auto* pf_cmd = app.add_subcommand("pf-report", "Perron-Frobenius verification report");
    std::string pf_path;
    bool pf_json = false, pf_text = false;
    pf_cmd->add_option("file", pf_path, "tensor JSON file")->required();
    pf_cmd->add_flag("--json", pf_json, "machine-readable output");
    pf_cmd->add_flag("--text", pf_text, "human-readable output (default)");

    // tprod
    auto* tp_cmd = app.add_subcommand("tprod", "t-product of two tensor files");
    std::string tp_a, tp_b, tp_out;
    bool tp_fft = false;
    tp_cmd->add_option("a", tp_a, "left factor")->required();
    tp_cmd->add_option("b", tp_b, "right factor (matrix or vector)")->required();
    tp_cmd->add_option("-o,--output", tp_out, "output file")->required();
    tp_cmd->add_flag("--fft", tp_fft, "use the transform-domain fast path");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "seeded random nonnegative instance");
    InstanceSpec spec;
    std::string gen_out = "-";
    std::string gen_ensure = "none";
    std::vector<double> gen_range;
    gen_cmd->add_option("-n", spec.n, "matrix dimension")->required();
    gen_cmd->add_option("-p", spec.p, "tube length")->required();
    gen_cmd->add_option("--density", spec.density, "fraction of nonzero slice entries");
    gen_cmd->add_option("--range", gen_range, "value range LO HI (LO >= 0)")->expected(2);
    gen_cmd->add_option("--seed", spec.seed, "64-bit seed");
    gen_cmd->add_option("--ensure", gen_ensure, "none | irreducible | irreducible_with_strong_tube")
        ->check(CLI::IsMember({"none", "irreducible", "irreducible_with_strong_tube"}));
    gen_cmd->add_option("-o,--output", gen_out, "output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd))
            return run_classify(classify_path, classify_tol, classify_json);
        if (app.got_subcommand(irr_cmd))
            return run_irreducible(irr_path, irr_method, irr_tol, irr_json);
        if (app.got_subcommand(eig_cmd))
            return run_eig(eig_path, eig_values, eig_vectors, eig_left);
        if (app.got_subcommand(pf_cmd)) return run_pf_report(pf_path, pf_json && !pf_text);
        if (app.got_subcommand(tp_cmd)) return run_tprod(tp_a, tp_b, tp_out, tp_fft);
        if (app.got_subcommand(gen_cmd)) {
            if (!gen_range.empty()) {
                spec.lo = gen_range[0];
                spec.hi = gen_range[1];
            }
            if (gen_ensure == "irreducible") spec.ensure = Ensure::Irreducible;
            if (gen_ensure == "irreducible_with_strong_tube")
                spec.ensure = Ensure::IrreducibleWithStrongTube;
            return run_generate(spec, gen_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
