// Command line front end: block enumeration, basis-element products,
// verification suites, KL tables, Cartan/decomposition matrices, the center
// report and JSON export.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forkalg/verify.hpp"

namespace {

using namespace forkalg;

int hard_cap() {
    if (const char* env = std::getenv("FORKALG_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 7;
}

void enforce_cap(int n) {
    if (n < 1 || n > hard_cap())
        throw CLI::ValidationError("--n", "n out of range (cap " + std::to_string(hard_cap()) +
                                             ", raise with FORKALG_CAP)");
}

struct ParsedElement {
    Weight lower, eta, upper;
    Permutation sigma;
};

// "(lower=^v^ eta=^v^ sigma=2,1 upper=v^^)"
ParsedElement parse_element(std::string text, int k) {
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" ()");
        size_t b = s.find_last_not_of(" ()");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    text = strip(text);
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad element token: " + tok);
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"lower", "eta", "upper"})
        if (!kv.count(key)) throw std::invalid_argument(std::string("missing field: ") + key);
    ParsedElement p{Weight::parse(kv.at("lower")), Weight::parse(kv.at("eta")),
                    Weight::parse(kv.at("upper")), Permutation::identity(k)};
    if (kv.count("sigma") && !kv.at("sigma").empty())
        p.sigma = Permutation::parse(kv.at("sigma"), k);
    return p;
}

std::string render_element(const DiagramAlgebra& a, int idx) {
    const BasisElement& b = a.at(idx);
    return "(lower=" + a.weight(b.lower).str() + " eta=" + a.weight(b.eta).str() +
           " sigma=" + a.sk()[static_cast<size_t>(b.sigma)].str() +
           " upper=" + a.weight(b.upper).str() + ")";
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << content;
}

int cmd_enumerate(int n, int k, const std::string& format) {
    enforce_cap(n);
    std::vector<Weight> blk = block(n, k);
    const DiagramAlgebra& a = verify::cached_algebra(n, k);
    std::ostringstream out;
    if (format == "json") {
        out << "{\"n\": " << n << ", \"k\": " << k << ", \"dim\": " << a.dim() << ", \"weights\": [";
        for (size_t i = 0; i < blk.size(); ++i) {
            Encodings e = encodings(blk[i]);
            out << (i ? ", " : "") << "{\"weight\": \"" << blk[i].str() << "\", \"b\": [";
            for (size_t t = 0; t < e.b_seq.size(); ++t) out << (t ? "," : "") << e.b_seq[t];
            out << "], \"wedge_dist\": [";
            for (size_t t = 0; t < e.wedge_dist.size(); ++t) out << (t ? "," : "") << e.wedge_dist[t];
            out << "], \"vee_dist\": [";
            for (size_t t = 0; t < e.vee_dist.size(); ++t) out << (t ? "," : "") << e.vee_dist[t];
            out << "]}";
        }
        out << "]}\n";
    } else {
        out << "block(" << n << "," << k << "): " << blk.size() << " weights, dim A = " << a.dim()
            << "\n";
        for (const Weight& w : blk) {
            Encodings e = encodings(w);
            out << "  " << w.str() << "  b=";
            for (size_t t = 0; t < e.b_seq.size(); ++t) out << (t ? "," : "") << e.b_seq[t];
            out << "  wedge_dist=";
            for (size_t t = 0; t < e.wedge_dist.size(); ++t) out << (t ? "," : "") << e.wedge_dist[t];
            out << "  vee_dist=";
            for (size_t t = 0; t < e.vee_dist.size(); ++t) out << (t ? "," : "") << e.vee_dist[t];
            out << "  len=" << weight_length(w) << " defect=" << defect(w) << "  lower: "
                << underline(w).ascii() << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

int cmd_mult(int n, int k, const std::string& xs, const std::string& ys, const std::string& format) {
    enforce_cap(n);
    const DiagramAlgebra& a = verify::cached_algebra(n, k, false);
    ParsedElement px = parse_element(xs, k), py = parse_element(ys, k);
    auto locate = [&](const ParsedElement& p) {
        int idx = a.basis_index(a.weight_index(p.lower), a.weight_index(p.eta),
                                [&] {
                                    for (size_t s = 0; s < a.sk().size(); ++s)
                                        if (a.sk()[s] == p.sigma) return static_cast<int>(s);
                                    throw std::invalid_argument("sigma outside S_k");
                                }(),
                                a.weight_index(p.upper));
        if (idx < 0) throw std::invalid_argument("element is not an oriented fork diagram");
        return idx;
    };
    int xi = locate(px), yi = locate(py);
    if (a.at(xi).upper != a.at(yi).lower) {
        std::cout << "0  (inner diagrams do not match)\n";
        return 0;
    }
    const auto& prod = a.product(xi, yi);
    if (format == "json") {
        std::cout << "[";
        bool first = true;
        for (const auto& [idx, c] : prod) {
            std::cout << (first ? "" : ", ") << "{\"coeff\": " << c.get_str() << ", \"element\": \""
                      << render_element(a, idx) << "\"}";
            first = false;
        }
        std::cout << "]\n";
    } else {
        if (prod.empty()) {
            std::cout << "0\n";
        } else {
            bool first = true;
            for (const auto& [idx, c] : prod) {
                std::cout << (first ? "" : " + ") << c.get_str() << " * " << render_element(a, idx);
                first = false;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, int n) {
    enforce_cap(n);
    bool all_pass = true;
    for (const auto& res : verify::run(suite, n)) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << "\n";
        for (const std::string& m : res.messages) std::cout << "       " << m << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_export(int n, int k, const std::string& path) {
    enforce_cap(n);
    DiagramAlgebra a(n, k);
    a.build_table(true);
    write_out(path, algebra_to_json(a));
    return 0;
}

int cmd_kl(int n, const std::string& path) {
    enforce_cap(n);
    HeckeContext ctx(n);
    std::ostringstream out;
    out << "w\tw_prime\tpolynomial\n";
    for (const Permutation& w : symmetric_group(n)) {
        const HeckeElement& c = ctx.canonical_basis(w);
        for (const auto& [u, coeff] : c.terms())
            out << w.str() << "\t" << u.str() << "\t" << coeff.str() << "\n";
    }
    write_out(path, out.str());
    return 0;
}

int cmd_cartan(int n, int k, bool decomposition, const std::string& path) {
    enforce_cap(n);
    const DiagramAlgebra& a = verify::cached_algebra(n, k, false);
    std::ostringstream out;
    const auto& ws = a.weights();
    auto matrix = decomposition ? decomposition_matrix(a) : a.graded_cartan();
    out << (decomposition ? "d" : "cartan");
    for (const Weight& w : ws) out << "\t" << w.str();
    out << "\n";
    for (size_t i = 0; i < ws.size(); ++i) {
        out << ws[i].str();
        for (size_t j = 0; j < ws.size(); ++j) out << "\t" << matrix[i][j].str();
        out << "\n";
    }
    write_out(path, out.str());
    return 0;
}

int cmd_center(int n, int k) {
    enforce_cap(n);
    if (k >= n) throw CLI::ValidationError("--k", "center report requires k < n");
    const DiagramAlgebra& a = verify::cached_algebra(n, k);
    CenterReport r = center_vs_presentation(a);
    std::cout << "center of the maximal-defect corner of A_{" << n << "," << k
              << "}: " << r.center.str() << "\n";
    std::cout << "graded dimension of the symmetric-function presentation: " << r.presentation.str()
              << "\n";
    std::cout << (r.match() ? "MATCH" : "MISMATCH") << "\n";
    return r.match() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the fork diagram algebras A_{n,k}"};
    app.require_subcommand(1);

    int n = 3, k = 1, jobs = 0;
    std::string format = "text", suite = "all", out_path, xspec, yspec;
    bool decomposition = false;

    app.add_option("--jobs", jobs, "worker threads for parallel builds (0 = library default)");

    auto* enumerate = app.add_subcommand("enumerate", "list a block and its encodings");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* mult = app.add_subcommand("mult", "multiply two basis elements");
    mult->add_option("--n", n)->required();
    mult->add_option("--k", k)->required();
    mult->add_option("--x", xspec, "(lower=.. eta=.. sigma=.. upper=..)")->required();
    mult->add_option("--y", yspec)->required();
    mult->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"polyring", "quotient", "hecke", "psi", "algebra", "cellular",
                               "stratified", "duality", "functors", "all"}));
    verify_cmd->add_option("--n", n)->required();

    auto* export_cmd = app.add_subcommand("export", "write an algebra as JSON");
    export_cmd->add_option("--n", n)->required();
    export_cmd->add_option("--k", k)->required();
    export_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* kl = app.add_subcommand("kl", "dump the Kazhdan-Lusztig table as TSV");
    kl->add_option("--n", n)->required();
    kl->add_option("--out", out_path);

    auto* cartan = app.add_subcommand("cartan", "graded Cartan or decomposition matrix as TSV");
    cartan->add_option("--n", n)->required();
    cartan->add_option("--k", k)->required();
    cartan->add_flag("--decomposition", decomposition, "emit the decomposition matrix instead");
    cartan->add_option("--out", out_path);

    auto* center = app.add_subcommand("center", "corner center vs the polynomial presentation");
    center->add_option("--n", n)->required();
    center->add_option("--k", k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems exit with 2
    }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(n, k, format);
        if (app.got_subcommand(mult)) return cmd_mult(n, k, xspec, yspec, format);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(suite, n);
        if (app.got_subcommand(export_cmd)) return cmd_export(n, k, out_path);
        if (app.got_subcommand(kl)) return cmd_kl(n, out_path);
        if (app.got_subcommand(cartan)) return cmd_cartan(n, k, decomposition, out_path);
        if (app.got_subcommand(center)) return cmd_center(n, k);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
