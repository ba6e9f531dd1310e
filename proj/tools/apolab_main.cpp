// Command-line front end: exact apolarity computations, harmonic bases,
// Groebner checks, Hilbert functions and border-rank certificates, with text
// or JSON output. Exit codes: 0 success, 1 failed mathematical check,
// 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "apolab/apolarity.hpp"
#include "apolab/certify.hpp"
#include "apolab/groebner.hpp"
#include "apolab/harmonic.hpp"
#include "apolab/parse.hpp"
#include "apolab/util.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "text";
    std::string out_file;

    bool json() const { return format == "json"; }

    int emit(const std::string& text, const ordered_json& json_doc) const {
        const std::string payload = json() ? json_doc.dump(2) + "\n" : text;
        if (out_file.empty()) {
            std::cout << payload;
            return kExitOk;
        }
        std::ofstream out(out_file);
        if (!out) {
            std::cerr << "cannot open output file: " << out_file << "\n";
            return kExitUsage;
        }
        out << payload;
        return kExitOk;
    }
};

void add_output_flags(CLI::App* cmd, Output& output) {
    cmd->add_option("--format", output.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", output.out_file, "Write output to FILE instead of stdout");
}

std::string format_complex(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(12);
    if (std::abs(z.imag()) < 1e-14) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

// --------------------------------------------------------------------------
// apolar

int run_apolar(int n, unsigned s, int degree, const Output& output) {
    using namespace apolab;
    if (degree >= 0) {
        ApolarComponent comp =
            apolar_component(quadric_power(VariableFrame::x(n), s), static_cast<unsigned>(degree));
        ordered_json doc;
        doc["n"] = n;
        doc["s"] = s;
        doc["degree"] = degree;
        doc["dim"] = comp.dim;
        doc["basis"] = ordered_json::array();
        std::ostringstream text;
        text << "apolar component of (x1^2+...+x" << n << "^2)^" << s << " in degree " << degree
             << ": dim " << comp.dim << "\n";
        for (const auto& phi : comp.basis) {
            doc["basis"].push_back(phi.to_string());
            text << "  " << phi.to_string() << "\n";
        }
        return output.emit(text.str(), doc);
    }

    ApolarIdealReport report = verify_apolar_ideal_theorem(n, s, 3);
    ordered_json doc;
    doc["n"] = n;
    doc["s"] = s;
    doc["degrees"] = ordered_json::array();
    std::ostringstream text;
    text << "apolar ideal of (x1^2+...+x" << n << "^2)^" << s
         << " versus the ideal of degree-" << (s + 1) << " harmonics\n";
    for (const auto& cmp : report.degrees) {
        ordered_json row;
        row["degree"] = cmp.m;
        row["apolar_dim"] = cmp.apolar_dim;
        row["ideal_dim"] = cmp.ideal_dim;
        row["subspaces_equal"] = cmp.equal;
        doc["degrees"].push_back(std::move(row));
        text << "  degree " << cmp.m << ": apolar dim " << cmp.apolar_dim << ", ideal dim "
             << cmp.ideal_dim << (cmp.equal ? "  [equal]" : "  [MISMATCH]") << "\n";
    }
    doc["theorem_holds"] = report.ok;
    text << (report.ok ? "all degrees agree\n" : "MISMATCH found\n");
    int rc = output.emit(text.str(), doc);
    if (rc != kExitOk) return rc;
    return report.ok ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------------------
// catalecticant

int run_catalecticant(int n, unsigned s, int j, const Output& output) {
    using namespace apolab;
    const Poly f = quadric_power(VariableFrame::x(n), s);
    const unsigned jj = j >= 0 ? static_cast<unsigned>(j) : s;  // default: the middle
    Catalecticant cat = catalecticant(f, jj);
    ordered_json doc;
    doc["n"] = n;
    doc["s"] = s;
    doc["j"] = jj;
    doc["rows"] = cat.matrix.rows();
    doc["cols"] = cat.matrix.cols();
    doc["rank"] = cat.rank;
    std::ostringstream text;
    text << "catalecticant of (x1^2+...+x" << n << "^2)^" << s << " at j = " << jj << ": "
         << cat.matrix.rows() << "x" << cat.matrix.cols() << ", rank " << cat.rank << "\n";
    return output.emit(text.str(), doc);
}

// --------------------------------------------------------------------------
// harmonic-basis (with optional on-disk cache)

std::optional<std::vector<apolab::Poly>> load_cached_basis(const std::string& dir, unsigned d) {
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / ("harmonic_basis_3_d" + std::to_string(d) + ".txt");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<apolab::Poly> elements;
    std::string line;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            elements.push_back(apolab::parse_poly(line, apolab::VariableFrame::uvz()));
        }
    } catch (const apolab::ParseError&) {
        return std::nullopt;
    }
    if (elements.size() != 2 * d + 1) return std::nullopt;
    return elements;
}

void store_cached_basis(const std::string& dir, const apolab::HarmonicBasis3& basis) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path path = fs::path(dir) / ("harmonic_basis_3_d" + std::to_string(basis.d) + ".txt");
    std::ofstream out(path);
    if (!out) return;  // cache is best effort
    for (const auto& p : basis.elements) out << p.to_string() << "\n";
}

int run_harmonic_basis(unsigned d, const Output& output) {
    using namespace apolab;
    std::vector<Poly> elements;
    const char* cache_dir = std::getenv("APOLARITY_LAB_CACHE");
    if (cache_dir != nullptr) {
        if (auto cached = load_cached_basis(cache_dir, d)) {
            elements = std::move(*cached);
        } else {
            const HarmonicBasis3& basis = harmonic_basis_3(d);
            store_cached_basis(cache_dir, basis);
            elements = basis.elements;
        }
    } else {
        elements = harmonic_basis_3(d).elements;
    }

    // the nonnegative-weight half, weight d down to 0
    ordered_json doc;
    doc["d"] = d;
    doc["elements"] = ordered_json::array();
    std::ostringstream text;
    for (unsigned i = 0; i <= d; ++i) {
        ordered_json row;
        row["k"] = static_cast<int>(d - i);
        row["poly"] = elements[i].to_string();
        doc["elements"].push_back(std::move(row));
        text << elements[i].to_string() << "\n";
    }
    return output.emit(text.str(), doc);
}

// --------------------------------------------------------------------------
// groebner-check

int run_groebner_check(unsigned d, const Output& output) {
    using namespace apolab;
    GradedIdealPresentation ideal = ladder_ideal(d);
    std::vector<Poly> ordered(ideal.generators().rbegin(), ideal.generators().rend());
    BuchbergerWitness witness = buchberger_colon_check(ordered);
    std::ostringstream text;
    text << "colon-criterion check for the degree-" << d << " ladder ideal: "
         << (witness.ok ? "Groebner basis" : "NOT a Groebner basis") << "\n";
    for (const auto& step : witness.steps) {
        text << "  generator " << step.j << ": colon ideal (";
        for (std::size_t i = 0; i < step.colon_generators.size(); ++i) {
            if (i) text << ", ";
            text << Poly::monomial(VariableFrame::uvz(), step.colon_generators[i]).to_string();
        }
        text << "), " << step.reductions.size() << " reduction(s) to zero\n";
    }
    int rc = output.emit(text.str(), witness.to_json());
    if (rc != kExitOk) return rc;
    return witness.ok ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------------------
// hilbert

int run_hilbert(unsigned s, int degree, const Output& output) {
    using namespace apolab;
    GradedIdealPresentation ideal = ladder_ideal(s + 1);
    std::vector<Poly> ordered(ideal.generators().rbegin(), ideal.generators().rend());
    BuchbergerWitness witness = ideal.establish_groebner(std::move(ordered));
    if (!witness.ok) {
        std::cerr << "internal error: ladder basis failed the Groebner check\n";
        return kExitCheckFailed;
    }
    ordered_json doc;
    doc["s"] = s;
    std::ostringstream text;
    if (degree >= 0) {
        const long long value = ideal.hilbert_function(static_cast<unsigned>(degree));
        doc["degree"] = degree;
        doc["value"] = value;
        text << "HF(" << degree << ") = " << value << "\n";
        return output.emit(text.str(), doc);
    }
    const unsigned window = 2 * s + 4;
    doc["values"] = ordered_json::array();
    text << "Hilbert function of the degree-" << (s + 1) << " ladder ideal quotient\n";
    for (unsigned a = 0; a <= window; ++a) {
        const long long value = ideal.hilbert_function(a);
        ordered_json row;
        row["degree"] = a;
        row["value"] = value;
        doc["values"].push_back(std::move(row));
        text << "  a = " << a << ": " << value << "\n";
    }
    auto stable = uz_power_ideal(s + 1).stable_standard_count();
    if (stable) {
        doc["stable_from"] = stable->from_degree;
        doc["stable_value"] = stable->value;
        text << "constant " << stable->value << " for every degree >= " << stable->from_degree
             << "\n";
    }
    return output.emit(text.str(), doc);
}

// --------------------------------------------------------------------------
// certify

std::string certificate_text(const apolab::BorderRankCertificate& cert) {
    std::ostringstream text;
    text << "border-rank certificate for (x1^2+x2^2+x3^2)^" << cert.s << "\n";
    text << "  claimed border rank r = " << cert.r << "\n";
    text << "  generators (degree " << cert.s + 1 << "): " << cert.generator_count << "\n";
    bool members = true;
    for (bool b : cert.checks.apolar_membership) members = members && b;
    text << "  [" << (members ? "ok" : "FAIL") << "] apolar membership of every generator\n";
    text << "  [" << (cert.checks.groebner_ok ? "ok" : "FAIL") << "] Groebner basis (lex z > u > v)\n";
    text << "  [" << (cert.checks.leading_ideal_equals_expected ? "ok" : "FAIL")
         << "] leading ideal = (u,z)^" << cert.s + 1 << "\n";
    text << "  [" << (cert.checks.saturated ? "ok" : "FAIL") << "] leading ideal saturated ("
         << cert.checks.saturation_iterations << " iteration(s))\n";
    text << "  [" << (cert.checks.hilbert.ok ? "ok" : "FAIL")
         << "] Hilbert function = min(C(a+2,2), " << cert.r << ") for a <= "
         << cert.checks.hilbert.verified_to << ", constant from a = "
         << cert.checks.hilbert.stable_from << " on\n";
    text << "  [" << (cert.checks.catalecticant_rank == cert.r ? "ok" : "FAIL")
         << "] middle catalecticant rank = " << cert.checks.catalecticant_rank << "\n";
    text << "conclusion: border rank = " << cert.conclusion << "\n";
    return text.str();
}

int run_certify(unsigned s_single, const std::string& s_range, const Output& output) {
    using namespace apolab;
    unsigned lo = s_single, hi = s_single;
    if (!s_range.empty()) {
        const auto sep = s_range.find("..");
        if (sep == std::string::npos) {
            std::cerr << "--s-range expects the form a..b\n";
            return kExitUsage;
        }
        try {
            lo = static_cast<unsigned>(std::stoul(s_range.substr(0, sep)));
            hi = static_cast<unsigned>(std::stoul(s_range.substr(sep + 2)));
        } catch (const std::exception&) {
            std::cerr << "--s-range expects the form a..b\n";
            return kExitUsage;
        }
        if (lo < 1 || hi < lo) {
            std::cerr << "--s-range expects 1 <= a <= b\n";
            return kExitUsage;
        }
    }

    std::ostringstream text;
    ordered_json doc = ordered_json::array();
    for (unsigned s = lo; s <= hi; ++s) {
        BorderRankCertificate cert = certify_border_rank_q3(s);
        text << certificate_text(cert);
        doc.push_back(cert.to_json());
    }
    // a single requested power emits one certificate object, not an array
    return output.emit(text.str(), (lo == hi && s_range.empty()) ? doc.front() : doc);
}

// --------------------------------------------------------------------------
// classify

int run_classify(const std::string& poly_text, const Output& output) {
    using namespace apolab;
    Poly g = parse_poly(poly_text, VariableFrame::x(3));
    QuadraticClassification cls = classify_ternary_quadratic(g);
    ordered_json doc;
    doc["polynomial"] = g.to_string();
    doc["rank"] = cls.matrix_rank;
    doc["brk_formula"] = cls.formula();
    doc["brk_examples"] = ordered_json::array();
    std::ostringstream text;
    text << "quadratic: " << g.to_string() << "\n";
    text << "rank " << cls.matrix_rank << ", brk(g^s) = " << cls.formula() << "\n";
    for (unsigned s = 1; s <= 4; ++s) {
        ordered_json row;
        row["s"] = s;
        row["brk"] = cls.brk(s);
        doc["brk_examples"].push_back(std::move(row));
        text << "  s = " << s << ": " << cls.brk(s) << "\n";
    }
    return output.emit(text.str(), doc);
}

// --------------------------------------------------------------------------
// decompose-q2

int run_decompose_q2(unsigned s, double theta, double k, double tol, const Output& output) {
    using namespace apolab;
    Q2Decomposition dec = decompose_q2(s, theta, k, tol);
    Q2ApolarGenerator gen = q2_apolar_generator(s, theta, k);

    ordered_json doc;
    doc["s"] = s;
    doc["theta"] = theta;
    doc["k"] = k;
    doc["radius"] = dec.radius;
    doc["points"] = ordered_json::array();
    for (const auto& p : dec.points) {
        ordered_json point;
        point["x1"] = {p[0].real(), p[0].imag()};
        point["x2"] = {p[1].real(), p[1].imag()};
        doc["points"].push_back(std::move(point));
    }
    doc["residual"] = dec.residual;
    doc["tol"] = tol;

    std::ostringstream text;
    text << "power-sum decomposition of (x1^2+x2^2)^" << s << ": " << dec.points.size()
         << " points, radius " << dec.radius << "\n";
    for (const auto& p : dec.points)
        text << "  (" << format_complex(p[0]) << ", " << format_complex(p[1]) << ")\n";
    text << "residual " << dec.residual << " (tol " << tol << ")\n";

    if (gen.exact) {
        const bool apolar_zero =
            contract(*gen.exact, quadric_power(VariableFrame::x(2), s)).is_zero();
        doc["exact_generator"] = gen.exact->to_string();
        doc["exact_contraction_zero"] = apolar_zero;
        text << "apolar generator u^" << s + 1 << " - v^" << s + 1 << " = "
             << gen.exact->to_string() << (apolar_zero ? " annihilates the form exactly\n"
                                                       : " FAILS to annihilate the form\n");
        if (!apolar_zero) {
            output.emit(text.str(), doc);
            return kExitCheckFailed;
        }
    }
    return output.emit(text.str(), doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact apolarity, harmonic decomposition and border-rank certificates for "
                 "powers of quadratic forms"};
    app.require_subcommand(1);

    Output output;

    // apolar
    auto* apolar_cmd = app.add_subcommand(
        "apolar", "Apolar components of (sum of squares)^s, or the full degree-by-degree "
                  "comparison with the harmonic-generated ideal");
    int apolar_n = 3;
    unsigned apolar_s = 1;
    int apolar_d = -1;
    apolar_cmd->add_option("--n", apolar_n, "Number of variables")->check(CLI::Range(2, 6));
    apolar_cmd->add_option("--s", apolar_s, "Power of the quadric")->required();
    apolar_cmd->add_option("--d", apolar_d, "Single degree to inspect (omit to verify all)");
    add_output_flags(apolar_cmd, output);

    // catalecticant
    auto* cat_cmd = app.add_subcommand("catalecticant",
                                       "Exact rank of a catalecticant of (sum of squares)^s");
    int cat_n = 3;
    unsigned cat_s = 1;
    int cat_j = -1;
    cat_cmd->add_option("--n", cat_n, "Number of variables")->check(CLI::Range(2, 6));
    cat_cmd->add_option("--s", cat_s, "Power of the quadric")->required();
    cat_cmd->add_option("--j", cat_j, "Catalecticant index (default: middle, j = s)");
    add_output_flags(cat_cmd, output);

    // harmonic-basis
    auto* hb_cmd = app.add_subcommand(
        "harmonic-basis",
        "Nonnegative-weight canonical basis of ternary harmonics in u, z, v coordinates");
    unsigned hb_d = 2;
    hb_cmd->add_option("--d", hb_d, "Degree of the basis")->required();
    add_output_flags(hb_cmd, output);

    // groebner-check
    auto* gb_cmd = app.add_subcommand(
        "groebner-check", "Colon-criterion Groebner verification of the degree-d ladder ideal");
    unsigned gb_d = 2;
    gb_cmd->add_option("--d", gb_d, "Degree of the ladder ideal")->required()
        ->check(CLI::PositiveNumber);
    add_output_flags(gb_cmd, output);

    // hilbert
    auto* hf_cmd = app.add_subcommand(
        "hilbert", "Hilbert function of the degree-(s+1) ladder ideal quotient");
    unsigned hf_s = 1;
    int hf_d = -1;
    hf_cmd->add_option("--s", hf_s, "Power of the quadric")->required()->check(CLI::PositiveNumber);
    hf_cmd->add_option("--d", hf_d, "Single degree (omit for the full table)");
    add_output_flags(hf_cmd, output);

    // certify
    auto* cert_cmd = app.add_subcommand(
        "certify", "End-to-end border-rank certificate for (x1^2+x2^2+x3^2)^s");
    unsigned cert_s = 1;
    std::string cert_range;
    auto* cert_s_opt = cert_cmd->add_option("--s", cert_s, "Power of the quadric")
                           ->check(CLI::PositiveNumber);
    cert_cmd->add_option("--s-range", cert_range, "Batch range a..b of powers")
        ->excludes(cert_s_opt);
    add_output_flags(cert_cmd, output);

    // classify
    auto* cls_cmd = app.add_subcommand(
        "classify", "Rank and border-rank formula of a ternary quadratic form");
    std::string cls_poly;
    cls_cmd->add_option("polynomial", cls_poly, "Quadratic in x1, x2, x3")->required();
    add_output_flags(cls_cmd, output);

    // decompose-q2
    auto* dq_cmd = app.add_subcommand(
        "decompose-q2", "Power-sum decomposition of (x1^2+x2^2)^s with residual check");
    unsigned dq_s = 1;
    double dq_theta = 0.0, dq_k = 0.0, dq_tol = 1e-9;
    dq_cmd->add_option("--s", dq_s, "Power of the binary quadric")->required()
        ->check(CLI::PositiveNumber);
    dq_cmd->add_option("--theta", dq_theta, "Rotation parameter of the generator pencil");
    dq_cmd->add_option("--k", dq_k, "Imaginary parameter of the generator pencil");
    dq_cmd->add_option("--tol", dq_tol, "Residual tolerance")->capture_default_str();
    add_output_flags(dq_cmd, output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (apolar_cmd->parsed()) return run_apolar(apolar_n, apolar_s, apolar_d, output);
        if (cat_cmd->parsed()) return run_catalecticant(cat_n, cat_s, cat_j, output);
        if (hb_cmd->parsed()) return run_harmonic_basis(hb_d, output);
        if (gb_cmd->parsed()) return run_groebner_check(gb_d, output);
        if (hf_cmd->parsed()) return run_hilbert(hf_s, hf_d, output);
        if (cert_cmd->parsed()) {
            if (cert_range.empty() && cert_s_opt->count() == 0) {
                std::cerr << "certify: provide --s or --s-range\n";
                return kExitUsage;
            }
            return run_certify(cert_s, cert_range, output);
        }
        if (cls_cmd->parsed()) return run_classify(cls_poly, output);
        if (dq_cmd->parsed()) return run_decompose_q2(dq_s, dq_theta, dq_k, dq_tol, output);
    } catch (const apolab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const apolab::CertificationError& e) {
        std::cerr << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
