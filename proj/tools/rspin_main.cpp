#include "rspin/cycles.hpp"
#include "rspin/flatness.hpp"
#include "rspin/json_io.hpp"
#include "rspin/potential.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace rspin;

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitQuadrature = 3;

std::string format_error(double e) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", e);
    return buf;
}

std::string format_hbar(Complex h) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g%+gi", h.real(), h.imag());
    return buf;
}

Complex parse_hbar(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--hbar", "expected 're,im'");
    double re, im;
    try {
        size_t used = 0;
        re = std::stod(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(s);
        std::string rest = s.substr(comma + 1);
        im = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--hbar", "expected 're,im'");
    }
    Complex h(re, im);
    if (h == Complex(0.0, 0.0)) throw CLI::ValidationError("--hbar", "must be nonzero");
    return h;
}

int run_invariants(int r, const std::string& format) {
    if (format == "json") {
        std::cout << invariants_to_json(r).dump(2) << "\n";
        return kExitPass;
    }
    auto items = enumerate_nonzero(r);
    std::cout << "nonzero disk invariants, r=" << r << "\n";
    for (const auto& [key, value] : items)
        std::cout << "  twists=" << key.twists.to_string() << " k=" << key.k
                  << " value=" << value.to_string() << "\n";
    return kExitPass;
}

int run_potential(int r, const std::string& format) {
    DeformedPotential w = build_deformed_potential(r);
    if (format == "json") {
        nlohmann::ordered_json out;
        out["r"] = r;
        out["potential"] = poly_to_json(w.poly);
        std::cout << out.dump(2) << "\n";
    } else if (format == "latex") {
        std::cout << w.poly.to_latex() << "\n";
    } else {
        std::cout << w.poly.to_text() << "\n";
    }
    return kExitPass;
}

struct LambdaScan {
    int numeric_checked = 0;
    bool numeric_all_zero = true;
    int symbolic_max_l = 0;
    bool symbolic_all_zero = true;
    bool recursion_holds = true;
};

LambdaScan run_lambda_scan(int r, int max_l) {
    LambdaScan scan;
    for (const auto& [key, value] : enumerate_nonzero(r)) {
        if (key.twists.size() < 2) continue;
        ++scan.numeric_checked;
        if (!lambda_obstruction(r, key.twists).is_zero() ||
            !lambda_obstruction_via_partitions(r, key.twists).is_zero())
            scan.numeric_all_zero = false;
    }
    scan.symbolic_max_l = max_l;
    for (int l = 2; l <= max_l; ++l) {
        if (!lambda_obstruction_symbolic(r, l).is_zero()) scan.symbolic_all_zero = false;
        if (!contribution_recursion_holds(r, l)) scan.recursion_holds = false;
    }
    return scan;
}

int run_verify(int r, int cap, int max_l, const std::string& format) {
    PrimitivityReport report = verify_flat_coordinates(r, cap);
    Poly oracle = flat_potential_from_versal(r, cap);
    Poly direct = build_deformed_potential(r).poly.truncate_deformation(cap);
    bool oracle_match = oracle == direct;
    LambdaScan scan = run_lambda_scan(r, max_l);
    bool pass = report.primitive && report.flat && oracle_match && scan.numeric_all_zero &&
                scan.symbolic_all_zero && scan.recursion_holds;

    if (format == "json") {
        nlohmann::ordered_json out;
        out["flat_check"] = report_to_json(report);
        out["oracle_match"] = oracle_match;
        nlohmann::ordered_json lam;
        lam["numeric_checked"] = scan.numeric_checked;
        lam["numeric_all_zero"] = scan.numeric_all_zero;
        lam["symbolic_max_l"] = scan.symbolic_max_l;
        lam["symbolic_all_zero"] = scan.symbolic_all_zero;
        lam["recursion_holds"] = scan.recursion_holds;
        out["lambda"] = std::move(lam);
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "r=" << r << " degree_cap=" << cap << "\n";
        std::cout << "potential: " << build_deformed_potential(r).poly.to_text() << "\n";
        for (const auto& v : report.per_basis)
            std::cout << "  d=" << v.d << ": phi0 = " << v.phi0.to_text()
                      << ", phi1 = " << v.phi1.to_text() << "  ["
                      << (v.primitive && v.flat ? "ok" : "FAIL") << "]\n";
        std::cout << "primitive: " << (report.primitive ? "yes" : "no") << "\n";
        std::cout << "flat: " << (report.flat ? "yes" : "no") << "\n";
        if (report.first_failure)
            std::cout << "first failure: d=" << report.first_failure->d
                      << " hbar^-" << report.first_failure->j << " term "
                      << report.first_failure->monomial << " coefficient "
                      << report.first_failure->coefficient << "\n";
        std::cout << "oracle potential match: " << (oracle_match ? "yes" : "no") << "\n";
        std::cout << "lambda numeric (" << scan.numeric_checked
                  << " multisets): " << (scan.numeric_all_zero ? "all zero" : "NONZERO") << "\n";
        std::cout << "lambda symbolic (l <= " << scan.symbolic_max_l
                  << "): " << (scan.symbolic_all_zero ? "all zero" : "NONZERO") << "\n";
        std::cout << "contribution recursion (l <= " << scan.symbolic_max_l
                  << "): " << (scan.recursion_holds ? "holds" : "FAILS") << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int run_lambda(int r, int max_l, const std::string& format) {
    LambdaScan scan = run_lambda_scan(r, max_l);
    bool pass = scan.numeric_all_zero && scan.symbolic_all_zero && scan.recursion_holds;
    if (format == "json") {
        nlohmann::ordered_json out;
        out["r"] = r;
        out["numeric_checked"] = scan.numeric_checked;
        out["numeric_all_zero"] = scan.numeric_all_zero;
        out["symbolic_max_l"] = scan.symbolic_max_l;
        out["symbolic_all_zero"] = scan.symbolic_all_zero;
        out["recursion_holds"] = scan.recursion_holds;
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "r=" << r << "\n";
        std::cout << "numeric scan (" << scan.numeric_checked
                  << " admissible multisets): " << (scan.numeric_all_zero ? "all zero" : "NONZERO")
                  << "\n";
        std::cout << "symbolic (2 <= l <= " << scan.symbolic_max_l
                  << "): " << (scan.symbolic_all_zero ? "all zero" : "NONZERO") << "\n";
        std::cout << "recursion (2 <= l <= " << scan.symbolic_max_l
                  << "): " << (scan.recursion_holds ? "holds" : "FAILS") << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

int run_cycles(int r, Complex hbar, const std::string& format) {
    double quad_err = quadrature_vs_closed_error(r, hbar);
    double inv_err = identity_defect(scaled_pairing_matrix(r), scaled_pairing_matrix_inverse(r));
    double dual_err = dual_basis_error(r, hbar);
    bool pass = quad_err < kEndToEndTol && inv_err < kLinearAlgebraTol && dual_err < kEndToEndTol;
    if (format == "json") {
        nlohmann::ordered_json out;
        out["r"] = r;
        out["hbar"] = format_hbar(hbar);
        out["quadrature_vs_closed"] = format_error(quad_err);
        out["pairing_inverse_defect"] = format_error(inv_err);
        out["dual_basis_defect"] = format_error(dual_err);
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "r=" << r << " hbar=" << format_hbar(hbar) << "\n";
        std::cout << "quadrature vs closed form: " << format_error(quad_err) << "\n";
        std::cout << "pairing inverse defect: " << format_error(inv_err) << "\n";
        std::cout << "dual basis defect: " << format_error(dual_err) << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open r-spin disk potential: exact construction and verification"};
    app.require_subcommand(1);

    int r = 0;
    int degree_cap = -1;  // default: r
    int max_l = 5;
    std::string format = "text";
    std::string hbar_text = "1,0";

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--r", r, "spin parameter (>= 2)")->required();
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* inv = app.add_subcommand("invariants", "list all nonzero disk invariants");
    add_common(inv);

    CLI::App* pot = app.add_subcommand("potential", "print the deformed superpotential");
    pot->add_option("--r", r, "spin parameter (>= 2)")->required();
    pot->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    CLI::App* ver = app.add_subcommand("verify",
                                       "check primitivity, flatness, the versal oracle and the "
                                       "obstruction sums");
    add_common(ver);
    ver->add_option("--degree-cap", degree_cap, "truncation degree in t (default: r)");
    ver->add_option("--max-l", max_l, "symbolic obstruction scan bound");

    CLI::App* lam = app.add_subcommand("lambda", "obstruction-sum vanishing scan");
    add_common(lam);
    lam->add_option("--max-l", max_l, "symbolic obstruction scan bound");

    CLI::App* cyc = app.add_subcommand("cycles", "floating-point checks of the cycle pairing");
    add_common(cyc);
    cyc->add_option("--hbar", hbar_text, "hbar as 're,im' (default 1,0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (r < 2) {
            std::cerr << "error: --r must be at least 2\n";
            return kExitUsage;
        }
        if (inv->parsed()) return run_invariants(r, format);
        if (pot->parsed()) return run_potential(r, format);
        if (ver->parsed()) {
            int cap = degree_cap < 0 ? r : degree_cap;
            if (cap < 1 || max_l < 2) {
                std::cerr << "error: need --degree-cap >= 1 and --max-l >= 2\n";
                return kExitUsage;
            }
            return run_verify(r, cap, max_l, format);
        }
        if (lam->parsed()) {
            if (max_l < 2) {
                std::cerr << "error: need --max-l >= 2\n";
                return kExitUsage;
            }
            return run_lambda(r, max_l, format);
        }
        if (cyc->parsed()) return run_cycles(r, parse_hbar(hbar_text), format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const rspin::QuadratureError& e) {
        std::cerr << "quadrature error: " << e.what() << "\n";
        return kExitQuadrature;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
