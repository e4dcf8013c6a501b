#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebdisc/errors.hpp"
#include "chebdisc/exact.hpp"
#include "chebdisc/expansion.hpp"
#include "chebdisc/harness.hpp"
#include "chebdisc/mapping.hpp"
#include "chebdisc/saddle.hpp"
#include "chebdisc/zeros.hpp"

namespace {

using namespace chebdisc;

constexpr int kExitParam = 2;
constexpr int kExitSolver = 3;
constexpr int kExitRefusal = 4;

Regime parse_regime(const std::string& s) {
    for (Regime r : {Regime::NegativeA, Regime::Monotone, Regime::Transition, Regime::Oscillatory, Regime::Reflected}) {
        if (s == to_string(r)) return r;
    }
    throw ParameterError("unknown regime '" + s + "'");
}

void print_scaled(std::ostream& os, const char* label, const ScaledReal& v) {
    os << label << " = " << v.to_string() << '\n';
}

int cmd_eval(int n, int N, const std::string& x_text, const std::string& mode, std::optional<double> delta) {
    const Rational x = parse_rational(x_text);
    const bool want_exact = mode == "exact" || mode == "both";
    const bool want_asym = mode == "asymptotic" || mode == "both";
    std::ostream& os = std::cout;
    os << "n = " << n << "\nN = " << N << "\nx = " << x.get_str() << '\n';
    ScaledReal exact;
    if (want_exact) {
        const Rational v = eval_exact({n, N + 1, x}).value;
        exact = to_scaled(v);
        std::string digits = v.get_str();
        if (digits.size() > 120) digits = digits.substr(0, 60) + "..." + digits.substr(digits.size() - 20);
        os << "exact = " << digits << '\n';
        print_scaled(os, "exact_scaled", exact);
    }
    if (want_asym) {
        const ExpansionResult er = asymptotic_value(n, N, x, delta);
        os << "regime = " << to_string(er.regime) << '\n';
        if (er.regime == Regime::Reflected) os << "mirrored_regime = " << to_string(er.evaluated_regime) << '\n';
        print_scaled(os, "asymptotic", er.value);
        print_scaled(os, "envelope", er.envelope);
        os << "eta = " << format_double(er.eta) << "\ngamma = " << format_double(er.gamma) << '\n';
        if (want_exact) {
            os << "env_err = " << format_double(ratio((exact - er.value).abs(), er.envelope)) << '\n';
        }
    }
    return 0;
}

int cmd_mapping(double a, double b) {
    const MappingConstants mc = a < 0 ? gamma_negative_a(a, b) : solve_eta_gamma(a, b);
    std::cout << "regime = " << to_string(mc.regime) << '\n';
    if (a >= 0) {
        std::cout << "eta = " << format_double(mc.eta) << '\n'
                  << "bracket = [" << format_double(mc.bracket.first) << ", " << format_double(mc.bracket.second)
                  << "]\n";
    } else {
        std::cout << "eta = n/a\n";
    }
    std::cout << "gamma = " << format_double(mc.gamma) << '\n' << "residual = " << format_double(mc.residual) << '\n';
    return 0;
}

int cmd_zeros(int n, int N, int digits, bool compare) {
    const std::vector<double> zs = zeros_exact(n, N, digits);
    std::vector<ZeroEstimate> est;
    if (compare) est = zero_estimates(n, N);
    std::cout << (compare ? "s,zero,kind,estimate,deviation,error_exponent\n" : "s,zero\n");
    for (size_t i = 0; i < zs.size(); ++i) {
        std::cout << i + 1 << ',' << format_double(zs[i]);
        if (compare) {
            const ZeroEstimate& e = est[i];
            const char* kind = e.kind == ZeroKind::Small ? "small" : e.kind == ZeroKind::Large ? "large" : "uncovered";
            std::cout << ',' << kind;
            if (e.kind == ZeroKind::Uncovered) {
                std::cout << ",,,";
            } else {
                std::cout << ',' << format_double(e.location) << ',' << format_double(zs[i] - e.location) << ','
                          << format_double(e.error_exponent);
            }
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_verify(SweepSpec spec, const std::vector<std::string>& regimes, const std::string& format,
               const std::string& out_path) {
    for (const auto& r : regimes) spec.regimes.insert(parse_regime(r));
    if (spec.a_values.empty() || spec.b_values.empty() || spec.N_values.empty()) {
        throw ParameterError("verify needs --a, --b and --N");
    }
    const SweepResult result = run_sweep(spec);
    std::ostringstream body;
    if (format == "json") write_json(body, result); else write_csv(body, result);
    if (out_path.empty()) {
        std::cout << body.str();
        write_slopes(std::cerr, result);
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParameterError("cannot open output file " + out_path);
        f << body.str();
        write_slopes(std::cout, result);
    }
    for (const auto& note : result.notes) std::cerr << note << '\n';
    for (const auto& row : result.rows) {
        if (!row.note.empty()) {
            std::cerr << "row a=" << format_double(row.a) << " b=" << format_double(row.b) << " N=" << row.N
                      << " failed: " << row.note << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Chebyshev polynomials t_n(x, N+1): exact values, asymptotics, zeros"};
    app.require_subcommand(1);

    int n = 0, N = 0, digits = 12;
    std::string x_text = "0", mode = "both";
    std::optional<double> delta;
    auto* eval = app.add_subcommand("eval", "Evaluate t_n(x, N+1) exactly and/or asymptotically");
    eval->add_option("--n", n, "degree")->required();
    eval->add_option("--N", N, "support is {0, ..., N}")->required();
    eval->add_option("--x", x_text, "rational point, e.g. 7, -3/2, 0.25")->required();
    eval->add_option("--mode", mode, "exact | asymptotic | both")
        ->check(CLI::IsMember({"exact", "asymptotic", "both"}));
    eval->add_option("--delta", delta, "transition band half-width");

    double a = 0, b = 0.5;
    auto* mapping = app.add_subcommand("mapping", "Solve for the mapping constants eta and gamma");
    mapping->add_option("--a", a, "x/N")->required();
    mapping->add_option("--b", b, "n/N")->required();

    bool compare = false;
    auto* zeros = app.add_subcommand("zeros", "Zeros of t_n(x, N+1) by exact bracketing");
    zeros->add_option("--n", n, "degree")->required();
    zeros->add_option("--N", N, "support is {0, ..., N}")->required();
    zeros->add_option("--digits", digits, "bisection width 10^-digits")->check(CLI::Range(1, 15));
    zeros->add_flag("--compare", compare, "compare with the small/large zero estimates");

    SweepSpec spec;
    std::vector<std::string> regimes;
    std::string format = "csv", out_path;
    bool any_x = false;
    auto* verify = app.add_subcommand("verify", "Sweep exact vs asymptotic values and fit error slopes");
    verify->add_option("--a", spec.a_values, "comma-separated a values")->delimiter(',');
    verify->add_option("--b", spec.b_values, "comma-separated b values")->delimiter(',');
    verify->add_option("--N", spec.N_values, "comma-separated N values")->delimiter(',');
    verify->add_option("--regimes", regimes, "keep only these regimes")->delimiter(',');
    verify->add_flag("--any-x", any_x, "allow non-integer a*N (Gamma regime only)");
    verify->add_option("--delta", delta, "transition band half-width");
    verify->add_option("--jobs", spec.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out_path, "write rows here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParam;
    }

    try {
        if (*eval) return cmd_eval(n, N, x_text, mode, delta);
        if (*mapping) return cmd_mapping(a, b);
        if (*zeros) return cmd_zeros(n, N, digits, compare);
        spec.integer_x_only = !any_x;
        spec.delta = delta;
        return cmd_verify(spec, regimes, format, out_path);
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParam;
    } catch (const DomainError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitParam;
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const RegimeRefusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefusal;
    }
}
