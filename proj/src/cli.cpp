#include "hecke/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/gaussian_series.hpp"
#include "hecke/oracles.hpp"
#include "hecke/quasiperiods.hpp"
#include "hecke/triple_product.hpp"
#include "hecke/verify.hpp"

namespace hecke::cli
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

bool is_digit(char c)
{
    return c >= '0' && c <= '9';
}

// Scans FLOAT at text[pos]; returns the end position or throws.
std::size_t scan_float(std::string_view text, std::size_t pos)
{
    const std::size_t start = pos;
    std::size_t digits = 0;
    while (pos < text.size() && is_digit(text[pos])) {
        ++pos;
        ++digits;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && is_digit(text[pos])) {
            ++pos;
            ++digits;
        }
    }
    if (digits == 0) {
        throw ParseError(start, "expected a decimal number");
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        std::size_t p = pos + 1;
        if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
            ++p;
        }
        const std::size_t exp_start = p;
        while (p < text.size() && is_digit(text[p])) {
            ++p;
        }
        if (p == exp_start) {
            throw ParseError(exp_start, "exponent needs digits");
        }
        pos = p;
    }
    return pos;
}

double to_double(std::string_view text, std::size_t begin, std::size_t end)
{
    double v = 0.0;
    const char *first = text.data() + begin;
    const auto res = std::from_chars(first, text.data() + end, v);
    if (res.ec == std::errc::result_out_of_range) {
        throw ParseError(begin, "number out of range");
    }
    if (res.ec != std::errc() || res.ptr != text.data() + end) {
        throw ParseError(begin, "malformed number");
    }
    return v;
}

// Optional sign at text[pos]; advances pos.
double scan_sign(std::string_view text, std::size_t &pos)
{
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        return text[pos++] == '-' ? -1.0 : 1.0;
    }
    return 1.0;
}

struct LatticeArgs {
    std::string tau;
    std::string omega1;
    std::string omega2;

    void add_to(CLI::App &app)
    {
        auto *t = app.add_option("--tau", tau, "lattice Z + Z*tau");
        auto *o1 = app.add_option("--omega1", omega1, "first generator");
        auto *o2 = app.add_option("--omega2", omega2, "second generator");
        t->excludes(o1)->excludes(o2);
        o1->needs(o2);
        o2->needs(o1);
    }

    Lattice lattice() const
    {
        if (!tau.empty()) {
            return tau_lattice(parse_complex(tau));
        }
        if (omega1.empty() || omega2.empty()) {
            throw CLI::ValidationError("lattice", "give either --tau or both --omega1 and --omega2");
        }
        return make_lattice(parse_complex(omega1), parse_complex(omega2));
    }

    // Functions defined on Z + Z*tau only.
    cplx require_tau() const
    {
        const Lattice lat = lattice();
        if (lat.omega1() != 1.0) {
            throw CLI::ValidationError("lattice", "this function is defined for the lattice Z + Z*tau; use --tau");
        }
        return lat.omega2();
    }
};

nlohmann::json lattice_json(const Lattice &lat)
{
    return {{"omega1", complex_json(lat.omega1())}, {"omega2", complex_json(lat.omega2())}};
}

nlohmann::json nullable(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

std::string plain_complex(cplx z)
{
    std::ostringstream s;
    s << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    return s.str();
}

struct EvalArgs {
    LatticeArgs lattice;
    std::string fn;
    std::string x;
    std::string y;
    int order = 0;
    double tol = 1e-12;
    std::string format = "json";
};

int do_eval(const EvalArgs &args, std::ostream &out)
{
    const Lattice lat = args.lattice.lattice();
    if (args.x.empty()) {
        throw CLI::ValidationError("--x", "eval needs --x");
    }
    const cplx x = parse_complex(args.x);
    nlohmann::json input{{"x", complex_json(x)}};
    EvalResult r;
    std::optional<std::size_t> qterms;

    if (args.fn == "Z") {
        r = zee(lat, x, args.tol);
    } else if (args.fn == "zeta") {
        r = zeta(lat, x, args.tol);
    } else if (args.fn == "wp") {
        r = wp(lat, x, args.tol);
    } else if (args.fn == "wp_prime") {
        r = wp_prime(lat, x, args.tol);
    } else if (args.fn == "F") {
        if (args.y.empty()) {
            throw CLI::ValidationError("--y", "F needs --y");
        }
        const cplx y = parse_complex(args.y);
        input["y"] = complex_json(y);
        r = kronecker_F(args.lattice.require_tau(), x, y, args.tol);
    } else if (args.fn == "theta11") {
        input["order"] = args.order;
        const auto s = oracles::theta11_sum(args.lattice.require_tau(), x, args.order);
        r.value = s.value;
        qterms = s.terms;
    } else {
        input["order"] = 0;
        r.value = oracles::theta00(args.lattice.require_tau(), x);
    }

    const bool series = !(args.fn == "theta11" || args.fn == "theta00");
    if (args.format == "json") {
        nlohmann::json j{{"function", args.fn}, {"lattice", lattice_json(lat)}, {"input", input},
                         {"value", complex_json(r.value)}};
        j["abs_error_estimate"] = series ? nullable(r.abs_error_estimate) : nlohmann::json(nullptr);
        j["terms_used"] = series ? nlohmann::json(r.terms_used)
                                 : (qterms ? nlohmann::json(*qterms) : nlohmann::json(nullptr));
        j["radius"] = series ? nlohmann::json(r.radius) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "function,value_re,value_im,abs_error_estimate,terms_used,radius\n";
        out << std::setprecision(17) << args.fn << ',' << r.value.real() << ',' << r.value.imag() << ',';
        if (series) {
            out << r.abs_error_estimate << ',' << r.terms_used << ',' << r.radius;
        } else {
            out << ",,";
        }
        out << '\n';
    } else {
        out << args.fn << " = " << plain_complex(r.value);
        if (series) {
            out << "  (error <= " << r.abs_error_estimate << ", " << r.terms_used << " terms, radius " << r.radius
                << ")";
        }
        out << '\n';
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string suite = "all";
    double tol = 1e-10;
    int grid = 4;
    bool timestamps = false;
    std::string format = "json";
};

int do_verify(const VerifyArgs &args, std::ostream &out)
{
    verify::GridSpec grid;
    grid.n = args.grid;
    const auto report = verify::run_suite(verify::default_lattices(), grid, args.tol);
    if (args.format == "json") {
        out << verify::to_json(report, args.timestamps).dump(2) << '\n';
    } else {
        std::size_t failed = 0;
        for (const auto &r : report.records) {
            if (!r.pass) {
                ++failed;
                out << "FAIL " << r.check << " [" << r.lattice << "] " << r.point << " residual=" << r.residual
                    << " threshold=" << r.threshold << (r.error.empty() ? "" : " error=" + r.error) << '\n';
            }
        }
        out << (report.pass ? "PASS" : "FAIL") << ": " << report.records.size() - failed << "/"
            << report.records.size() << " checks passed\n";
    }
    return report.pass ? exit_ok : exit_check_failed;
}

struct BenchArgs {
    LatticeArgs lattice;
    std::string x = "0.3+0.2i";
    int reps = 20;
};

template <class Fn>
long long time_ns(int reps, Fn fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) {
        fn();
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() / std::max(reps, 1);
}

int do_bench(const BenchArgs &args, std::ostream &out)
{
    const Lattice lat = args.lattice.tau.empty() && args.lattice.omega1.empty() ? tau_lattice(I)
                                                                                : args.lattice.lattice();
    const cplx x = parse_complex(args.x);
    const cplx tau = lat.tau();
    const cplx w1 = lat.omega1();
    const cplx ref = oracles::zeta_theta_oracle(tau, x / w1) / w1;
    const QuasiPeriods qp = quasi_periods(lat);
    const std::string tau_s = verify::format_complex(tau);
    const std::string x_s = verify::format_complex(x);

    out << "function,tau,x,tol,method,terms_used,achieved_error,wall_time_ns\n";
    out << std::setprecision(6);
    auto row = [&](const char *method, const std::string &tol, std::size_t terms, double err, long long ns) {
        out << "zeta," << tau_s << ',' << x_s << ',' << tol << ',' << method << ',' << terms << ',' << err << ','
            << ns << '\n';
    };

    for (const double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
        const EvalResult r = zeta(lat, qp, x, tol);
        const long long ns = time_ns(args.reps, [&] { (void)zeta(lat, qp, x, tol); });
        std::ostringstream t;
        t << tol;
        row("gaussian", t.str(), static_cast<std::size_t>(r.terms_used), std::abs(r.value - ref), ns);
    }
    for (const double R : {10.0, 25.0, 50.0, 100.0, 200.0}) {
        const double scaled = R * lat.basis_length();
        const auto s = oracles::zeta_classical_sum(lat, x, scaled);
        const long long ns = time_ns(1, [&] { (void)oracles::zeta_classical_sum(lat, x, scaled); });
        row("classical", "", s.terms, std::abs(s.value - ref), ns);
    }
    {
        const cplx xt = x / w1;
        const std::size_t terms = oracles::theta11_sum(tau, xt, 0).terms + oracles::theta11_sum(tau, xt, 1).terms +
                                  oracles::theta11_sum(tau, 0.0, 1).terms + oracles::theta11_sum(tau, 0.0, 3).terms;
        const long long ns = time_ns(args.reps, [&] { (void)oracles::zeta_theta_oracle(tau, xt); });
        const cplx tight = zeta(lat, qp, x, 1e-15).value;
        row("qseries", "", terms, std::abs(ref - tight), ns);
    }
    return exit_ok;
}

struct TripleArgs {
    std::string tau;
    std::string u;
    std::string v;
    std::string which = "a";
    double tol = 1e-12;
};

int do_triple(const TripleArgs &args, std::ostream &out)
{
    if (args.tau.empty() || args.v.empty()) {
        throw CLI::ValidationError("triple", "needs --tau and --v");
    }
    const cplx tau = parse_complex(args.tau);
    const cplx v = parse_complex(args.v);
    nlohmann::json j{{"case", args.which}, {"tau", complex_json(tau)}, {"v", complex_json(v)}};
    cplx coeff;
    cplx reference;
    if (args.which == "a") {
        if (args.u.empty()) {
            throw CLI::ValidationError("--u", "case a needs --u");
        }
        const cplx u = parse_complex(args.u);
        j["u"] = complex_json(u);
        coeff = triple::triple_coefficient(triple::TripleCase::case_a(u, v), tau, args.tol);
        reference = 2.0 * pi * I * kronecker_F(tau, u, -v, args.tol).value;
        j["reference_kind"] = "2*pi*i*F(u,-v)";
    } else {
        j["u"] = complex_json(0.0);
        coeff = triple::triple_coefficient(triple::TripleCase::case_b(v), tau, args.tol);
        reference = -zee(tau_lattice(tau), v, args.tol).value;
        j["reference_kind"] = "-Z(v)";
    }
    j["coefficient"] = complex_json(coeff);
    j["reference"] = complex_json(reference);
    j["residual"] = std::abs(coeff - reference);
    out << j.dump(2) << '\n';
    return exit_ok;
}

} // namespace

cplx parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw ParseError(0, "empty input");
    }
    std::size_t pos = 0;
    const double s1 = scan_sign(text, pos);
    const std::size_t b1 = pos;
    if (pos < text.size() && text[pos] == 'i') {
        throw ParseError(pos, "imaginary unit needs a coefficient (write 1i)");
    }
    const std::size_t e1 = scan_float(text, pos);
    const double v1 = s1 * to_double(text, b1, e1);
    pos = e1;
    if (pos == text.size()) {
        return {v1, 0.0};
    }
    if (text[pos] == 'i') {
        if (pos + 1 != text.size()) {
            throw ParseError(pos + 1, "trailing characters");
        }
        return {0.0, v1};
    }
    if (text[pos] != '+' && text[pos] != '-') {
        throw ParseError(pos, "expected '+', '-' or 'i'");
    }
    const double s2 = scan_sign(text, pos);
    const std::size_t b2 = pos;
    if (pos < text.size() && text[pos] == 'i') {
        throw ParseError(pos, "imaginary unit needs a coefficient (write 1i)");
    }
    const std::size_t e2 = scan_float(text, pos);
    const double v2 = s2 * to_double(text, b2, e2);
    if (e2 == text.size() || text[e2] != 'i') {
        throw ParseError(e2, "expected 'i' after the imaginary part");
    }
    if (e2 + 1 != text.size()) {
        throw ParseError(e2 + 1, "trailing characters");
    }
    return {v1, v2};
}

nlohmann::json complex_json(cplx z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Gaussian lattice series for Weierstrass zeta, Hecke's Z, wp, wp' and the Kronecker function",
                 "hecke"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto *eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
    eval.lattice.add_to(*eval_cmd);
    eval_cmd->add_option("--fn", eval.fn, "function")
        ->required()
        ->check(CLI::IsMember({"zeta", "Z", "wp", "wp_prime", "F", "theta11", "theta00"}));
    eval_cmd->add_option("--x", eval.x, "point x");
    eval_cmd->add_option("--y", eval.y, "second point (F only)");
    eval_cmd->add_option("--order", eval.order, "z-derivative order (theta11)")->check(CLI::Range(0, 3));
    eval_cmd->add_option("--tol", eval.tol, "absolute tolerance")->check(CLI::Range(1e-300, 0.5));
    eval_cmd->add_option("--format", eval.format, "output format")->check(CLI::IsMember({"json", "csv", "plain"}));

    VerifyArgs ver;
    auto *verify_cmd = app.add_subcommand("verify", "run the identity verification suite");
    verify_cmd->add_option("--suite", ver.suite, "suite to run")->check(CLI::IsMember({"all"}));
    verify_cmd->add_option("--tol", ver.tol, "series tolerance")->check(CLI::Range(1e-300, 0.5));
    verify_cmd->add_option("--grid", ver.grid, "grid points per lattice direction")->check(CLI::Range(2, 64));
    verify_cmd->add_flag("--timestamps", ver.timestamps, "include wall time in the JSON report");
    verify_cmd->add_option("--format", ver.format, "output format")->check(CLI::IsMember({"json", "plain"}));

    BenchArgs bench;
    auto *bench_cmd = app.add_subcommand("bench", "convergence benchmark (CSV)");
    bench.lattice.add_to(*bench_cmd);
    bench_cmd->add_option("--x", bench.x, "point x");
    bench_cmd->add_option("--reps", bench.reps, "timing repetitions")->check(CLI::Range(1, 100000));

    TripleArgs trip;
    auto *triple_cmd = app.add_subcommand("triple", "triple-product coefficient against its closed form");
    triple_cmd->add_option("--tau", trip.tau, "modulus")->required();
    triple_cmd->add_option("--u", trip.u, "translation u (case a)");
    triple_cmd->add_option("--v", trip.v, "translation v")->required();
    triple_cmd->add_option("--case", trip.which, "a: u,v off the lattice; b: u = 0")
        ->check(CLI::IsMember({"a", "b"}));
    triple_cmd->add_option("--tol", trip.tol, "tolerance")->check(CLI::Range(1e-300, 0.5));

    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    if (argv.empty()) {
        argv.push_back("hecke");
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "hecke: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*eval_cmd) {
            return do_eval(eval, out);
        }
        if (*verify_cmd) {
            return do_verify(ver, out);
        }
        if (*bench_cmd) {
            return do_bench(bench, out);
        }
        return do_triple(trip, out);
    } catch (const CLI::Error &e) {
        err << "hecke: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        err << "hecke: " << to_string(e.kind()) << ": " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::TooCloseToPole:
            case ErrorKind::ToleranceNotReached:
            case ErrorKind::SlowConvergence:
            case ErrorKind::ConsistencyFailure:
            case ErrorKind::ShellTooLarge:
                return exit_numerical;
            default:
                return exit_usage;
        }
    } catch (const std::invalid_argument &e) {
        err << "hecke: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace hecke::cli
