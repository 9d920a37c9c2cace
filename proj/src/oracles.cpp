#include "hecke/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hecke/errors.hpp"

namespace hecke::oracles
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};
constexpr double rel_cut = 1e-17;

void require_upper_half(cplx tau)
{
    if (!(tau.imag() > 0)) {
        throw Error(ErrorKind::BadModulus, "Im(tau) must be positive");
    }
}

// Sums term(nu) over nu = n + shift, n in Z. |term| is a Gaussian in nu
// (times a polynomial) peaked near `peak`, so we walk outward from the peak in
// both directions and stop once three consecutive terms fall below rel_cut of
// the largest term seen.
template <class Term>
QSeriesSum gaussian_index_sum(double shift, double peak, int extra, Term term)
{
    const long n0 = std::lround(peak - shift);
    cplx sum = 0.0;
    double maxmag = 0.0;
    std::size_t count = 0;

    for (int dir : {+1, -1}) {
        long n = (dir > 0) ? n0 : n0 - 1;
        int small = 0;
        int tail = -1;
        while (true) {
            const double nu = static_cast<double>(n) + shift;
            const cplx t = term(n, nu);
            sum += t;
            ++count;
            const double mag = std::abs(t);
            maxmag = std::max(maxmag, mag);
            if (tail >= 0) {
                if (--tail < 0) {
                    break;
                }
            } else {
                const bool past = (dir > 0) ? nu > peak : nu < peak;
                small = (past && mag <= rel_cut * maxmag) ? small + 1 : 0;
                if (small >= 3) {
                    if (extra <= 0) {
                        break;
                    }
                    tail = extra - 1;
                }
            }
            n += dir;
        }
    }
    return {sum, count};
}

long divisor_power_sum(long n, int k)
{
    long s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            const long e = n / d;
            long pd = 1;
            long pe = 1;
            for (int j = 0; j < k; ++j) {
                pd *= d;
                pe *= e;
            }
            s += pd;
            if (e != d) {
                s += pe;
            }
        }
    }
    return s;
}

void check_tau_pole(cplx tau, cplx x, const char *what)
{
    check_pole(tau_lattice(tau), x, what);
}

} // namespace

QSeriesSum theta11_sum(cplx tau, cplx z, int order, QSeriesOptions opts)
{
    require_upper_half(tau);
    if (order < 0 || order > 3) {
        throw std::invalid_argument("theta11 derivative order must be in 0..3");
    }
    const double peak = -z.imag() / tau.imag();
    return gaussian_index_sum(0.5, peak, opts.extra_terms, [&](long n, double nu) {
        const cplx e = std::exp(I * pi * (nu * nu * tau + 2.0 * nu * z));
        const cplx d = std::pow(2.0 * pi * I * nu, order);
        return ((n % 2 == 0) ? 1.0 : -1.0) * d * e;
    });
}

cplx theta11(cplx tau, cplx z, int order, QSeriesOptions opts)
{
    return theta11_sum(tau, z, order, opts).value;
}

cplx theta00(cplx tau, cplx z, QSeriesOptions opts)
{
    require_upper_half(tau);
    const double peak = -z.imag() / tau.imag();
    return gaussian_index_sum(0.0, peak, opts.extra_terms, [&](long, double nu) {
               return std::exp(I * pi * (nu * nu * tau + 2.0 * nu * z));
           })
        .value;
}

EisensteinValues eisenstein(cplx tau, QSeriesOptions opts)
{
    require_upper_half(tau);
    const cplx q = std::exp(2.0 * pi * I * tau);
    if (std::abs(q) > 0.9) {
        throw Error(ErrorKind::SlowConvergence, "|q| > 0.9; reduce tau to the fundamental domain");
    }
    cplx s1 = 0.0;
    cplx s3 = 0.0;
    cplx s5 = 0.0;
    cplx qn = 1.0;
    int tail = -1;
    for (long n = 1;; ++n) {
        qn *= q;
        s1 += static_cast<double>(divisor_power_sum(n, 1)) * qn;
        s3 += static_cast<double>(divisor_power_sum(n, 3)) * qn;
        s5 += static_cast<double>(divisor_power_sum(n, 5)) * qn;
        if (tail >= 0) {
            if (--tail < 0) {
                break;
            }
            continue;
        }
        // sigma_5(n) < 2 n^5, which bounds every remaining term geometrically.
        const double nd = static_cast<double>(n);
        if (2.0 * std::pow(nd, 5) * std::abs(qn) < rel_cut) {
            if (opts.extra_terms <= 0) {
                break;
            }
            tail = opts.extra_terms - 1;
        }
    }
    const double pi4 = std::pow(pi, 4);
    const double pi6 = std::pow(pi, 6);
    return {1.0 - 24.0 * s1, 4.0 * pi4 / 3.0 * (1.0 + 240.0 * s3), 8.0 * pi6 / 27.0 * (1.0 - 504.0 * s5)};
}

cplx F_qseries(cplx tau, cplx x, cplx y)
{
    require_upper_half(tau);
    const double a = tau.imag();
    for (cplx v : {x, y}) {
        if (!(v.imag() > 0 && v.imag() < a)) {
            throw Error(ErrorKind::OutsideStrip, "F_qseries needs 0 < Im x, Im y < Im tau");
        }
    }
    auto term = [&](double m, double n) { return std::exp(2.0 * pi * I * (m * n * tau + m * x + n * y)); };

    // Both quadrants decay geometrically along rows and down the first column.
    auto branch = [&](double sign) {
        cplx sum = 0.0;
        double maxmag = 1.0;
        for (long p = 0;; ++p) {
            const double m = sign > 0 ? static_cast<double>(p) : -1.0 - static_cast<double>(p);
            const double n0 = sign > 0 ? 0.0 : -1.0;
            const cplx first = term(m, n0);
            if (std::abs(first) < rel_cut * maxmag && p > 0) {
                break;
            }
            for (long r = 0;; ++r) {
                const double n = n0 + sign * static_cast<double>(r);
                const cplx t = term(m, n);
                const double mag = std::abs(t);
                maxmag = std::max(maxmag, mag);
                sum += t;
                if (mag < rel_cut * maxmag) {
                    break;
                }
            }
        }
        return sum;
    };
    return branch(-1.0) - branch(+1.0);
}

cplx F_theta(cplx tau, cplx x, cplx y)
{
    require_upper_half(tau);
    check_tau_pole(tau, x, "x");
    check_tau_pole(tau, y, "y");
    const cplx d0 = theta11(tau, 0.0, 1);
    return d0 / (2.0 * pi * I) * theta11(tau, x + y) / (theta11(tau, x) * theta11(tau, y));
}

cplx eta1_theta(cplx tau)
{
    return -theta11(tau, 0.0, 3) / (3.0 * theta11(tau, 0.0, 1));
}

cplx zeta_theta_oracle(cplx tau, cplx x)
{
    require_upper_half(tau);
    check_tau_pole(tau, x, "x");
    return eta1_theta(tau) * x + theta11(tau, x, 1) / theta11(tau, x);
}

cplx wp_theta_oracle(cplx tau, cplx x)
{
    require_upper_half(tau);
    check_tau_pole(tau, x, "x");
    const cplx t0 = theta11(tau, x);
    const cplx r1 = theta11(tau, x, 1) / t0;
    const cplx r2 = theta11(tau, x, 2) / t0;
    return -eta1_theta(tau) - (r2 - r1 * r1);
}

PartialSum zeta_classical_sum(const Lattice &lat, cplx x, double R)
{
    check_pole(lat, x, "x");
    const auto pts = shell_by_modulus(lat, R, false);
    cplx sum = 0.0;
    // Accumulate from the outside in so the small tail terms are not swamped.
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        const cplx w = it->value;
        sum += 1.0 / (x + w) - 1.0 / w + x / (w * w);
    }
    return {1.0 / x + sum, pts.size() + 1};
}

cplx zeta_classical(const Lattice &lat, cplx x, double R)
{
    return zeta_classical_sum(lat, x, R).value;
}

cplx epstein_phi1(const Lattice &lat, cplx x, double s, double R)
{
    if (!(s >= 1.25)) {
        throw Error(ErrorKind::BadExponent, "epstein_phi1 needs s >= 1.25 (got " + std::to_string(s) + ")");
    }
    check_pole(lat, x, "x");
    const auto pts = shell_by_modulus(lat, R + std::abs(x), true);
    cplx sum = 0.0;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        const cplx u = it->value + x;
        const double r = std::abs(u);
        if (r <= R) {
            sum += 1.0 / (u * std::pow(r, 2.0 * s - 1.0));
        }
    }
    return sum;
}

double epstein_phi1_tail(const Lattice &lat, double s, double R)
{
    return 2.0 * pi / lat.area() * std::pow(R, 2.0 - 2.0 * s) / (2.0 * s - 2.0);
}

} // namespace hecke::oracles
