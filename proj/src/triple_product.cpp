#include "hecke/triple_product.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hecke/errors.hpp"
#include "hecke/oracles.hpp"

namespace hecke::triple
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

double sign_mn(long m, long n)
{
    return ((m * n) % 2 == 0) ? 1.0 : -1.0;
}

// Lattice points m*tau - n with |m*tau - n| <= cutoff, as (m, n) pairs in
// increasing modulus. The shell of Z + Z*tau yields p.m*1 + p.n*tau, so
// m = p.n and n = -p.m.
template <class Visit>
void for_each_index(const Lattice &lat, double cutoff, Visit visit)
{
    for (const auto &p : shell_by_modulus(lat, cutoff, true)) {
        visit(p.n, -p.m);
    }
}

} // namespace

cplx a_coeff(cplx tau, cplx w, long m, long n)
{
    const double a = tau.imag();
    const cplx mt = static_cast<double>(m) * tau - static_cast<double>(n);
    const cplx mtb = static_cast<double>(m) * std::conj(tau) - static_cast<double>(n);
    const cplx denom = mt + w;
    if (std::abs(denom) < 1e-8 * std::max(1.0, std::abs(tau))) {
        throw Error(ErrorKind::TooCloseToPole, "a_coeff: m*tau - n + w vanishes");
    }
    return sign_mn(m, n) * std::exp(-pi / (2.0 * a) * (std::norm(mt) + 2.0 * mtb * w + w * w)) / denom;
}

cplx b_coeff(cplx tau, cplx u, cplx v, long m, long n)
{
    const double a = tau.imag();
    const cplx mt = static_cast<double>(m) * tau - static_cast<double>(n);
    const cplx mtb = static_cast<double>(m) * std::conj(tau) - static_cast<double>(n);
    const cplx vb = std::conj(v);
    const cplx s = u + v - vb;
    return sign_mn(m, n) / std::sqrt(2.0 * a) *
           std::exp(-pi / (2.0 * a) * (std::norm(mt) + 2.0 * mtb * (u + v) - 2.0 * mt * vb + s * s));
}

double theta_norm(cplx tau, cplx u)
{
    if (!(tau.imag() > 0)) {
        throw Error(ErrorKind::BadModulus, "Im(tau) must be positive");
    }
    const double a = tau.imag();
    const double u2 = u.imag() / a;
    return std::exp(2.0 * pi * a * u2 * u2) / std::sqrt(2.0 * a);
}

Pairing pairing(cplx tau, cplx u, cplx v, double cutoff, bool omit_origin)
{
    const Lattice lat = tau_lattice(tau);
    if (!omit_origin) {
        check_pole(lat, u, "u");
    }
    const double a = lat.area();
    const double u2 = u.imag() / a;
    const double v2 = v.imag() / a;

    cplx inner = 0.0;
    for_each_index(lat, cutoff, [&](long m, long n) {
        if (omit_origin && m == 0 && n == 0) {
            return;
        }
        inner += a_coeff(tau, u, m, n) * std::conj(b_coeff(tau, u, v, m, n));
    });
    const cplx normalized = std::sqrt(2.0 * a) * std::exp(-2.0 * pi * a * (u2 + v2) * (u2 + v2)) * inner;

    const double k = pi / a;
    cplx sum = 0.0;
    for (const auto &p : shell_by_modulus(lat, cutoff, true)) {
        if (omit_origin && p.m == 0 && p.n == 0) {
            continue;
        }
        const cplx wu = p.value + u;
        sum += std::polar(std::exp(-k * std::norm(wu)), 2.0 * pi * symplectic(lat, p.value, v)) / wu;
    }
    const cplx closed = std::exp(k * u * (v - std::conj(v))) * sum;
    return {inner, normalized, closed};
}

double pairing_cutoff(cplx tau, cplx u, cplx v, double tol)
{
    return std::sqrt(2.0) * trunc_radius(tau.imag(), tol).radius + std::abs(u) + std::abs(v);
}

cplx triple_coefficient(const TripleCase &tc, cplx tau, double tol)
{
    if (!(tol > 0 && tol < 1)) {
        throw std::invalid_argument("tolerance must lie in (0, 1)");
    }
    const Lattice lat = tau_lattice(tau);
    if (tc.kind == CaseKind::A) {
        check_pole(lat, tc.u, "u");
    } else if (tc.u != 0.0) {
        throw std::invalid_argument("case B requires u = 0");
    }
    check_pole(lat, tc.v, "v");

    auto at_cutoff = [&](double cutoff) {
        const bool b = tc.kind == CaseKind::B;
        return pairing(tau, tc.u, tc.v, cutoff, b).normalized - pairing(tau, tc.v, tc.u, cutoff).normalized;
    };
    const double cutoff = pairing_cutoff(tau, tc.u, tc.v, tol);
    const cplx value = at_cutoff(cutoff);
    const double drift = std::abs(at_cutoff(cutoff + 1.0) - value);
    if (!(drift <= tol)) {
        throw ToleranceNotReached(tol, drift);
    }
    return value;
}

cplx thpr_residual(cplx tau, cplx x, cplx y, cplx z, double cutoff)
{
    const Lattice lat = tau_lattice(tau);
    const double a = lat.area();
    const auto xc = real_coords(lat, x);
    const double z2 = z.imag() / a;
    const cplx w = y - z;

    const cplx lhs = oracles::theta00(tau, x + y) * std::conj(oracles::theta00(tau, x + z)) *
                     std::exp(-2.0 * pi * a * (xc.x2 * xc.x2 + 2.0 * xc.x2 * z2));

    const cplx zb = std::conj(z);
    const cplx yz = y - zb;
    cplx rhs = 0.0;
    for_each_index(lat, cutoff, [&](long m, long n) {
        const double md = static_cast<double>(m);
        const double nd = static_cast<double>(n);
        const cplx mt = md * tau - nd;
        const cplx mtb = md * std::conj(tau) - nd;
        const cplx coeff =
            sign_mn(m, n) * std::exp(-pi / (2.0 * a) * (std::norm(mt) + 2.0 * mtb * y - 2.0 * mt * zb + yz * yz));
        const cplx phi = std::exp(2.0 * pi * I * (md * xc.x1 + (nd - w) * xc.x2));
        rhs += coeff * phi;
    });
    return lhs - rhs / std::sqrt(2.0 * a);
}

} // namespace hecke::triple
