#include "hecke/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hecke/errors.hpp"

namespace hecke
{

double Lattice::basis_length() const noexcept
{
    return std::max(std::abs(omega1_), std::abs(omega2_));
}

double Lattice::pole_guard() const noexcept
{
    return 1e-8 * basis_length();
}

Lattice make_lattice(cplx omega1, cplx omega2)
{
    if (omega1 == 0.0 || omega2 == 0.0) {
        throw Error(ErrorKind::DegenerateLattice, "lattice generator is zero");
    }
    const double area = (std::conj(omega1) * omega2).imag();
    if (!std::isfinite(area) || std::abs(area) <= 1e-14 * std::abs(omega1) * std::abs(omega2)) {
        throw Error(ErrorKind::DegenerateLattice, "lattice generators are collinear");
    }
    if (area < 0) {
        throw Error(ErrorKind::WrongOrientation, "Im(conj(omega1)*omega2) < 0; swap the generators");
    }
    return Lattice(omega1, omega2, area);
}

Lattice tau_lattice(cplx tau)
{
    if (!(tau.imag() > 0)) {
        throw Error(ErrorKind::BadModulus, "Im(tau) must be positive");
    }
    return make_lattice(1.0, tau);
}

double symplectic(const Lattice &lat, cplx x, cplx y) noexcept
{
    return (std::conj(x) * y).imag() / lat.area();
}

RealCoords real_coords(const Lattice &lat, cplx x) noexcept
{
    // E(x, omega2) = x1 and E(omega1, x) = x2 since E(omega1, omega2) = 1.
    return {symplectic(lat, x, lat.omega2()), symplectic(lat, lat.omega1(), x)};
}

cplx from_coords(const Lattice &lat, RealCoords c) noexcept
{
    return c.x1 * lat.omega1() + c.x2 * lat.omega2();
}

namespace
{

std::vector<LatticePoint> enumerate(const Lattice &lat, double radius, bool include_origin, std::size_t cap)
{
    if (!(radius >= 0)) {
        throw Error(ErrorKind::ShellTooLarge, "shell radius must be non-negative");
    }
    const double a = lat.area();
    const double reach = radius + std::abs(lat.omega1()) + std::abs(lat.omega2());
    const double expected = std::numbers::pi * reach * reach / a;
    if (expected > static_cast<double>(cap)) {
        throw Error(ErrorKind::ShellTooLarge,
                    "shell of radius " + std::to_string(radius) + " would hold ~" + std::to_string(expected) + " points");
    }
    // |m| = |E(w, omega2)| <= |w||omega2|/a and likewise for n.
    const long mmax = static_cast<long>(std::floor(radius * std::abs(lat.omega2()) / a)) + 1;
    const long nmax = static_cast<long>(std::floor(radius * std::abs(lat.omega1()) / a)) + 1;
    const double r2 = radius * radius;

    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(expected) + 16);
    for (long m = -mmax; m <= mmax; ++m) {
        for (long n = -nmax; n <= nmax; ++n) {
            if (m == 0 && n == 0 && !include_origin) {
                continue;
            }
            const cplx w = static_cast<double>(m) * lat.omega1() + static_cast<double>(n) * lat.omega2();
            if (std::norm(w) <= r2) {
                out.push_back({m, n, w});
            }
        }
    }
    return out;
}

} // namespace

std::vector<cplx> shell(const Lattice &lat, double radius, bool include_origin, std::size_t cap)
{
    const auto pts = enumerate(lat, radius, include_origin, cap);
    std::vector<cplx> out;
    out.reserve(pts.size());
    for (const auto &p : pts) {
        out.push_back(p.value);
    }
    return out;
}

std::vector<LatticePoint> shell_by_modulus(const Lattice &lat, double radius, bool include_origin, std::size_t cap)
{
    auto pts = enumerate(lat, radius, include_origin, cap);
    std::stable_sort(pts.begin(), pts.end(),
                     [](const LatticePoint &p, const LatticePoint &q) { return std::norm(p.value) < std::norm(q.value); });
    return pts;
}

TruncationPlan trunc_radius(double area, double tol)
{
    const double radius = std::sqrt(area / std::numbers::pi * (std::log(1.0 / tol) + 8.0));
    return {tol, radius, 2.0 * radius};
}

double nearest_lattice_distance(const Lattice &lat, cplx x) noexcept
{
    const auto c = real_coords(lat, x);
    const double m0 = std::round(c.x1);
    const double n0 = std::round(c.x2);
    double best = std::numeric_limits<double>::infinity();
    for (int dm = -2; dm <= 2; ++dm) {
        for (int dn = -2; dn <= 2; ++dn) {
            const cplx w = (m0 + dm) * lat.omega1() + (n0 + dn) * lat.omega2();
            best = std::min(best, std::abs(x - w));
        }
    }
    return best;
}

void check_pole(const Lattice &lat, cplx x, const char *what)
{
    if (!(nearest_lattice_distance(lat, x) >= lat.pole_guard())) {
        throw Error(ErrorKind::TooCloseToPole, std::string(what) + " lies on (or within the pole guard of) a lattice point");
    }
}

} // namespace hecke
