#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hecke
{

using cplx = std::complex<double>;

// Coefficients of a point in the basis (omega1, omega2).
struct RealCoords {
    double x1;
    double x2;
};

// Oriented rank-2 lattice Z*omega1 + Z*omega2 with Im(conj(omega1)*omega2) > 0.
// Only constructible through make_lattice(), so every instance is valid.
class Lattice
{
public:
    cplx omega1() const noexcept
    {
        return omega1_;
    }
    cplx omega2() const noexcept
    {
        return omega2_;
    }
    // Im(conj(omega1)*omega2), the area of the fundamental parallelogram.
    double area() const noexcept
    {
        return area_;
    }
    // Length of the longer generator.
    double basis_length() const noexcept;
    // Radius below which a point is treated as sitting on a pole.
    double pole_guard() const noexcept;
    // omega2/omega1, the modulus of the rescaled lattice Z + Z*tau.
    cplx tau() const noexcept
    {
        return omega2_ / omega1_;
    }

    friend Lattice make_lattice(cplx omega1, cplx omega2);

private:
    Lattice(cplx omega1, cplx omega2, double area) : omega1_(omega1), omega2_(omega2), area_(area) {}

    cplx omega1_;
    cplx omega2_;
    double area_;
};

// Throws DegenerateLattice for zero or collinear generators and
// WrongOrientation when Im(conj(omega1)*omega2) < 0.
Lattice make_lattice(cplx omega1, cplx omega2);

// The lattice Z + Z*tau; throws BadModulus unless Im(tau) > 0.
Lattice tau_lattice(cplx tau);

RealCoords real_coords(const Lattice &lat, cplx x) noexcept;
cplx from_coords(const Lattice &lat, RealCoords c) noexcept;

// E_L(x, y) = Im(conj(x)*y) / a(L).
double symplectic(const Lattice &lat, cplx x, cplx y) noexcept;

struct LatticePoint {
    long m;
    long n;
    cplx value; // m*omega1 + n*omega2
};

inline constexpr std::size_t default_shell_cap = 10'000'000;

// All m*omega1 + n*omega2 with |.| <= radius, lexicographic in (m, n).
// Throws ShellTooLarge when the expected count exceeds `cap`.
std::vector<cplx> shell(const Lattice &lat, double radius, bool include_origin,
                        std::size_t cap = default_shell_cap);

// Same enumeration with indices, sorted by increasing modulus (stable, so ties
// keep lexicographic order). This is the summation order of every series.
std::vector<LatticePoint> shell_by_modulus(const Lattice &lat, double radius, bool include_origin,
                                           std::size_t cap = default_shell_cap);

struct TruncationPlan {
    double tol;
    double radius;
    double max_radius;
};

// Gaussian terms decay like exp(-pi*|w|^2/area); the radius solves
// exp(-pi*R^2/area) = tol * e^-8, the extra 8 absorbing polynomial prefactors
// and shell multiplicity. max_radius = 2 * radius.
TruncationPlan trunc_radius(double area, double tol);

double nearest_lattice_distance(const Lattice &lat, cplx x) noexcept;

// Throws TooCloseToPole if x is within lat.pole_guard() of a lattice point.
void check_pole(const Lattice &lat, cplx x, const char *what);

} // namespace hecke
