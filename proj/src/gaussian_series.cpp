#include "hecke/gaussian_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};
constexpr int max_extensions = 3;

// Bound on the terms left out beyond radius R. Every omitted term is at most
// scale * (1+s)^degree * exp(-s) with s = pi*rho^2/a and rho = R - shift the
// smallest |w + x| outside the shell; integrating against the point density
// 2*pi*r/a gives the same form, doubled for lattice discreteness.
struct TailModel {
    int degree;
    double scale;
};

double tail_bound(const TailModel &model, double R, double shift, double area)
{
    const double rho = std::max(R - shift, 1e-300);
    const double s = pi * rho * rho / area;
    const double poly_inv = std::pow(std::max(1.0, 1.0 / rho), 3);
    return 4.0 * model.scale * std::pow(1.0 + s, model.degree) * std::exp(-s) * poly_inv;
}

template <class Term>
EvalResult adaptive_sum(const Lattice &lat, double tol, double shift, const TailModel &tail, Term term)
{
    const TruncationPlan plan = trunc_radius(lat.area(), tol);
    const double step = lat.basis_length();
    const double r0 = plan.radius + shift;
    const double rmax = std::min(r0 + max_extensions * step, plan.max_radius + shift);
    const auto pts = shell_by_modulus(lat, rmax, true);

    std::size_t next = 0;
    auto accumulate_to = [&](double r) {
        const double r2 = r * r;
        cplx band = 0.0;
        while (next < pts.size() && std::norm(pts[next].value) <= r2) {
            band += term(pts[next].value);
            ++next;
        }
        return band;
    };

    cplx sum = accumulate_to(r0);
    double radius = r0;
    double change = 0.0;
    for (int k = 0; k < max_extensions && radius < rmax; ++k) {
        const double r = std::min(radius + step, rmax);
        const cplx band = accumulate_to(r);
        sum += band;
        radius = r;
        change = std::abs(band);
        if (change <= tol / 2) {
            break;
        }
    }

    const double estimate = change + tail_bound(tail, radius, shift, lat.area());
    if (!(estimate <= tol)) {
        throw ToleranceNotReached(tol, estimate);
    }
    return {sum, estimate, static_cast<long>(next), radius};
}

void check_tol(double tol)
{
    if (!(tol > 0 && tol < 1)) {
        throw std::invalid_argument("tolerance must lie in (0, 1)");
    }
}

// Phase-twisted dual term exp(-pi|w|^2/a + 2*pi*i*sign*E(w, x)).
cplx twisted_gaussian(const Lattice &lat, cplx w, cplx x, double sign)
{
    const double a = lat.area();
    return std::polar(std::exp(-pi * std::norm(w) / a), sign * 2.0 * pi * symplectic(lat, w, x));
}

} // namespace

EvalResult zee(const Lattice &lat, cplx x, double tol)
{
    check_tol(tol);
    check_pole(lat, x, "x");
    const double k = pi / lat.area();
    return adaptive_sum(lat, tol, std::abs(x), TailModel{0, 1.0}, [&](cplx w) {
        const cplx u = w + x;
        cplx t = std::exp(-k * std::norm(u)) / u;
        if (w != 0.0) {
            t -= twisted_gaussian(lat, w, x, 1.0) / w;
        }
        return t;
    });
}

EvalResult wp(const Lattice &lat, const QuasiPeriods &qp, cplx x, double tol)
{
    check_tol(tol);
    check_pole(lat, x, "x");
    const double k = pi / lat.area();
    auto r = adaptive_sum(lat, tol, std::abs(x), TailModel{1, 1.0 + k}, [&](cplx w) {
        const cplx u = w + x;
        const double s = k * std::norm(u);
        cplx t = (1.0 + s) * std::exp(-s) / (u * u);
        if (w != 0.0) {
            t += k * std::norm(w) * twisted_gaussian(lat, w, x, 1.0) / (w * w);
        }
        return t;
    });
    r.value -= qp.c;
    return r;
}

EvalResult wp(const Lattice &lat, cplx x, double tol)
{
    return wp(lat, quasi_periods(lat), x, tol);
}

EvalResult wp_prime(const Lattice &lat, cplx x, double tol)
{
    check_tol(tol);
    check_pole(lat, x, "x");
    const double k = pi / lat.area();
    return adaptive_sum(lat, tol, std::abs(x), TailModel{2, (1.0 + k) * (1.0 + k)}, [&](cplx w) {
        const cplx u = w + x;
        const double s = k * std::norm(u);
        cplx t = -(1.0 + (1.0 + s) * (1.0 + s)) * std::exp(-s) / (u * u * u);
        if (w != 0.0) {
            const double n = std::norm(w);
            t += k * k * n * n * twisted_gaussian(lat, w, x, 1.0) / (w * w * w);
        }
        return t;
    });
}

EvalResult kronecker_F(cplx tau, cplx x, cplx y, double tol)
{
    check_tol(tol);
    const Lattice lat = tau_lattice(tau);
    check_pole(lat, x, "x");
    check_pole(lat, y, "y");
    const double a = lat.area();
    const double k = pi / a;
    const cplx norm = 1.0 / (2.0 * pi * I);
    const cplx px = norm * std::exp(-k * x * (y - std::conj(y)));
    const cplx py = norm * std::exp(-k * y * (x - std::conj(x)));
    const double shift = std::max(std::abs(x), std::abs(y));
    const TailModel tail{0, std::max(std::abs(px), std::abs(py))};
    return adaptive_sum(lat, tol, shift, tail, [&](cplx w) {
        const cplx ux = w + x;
        const cplx uy = w + y;
        const cplx tx = std::polar(std::exp(-k * std::norm(ux)), -2.0 * pi * symplectic(lat, w, y)) / ux;
        const cplx ty = std::polar(std::exp(-k * std::norm(uy)), -2.0 * pi * symplectic(lat, w, x)) / uy;
        return px * tx + py * ty;
    });
}

EvalResult remark1_residual(const Lattice &lat, cplx x, double tol)
{
    check_tol(tol);
    const double k = pi / lat.area();
    const TailModel tail{1, 1.0 + std::sqrt(lat.area() / pi)};
    return adaptive_sum(lat, tol, std::abs(x), tail, [&](cplx w) {
        const cplx u = w + x;
        return u * std::exp(-k * std::norm(u)) - w * twisted_gaussian(lat, w, x, 1.0);
    });
}

} // namespace hecke
