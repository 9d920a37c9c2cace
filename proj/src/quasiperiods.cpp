#include "hecke/quasiperiods.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/gaussian_series.hpp"
#include "hecke/oracles.hpp"

namespace hecke
{

QuasiPeriods quasi_periods(const Lattice &lat)
{
    constexpr double pi = std::numbers::pi;
    constexpr cplx two_pi_i{0.0, 2.0 * pi};
    const cplx w1 = lat.omega1();
    const cplx w2 = lat.omega2();
    const double k = pi / lat.area();

    // zeta is homogeneous of degree -1, and eta1(Z + Z*tau) = (pi^2/3) E2(tau).
    const cplx e2 = oracles::eisenstein(lat.tau()).e2;
    const cplx eta1 = pi * pi / 3.0 * e2 / w1;
    const cplx eta2 = (eta1 * w2 - two_pi_i) / w1;
    const cplx c = (eta1 - k * std::conj(w1)) / w1;

    const double defect = std::abs(eta2 - c * w2 - k * std::conj(w2));
    if (!(defect <= 1e-9)) {
        throw Error(ErrorKind::ConsistencyFailure,
                    "eta2 = c*omega2 + (pi/a)*conj(omega2) violated by " + std::to_string(defect));
    }
    return {eta1, eta2, c};
}

EvalResult zeta(const Lattice &lat, const QuasiPeriods &qp, cplx x, double tol)
{
    auto r = zee(lat, x, tol);
    const auto xc = real_coords(lat, x);
    r.value += xc.x1 * qp.eta1 + xc.x2 * qp.eta2;
    return r;
}

EvalResult zeta(const Lattice &lat, cplx x, double tol)
{
    return zeta(lat, quasi_periods(lat), x, tol);
}

} // namespace hecke
