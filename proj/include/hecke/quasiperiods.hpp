#pragma once

#include "hecke/eval_result.hpp"
#include "hecke/lattice.hpp"

namespace hecke
{

// eta_i = zeta(x + omega_i) - zeta(x), and the constant c with
// eta_i = c*omega_i + (pi/a)*conj(omega_i).
struct QuasiPeriods {
    cplx eta1;
    cplx eta2;
    cplx c;
};

// eta1 comes from the Eisenstein series E2 at tau = omega2/omega1 (no modular
// reduction; SlowConvergence when |q| > 0.9), eta2 from the Legendre relation
// eta1*omega2 - eta2*omega1 = 2*pi*i.
QuasiPeriods quasi_periods(const Lattice &lat);

// Full Weierstrass zeta: Z(x) + x1*eta1 + x2*eta2.
EvalResult zeta(const Lattice &lat, cplx x, double tol);
EvalResult zeta(const Lattice &lat, const QuasiPeriods &qp, cplx x, double tol);

} // namespace hecke
