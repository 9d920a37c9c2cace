#pragma once

// Gaussian lattice series for Hecke's Z, wp, wp' and the Kronecker function.
// Each evaluator sums the shell |w| <= R + |shift| in order of increasing |w|,
// combining the direct-space and phase-twisted terms of the same w before
// accumulation, then extends the shell by one basis length at a time (at most
// three times) until the last extension moved the sum by less than tol/2.

#include "hecke/eval_result.hpp"
#include "hecke/lattice.hpp"
#include "hecke/quasiperiods.hpp"

namespace hecke
{

// Z(x, L) = zeta(x) - x1*eta1 - x2*eta2. L-periodic, not holomorphic.
EvalResult zee(const Lattice &lat, cplx x, double tol);

EvalResult wp(const Lattice &lat, cplx x, double tol);
EvalResult wp(const Lattice &lat, const QuasiPeriods &qp, cplx x, double tol);

EvalResult wp_prime(const Lattice &lat, cplx x, double tol);

// F(x, y; tau) for any x, y off Z + Z*tau.
EvalResult kronecker_F(cplx tau, cplx x, cplx y, double tol);

// sum (w+x) exp(-pi|w+x|^2/a) - sum w exp(-pi|w|^2/a + 2*pi*i*E(w,x)), which
// vanishes identically.
EvalResult remark1_residual(const Lattice &lat, cplx x, double tol);

} // namespace hecke
