#pragma once

// Classical reference implementations: theta q-series and their exact
// z-derivatives, Eisenstein q-expansions, both forms of the Kronecker
// function, and the slow Weierstrass and Epstein lattice sums. Nothing in
// here touches the Gaussian series.

#include <complex>
#include <cstddef>

#include "hecke/lattice.hpp"

namespace hecke::oracles
{

struct QSeriesOptions {
    // Terms summed past the point where the truncation rule stops; used to
    // check that the rule is not cutting anything that matters.
    int extra_terms = 0;
};

struct QSeriesSum {
    cplx value;
    std::size_t terms;
};

// theta11(z, tau) = sum_n (-1)^n exp(pi*i*(n+1/2)^2*tau + 2*pi*i*(n+1/2)*z),
// differentiated `order` times in z (order in 0..3).
cplx theta11(cplx tau, cplx z, int order = 0, QSeriesOptions opts = {});
QSeriesSum theta11_sum(cplx tau, cplx z, int order = 0, QSeriesOptions opts = {});

// theta(z, tau) = sum_n exp(pi*i*tau*n^2 + 2*pi*i*n*z).
cplx theta00(cplx tau, cplx z, QSeriesOptions opts = {});

struct EisensteinValues {
    cplx e2;
    cplx g2;
    cplx g3;
};

// E2 and the invariants g2, g3 of the lattice Z + Z*tau. Throws BadModulus for
// Im(tau) <= 0 and SlowConvergence for |q| > 0.9, q = exp(2*pi*i*tau).
EisensteinValues eisenstein(cplx tau, QSeriesOptions opts = {});

// Kronecker double q-series; requires 0 < Im x, Im y < Im tau (OutsideStrip).
cplx F_qseries(cplx tau, cplx x, cplx y);

// Theta quotient theta11'(0) theta11(x+y) / (2*pi*i theta11(x) theta11(y)),
// valid for any x, y off Z + Z*tau.
cplx F_theta(cplx tau, cplx x, cplx y);

// eta1 of Z + Z*tau from the Taylor coefficients of theta11 at 0:
// eta1 = -theta11'''(0) / (3 theta11'(0)).
cplx eta1_theta(cplx tau);

// zeta(x, Z + Z*tau) = eta1*x + theta11'(x)/theta11(x).
cplx zeta_theta_oracle(cplx tau, cplx x);

// wp(x, Z + Z*tau) = -eta1 - (theta11''/theta11 - (theta11'/theta11)^2).
cplx wp_theta_oracle(cplx tau, cplx x);

struct PartialSum {
    cplx value;
    std::size_t terms;
};

// Weierstrass' defining series summed over the disk |w| <= R. The tail is
// O(|x|^2/R) at worst; intended for R >= 5 * basis length.
PartialSum zeta_classical_sum(const Lattice &lat, cplx x, double R);
cplx zeta_classical(const Lattice &lat, cplx x, double R);

// Directly convergent Epstein sum over |w + x| <= R; needs s >= 1.25
// (BadExponent otherwise). No continuation to s = 1/2 is attempted.
cplx epstein_phi1(const Lattice &lat, cplx x, double s, double R);
// Integral bound (2*pi/a) R^(2-2s) / (2s-2) on the omitted tail.
double epstein_phi1_tail(const Lattice &lat, double s, double R);

} // namespace hecke::oracles
