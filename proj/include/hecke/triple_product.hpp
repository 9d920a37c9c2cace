#pragma once

// Triple products m3(t_u* theta, alpha, t_v* theta) on E = C/(Z + Z*tau),
// computed from the Fourier coefficients of h_w = Q(t_w* theta . alpha) and
// of t_{u+v}* theta . conj(t_v* theta) in the orthonormal basis
// phi_{w,m,n}(x) = exp(2*pi*i*(m*x1 + (n - w)*x2)).

#include <complex>

#include "hecke/lattice.hpp"

namespace hecke::triple
{

enum class CaseKind { A, B };

// Case A: u and v both off the lattice. Case B: u = 0, v off the lattice.
struct TripleCase {
    CaseKind kind;
    cplx u;
    cplx v;

    static TripleCase case_a(cplx u, cplx v)
    {
        return {CaseKind::A, u, v};
    }
    static TripleCase case_b(cplx v)
    {
        return {CaseKind::B, 0.0, v};
    }
};

// a_{m,n}(w): coefficient of phi_{w,m,n} in h_w.
cplx a_coeff(cplx tau, cplx w, long m, long n);

// b_{m,n}(u,v): coefficient of phi_{u,m,n} in t_{u+v}* theta . conj(t_v* theta) . exp(-2*pi*a*(x2^2 + 2*x2*v2)).
cplx b_coeff(cplx tau, cplx u, cplx v, long m, long n);

// ||t_u* theta||^2 = exp(2*pi*a*u2^2) / sqrt(2a).
double theta_norm(cplx tau, cplx u);

struct Pairing {
    // sum_{m,n} a_{m,n}(u) conj(b_{m,n}(u,v)) over |m*tau - n| <= cutoff.
    cplx inner_product;
    // inner_product * sqrt(2a) * exp(-2*pi*a*(u2+v2)^2).
    cplx normalized;
    // exp((pi/a) u (v - conj v)) sum_w exp(-pi|w+u|^2/a + 2*pi*i*E(w,v)) / (w+u).
    cplx closed_form;
};

// When omit_origin is set, the (m,n) = (0,0) coefficient and the w = 0 term
// are dropped (the u = 0 case where Q kills the constant section).
Pairing pairing(cplx tau, cplx u, cplx v, double cutoff, bool omit_origin = false);

// Coefficient of the triple product along t_{u+v}* theta, computed from the
// (m,n) double sums. Case A equals 2*pi*i*F(u, -v; tau); case B equals -Z(v).
cplx triple_coefficient(const TripleCase &tc, cplx tau, double tol);

// The (m,n) cutoff used for tolerance tol: sqrt(2) * trunc_radius + |u| + |v|.
double pairing_cutoff(cplx tau, cplx u, cplx v, double tol);

// Residual of the theta product expansion
// theta(x+y) conj(theta(x+z)) exp(-2*pi*a*(x2^2 + 2*x2*z2)) = sum_{m,n} ... phi_{y-z,m,n}(x).
cplx thpr_residual(cplx tau, cplx x, cplx y, cplx z, double cutoff);

} // namespace hecke::triple
