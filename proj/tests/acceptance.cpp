// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/gaussian_series.hpp"
#include "hecke/oracles.hpp"
#include "hecke/quasiperiods.hpp"
#include "hecke/triple_product.hpp"
#include "hecke/verify.hpp"

using namespace hecke;
using namespace std::complex_literals;
using std::numbers::pi;

namespace
{

constexpr double tol = 1e-12;

// Largest residual/threshold ratio seen, with the residual that produced it.
struct Tally {
    double worst_ratio = 0.0;
    double worst_residual = 0.0;
    std::string worst_where;
    std::string error;
    int samples = 0;

    void add(double residual, double threshold, const std::string &where)
    {
        ++samples;
        double ratio = std::isfinite(residual) ? residual / threshold : INFINITY;
        if (samples == 1 || !(ratio <= worst_ratio)) {
            worst_ratio = ratio;
            worst_residual = residual;
            worst_where = where;
        }
    }
    bool pass() const
    {
        return error.empty() && samples > 0 && worst_ratio <= 1.0;
    }
};

std::string fmt(cplx z)
{
    return verify::format_complex(z);
}

const std::vector<cplx> taus = {1i, std::polar(1.0, pi / 3), 0.3 + 1.2i};

cplx dbar_circle(const std::function<cplx(cplx)> &f, cplx x, double h)
{
    cplx acc = 0.0;
    for (int k = 0; k < 8; ++k) {
        cplx e = std::polar(1.0, k * pi / 4);
        acc += f(x + h * e) * e;
    }
    return acc / (8.0 * h);
}

int failures = 0;

void report(int id, const char *title, const std::function<std::string(std::vector<Tally> &)> &body)
{
    std::vector<Tally> parts;
    std::string detail;
    bool ok = true;
    try {
        detail = body(parts);
        for (const auto &t : parts)
            ok = ok && t.pass();
    } catch (const std::exception &e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (parts.empty() && detail.rfind("exception", 0) != 0)
        ok = false;
    if (!ok)
        ++failures;
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
}

std::string summary(const Tally &t, const char *name)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s max=%.3g (n=%d, at %s)", name, t.worst_residual, t.samples,
                  t.worst_where.c_str());
    return buf;
}

} // namespace

int main()
{
    auto t0 = std::chrono::steady_clock::now();

    report(1, "zeta vs theta oracle", [](auto &parts) {
        Tally t;
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            auto qp = quasi_periods(lat);
            for (cplx x : verify::grid_points(lat, verify::GridSpec{}))
                t.add(std::abs(zeta(lat, qp, x, tol).value - oracles::zeta_theta_oracle(tau, x)), 1e-10,
                      "tau=" + fmt(tau) + " x=" + fmt(x));
        }
        parts.push_back(t);
        return summary(t, "|zeta-oracle|") + " thr=1e-10";
    });

    report(2, "half-lattice vanishing of Z", [](auto &parts) {
        Tally t;
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            for (cplx w : {lat.omega1(), lat.omega2(), lat.omega1() + lat.omega2()})
                t.add(std::abs(zee(lat, w / 2.0, tol).value), 1e-12, "tau=" + fmt(tau) + " w=" + fmt(w));
        }
        parts.push_back(t);
        return summary(t, "|Z(w/2)|") + " thr=1e-12";
    });

    report(3, "Legendre, eta constant, eta1 anchors", [](auto &parts) {
        Tally leg, cst, anchor;
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            auto qp = quasi_periods(lat);
            std::string where = "tau=" + fmt(tau);
            cplx w1 = lat.omega1(), w2 = lat.omega2();
            leg.add(std::abs(qp.eta1 * w2 - qp.eta2 * w1 - 2i * pi) / (2 * pi), 1e-12, where);
            double k = pi / lat.area();
            cst.add(std::abs(qp.eta1 - qp.c * w1 - k * std::conj(w1)), 1e-11, where + " w1");
            cst.add(std::abs(qp.eta2 - qp.c * w2 - k * std::conj(w2)), 1e-11, where + " w2");
        }
        anchor.add(std::abs(quasi_periods(tau_lattice(1i)).eta1 - pi) / pi, 1e-12, "tau=i");
        double hex = 2 * pi / std::sqrt(3.0);
        anchor.add(std::abs(quasi_periods(tau_lattice(taus[1])).eta1 - hex) / hex, 1e-12, "tau=e^{i pi/3}");
        parts = {leg, cst, anchor};
        return summary(leg, "legendre(rel)") + " thr=1e-12; " + summary(cst, "const") + " thr=1e-11; " +
               summary(anchor, "eta1(rel)") + " thr=1e-12";
    });

    report(4, "Kronecker function three ways", [](auto &parts) {
        Tally three, sym, anti;
        for (cplx tau : taus)
            for (auto [x, y] : verify::strip_pairs(tau, 10)) {
                std::string where = "tau=" + fmt(tau) + " x=" + fmt(x) + " y=" + fmt(y);
                cplx g = kronecker_F(tau, x, y, tol).value;
                cplx th = oracles::F_theta(tau, x, y);
                cplx qs = oracles::F_qseries(tau, x, y);
                three.add(std::max({std::abs(g - th), std::abs(g - qs), std::abs(th - qs)}), 1e-9, where);
                sym.add(std::abs(g - kronecker_F(tau, y, x, tol).value), 1e-11, where);
                anti.add(std::abs(kronecker_F(tau, x, -x, tol).value), 1e-11, where);
            }
        parts = {three, sym, anti};
        return summary(three, "pairwise") + " thr=1e-9; " + summary(sym, "F(x,y)-F(y,x)") + " thr=1e-11; " +
               summary(anti, "F(x,-x)") + " thr=1e-11";
    });

    report(5, "dbar defect (8-point circle stencil, h=1e-4)", [](auto &parts) {
        Tally dz, dw;
        const double h = 1e-4;
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            auto qp = quasi_periods(lat);
            for (cplx x : verify::grid_points(lat, verify::GridSpec{})) {
                std::string where = "tau=" + fmt(tau) + " x=" + fmt(x);
                cplx a = dbar_circle([&](cplx p) { return zee(lat, p, tol).value; }, x, h);
                dz.add(std::abs(a + pi / lat.area()), 1e-5, where);
                cplx b = dbar_circle([&](cplx p) { return wp(lat, qp, p, tol).value; }, x, h);
                dw.add(std::abs(b), 1e-5, where);
            }
        }
        parts = {dz, dw};
        return summary(dz, "|dbar Z + pi/a|") + "; " + summary(dw, "|dbar wp|") + " thr=1e-5";
    });

    report(6, "first-moment identity and Poisson residuals", [](auto &parts) {
        Tally rem, poi;
        const cplx pts[] = {0.137 + 0.071i, 0.37 + 0.21i, 0.5, 0.62 - 0.44i, -0.29 + 0.83i};
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            const double cut = trunc_radius(lat.area(), 1e-16).radius;
            for (int k = 0; k < 5; ++k) {
                cplx x = pts[k].real() + pts[k].imag() * tau;
                cplx y = pts[(k + 2) % 5].real() + pts[(k + 2) % 5].imag() * tau;
                std::string where = "tau=" + fmt(tau) + " x=" + fmt(x);
                rem.add(std::abs(remark1_residual(lat, x, tol).value), 1e-12, where);
                poi.add(std::abs(verify::poisson_residual(tau, x, y, cut + std::abs(x) + std::abs(y))), 1e-12,
                        where + " y=" + fmt(y));
            }
        }
        parts = {rem, poi};
        return summary(rem, "first-moment") + "; " + summary(poi, "poisson") + " thr=1e-12";
    });

    report(7, "cubic identity", [](auto &parts) {
        Tally t;
        for (cplx tau : taus) {
            auto lat = tau_lattice(tau);
            auto qp = quasi_periods(lat);
            auto ev = oracles::eisenstein(tau);
            auto pts = verify::grid_points(lat, verify::GridSpec{});
            pts.resize(10);
            for (cplx x : pts) {
                cplx P = wp(lat, qp, x, tol).value, d = wp_prime(lat, x, tol).value;
                double r = std::abs(d * d - (4.0 * P * P * P - ev.g2 * P - ev.g3));
                t.add(r / (1 + std::pow(std::abs(P), 3)), 1e-7, "tau=" + fmt(tau) + " x=" + fmt(x));
            }
        }
        parts.push_back(t);
        return summary(t, "residual/(1+|wp|^3)") + " thr=1e-7";
    });

    report(8, "triple products", [](auto &parts) {
        Tally ca, cb, pr, th;
        const std::pair<cplx, cplx> uv[] = {
            {0.3 + 0.2i, 0.1 + 0.4i}, {-0.2 + 0.5i, 0.35 + 0.1i}, {0.6 - 0.3i, -0.15 + 0.25i},
            {0.05 + 0.7i, 0.4 - 0.2i}, {0.45 + 0.3i, 0.2 + 0.6i}};
        for (cplx tau : {cplx(0, 1.1), cplx(0.3, 1.2)}) {
            auto lat = tau_lattice(tau);
            for (auto [u, v] : uv) {
                std::string where = "tau=" + fmt(tau) + " u=" + fmt(u) + " v=" + fmt(v);
                cplx A = triple::triple_coefficient(triple::TripleCase::case_a(u, v), tau, tol);
                ca.add(std::abs(A - 2i * pi * kronecker_F(tau, u, -v, tol).value), 1e-8, where);
                cplx B = triple::triple_coefficient(triple::TripleCase::case_b(v), tau, tol);
                cb.add(std::abs(B + zee(lat, v, tol).value), 1e-8, where);
                auto p = triple::pairing(tau, u, v, triple::pairing_cutoff(tau, u, v, tol));
                pr.add(std::abs(p.normalized - p.closed_form), 1e-10, where);
                cplx x = 0.5 * u - v + 0.3;
                th.add(std::abs(triple::thpr_residual(tau, x, u, v, triple::pairing_cutoff(tau, u, v, tol))), 1e-10,
                       where + " x=" + fmt(x));
            }
        }
        parts = {ca, cb, pr, th};
        return summary(ca, "caseA") + "; " + summary(cb, "caseB") + " thr=1e-8; " + summary(pr, "raw-closed") +
               "; " + summary(th, "thpr") + " thr=1e-10";
    });

    report(9, "corollary limit at y_small=1e-3", [](auto &parts) {
        Tally size, order;
        const std::pair<cplx, cplx> cases[] = {
            {1.1i, 0.3 + 0.2i}, {1i, 0.5}, {1i, 0.3 + 0.2i}, {std::polar(1.0, pi / 3), 0.3 + 0.2i}, {0.3 + 1.2i, 0.3 + 0.2i}};
        for (auto [tau, x] : cases) {
            std::string where = "tau=" + fmt(tau) + " x=" + fmt(x);
            auto r1 = verify::corollary_residual(tau, x, 1e-3);
            auto r2 = verify::corollary_residual(tau, x, 5e-4);
            size.add(std::abs(r1.direct), 1e-2, where);
            size.add(std::abs(r1.symmetrized), 1e-2, where + " sym");
            // ratio >= 1.8  <=>  1.8 * |r(y/2)| / |r(y)| <= 1
            order.add(1.8 * std::abs(r2.direct) / std::abs(r1.direct), 1.0, where);
        }
        parts = {size, order};
        return summary(size, "residual") + " thr=1e-2; " + summary(order, "1.8*r(y/2)/r(y)") + " thr=1";
    });

    report(10, "convergence benchmark (tau=i, x=0.3+0.2i)", [](auto &parts) {
        Tally gauss, terms, classical;
        auto lat = tau_lattice(1i);
        cplx x = 0.3 + 0.2i;
        cplx ref = oracles::zeta_theta_oracle(1i, x);
        auto g = zeta(lat, x, tol);
        double err = std::abs(g.value - ref);
        gauss.add(std::max(err, g.abs_error_estimate), 1e-12, "gaussian");
        terms.add(double(g.terms_used), 300, "gaussian");
        auto c = oracles::zeta_classical_sum(lat, x, 50.0);
        double cerr = std::abs(c.value - ref);
        // Must still be at least 1e-4: residual is 1e-4 / cerr.
        classical.add(1e-4 / cerr, 1.0, "classical R=50");
        parts = {gauss, terms, classical};
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "gaussian error=%.3g estimate=%.3g terms=%ld (need <=1e-12, <=300); "
                      "classical R=50 terms=%zu error=%.3g (need >=1e-4)",
                      err, g.abs_error_estimate, g.terms_used, c.terms, cerr);
        return std::string(buf);
    });

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 10 criteria failed; %.2f s\n", failures, secs);
    return failures;
}
