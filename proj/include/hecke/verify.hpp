#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/lattice.hpp"

namespace hecke::verify
{

// Points ((i+offset1)/n)*omega1 + ((j+offset2)/n)*omega2, 0 <= i,j < n, minus
// those closer than min_pole_distance * min(|omega1|, |omega2|) to L.
struct GridSpec {
    int n = 4;
    double offset1 = 0.137;
    double offset2 = 0.071;
    double min_pole_distance = 0.05;
};

std::vector<cplx> grid_points(const Lattice &lat, const GridSpec &grid);

// `count` deterministic (x, y) pairs with 0.15 a <= Im x, Im y <= 0.85 a,
// inside the convergence strip of the Kronecker q-series.
std::vector<std::pair<cplx, cplx>> strip_pairs(cplx tau, int count);

struct CheckRecord {
    std::string check;
    std::string lattice;
    std::string point;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string error; // non-empty when the evaluation threw
};

struct Report {
    std::vector<CheckRecord> records;
    bool pass = false;
    double wall_time_s = 0.0;
};

// Residual of the Poisson lemma for the self-dual Gaussian exp(-pi|.|^2/a) on
// Z + Z*tau:
// sum phi(w+x) exp(-2*pi*i*E(w+x,y)) - sum phi(w+y) exp(-2*pi*i*E(w,x)).
cplx poisson_residual(cplx tau, cplx x, cplx y, double cutoff);

struct CorollaryResiduals {
    cplx direct;      // 2*pi*i*F(x,y) - 1/y - (zeta(x) - x*eta1)
    cplx symmetrized; // pi*i*(F(x,y) + F(x,-y)) - (zeta(x) - x*eta1)
};

// y = y_small * (1+i)/sqrt(2), 0 < y_small <= 1e-2.
CorollaryResiduals corollary_residual(cplx tau, cplx x, double y_small);

// (1, i), (1, e^{i*pi/3}), (1, 0.3+1.2i).
std::vector<std::pair<cplx, cplx>> default_lattices();

// Every check name run_suite can emit; the report footer counts records per name.
const std::vector<std::string> &check_names();

// Runs every identity over each lattice. Construction or evaluation failures
// become failed records; the suite never aborts.
Report run_suite(const std::vector<std::pair<cplx, cplx>> &lattices, const GridSpec &grid, double tol);

// Records sorted by (check, lattice, point); wall time only when requested.
nlohmann::json to_json(const Report &report, bool timestamps = false);

std::string format_complex(cplx z);

} // namespace hecke::verify
