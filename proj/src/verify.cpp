#include "hecke/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "hecke/errors.hpp"
#include "hecke/gaussian_series.hpp"
#include "hecke/oracles.hpp"
#include "hecke/quasiperiods.hpp"
#include "hecke/triple_product.hpp"

namespace hecke::verify
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};
constexpr double fd_step = 1e-4;
constexpr double corollary_y = 1e-4;

double frac(double v)
{
    return v - std::floor(v);
}

// Anti-holomorphic derivative from 8 points on the circle |z - x| = h:
// (1/(8h)) sum f(x + h e^{i t_k}) e^{i t_k}. Holomorphic Taylor terms below z^7
// cancel exactly; the 4-point stencil along 1 and i leaves h^2 f'''/6, which
// exceeds 1e-5 for wp at |x| < ~0.4 and for Z within ~0.15 of a pole.
template <class Fn>
cplx dbar_circle(Fn f, cplx x)
{
    constexpr int points = 8;
    cplx sum = 0.0;
    for (int k = 0; k < points; ++k) {
        const cplx e = std::polar(1.0, 2.0 * pi * k / points);
        sum += f(x + fd_step * e) * e;
    }
    return sum / (points * fd_step);
}

class Recorder
{
public:
    explicit Recorder(std::vector<CheckRecord> &out) : out_(out) {}

    void lattice(std::string name)
    {
        lattice_ = std::move(name);
    }

    // Runs `residual` and records it against `threshold`; any exception becomes
    // a failed record.
    void check(const std::string &name, const std::string &point, const std::function<std::pair<double, double>()> &fn)
    {
        CheckRecord rec{name, lattice_, point, 0.0, 0.0, false, {}};
        try {
            const auto [residual, threshold] = fn();
            rec.residual = residual;
            rec.threshold = threshold;
            rec.pass = std::isfinite(residual) && residual <= threshold;
        } catch (const std::exception &e) {
            rec.residual = std::numeric_limits<double>::infinity();
            rec.pass = false;
            rec.error = e.what();
        }
        out_.push_back(std::move(rec));
    }

    void check(const std::string &name, const std::string &point, double threshold, const std::function<double()> &fn)
    {
        check(name, point, [&]() { return std::pair{fn(), threshold}; });
    }

    void fail(const std::string &name, const std::string &point, const std::string &error)
    {
        out_.push_back({name, lattice_, point, std::numeric_limits<double>::infinity(), 0.0, false, error});
    }

private:
    std::vector<CheckRecord> &out_;
    std::string lattice_;
};

std::string lattice_name(cplx w1, cplx w2)
{
    return "omega1=" + format_complex(w1) + ",omega2=" + format_complex(w2);
}

void run_lattice_checks(Recorder &rec, const Lattice &lat, const GridSpec &grid, double tol)
{
    const cplx w1 = lat.omega1();
    const cplx w2 = lat.omega2();
    const double a = lat.area();
    const cplx tau = lat.tau();
    const auto pts = grid_points(lat, grid);

    // Values on L follow from Z + Z*tau by homogeneity in omega1.
    auto zeta_ref = [&](cplx x) { return oracles::zeta_theta_oracle(tau, x / w1) / w1; };
    auto wp_ref = [&](cplx x) { return oracles::wp_theta_oracle(tau, x / w1) / (w1 * w1); };

    const QuasiPeriods qp = quasi_periods(lat);

    rec.check("legendre", "-", 1e-12, [&] {
        const cplx lhs = qp.eta1 * w2 - qp.eta2 * w1;
        return std::abs(lhs - 2.0 * pi * I) / (std::abs(qp.eta1 * w2) + std::abs(qp.eta2 * w1));
    });
    rec.check("eta_const", "omega1", 1e-11,
              [&] { return std::abs(qp.eta1 - qp.c * w1 - pi / a * std::conj(w1)); });
    rec.check("eta_const", "omega2", 1e-11,
              [&] { return std::abs(qp.eta2 - qp.c * w2 - pi / a * std::conj(w2)); });

    const std::pair<const char *, cplx> periods[] = {{"omega1", w1}, {"omega2", w2}, {"omega1+omega2", w1 + w2}};
    for (const auto &[label, w] : periods) {
        rec.check("half_lattice_vanishing", label, 1e-12, [&] { return std::abs(zee(lat, w / 2.0, tol).value); });
        rec.check("wp_prime_half_period", label, 1e-10, [&] { return std::abs(wp_prime(lat, w / 2.0, tol).value); });
    }

    const auto eis = oracles::eisenstein(tau);
    const cplx g2 = eis.g2 / std::pow(w1, 4);
    const cplx g3 = eis.g3 / std::pow(w1, 6);

    for (const cplx x : pts) {
        const std::string p = format_complex(x);
        for (const auto &[label, w] : periods) {
            rec.check("z_periodicity", p + "|" + label, 1e-11,
                      [&] { return std::abs(zee(lat, x + w, tol).value - zee(lat, x, tol).value); });
        }
        rec.check("zeta_quasi_periodicity", p + "|omega1", 1e-10, [&] {
            return std::abs(zeta(lat, qp, x + w1, tol).value - zeta(lat, qp, x, tol).value - qp.eta1);
        });
        rec.check("zeta_quasi_periodicity", p + "|omega2", 1e-10, [&] {
            return std::abs(zeta(lat, qp, x + w2, tol).value - zeta(lat, qp, x, tol).value - qp.eta2);
        });
        rec.check("zeta_theta_oracle", p, 1e-10, [&] { return std::abs(zeta(lat, qp, x, tol).value - zeta_ref(x)); });
        rec.check("zeta_oddness", p, 1e-10,
                  [&] { return std::abs(zeta(lat, qp, -x, tol).value + zeta(lat, qp, x, tol).value); });
        rec.check("dbar_Z", p, 1e-5, [&] {
            return std::abs(dbar_circle([&](cplx z) { return zee(lat, z, tol).value; }, x) + pi / a);
        });
        rec.check("dbar_wp", p, 1e-5,
                  [&] { return std::abs(dbar_circle([&](cplx z) { return wp(lat, qp, z, tol).value; }, x)); });
        rec.check("first_moment_identity", p, 1e-12, [&] { return std::abs(remark1_residual(lat, x, tol).value); });

        rec.check("wp_evenness", p, [&] {
            const cplx v = wp(lat, qp, x, tol).value;
            return std::pair{std::abs(wp(lat, qp, -x, tol).value - v), 1e-10 * (1.0 + std::abs(v))};
        });
        rec.check("wp_prime_oddness", p, [&] {
            const cplx v = wp_prime(lat, x, tol).value;
            return std::pair{std::abs(wp_prime(lat, -x, tol).value + v), 1e-10 * (1.0 + std::abs(v))};
        });
        rec.check("wp_theta_oracle", p, [&] {
            const cplx v = wp(lat, qp, x, tol).value;
            return std::pair{std::abs(v - wp_ref(x)), 1e-9 * (1.0 + std::abs(v))};
        });
        rec.check("cubic_identity", p, [&] {
            const cplx P = wp(lat, qp, x, tol).value;
            const cplx dP = wp_prime(lat, x, tol).value;
            const double m = std::abs(P);
            return std::pair{std::abs(dP * dP - (4.0 * P * P * P - g2 * P - g3)), 1e-7 * (1.0 + m * m * m)};
        });

        for (const cplx lambda : {cplx{2.0, 0.0}, cplx{1.0, 1.0}}) {
            const std::string pl = p + "|lambda=" + format_complex(lambda);
            rec.check("homogeneity", pl + "|zeta", [&] {
                const Lattice big = make_lattice(lambda * w1, lambda * w2);
                const cplx ref = zeta(lat, qp, x, tol).value / lambda;
                return std::pair{std::abs(zeta(big, lambda * x, tol).value - ref), 1e-9 * (1.0 + std::abs(ref))};
            });
            rec.check("homogeneity", pl + "|wp", [&] {
                const Lattice big = make_lattice(lambda * w1, lambda * w2);
                const cplx ref = wp(lat, qp, x, tol).value / (lambda * lambda);
                return std::pair{std::abs(wp(big, lambda * x, tol).value - ref), 1e-9 * (1.0 + std::abs(ref))};
            });
            rec.check("homogeneity", pl + "|wp_prime", [&] {
                const Lattice big = make_lattice(lambda * w1, lambda * w2);
                const cplx ref = wp_prime(lat, x, tol).value / (lambda * lambda * lambda);
                return std::pair{std::abs(wp_prime(big, lambda * x, tol).value - ref), 1e-9 * (1.0 + std::abs(ref))};
            });
        }
    }

    // Checks stated on the normalized lattice Z + Z*tau.
    const Lattice lt = tau_lattice(tau);
    const auto tpts = grid_points(lt, grid);
    const auto pairs = strip_pairs(tau, 2 * grid.n + 2);
    const double poisson_cut = trunc_radius(lt.area(), 1e-16).radius;

    for (std::size_t k = 0; k < tpts.size(); ++k) {
        const cplx x = tpts[k];
        const cplx y = tpts[(k + 1) % tpts.size()];
        const std::string p = format_complex(x) + "|" + format_complex(y);
        rec.check("poisson", p, 1e-12, [&] {
            return std::abs(poisson_residual(tau, x, y, poisson_cut + std::abs(x) + std::abs(y)));
        });
        // The direct residual is y*((zeta - x*eta1)^2 - wp)/2 + O(y^2); that
        // coefficient reaches ~20 near Im x = Im tau, hence the small y here.
        rec.check("corollary_direct", format_complex(x), 1e-2,
                  [&] { return std::abs(corollary_residual(tau, x, corollary_y).direct); });
        rec.check("corollary_symmetrized", format_complex(x), 1e-2,
                  [&] { return std::abs(corollary_residual(tau, x, corollary_y).symmetrized); });
        // Linear in y: halving y must shrink the direct residual >= 1.8x.
        rec.check("corollary_linear_order", format_complex(x), 0.0, [&] {
            const double r1 = std::abs(corollary_residual(tau, x, corollary_y).direct);
            const double r2 = std::abs(corollary_residual(tau, x, corollary_y / 2).direct);
            return std::max(0.0, 1.8 * r2 - r1);
        });
        rec.check("thpr", p, 1e-10, [&] {
            const cplx z = tpts[(k + 2) % tpts.size()];
            const double cut = std::sqrt(2.0) * poisson_cut + std::abs(x) + std::abs(y) + std::abs(z);
            return std::abs(triple::thpr_residual(tau, x, y, z, cut));
        });
    }

    for (const auto &[x, y] : pairs) {
        const std::string p = format_complex(x) + "|" + format_complex(y);
        rec.check("kronecker_three_way", p, 1e-9, [&] {
            const cplx g = kronecker_F(tau, x, y, tol).value;
            const cplx t = oracles::F_theta(tau, x, y);
            const cplx q = oracles::F_qseries(tau, x, y);
            return std::max({std::abs(g - t), std::abs(g - q), std::abs(t - q)});
        });
        rec.check("kronecker_symmetry", p, 1e-11,
                  [&] { return std::abs(kronecker_F(tau, x, y, tol).value - kronecker_F(tau, y, x, tol).value); });
        rec.check("kronecker_antidiagonal", format_complex(x), 1e-11,
                  [&] { return std::abs(kronecker_F(tau, x, -x, tol).value); });

        rec.check("triple_case_a", p, 1e-8, [&] {
            const cplx coeff = triple::triple_coefficient(triple::TripleCase::case_a(x, y), tau, tol);
            return std::abs(coeff - 2.0 * pi * I * kronecker_F(tau, x, -y, tol).value);
        });
        rec.check("triple_case_b", format_complex(y), 1e-8, [&] {
            const cplx coeff = triple::triple_coefficient(triple::TripleCase::case_b(y), tau, tol);
            return std::abs(coeff + zee(lt, y, tol).value);
        });
        rec.check("pairing_closed_form", p, 1e-10, [&] {
            const auto pr = triple::pairing(tau, x, y, triple::pairing_cutoff(tau, x, y, tol));
            return std::abs(pr.normalized - pr.closed_form);
        });
    }
}

} // namespace

std::string format_complex(cplx z)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

std::vector<cplx> grid_points(const Lattice &lat, const GridSpec &grid)
{
    if (grid.n < 2) {
        throw std::invalid_argument("grid needs n >= 2");
    }
    const double floor =
        grid.min_pole_distance * std::min(std::abs(lat.omega1()), std::abs(lat.omega2()));
    std::vector<cplx> out;
    for (int i = 0; i < grid.n; ++i) {
        for (int j = 0; j < grid.n; ++j) {
            const cplx x = from_coords(lat, {(i + grid.offset1) / grid.n, (j + grid.offset2) / grid.n});
            if (nearest_lattice_distance(lat, x) >= floor) {
                out.push_back(x);
            }
        }
    }
    return out;
}

std::vector<std::pair<cplx, cplx>> strip_pairs(cplx tau, int count)
{
    const double a = tau.imag();
    std::vector<std::pair<cplx, cplx>> out;
    for (int k = 0; k < count; ++k) {
        const double kd = k;
        const cplx x{(kd + 0.137) / count, a * (0.15 + 0.7 * frac((kd + 0.071) * 0.381966))};
        const cplx y{(kd + 0.571) / count, a * (0.15 + 0.7 * frac((kd + 0.137) * 0.618034))};
        out.emplace_back(x, y);
    }
    return out;
}

cplx poisson_residual(cplx tau, cplx x, cplx y, double cutoff)
{
    const Lattice lat = tau_lattice(tau);
    const double k = pi / lat.area();
    cplx lhs = 0.0;
    cplx rhs = 0.0;
    for (const auto &p : shell_by_modulus(lat, cutoff, true)) {
        const cplx w = p.value;
        lhs += std::polar(std::exp(-k * std::norm(w + x)), -2.0 * pi * symplectic(lat, w + x, y));
        rhs += std::polar(std::exp(-k * std::norm(w + y)), -2.0 * pi * symplectic(lat, w, x));
    }
    return lhs - rhs;
}

CorollaryResiduals corollary_residual(cplx tau, cplx x, double y_small)
{
    if (!(y_small > 0 && y_small <= 1e-2)) {
        throw std::invalid_argument("corollary_residual needs 0 < y_small <= 1e-2");
    }
    constexpr double tol = 1e-12;
    const Lattice lat = tau_lattice(tau);
    const QuasiPeriods qp = quasi_periods(lat);
    const cplx limit = zeta(lat, qp, x, tol).value - x * qp.eta1;
    const cplx y = y_small * cplx{1.0, 1.0} / std::sqrt(2.0);
    const cplx f_plus = kronecker_F(tau, x, y, tol).value;
    const cplx f_minus = kronecker_F(tau, x, -y, tol).value;
    return {2.0 * pi * I * f_plus - 1.0 / y - limit, pi * I * (f_plus + f_minus) - limit};
}

std::vector<std::pair<cplx, cplx>> default_lattices()
{
    return {{1.0, I}, {1.0, std::polar(1.0, pi / 3.0)}, {1.0, cplx{0.3, 1.2}}};
}

const std::vector<std::string> &check_names()
{
    static const std::vector<std::string> names = {
        "lattice_construction", "legendre", "eta_const", "half_lattice_vanishing", "wp_prime_half_period",
        "z_periodicity", "zeta_quasi_periodicity", "zeta_theta_oracle", "zeta_oddness", "dbar_Z", "dbar_wp",
        "first_moment_identity", "wp_evenness", "wp_prime_oddness", "wp_theta_oracle", "cubic_identity", "homogeneity",
        "poisson", "corollary_direct", "corollary_symmetrized", "corollary_linear_order", "thpr",
        "kronecker_three_way", "kronecker_symmetry", "kronecker_antidiagonal", "triple_case_a", "triple_case_b",
        "pairing_closed_form",
    };
    return names;
}

Report run_suite(const std::vector<std::pair<cplx, cplx>> &lattices, const GridSpec &grid, double tol)
{
    if (lattices.empty()) {
        throw std::invalid_argument("run_suite needs at least one lattice");
    }
    const auto start = std::chrono::steady_clock::now();
    Report report;
    Recorder rec(report.records);
    for (const auto &[w1, w2] : lattices) {
        rec.lattice(lattice_name(w1, w2));
        bool built = false;
        rec.check("lattice_construction", "-", 0.0, [&] {
            (void)make_lattice(w1, w2);
            built = true;
            return 0.0;
        });
        if (!built) {
            continue;
        }
        const Lattice lat = make_lattice(w1, w2);
        try {
            run_lattice_checks(rec, lat, grid, tol);
        } catch (const std::exception &e) {
            // Setup failures (quasi-periods, Eisenstein) outside any single check.
            rec.fail("lattice_construction", "setup", e.what());
        }
    }
    report.pass = std::all_of(report.records.begin(), report.records.end(), [](const auto &r) { return r.pass; });
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const Report &report, bool timestamps)
{
    auto records = report.records;
    std::sort(records.begin(), records.end(), [](const CheckRecord &l, const CheckRecord &r) {
        return std::tie(l.check, l.lattice, l.point) < std::tie(r.check, r.lattice, r.point);
    });
    nlohmann::json out;
    out["pass"] = report.pass;
    auto &arr = out["records"] = nlohmann::json::array();
    std::map<std::string, int> counts;
    for (const auto &name : check_names()) {
        counts[name] = 0;
    }
    for (const auto &r : records) {
        nlohmann::json j{{"check", r.check},         {"lattice", r.lattice}, {"point", r.point},
                         {"threshold", r.threshold}, {"pass", r.pass}};
        // JSON has no infinity; failed evaluations carry a null residual.
        j["residual"] = std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json(nullptr);
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        arr.push_back(std::move(j));
        ++counts[r.check];
    }
    bool complete = true;
    auto &coverage = out["coverage"] = nlohmann::json::array();
    for (const auto &name : check_names()) {
        coverage.push_back({{"check", name}, {"records", counts[name]}});
        complete = complete && counts[name] > 0;
    }
    out["coverage_complete"] = complete;
    if (timestamps) {
        out["wall_time_s"] = report.wall_time_s;
    }
    return out;
}

} // namespace hecke::verify
