#include "cmc1/spectral_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmc1/spectral_oracle.hpp"
#include "cmc1/weierstrass.hpp"

namespace cmc1 {

double radial_weight(double mu, double s) {
    const double ch = std::cosh(mu * s);
    if (!std::isfinite(ch)) return 0.0;
    return mu * mu / (ch * ch);
}

RadialProblem assemble_mode(int q, double mu, double S, int n, RadialBC bc) {
    if (n < 3) throw std::invalid_argument("assemble_mode: need at least 3 grid points");
    if (S <= 0.0 || mu <= 0.0 || q < 0) throw std::invalid_argument("assemble_mode: bad parameters");

    RadialProblem rp;
    rp.q = q;
    rp.mu = mu;
    rp.S = S;
    rp.n = n;
    rp.bc = bc;

    if (bc == RadialBC::natural) {
        // unknowns at all n nodes including the endpoints
        const double h = 2.0 * S / (n - 1);
        rp.grid.resize(n);
        rp.pencil.diag.assign(n, 0.0);
        rp.pencil.off.assign(n - 1, -1.0 / h);
        rp.pencil.mass.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double s = -S + i * h;
            rp.grid[i] = s;
            const double lump = (i == 0 || i == n - 1) ? 0.5 * h : h;
            const double stiff = (i == 0 || i == n - 1) ? 1.0 / h : 2.0 / h;
            rp.pencil.diag[i] = stiff + q * q * lump;
            double w = radial_weight(mu, s);
            if (w <= 0.0) w = 1e-308;  // keep the mass positive under extreme underflow
            rp.pencil.mass[i] = w * lump;
        }
    } else {
        // Dirichlet rows: unknowns at the n interior nodes
        const double h = 2.0 * S / (n + 1);
        rp.grid.resize(n);
        rp.pencil.diag.assign(n, 0.0);
        rp.pencil.off.assign(n - 1, -1.0 / (h * h));
        rp.pencil.mass.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const double s = -S + (i + 1) * h;
            rp.grid[i] = s;
            rp.pencil.diag[i] = 2.0 / (h * h) + q * q;
            double w = radial_weight(mu, s);
            if (w <= 0.0) w = 1e-308;
            rp.pencil.mass[i] = w;
        }
    }
    return rp;
}

namespace {

std::vector<double> solve_mode(int q, double mu, double S, int n, double bound) {
    const RadialProblem rp = assemble_mode(q, mu, S, n, RadialBC::natural);
    EigenSolution sol = eig_tridiag_below(rp.pencil, bound, false);
    return sol.values;
}

}  // namespace

SpectrumReport numeric_spectrum(double mu, const NumericSpectrumOptions& opts) {
    if (mu <= 0.0) throw std::invalid_argument("numeric_spectrum: mu must be positive");

    SpectrumReport report;
    report.mu = mu;
    report.options = opts;

    const double collect_bound = opts.cutoff + opts.null_band + 10.0 * opts.tol;

    for (int q = 0;; ++q) {
        if (lambda_pq(0, q, mu) >= opts.cutoff + opts.null_band + opts.mode_margin) break;

        ModeSpectrum mode;
        mode.q = q;
        double S = opts.S0;
        int n = opts.n0;
        std::vector<double> prev = solve_mode(q, mu, S, n, collect_bound);
        bool converged = false;
        for (int ref = 0; ref < opts.max_refinements; ++ref) {
            S *= 2.0;
            n *= 2;
            std::vector<double> cur = solve_mode(q, mu, S, n, collect_bound);
            double shift = 0.0;
            const size_t m = std::min(prev.size(), cur.size());
            for (size_t i = 0; i < m; ++i) shift = std::max(shift, std::abs(cur[i] - prev[i]));
            if (prev.size() != cur.size()) shift = 1e9;
            prev = std::move(cur);
            mode.refinements = ref + 1;
            if (shift < opts.tol) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw tolerance_error("numeric_spectrum: mode q=" + std::to_string(q) +
                                  " did not stabilize under refinement");
        mode.lambdas = prev;
        mode.S = S;
        mode.n = n;
        report.modes.push_back(std::move(mode));
    }

    for (const ModeSpectrum& mode : report.modes) {
        const int mult = mode.q > 0 ? 2 : 1;
        for (size_t rank = 0; rank < mode.lambdas.size(); ++rank) {
            const double l = mode.lambdas[rank];
            SpectrumRow row;
            row.q = mode.q;
            row.rank = static_cast<int>(rank);
            row.lambda_numeric = l;
            row.lambda_analytic = lambda_pq(static_cast<int>(rank), mode.q, mu);
            row.abs_err = std::abs(row.lambda_numeric - row.lambda_analytic);
            row.multiplicity = mult;
            report.rows.push_back(row);

            if (l < opts.cutoff - opts.null_band)
                report.ind_u_numeric += mult;
            else if (std::abs(l - opts.cutoff) <= opts.null_band)
                report.nullity_numeric += mult;
        }
    }
    return report;
}

}  // namespace cmc1
