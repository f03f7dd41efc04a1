#include "cmc1/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cmc1 {

EigenSolution jacobi_eigen(const SymMatrix& A0) {
    const int n = A0.n;
    SymMatrix A = A0;
    std::vector<std::vector<double>> V(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) V[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += A.at(i, j) * A.at(i, j);
        if (off < 1e-30) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = 0.5 * (A.at(q, q) - A.at(p, p)) / apq;
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A.at(k, p), akq = A.at(k, q);
                    A.at(k, p) = c * akp - s * akq;
                    A.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A.at(p, k), aqk = A.at(q, k);
                    A.at(p, k) = c * apk - s * aqk;
                    A.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V[k][p], vkq = V[k][q];
                    V[k][p] = c * vkp - s * vkq;
                    V[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return A.at(i, i) < A.at(j, j); });

    EigenSolution sol;
    sol.values.reserve(n);
    sol.vectors.reserve(n);
    for (int k : order) {
        sol.values.push_back(A.at(k, k));
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = V[i][k];
        sol.vectors.push_back(std::move(v));
    }
    return sol;
}

EigenSolution eig_gen_sym(const SymMatrix& A, const std::vector<double>& mass_diag) {
    const int n = A.n;
    if (static_cast<int>(mass_diag.size()) != n)
        throw std::invalid_argument("eig_gen_sym: mass size mismatch");
    std::vector<double> isq(n);
    for (int i = 0; i < n; ++i) {
        if (mass_diag[i] <= 0.0) throw std::invalid_argument("eig_gen_sym: nonpositive mass entry");
        isq[i] = 1.0 / std::sqrt(mass_diag[i]);
    }
    SymMatrix B = SymMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B.at(i, j) = isq[i] * A.at(i, j) * isq[j];

    EigenSolution sol = jacobi_eigen(B);
    for (auto& v : sol.vectors)
        for (int i = 0; i < n; ++i) v[i] *= isq[i];
    return sol;
}

int sturm_count_below(const TridiagPencil& T, double x) {
    const size_t n = T.diag.size();
    int count = 0;
    double d = T.diag[0] - x * T.mass[0];
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
    for (size_t i = 1; i < n; ++i) {
        d = (T.diag[i] - x * T.mass[i]) - T.off[i - 1] * T.off[i - 1] / d;
        if (d == 0.0) d = -1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

namespace {

// Solves (A - sigma M) x = b by tridiagonal LU with partial pivoting
// (dgttrf/dgttrs layout).
void shifted_solve(const TridiagPencil& T, double sigma, std::vector<double>& x) {
    const size_t n = T.diag.size();
    std::vector<double> dl(n > 1 ? n - 1 : 0), d(n), du(n > 1 ? n - 1 : 0), du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<int> ipiv(n > 1 ? n - 1 : 0, 0);
    for (size_t i = 0; i < n; ++i) d[i] = T.diag[i] - sigma * T.mass[i];
    for (size_t i = 0; i + 1 < n; ++i) dl[i] = du[i] = T.off[i];

    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) d[i] = 1e-300;
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
            ipiv[i] = 0;
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            ipiv[i] = 1;
        }
    }

    for (size_t i = 0; i + 1 < n; ++i) {
        if (ipiv[i] == 1) std::swap(x[i], x[i + 1]);
        x[i + 1] -= dl[i] * x[i];
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
    x[n - 1] /= d[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (size_t k = n; k-- > 2;) {
        const size_t i = k - 2;
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
}

}  // namespace

EigenSolution eig_tridiag_below(const TridiagPencil& T, double bound, bool want_vectors) {
    const size_t n = T.diag.size();
    if (T.off.size() + 1 != n || T.mass.size() != n)
        throw std::invalid_argument("eig_tridiag_below: inconsistent sizes");
    for (double m : T.mass)
        if (m <= 0.0) throw std::invalid_argument("eig_tridiag_below: nonpositive mass entry");

    // lower bound for pencil eigenvalues from the Gershgorin bound of A
    // scaled by the smallest mass entry
    double amin = T.diag[0];
    for (size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.off[i - 1]);
        if (i + 1 < n) r += std::abs(T.off[i]);
        amin = std::min(amin, T.diag[i] - r);
    }
    const double lo_all =
        amin >= 0.0 ? -1e-8 : amin / *std::min_element(T.mass.begin(), T.mass.end());

    const int k = sturm_count_below(T, bound);
    EigenSolution sol;
    for (int idx = 0; idx < k; ++idx) {
        double lo = lo_all, hi = bound;
        for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (sturm_count_below(T, mid) >= idx + 1)
                hi = mid;
            else
                lo = mid;
        }
        sol.values.push_back(0.5 * (lo + hi));
    }

    if (want_vectors) {
        for (double lambda : sol.values) {
            std::vector<double> v(n, 1.0);
            // keep the shift off the exact eigenvalue
            const double sigma = lambda + 1e-11 * std::max(1.0, std::abs(lambda));
            for (int it = 0; it < 4; ++it) {
                std::vector<double> rhs(n);
                for (size_t i = 0; i < n; ++i) rhs[i] = T.mass[i] * v[i];
                shifted_solve(T, sigma, rhs);
                double nrm = 0.0;
                for (double x : rhs) nrm = std::max(nrm, std::abs(x));
                if (nrm == 0.0) break;
                for (size_t i = 0; i < n; ++i) v[i] = rhs[i] / nrm;
            }
            // deterministic sign: largest-magnitude entry positive
            size_t peak = 0;
            for (size_t i = 1; i < n; ++i)
                if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
            if (v[peak] < 0.0)
                for (double& x : v) x = -x;
            sol.vectors.push_back(std::move(v));
        }
    }
    return sol;
}

double pencil_residual(const TridiagPencil& T, double lambda, const std::vector<double>& v) {
    const size_t n = T.diag.size();
    double anorm = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double row = std::abs(T.diag[i]);
        if (i > 0) row += std::abs(T.off[i - 1]);
        if (i + 1 < n) row += std::abs(T.off[i]);
        anorm = std::max(anorm, row);
    }
    double res = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double r = (T.diag[i] - lambda * T.mass[i]) * v[i];
        if (i > 0) r += T.off[i - 1] * v[i - 1];
        if (i + 1 < n) r += T.off[i] * v[i + 1];
        res = std::max(res, std::abs(r));
    }
    return res / std::max(anorm, 1e-300);
}

}  // namespace cmc1
