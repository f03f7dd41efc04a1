#ifndef CMC1_EIGEN_SYM_HPP
#define CMC1_EIGEN_SYM_HPP

#include <vector>

namespace cmc1 {

// Dense symmetric matrix in row-major storage.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;  // n*n entries

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    static SymMatrix zero(int n) { return SymMatrix{n, std::vector<double>(static_cast<size_t>(n) * n, 0.0)}; }
};

struct EigenSolution {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] matches values[k]
};

// Cyclic Jacobi rotations; for dense symmetric matrices of modest size.
EigenSolution jacobi_eigen(const SymMatrix& A);

// Generalized problem A v = lambda M v with M diagonal positive, solved by
// the symmetric reduction M^{-1/2} A M^{-1/2}.  Dense path.
EigenSolution eig_gen_sym(const SymMatrix& A, const std::vector<double>& mass_diag);

// Symmetric tridiagonal pencil (A, M) with A = tridiag(off, diag, off) and
// M = diag(mass), mass > 0.
struct TridiagPencil {
    std::vector<double> diag;
    std::vector<double> off;   // size n-1
    std::vector<double> mass;  // size n
};

// Number of pencil eigenvalues strictly below x (Sturm count on A - x M).
int sturm_count_below(const TridiagPencil& T, double x);

// All pencil eigenvalues below `bound`, ascending, by bisection; eigenvectors
// by inverse iteration, normalized to sup-norm 1 with positive peak entry.
EigenSolution eig_tridiag_below(const TridiagPencil& T, double bound,
                                bool want_vectors = true);

// Max-norm residual ||A v - lambda M v|| / ||A||_inf of one computed pair.
double pencil_residual(const TridiagPencil& T, double lambda, const std::vector<double>& v);

}  // namespace cmc1

#endif
