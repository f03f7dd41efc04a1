#ifndef CMC1_SPECTRAL_NUMERIC_HPP
#define CMC1_SPECTRAL_NUMERIC_HPP

#include <string>
#include <vector>

#include "cmc1/eigen_sym.hpp"

namespace cmc1 {

// Weight of the log-radial form of the pull-back Laplacian eigenproblem:
// w(s) = mu^2 / cosh^2(mu s), so that -v'' + q^2 v = lambda w v on the line.
// It satisfies w(ln r) = rho(r) r^2 with rho the pseudometric factor.
double radial_weight(double mu, double s);

enum class RadialBC {
    natural,    // free endpoint values; correct for the compactified problem
    dirichlet,  // clamped endpoints; converges from above but only O(1/S)
};

// Fourier-mode q radial problem discretized on s in [-S, S] with n grid
// points: piecewise-linear stiffness for -d^2/ds^2 + q^2, lumped diagonal
// mass with weight w.
struct RadialProblem {
    int q = 0;
    double mu = 1.0;
    double S = 12.0;
    int n = 2400;
    RadialBC bc = RadialBC::natural;
    TridiagPencil pencil;
    std::vector<double> grid;  // s-locations of the unknowns
};

RadialProblem assemble_mode(int q, double mu, double S, int n, RadialBC bc = RadialBC::natural);

struct ModeSpectrum {
    int q = 0;
    std::vector<double> lambdas;  // ascending, below the collection bound
    double S = 0.0;
    int n = 0;
    int refinements = 0;
};

struct SpectrumRow {
    int q = 0;
    int rank = 0;  // position within the mode, matching the oracle index p
    double lambda_numeric = 0.0;
    double lambda_analytic = 0.0;
    double abs_err = 0.0;
    int multiplicity = 1;
};

struct NumericSpectrumOptions {
    double cutoff = 2.0;     // collection bound and the L-bar threshold
    double tol = 1e-4;       // stability target between refinements
    double null_band = 1e-3; // half width of the nullity detection band
    double S0 = 12.0;
    int n0 = 2400;
    int max_refinements = 3;
    double mode_margin = 0.5;  // extra margin when deciding the last mode
};

struct SpectrumReport {
    double mu = 0.0;
    NumericSpectrumOptions options;
    std::vector<ModeSpectrum> modes;
    std::vector<SpectrumRow> rows;  // sorted by (q, rank)
    int ind_u_numeric = 0;
    int nullity_numeric = 0;
};

// Computes the spectrum of the pull-back Laplacian below the cutoff by
// Fourier-mode separation, refining (S, n) together until the retained
// eigenvalues are stable below tol.
SpectrumReport numeric_spectrum(double mu, const NumericSpectrumOptions& opts = {});

}  // namespace cmc1

#endif
