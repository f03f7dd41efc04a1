#ifndef CMC1_ENDS_HPP
#define CMC1_ENDS_HPP

#include <array>
#include <string>

#include "cmc1/branch.hpp"
#include "cmc1/mat2c.hpp"

namespace cmc1 {

enum class EndType { catenoid_cousin_type, horosphere_type };

// Classified regular end at z = 0.  The data (mu, nu, q_minus2) come from the
// local normal forms G = z^mu G-hat, omega = z^nu w-hat and the z^{-2}
// coefficient of the Hopf differential; m1, m2 are the indicial root gaps.
struct EndData {
    double mu = 0.0;
    double nu = 0.0;
    Cplx q_minus2{0.0, 0.0};
    int ord_Q = 0;
    double m1_raw = 0.0;
    double m2_raw = 0.0;
    int m1 = 0;
    int m2 = 0;
    int m = 0;
    EndType type = EndType::catenoid_cousin_type;
    bool embedded = false;

    // graph normal-form constants (catenoid type): leading horizontal and
    // height factors before the final coordinate change, and the height
    // constant after it
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double correction_exponent = 0.0;  // min(1, 2 mu)
};

struct end_classification_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Classifies the end; throws end_classification_error when ord(Q) < -2
// (not regular) or when m1, m2 fail the positive-integer test (the message
// reports the nearest integers).
EndData classify_end(double mu, double nu, const Cplx& q_minus2, double int_tol = 1e-6);

struct GraphPoint {
    std::array<double, 3> x{0.0, 0.0, 0.0};
    double correction_exponent = 0.0;
};

// Leading graph form of the end in upper-half-space coordinates:
// catenoid type (Re z^m, Im z^m, c3 |z|^{mu+m}); horosphere type
// (Re z^m, Im z^m, |z|^{2m}) with m = -nu-1.
GraphPoint asymptotic_graph(const EndData& end, const Cplx& z);

// Same, in the gauge of the integrated dual frame (constants c1, c2 applied
// before the normalizing coordinate change).
std::array<double, 3> asymptotic_graph_prenormal(const EndData& end, const Cplx& z);

// Leading order of F^{-1} near the end (Frobenius exponents).
Mat2c frame_asymptote(const EndData& end, const BranchedPoint& z);

// Roots of the indicial polynomial t^2 - (nu+1) t - q2.
std::array<Cplx, 2> indicial_roots(double nu, const Cplx& q2);

}  // namespace cmc1

#endif
