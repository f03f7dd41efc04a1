#ifndef CMC1_WEIERSTRASS_HPP
#define CMC1_WEIERSTRASS_HPP

#include <array>
#include <functional>
#include <vector>

#include "cmc1/branch.hpp"
#include "cmc1/holofn.hpp"
#include "cmc1/mat2c.hpp"

namespace cmc1 {

// Error raised when an integration cannot reach its tolerance target.
struct tolerance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Holomorphic data (f, g) of the representation, mean curvature c > 0 and
// basepoint z0.  f must vanish to order 2k exactly where g has a pole of
// order k and nowhere else.
struct WeierstrassData {
    HoloFn f;
    HoloFn g;
    double c = 1.0;
    Cplx z0{0.0, 0.0};
    std::vector<Cplx> punctures;
};

// Moving frame accumulated along a path, F(path start) = identity for paths
// based at z0.  det_drift records the worst |det F - 1| seen before each
// renormalization.
struct Frame {
    Mat2c F = Mat2c::identity();
    double det_drift = 0.0;
    Path path;
    BranchedPoint end{Cplx(0.0, 0.0), 0};
};

// Right generator A(z) of the linear system dF = F A(z) dz.
using FrameGenerator = std::function<Mat2c(const BranchedPoint&)>;

// Order bookkeeping at the origin: f must vanish to order 2k exactly where g
// has a pole of order k, and nowhere else.
void check_data_compatibility(const WeierstrassData& data);

// c f [[g, -g^2], [1, -g]] for data (f, g).
FrameGenerator generator_from_data(const WeierstrassData& data);

// omega [[G, -G^2], [1, -G]] for dual data (G, omega); this produces the
// frame F^{-1} of the surface with secondary Gauss map G and Hopf
// differential omega dG.
FrameGenerator generator_from_dual(const HoloFn& G, const HoloFn& omega);

struct IntegrateOptions {
    double step_tol = 1e-12;         // local error target per step (step doubling)
    double det_threshold = 1e-13;    // renormalize when |det - 1| exceeds this
    double fixed_step = 0.0;         // > 0 disables adaptivity (order checks)
    int max_subdivisions = 28;
};

// Integrates dF = F A dz along the path with adaptive RK4 substepping,
// starting from `start` (identity frame at path start by default).
Frame integrate_frame(const FrameGenerator& gen, const Path& path,
                      const IntegrateOptions& opts = {},
                      const Mat2c& start = Mat2c::identity(), int start_winding = 0);

Frame integrate_frame(const WeierstrassData& data, const Path& path,
                      const IntegrateOptions& opts = {});

// Re \int ((1-g^2) f, i (1+g^2) f, 2 g f) dzeta along the path, refined until
// two successive refinements agree below tol.
std::array<double, 3> minimal_immersion(const WeierstrassData& data, const Path& path,
                                        double tol = 1e-9);

enum class AmbientModel { hermitian, upper_half, poincare_ball };

struct AmbientPoint {
    AmbientModel model = AmbientModel::upper_half;
    Mat2c hermitian;                    // valid for model == hermitian
    std::array<double, 3> x{0.0, 0.0, 0.0};  // valid otherwise
};

// (1/c) F^{-1} conj(F^{-1})^t and its coordinate conversions.
AmbientPoint immerse(const Frame& frame, double c, AmbientModel model);

// Same, but taking F^{-1} directly (dual-route integrations produce the
// inverse frame).
AmbientPoint immerse_inverse(const Mat2c& inv_frame, double c, AmbientModel model);

std::array<double, 3> upper_half_to_ball(const std::array<double, 3>& u);
std::array<double, 3> ball_to_upper_half(const std::array<double, 3>& b);
std::array<double, 3> hermitian_to_upper_half(const Mat2c& inv_frame, double c);

// Unitary part of the frame monodromy.  b21 = -conj(b12), b22 = conj(b11).
struct SU2Matrix {
    Cplx b11{1.0, 0.0};
    Cplx b12{0.0, 0.0};

    Cplx b21() const { return -std::conj(b12); }
    Cplx b22() const { return std::conj(b11); }
    Mat2c as_mat() const { return {b11, b12, b21(), b22()}; }
    double norm_defect() const { return std::abs(std::norm(b11) + std::norm(b12) - 1.0); }
};

// Value on the Riemann sphere.
struct SpherePoint {
    Cplx value{0.0, 0.0};
    bool at_infinity = false;
};

// Moebius action (b11 G + b12) / (b21 G + b22).
SpherePoint su2_action(const SU2Matrix& B, const Cplx& G);

// Secondary Gauss map dF11/dF21 evaluated from the frame and the ODE right
// hand side; cross-checked against dF12/dF22.
Cplx secondary_gauss(const WeierstrassData& data, const Frame& frame);
Cplx secondary_gauss_from_generator(const FrameGenerator& gen, const Frame& frame);

struct MonodromyResult {
    Mat2c B;
    bool in_su2 = false;
    double defect = 0.0;  // max-norm of B conj(B)^t - I
    double det_defect = 0.0;
};

// Frame monodromy around a closed loop based at the path start.
MonodromyResult monodromy(const WeierstrassData& data, const Path& loop,
                          const IntegrateOptions& opts = {});
MonodromyResult monodromy_from_generator(const FrameGenerator& gen, const Path& loop,
                                         const IntegrateOptions& opts = {});

// Moebius-level monodromy of G = z^mu around the origin: the diagonal
// SU(2) matrix diag(e^{i pi mu w}, e^{-i pi mu w}) realizing G -> e^{2 pi i mu w} G.
SU2Matrix zmu_loop_action(double mu, int turns = 1);

}  // namespace cmc1

#endif
