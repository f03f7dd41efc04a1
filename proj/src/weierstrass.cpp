#include "cmc1/weierstrass.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

void check_data_compatibility(const WeierstrassData& data) {
    // the condition applies away from the punctures only
    for (const Cplx& p : data.punctures)
        if (p == Cplx(0.0, 0.0)) return;
    const double gf = data.g.order_at_origin;
    const double ff = data.f.order_at_origin;
    const double expected = gf < 0.0 ? -2.0 * gf : 0.0;
    if (ff != expected)
        throw std::invalid_argument(
            "weierstrass data: f must vanish to order 2k exactly at the order-k poles of g");
}

FrameGenerator generator_from_data(const WeierstrassData& data) {
    const HoloFn f = data.f;
    const HoloFn g = data.g;
    const double c = data.c;
    return [f, g, c](const BranchedPoint& p) {
        const Cplx fv = f(p).value;
        const Cplx gv = g(p).value;
        require_finite(fv, "frame generator f");
        require_finite(gv, "frame generator g");
        const Cplx cf = c * fv;
        return Mat2c{cf * gv, -cf * gv * gv, cf, -cf * gv};
    };
}

FrameGenerator generator_from_dual(const HoloFn& G, const HoloFn& omega) {
    return [G, omega](const BranchedPoint& p) {
        const Cplx Gv = G(p).value;
        const Cplx w = omega(p).value;
        require_finite(Gv, "dual generator G");
        require_finite(w, "dual generator omega");
        return Mat2c{w * Gv, -w * Gv * Gv, w, -w * Gv};
    };
}

namespace {

// One RK4 step for F' = F A(z(t)) dz on the chord a -> b, t in [t0, t0+h].
Mat2c rk4_step(const Mat2c& F, const FrameGenerator& gen, const BranchedPoint& seg_start,
               const Cplx& a, const Cplx& dz_total, double t0, double h) {
    auto eval = [&](double t) {
        const Cplx z = a + t * dz_total;
        return gen(branch_continue(seg_start, z));
    };
    const Cplx hdz = h * dz_total;
    const Mat2c A1 = eval(t0);
    const Mat2c k1 = hdz * (F * A1);
    const Mat2c A2 = eval(t0 + 0.5 * h);
    const Mat2c k2 = hdz * ((F + 0.5 * k1) * A2);
    const Mat2c k3 = hdz * ((F + 0.5 * k2) * A2);
    const Mat2c A4 = eval(t0 + h);
    const Mat2c k4 = hdz * ((F + k3) * A4);
    return F + (1.0 / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void renormalize(Mat2c& F, double threshold, double& drift) {
    const double d = std::abs(F.det() - Cplx(1.0, 0.0));
    if (d > drift) drift = d;
    if (d > threshold) {
        const Cplx s = 1.0 / std::sqrt(F.det());
        F = s * F;
    }
}

}  // namespace

Frame integrate_frame(const FrameGenerator& gen, const Path& path, const IntegrateOptions& opts,
                      const Mat2c& start, int start_winding) {
    if (path.points.size() == 1) {
        Frame trivial;
        trivial.F = start;
        trivial.path = path;
        trivial.end = BranchedPoint{path.points.front(), start_winding};
        return trivial;
    }
    validate_path(path, {});
    const Path refined = refine_path(path);

    Frame frame;
    frame.F = start;
    frame.path = path;
    BranchedPoint cursor{refined.points.front(), start_winding};

    for (size_t i = 0; i + 1 < refined.points.size(); ++i) {
        const Cplx a = refined.points[i];
        const Cplx b = refined.points[i + 1];
        const Cplx dz = b - a;

        if (opts.fixed_step > 0.0) {
            const int n = std::max(1, static_cast<int>(std::ceil(std::abs(dz) / opts.fixed_step)));
            const double h = 1.0 / n;
            for (int k = 0; k < n; ++k)
                frame.F = rk4_step(frame.F, gen, cursor, a, dz, k * h, h);
        } else {
            double t = 0.0;
            double h = 1.0;
            int depth = 0;
            while (t < 1.0) {
                if (t + h > 1.0) h = 1.0 - t;
                const Mat2c one = rk4_step(frame.F, gen, cursor, a, dz, t, h);
                const Mat2c half = rk4_step(frame.F, gen, cursor, a, dz, t, 0.5 * h);
                const Mat2c two = rk4_step(half, gen, cursor, a, dz, t + 0.5 * h, 0.5 * h);
                const double err = max_abs_diff(one, two) / 15.0;
                const double scale = std::max(1.0, frame.F.max_abs());
                if (err <= opts.step_tol * scale) {
                    // fifth-order combination of the two estimates
                    frame.F = two + (1.0 / 15.0) * (two - one);
                    renormalize(frame.F, opts.det_threshold, frame.det_drift);
                    t += h;
                    if (err <= 0.01 * opts.step_tol * scale && depth > 0) {
                        h *= 2.0;
                        --depth;
                    }
                } else if (depth < opts.max_subdivisions) {
                    h *= 0.5;
                    ++depth;
                } else {
                    throw tolerance_error("integrate_frame: step subdivision limit reached");
                }
            }
        }
        cursor = branch_continue(cursor, b);
        renormalize(frame.F, opts.det_threshold, frame.det_drift);
    }
    frame.end = cursor;
    return frame;
}

Frame integrate_frame(const WeierstrassData& data, const Path& path,
                      const IntegrateOptions& opts) {
    if (!path.points.empty() && path.points.front() != data.z0)
        throw std::invalid_argument("integrate_frame: path must start at the basepoint z0");
    check_data_compatibility(data);
    if (path.points.size() >= 2) validate_path(path, data.punctures);
    return integrate_frame(generator_from_data(data), path, opts);
}

namespace {

std::array<double, 3> integrate_minimal_once(const WeierstrassData& data, const Path& path,
                                             int per_segment) {
    // Composite Simpson per segment on the integrand ((1-g^2) f, i (1+g^2) f, 2 g f).
    std::array<Cplx, 3> acc{Cplx(0.0), Cplx(0.0), Cplx(0.0)};
    auto integrand = [&](const BranchedPoint& p) {
        const Cplx fv = data.f(p).value;
        const Cplx gv = data.g(p).value;
        require_finite(fv, "minimal_immersion integrand");
        require_finite(gv, "minimal_immersion integrand");
        return std::array<Cplx, 3>{(1.0 - gv * gv) * fv, Cplx(0.0, 1.0) * (1.0 + gv * gv) * fv,
                                   2.0 * gv * fv};
    };
    BranchedPoint cursor{path.points.front(), 0};
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        const Cplx a = path.points[i];
        const Cplx b = path.points[i + 1];
        const Cplx dz = (b - a) / static_cast<double>(per_segment);
        for (int k = 0; k < per_segment; ++k) {
            const Cplx z0 = a + static_cast<double>(k) * dz;
            const BranchedPoint p0 = branch_continue(cursor, z0);
            const BranchedPoint pm = branch_continue(cursor, z0 + 0.5 * dz);
            const BranchedPoint p1 = branch_continue(cursor, z0 + dz);
            const auto f0 = integrand(p0);
            const auto fm = integrand(pm);
            const auto f1 = integrand(p1);
            for (int j = 0; j < 3; ++j)
                acc[j] += dz / 6.0 * (f0[j] + 4.0 * fm[j] + f1[j]);
        }
        cursor = branch_continue(cursor, b);
    }
    return {acc[0].real(), acc[1].real(), acc[2].real()};
}

}  // namespace

std::array<double, 3> minimal_immersion(const WeierstrassData& data, const Path& path,
                                        double tol) {
    if (path.points.size() < 2 || path.points.front() == path.points.back()) {
        // trivial path: empty integral
        if (path.points.size() >= 2) validate_path(path, data.punctures);
        return {0.0, 0.0, 0.0};
    }
    validate_path(path, data.punctures);
    check_data_compatibility(data);
    if (path.points.front() != data.z0)
        throw std::invalid_argument("minimal_immersion: path must start at z0");

    std::array<double, 3> prev = integrate_minimal_once(data, path, 4);
    for (int n = 8; n <= 4096; n *= 2) {
        const std::array<double, 3> cur = integrate_minimal_once(data, path, n);
        double diff = 0.0;
        for (int j = 0; j < 3; ++j) diff = std::max(diff, std::abs(cur[j] - prev[j]));
        if (diff < tol) return cur;
        prev = cur;
    }
    throw tolerance_error("minimal_immersion: quadrature did not converge");
}

std::array<double, 3> hermitian_to_upper_half(const Mat2c& inv_frame, double c) {
    const Cplx A = inv_frame.a, B = inv_frame.b, C = inv_frame.c, D = inv_frame.d;
    const double den = std::norm(C) + std::norm(D);
    if (den == 0.0) throw std::domain_error("immerse: degenerate frame (|C|^2 + |D|^2 = 0)");
    const Cplx w = A * std::conj(C) + B * std::conj(D);
    return {w.real() / den, w.imag() / den, 1.0 / (c * den)};
}

std::array<double, 3> upper_half_to_ball(const std::array<double, 3>& u) {
    const double n2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    const double den = u[0] * u[0] + u[1] * u[1] + (u[2] + 1.0) * (u[2] + 1.0);
    return {2.0 * u[0] / den, 2.0 * u[1] / den, (n2 - 1.0) / den};
}

std::array<double, 3> ball_to_upper_half(const std::array<double, 3>& b) {
    const double n2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    const double den = b[0] * b[0] + b[1] * b[1] + (b[2] - 1.0) * (b[2] - 1.0);
    return {2.0 * b[0] / den, 2.0 * b[1] / den, (1.0 - n2) / den};
}

AmbientPoint immerse(const Frame& frame, double c, AmbientModel model) {
    return immerse_inverse(frame.F.inverse(), c, model);
}

AmbientPoint immerse_inverse(const Mat2c& Finv, double c, AmbientModel model) {
    if (c <= 0.0) throw std::invalid_argument("immerse: mean curvature c must be positive");
    AmbientPoint out;
    out.model = model;
    switch (model) {
        case AmbientModel::hermitian:
            out.hermitian = (1.0 / c) * (Finv * Finv.conj_transpose());
            break;
        case AmbientModel::upper_half:
            out.x = hermitian_to_upper_half(Finv, c);
            break;
        case AmbientModel::poincare_ball: {
            const auto u = hermitian_to_upper_half(Finv, c);
            // normalize to curvature -1, map, then scale back to radius 1/c
            const std::array<double, 3> u1{c * u[0], c * u[1], c * u[2]};
            const auto b = upper_half_to_ball(u1);
            out.x = {b[0] / c, b[1] / c, b[2] / c};
            break;
        }
    }
    return out;
}

SpherePoint su2_action(const SU2Matrix& B, const Cplx& G) {
    const Cplx den = B.b21() * G + B.b22();
    const Cplx num = B.b11 * G + B.b12;
    if (std::abs(den) == 0.0) return SpherePoint{Cplx(0.0, 0.0), true};
    return SpherePoint{num / den, false};
}

Cplx secondary_gauss_from_generator(const FrameGenerator& gen, const Frame& frame) {
    const Mat2c A = gen(frame.end);
    const Mat2c dF = frame.F * A;
    const double scale = std::max(dF.max_abs(), 1e-300);
    const bool c1 = std::abs(dF.c) > 1e-12 * scale;
    const bool c2 = std::abs(dF.d) > 1e-12 * scale;
    if (!c1 && !c2)
        throw std::domain_error("secondary_gauss: frame derivative singular (umbilic/degenerate)");
    const Cplx g1 = c1 ? dF.a / dF.c : dF.b / dF.d;
    if (c1 && c2) {
        const Cplx g2 = dF.b / dF.d;
        const double rel = std::abs(g1 - g2) / std::max(1.0, std::abs(g1));
        if (rel > 1e-8)
            throw std::domain_error("secondary_gauss: dF11/dF21 and dF12/dF22 disagree");
    }
    return g1;
}

Cplx secondary_gauss(const WeierstrassData& data, const Frame& frame) {
    return secondary_gauss_from_generator(generator_from_data(data), frame);
}

MonodromyResult monodromy_from_generator(const FrameGenerator& gen, const Path& loop,
                                         const IntegrateOptions& opts) {
    if (!loop.closed || loop.points.front() != loop.points.back())
        throw std::invalid_argument("monodromy: loop must be closed");
    const Frame f = integrate_frame(gen, loop, opts);
    MonodromyResult r;
    r.B = f.F;  // start frame is the identity
    const Mat2c unit = r.B * r.B.conj_transpose();
    r.defect = max_abs_diff(unit, Mat2c::identity());
    r.det_defect = std::abs(r.B.det() - Cplx(1.0, 0.0));
    r.in_su2 = r.defect <= 1e-6 && r.det_defect <= 1e-6;
    return r;
}

MonodromyResult monodromy(const WeierstrassData& data, const Path& loop,
                          const IntegrateOptions& opts) {
    return monodromy_from_generator(generator_from_data(data), loop, opts);
}

SU2Matrix zmu_loop_action(double mu, int turns) {
    SU2Matrix B;
    B.b11 = std::exp(Cplx(0.0, kPi * mu * turns));
    B.b12 = Cplx(0.0, 0.0);
    return B;
}

}  // namespace cmc1
