#include "cmc1/branch.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

Cplx cpow(const BranchedPoint& p, double mu) {
    if (p.z == Cplx(0.0, 0.0)) throw std::domain_error("cpow: evaluation at the puncture z = 0");
    require_finite(p.z, "cpow");
    const double lr = std::log(std::abs(p.z));
    const double th = p.total_arg();
    return std::exp(Cplx(mu * lr, mu * th));
}

BranchedPoint branch_continue(const BranchedPoint& from, const Cplx& to) {
    // Steps touching the puncture carry the winding along unchanged; branched
    // evaluations there fail on their own, entire data does not care.
    if (to == Cplx(0.0, 0.0) || from.z == Cplx(0.0, 0.0)) return BranchedPoint{to, from.winding};
    const double step = wrap_angle(std::arg(to) - std::arg(from.z));
    const double target = from.total_arg() + step;
    const int w = static_cast<int>(std::lround((target - std::arg(to)) / kTwoPi));
    return BranchedPoint{to, w};
}

Path make_segment(const Cplx& a, const Cplx& b) {
    Path p;
    p.points = {a, b};
    return p;
}

Path make_circle(const Cplx& center, double radius, int samples, int turns) {
    if (samples < 4) throw std::invalid_argument("make_circle: need at least 4 samples");
    Path p;
    p.closed = true;
    const int total = samples * std::abs(turns);
    const double sgn = turns >= 0 ? 1.0 : -1.0;
    p.points.reserve(total + 1);
    for (int i = 0; i < total; ++i) {
        const double t = sgn * kTwoPi * i / samples;
        p.points.push_back(center + radius * Cplx(std::cos(t), std::sin(t)));
    }
    p.points.push_back(p.points.front());  // close exactly
    return p;
}

void validate_path(const Path& path, const std::vector<Cplx>& punctures) {
    if (path.points.size() < 2) throw std::invalid_argument("path: need at least two points");
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        if (path.points[i] == path.points[i + 1])
            throw std::invalid_argument("path: consecutive points coincide");
    }
    for (const Cplx& z : path.points) {
        require_finite(z, "path");
        for (const Cplx& p : punctures) {
            if (z == p) throw std::invalid_argument("path: sample point hits a puncture");
        }
    }
    if (path.closed && path.points.front() != path.points.back())
        throw std::invalid_argument("path: closed path must end at its start");
}

Path refine_path(const Path& path, double max_angle, double max_len) {
    Path out;
    out.closed = path.closed;
    if (path.points.empty()) return out;
    out.points.push_back(path.points.front());
    for (size_t i = 0; i + 1 < path.points.size(); ++i) {
        // Recursively bisect one edge; small stack keeps it iterative.
        std::vector<std::pair<Cplx, Cplx>> stack;
        stack.emplace_back(path.points[i], path.points[i + 1]);
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const bool away = (a != Cplx(0.0, 0.0)) && (b != Cplx(0.0, 0.0));
            const double dang = away ? std::abs(wrap_angle(std::arg(b) - std::arg(a))) : 0.0;
            if ((away && dang > max_angle) || std::abs(b - a) > max_len) {
                const Cplx mid = 0.5 * (a + b);
                stack.emplace_back(mid, b);
                stack.emplace_back(a, mid);
            } else {
                out.points.push_back(b);
            }
        }
    }
    return out;
}

std::vector<int> path_windings(const Path& path, int start_winding) {
    std::vector<int> w;
    w.reserve(path.points.size());
    BranchedPoint cur{path.points.front(), start_winding};
    w.push_back(cur.winding);
    for (size_t i = 1; i < path.points.size(); ++i) {
        cur = branch_continue(cur, path.points[i]);
        w.push_back(cur.winding);
    }
    return w;
}

}  // namespace cmc1
