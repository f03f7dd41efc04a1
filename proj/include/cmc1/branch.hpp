#ifndef CMC1_BRANCH_HPP
#define CMC1_BRANCH_HPP

#include <vector>

#include "cmc1/complexnum.hpp"

namespace cmc1 {

// A point in the punctured plane C \ {0} together with the number of signed
// turns around the puncture accumulated by the path that reached it.  The
// continuous argument of the point is arg(z) + 2*pi*winding with arg the
// principal argument in (-pi, pi].
struct BranchedPoint {
    Cplx z;
    int winding = 0;

    double total_arg() const { return std::arg(z) + kTwoPi * winding; }
};

// z^mu on the branch selected by p.winding.
Cplx cpow(const BranchedPoint& p, double mu);

// Continues the branch from `from` to the nearby point `to`.  The step from.z
// -> to must subtend less than pi around the origin; the winding of the result
// is chosen so the continuous argument changes by that subtended angle.
BranchedPoint branch_continue(const BranchedPoint& from, const Cplx& to);

// Piecewise-linear path given by its sample points.
struct Path {
    std::vector<Cplx> points;
    bool closed = false;
};

Path make_segment(const Cplx& a, const Cplx& b);
Path make_circle(const Cplx& center, double radius, int samples, int turns = 1);

// Validates the path invariants: consecutive points distinct, no sample at a
// puncture, closed paths end where they start.
void validate_path(const Path& path, const std::vector<Cplx>& punctures);

// Inserts midpoints until every step subtends less than `max_angle` around the
// origin and is shorter than `max_len`.
Path refine_path(const Path& path, double max_angle = kPi / 2, double max_len = 0.25);

// Windings accumulated around the origin at every sample of the path,
// starting from `start_winding` at the first point.
std::vector<int> path_windings(const Path& path, int start_winding = 0);

}  // namespace cmc1

#endif
