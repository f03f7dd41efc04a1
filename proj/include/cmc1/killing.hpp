#ifndef CMC1_KILLING_HPP
#define CMC1_KILLING_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmc1/ends.hpp"
#include "cmc1/mesh.hpp"

namespace cmc1 {

enum class KillingKind { rotation_x3, dilation_origin, generic_translation };

// Killing vector field of the upper-half-space model.  The fixed ideal
// points are the axis endpoints of the isometry; the generic translation is
// only the local normal form near the origin and carries no usable fixed
// points for end bookkeeping.
struct KillingField {
    KillingKind kind = KillingKind::dilation_origin;

    // whether the given mesh end's ideal point is fixed by the field
    bool fixes(const MeshEnd& end) const {
        if (kind == KillingKind::generic_translation) return false;
        if (end.ideal_infinity) return true;
        return end.ideal[0] == 0.0 && end.ideal[1] == 0.0 && end.ideal[2] == 0.0;
    }
};

std::array<double, 3> killing_at(const KillingField& field, const std::array<double, 3>& x);

// Hyperbolic normal projection u = <phi, N>: with n the euclidean unit
// normal, u = (phi . n) / x3.
std::vector<double> normal_projection_field(const SurfaceMesh& mesh, const KillingField& field);

struct HorizonComponent {
    int face_count = 0;
    int sign = 0;
    std::vector<std::string> touches_ends;  // "inner"/"outer" boundaries reached
    bool counted_in_adjusted = false;
};

struct HorizonResult {
    std::vector<int> face_sign;       // -1, 0 (horizon), +1 per face
    std::vector<int> face_component;  // component id or -1 for horizon faces
    std::vector<HorizonComponent> components;
    int v = 0;
    std::optional<int> v_adj;  // absent when end metadata is missing
    bool degenerate = false;
    double tol_used = 0.0;
    double max_abs_u = 0.0;
};

// Horizon, visible-set count v and adjusted count v_adj on the mesh.
// tol_rel scales with max |u| so field rescaling cannot move the horizon.
HorizonResult vision_numbers(const SurfaceMesh& mesh, const KillingField& field,
                             double tol_rel = 1e-6);

struct EndProjectionLimit {
    bool bounded = false;
    double limit = 0.0;  // meaningful only when bounded
};

// Limiting value of u at a regular end for each field type: the generic
// translation diverges, the dilation tends to -mu/m, the rotation to 0.
EndProjectionLimit end_projection_limit(const EndData& end, KillingKind kind);

}  // namespace cmc1

#endif
