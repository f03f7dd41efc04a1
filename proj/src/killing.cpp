#include "cmc1/killing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cmc1 {

std::array<double, 3> killing_at(const KillingField& field, const std::array<double, 3>& x) {
    if (x[2] <= 0.0) throw std::domain_error("killing_at: point must satisfy x3 > 0");
    switch (field.kind) {
        case KillingKind::rotation_x3:
            return {-x[1], x[0], 0.0};
        case KillingKind::dilation_origin:
            return {x[0], x[1], x[2]};
        case KillingKind::generic_translation:
            return {1.0, 0.0, 0.0};
    }
    return {0.0, 0.0, 0.0};
}

std::vector<double> normal_projection_field(const SurfaceMesh& mesh, const KillingField& field) {
    if (mesh.normals.size() != mesh.vertices.size())
        throw std::invalid_argument("normal_projection_field: mesh normals missing");
    std::vector<double> u(mesh.vertices.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& x = mesh.vertices[i];
        const auto& n = mesh.normals[i];
        const auto phi = killing_at(field, x);
        u[i] = (phi[0] * n[0] + phi[1] * n[1] + phi[2] * n[2]) / x[2];
    }
    return u;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

HorizonResult vision_numbers(const SurfaceMesh& mesh, const KillingField& field, double tol_rel) {
    const std::vector<double> u = normal_projection_field(mesh, field);

    HorizonResult res;
    res.max_abs_u = 0.0;
    for (double x : u) res.max_abs_u = std::max(res.max_abs_u, std::abs(x));
    res.tol_used = tol_rel * res.max_abs_u;

    // scale of the field itself on the mesh: u that is pure cancellation
    // noise relative to it means phi is tangent everywhere
    double field_scale = 0.0;
    for (const auto& x : mesh.vertices) {
        const auto phi = killing_at(field, x);
        field_scale = std::max(
            field_scale, std::sqrt(phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2]) / x[2]);
    }

    const int nf = static_cast<int>(mesh.faces.size());
    res.face_sign.assign(nf, 0);
    int near_zero = 0;
    for (int f = 0; f < nf; ++f) {
        const auto& tri = mesh.faces[f];
        const double uf = (u[tri[0]] + u[tri[1]] + u[tri[2]]) / 3.0;
        const bool mixed = (u[tri[0]] > res.tol_used || u[tri[1]] > res.tol_used || u[tri[2]] > res.tol_used) &&
                           (u[tri[0]] < -res.tol_used || u[tri[1]] < -res.tol_used || u[tri[2]] < -res.tol_used);
        if (std::abs(uf) <= res.tol_used || mixed) {
            res.face_sign[f] = 0;
            ++near_zero;
        } else {
            res.face_sign[f] = uf > 0.0 ? 1 : -1;
        }
    }
    if (res.max_abs_u <= 1e-7 * field_scale || near_zero * 2 > nf) {
        res.degenerate = true;
        res.face_component.assign(nf, -1);
        return res;
    }

    // faces adjacent iff sharing an edge, both off-horizon, same sign
    // edge key: ordered vertex pair
    std::vector<std::pair<long long, int>> edge_owner;
    edge_owner.reserve(static_cast<size_t>(nf) * 3);
    const long long nvtx = static_cast<long long>(mesh.vertices.size());
    UnionFind uf(nf);
    auto edge_key = [nvtx](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<long long>(a) * nvtx + b;
    };
    for (int f = 0; f < nf; ++f) {
        if (res.face_sign[f] == 0) continue;
        for (int e = 0; e < 3; ++e)
            edge_owner.emplace_back(edge_key(mesh.faces[f][e], mesh.faces[f][(e + 1) % 3]), f);
    }
    std::sort(edge_owner.begin(), edge_owner.end());
    for (size_t i = 0; i + 1 < edge_owner.size(); ++i) {
        if (edge_owner[i].first != edge_owner[i + 1].first) continue;
        const int f1 = edge_owner[i].second, f2 = edge_owner[i + 1].second;
        if (res.face_sign[f1] == res.face_sign[f2]) uf.unite(f1, f2);
    }

    std::vector<int> root_to_comp(nf, -1);
    res.face_component.assign(nf, -1);
    for (int f = 0; f < nf; ++f) {
        if (res.face_sign[f] == 0) continue;
        const int r = uf.find(f);
        if (root_to_comp[r] < 0) {
            root_to_comp[r] = static_cast<int>(res.components.size());
            HorizonComponent comp;
            comp.sign = res.face_sign[f];
            res.components.push_back(comp);
        }
        const int cid = root_to_comp[r];
        res.face_component[f] = cid;
        res.components[cid].face_count += 1;
    }
    res.v = static_cast<int>(res.components.size());

    // boundary contact: faces having a vertex on a boundary row (or column,
    // when the angular direction does not wrap)
    for (int f = 0; f < nf; ++f) {
        const int cid = res.face_component[f];
        if (cid < 0) continue;
        for (int k = 0; k < 3; ++k) {
            const int row = mesh.faces[f][k] / mesh.nv;
            const int col = mesh.faces[f][k] % mesh.nv;
            std::vector<const char*> sides;
            if (row == 0) sides.push_back("inner");
            if (row == mesh.nu - 1) sides.push_back("outer");
            if (!mesh.wrap_v && col == 0) sides.push_back("side_v0");
            if (!mesh.wrap_v && col == mesh.nv - 1) sides.push_back("side_v1");
            for (const char* side : sides) {
                auto& t = res.components[cid].touches_ends;
                if (std::find(t.begin(), t.end(), side) == t.end()) t.emplace_back(side);
            }
        }
    }

    if (!mesh.ends.empty()) {
        int adj = 0;
        for (auto& comp : res.components) {
            bool ok = true;
            for (const std::string& side : comp.touches_ends) {
                const auto it = std::find_if(mesh.ends.begin(), mesh.ends.end(),
                                             [&](const MeshEnd& e) { return e.boundary == side; });
                if (it == mesh.ends.end() || !field.fixes(*it)) ok = false;
            }
            comp.counted_in_adjusted = ok;
            if (ok) ++adj;
        }
        res.v_adj = adj;
    } else {
        // bounded components can still be counted without end metadata
        bool all_bounded = true;
        int adj = 0;
        for (auto& comp : res.components) {
            comp.counted_in_adjusted = comp.touches_ends.empty();
            if (comp.counted_in_adjusted) ++adj;
            else all_bounded = false;
        }
        if (all_bounded) res.v_adj = adj;  // otherwise unknown
    }
    return res;
}

EndProjectionLimit end_projection_limit(const EndData& end, KillingKind kind) {
    if (end.m < 1) throw std::invalid_argument("end_projection_limit: end not classified");
    switch (kind) {
        case KillingKind::generic_translation:
            return {false, 0.0};
        case KillingKind::dilation_origin:
            return {true, -end.mu / end.m};
        case KillingKind::rotation_x3:
            return {true, 0.0};
    }
    return {false, 0.0};
}

}  // namespace cmc1
