#include "cmc1/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

namespace {

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<double, 3> sub(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const std::array<double, 3>& a) { return std::sqrt(dot(a, a)); }

void add_quad_faces(SurfaceMesh& mesh) {
    const int nrings = mesh.wrap_v ? mesh.nv : mesh.nv - 1;
    for (int i = 0; i + 1 < mesh.nu; ++i) {
        for (int j = 0; j < nrings; ++j) {
            const int jn = (j + 1) % mesh.nv;
            const int a = mesh.index(i, j);
            const int b = mesh.index(i + 1, j);
            const int c = mesh.index(i + 1, jn);
            const int d = mesh.index(i, jn);
            mesh.faces.push_back({a, b, c});
            mesh.faces.push_back({a, c, d});
        }
    }
}

void conformality_diagnostics(SurfaceMesh& mesh) {
    double worst = 0.0;
    const double du = mesh.nu > 1 ? mesh.param_u[1] - mesh.param_u[0] : 1.0;
    const double dv = mesh.nv > 1 ? mesh.param_v[1] - mesh.param_v[0] : 1.0;
    for (int i = 1; i + 1 < mesh.nu; ++i) {
        for (int j = 1; j + 1 < mesh.nv; ++j) {
            const auto& x = mesh.vertices[mesh.index(i, j)];
            const auto eu = sub(mesh.vertices[mesh.index(i + 1, j)], mesh.vertices[mesh.index(i - 1, j)]);
            const auto ev = sub(mesh.vertices[mesh.index(i, j + 1)], mesh.vertices[mesh.index(i, j - 1)]);
            const double s = 1.0 / (x[2] * x[2]);  // hyperbolic metric factor
            const double E = s * dot(eu, eu) / (4.0 * du * du);
            const double G = s * dot(ev, ev) / (4.0 * dv * dv);
            const double F = s * dot(eu, ev) / (4.0 * du * dv);
            if (E + G > 0.0) worst = std::max(worst, std::abs(F) / (E + G));
        }
    }
    mesh.conformality_defect = worst;
}

}  // namespace

void compute_grid_normals(SurfaceMesh& mesh) {
    if (mesh.nu < 3 || mesh.nv < 3)
        throw std::domain_error("compute_grid_normals: degenerate grid");
    mesh.normals.assign(mesh.vertices.size(), {0.0, 0.0, 0.0});

    auto scaled = [](double w, const std::array<double, 3>& x) {
        return std::array<double, 3>{w * x[0], w * x[1], w * x[2]};
    };
    auto add3 = [](const std::array<double, 3>& a, const std::array<double, 3>& b,
                   const std::array<double, 3>& c) {
        return std::array<double, 3>{a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]};
    };

    for (int i = 0; i < mesh.nu; ++i) {
        for (int j = 0; j < mesh.nv; ++j) {
            std::array<double, 3> tu{};
            if (i == 0) {
                // second-order one-sided
                tu = add3(scaled(-3.0, mesh.vertices[mesh.index(0, j)]),
                          scaled(4.0, mesh.vertices[mesh.index(1, j)]),
                          scaled(-1.0, mesh.vertices[mesh.index(2, j)]));
            } else if (i == mesh.nu - 1) {
                tu = add3(scaled(3.0, mesh.vertices[mesh.index(i, j)]),
                          scaled(-4.0, mesh.vertices[mesh.index(i - 1, j)]),
                          scaled(1.0, mesh.vertices[mesh.index(i - 2, j)]));
            } else {
                tu = sub(mesh.vertices[mesh.index(i + 1, j)], mesh.vertices[mesh.index(i - 1, j)]);
            }

            std::array<double, 3> tv{};
            if (mesh.wrap_v) {
                tv = sub(mesh.vertices[mesh.index(i, (j + 1) % mesh.nv)],
                         mesh.vertices[mesh.index(i, (j - 1 + mesh.nv) % mesh.nv)]);
            } else if (j == 0) {
                tv = add3(scaled(-3.0, mesh.vertices[mesh.index(i, 0)]),
                          scaled(4.0, mesh.vertices[mesh.index(i, 1)]),
                          scaled(-1.0, mesh.vertices[mesh.index(i, 2)]));
            } else if (j == mesh.nv - 1) {
                tv = add3(scaled(3.0, mesh.vertices[mesh.index(i, j)]),
                          scaled(-4.0, mesh.vertices[mesh.index(i, j - 1)]),
                          scaled(1.0, mesh.vertices[mesh.index(i, j - 2)]));
            } else {
                tv = sub(mesh.vertices[mesh.index(i, j + 1)], mesh.vertices[mesh.index(i, j - 1)]);
            }

            auto n = cross(tu, tv);
            const double l = norm(n);
            if (l == 0.0) throw std::domain_error("compute_grid_normals: zero normal");
            mesh.normals[mesh.index(i, j)] = {n[0] / l, n[1] / l, n[2] / l};
        }
    }
}

void compute_normals(SurfaceMesh& mesh) {
    if (mesh.faces.empty())
        throw std::domain_error("compute_normals: mesh has no faces (degenerate grid)");
    mesh.normals.assign(mesh.vertices.size(), {0.0, 0.0, 0.0});
    for (const auto& f : mesh.faces) {
        const auto n = cross(sub(mesh.vertices[f[1]], mesh.vertices[f[0]]),
                             sub(mesh.vertices[f[2]], mesh.vertices[f[0]]));
        for (int k = 0; k < 3; ++k) {
            mesh.normals[f[k]][0] += n[0];
            mesh.normals[f[k]][1] += n[1];
            mesh.normals[f[k]][2] += n[2];
        }
    }
    for (auto& n : mesh.normals) {
        const double l = norm(n);
        if (l == 0.0) throw std::domain_error("compute_normals: zero normal at a vertex");
        n = {n[0] / l, n[1] / l, n[2] / l};
    }
}

SurfaceMesh mesh_generate_rect(const CatalogSurface& surface, const RectGridSpec& spec) {
    if (!surface.data) throw std::invalid_argument("mesh_generate_rect: surface has no (f, g) data");
    if (spec.nx < 1 || spec.ny < 1) throw std::invalid_argument("mesh_generate_rect: empty grid");
    const WeierstrassData& data = *surface.data;
    const FrameGenerator gen = generator_from_data(data);

    SurfaceMesh mesh;
    mesh.nu = spec.nx;
    mesh.nv = spec.ny;
    mesh.surface_name = surface.name;
    mesh.vertices.resize(static_cast<size_t>(spec.nx) * spec.ny);
    mesh.param_u.resize(spec.nx);
    mesh.param_v.resize(spec.ny);

    auto grid_z = [&](int i, int j) {
        const double x = spec.nx == 1 ? spec.x0 : spec.x0 + (spec.x1 - spec.x0) * i / (spec.nx - 1);
        const double y = spec.ny == 1 ? spec.y0 : spec.y0 + (spec.y1 - spec.y0) * j / (spec.ny - 1);
        return Cplx(x, y);
    };
    for (int i = 0; i < spec.nx; ++i) mesh.param_u[i] = grid_z(i, 0).real();
    for (int j = 0; j < spec.ny; ++j) mesh.param_v[j] = grid_z(0, j).imag();

    // spanning tree: z0 -> (0,0), then down column 0, then along each row
    std::vector<Mat2c> row_start(spec.nx);
    Frame base;
    if (grid_z(0, 0) != data.z0)
        base = integrate_frame(gen, make_segment(data.z0, grid_z(0, 0)));
    row_start[0] = base.F;
    for (int i = 1; i < spec.nx; ++i) {
        const Frame f = integrate_frame(gen, make_segment(grid_z(i - 1, 0), grid_z(i, 0)), {},
                                        row_start[i - 1]);
        row_start[i] = f.F;
    }
    for (int i = 0; i < spec.nx; ++i) {
        Mat2c F = row_start[i];
        Frame fr;
        fr.F = F;
        fr.end = BranchedPoint{grid_z(i, 0), 0};
        mesh.vertices[mesh.index(i, 0)] = immerse(fr, data.c, AmbientModel::upper_half).x;
        for (int j = 1; j < spec.ny; ++j) {
            const Frame g = integrate_frame(gen, make_segment(grid_z(i, j - 1), grid_z(i, j)), {}, F);
            F = g.F;
            Frame cur;
            cur.F = F;
            cur.end = BranchedPoint{grid_z(i, j), 0};
            mesh.vertices[mesh.index(i, j)] = immerse(cur, data.c, AmbientModel::upper_half).x;
        }
    }

    add_quad_faces(mesh);
    if (!mesh.faces.empty()) compute_grid_normals(mesh);
    conformality_diagnostics(mesh);
    return mesh;
}

SurfaceMesh mesh_generate_annulus(const CatalogSurface& surface, const AnnulusGridSpec& spec) {
    if (!surface.dual && !surface.data)
        throw std::invalid_argument("mesh_generate_annulus: surface has no data");
    if (spec.nr < 2 || spec.ntheta < 8)
        throw std::invalid_argument("mesh_generate_annulus: grid too coarse");
    if (!(spec.rmin > 0.0 && spec.rmax > spec.rmin))
        throw std::invalid_argument("mesh_generate_annulus: bad radial range");

    // dual data integrates F^{-1} directly; direct data integrates F and the
    // conversion inverts
    const bool dual_route = surface.dual.has_value();
    const FrameGenerator gen = dual_route
                                   ? generator_from_dual(surface.dual->G, surface.dual->omega)
                                   : generator_from_data(*surface.data);
    SurfaceMesh mesh;
    mesh.nu = spec.nr;
    mesh.nv = spec.ntheta;
    mesh.wrap_v = true;
    mesh.surface_name = surface.name;
    mesh.vertices.resize(static_cast<size_t>(spec.nr) * spec.ntheta);
    mesh.param_u.resize(spec.nr);
    mesh.param_v.resize(spec.ntheta);

    const double s0 = std::log(spec.rmin), s1 = std::log(spec.rmax);
    for (int i = 0; i < spec.nr; ++i)
        mesh.param_u[i] = s0 + (s1 - s0) * i / (spec.nr - 1);
    for (int j = 0; j < spec.ntheta; ++j) mesh.param_v[j] = kTwoPi * j / spec.ntheta;

    auto grid_z = [&](int i, int j) {
        return std::polar(std::exp(mesh.param_u[i]), mesh.param_v[j]);
    };

    // base frame: the closed dual form keeps the catalog end positioning;
    // the direct route starts in the F(z0) = identity gauge
    const BranchedPoint base_pt{grid_z(0, 0), 0};
    Mat2c base = Mat2c::identity();
    if (dual_route && surface.closed_dual_frame) {
        base = surface.closed_dual_frame(base_pt);
    } else if (!dual_route) {
        base = integrate_frame(gen, make_segment(surface.data->z0, base_pt.z)).F;
    }
    auto to_point = [&](const Mat2c& F) {
        const double c = dual_route ? 1.0 : surface.data->c;
        return dual_route ? immerse_inverse(F, c, AmbientModel::upper_half).x
                          : immerse_inverse(F.inverse(), c, AmbientModel::upper_half).x;
    };

    // ring 0 in the theta direction, then a spoke outward for every theta
    std::vector<Mat2c> ring0(spec.ntheta);
    std::vector<int> ring0_winding(spec.ntheta, 0);
    ring0[0] = base;
    {
        BranchedPoint cur = base_pt;
        for (int j = 1; j < spec.ntheta; ++j) {
            const Path arc = make_segment(grid_z(0, j - 1), grid_z(0, j));
            const Frame f = integrate_frame(gen, arc, {}, ring0[j - 1], cur.winding);
            ring0[j] = f.F;
            cur = f.end;
            ring0_winding[j] = cur.winding;
        }
        // seam diagnostic: continue the last arc back to theta = 2 pi
        const Path closing = make_segment(grid_z(0, spec.ntheta - 1), grid_z(0, 0));
        const Frame f = integrate_frame(gen, closing, {}, ring0[spec.ntheta - 1], cur.winding);
        mesh.seam_defect = norm(sub(to_point(f.F), to_point(base)));
    }

    for (int j = 0; j < spec.ntheta; ++j) {
        Mat2c F = ring0[j];
        int winding = ring0_winding[j];
        mesh.vertices[mesh.index(0, j)] = to_point(F);
        for (int i = 1; i < spec.nr; ++i) {
            const Path spoke = make_segment(grid_z(i - 1, j), grid_z(i, j));
            const Frame g = integrate_frame(gen, spoke, {}, F, winding);
            F = g.F;
            winding = g.end.winding;
            mesh.vertices[mesh.index(i, j)] = to_point(F);
        }
    }

    add_quad_faces(mesh);
    compute_grid_normals(mesh);
    conformality_diagnostics(mesh);

    if (dual_route && surface.mu > 0.0 && surface.end_m > 0) {
        MeshEnd inner;
        inner.boundary = "inner";
        inner.ideal = {0.0, 0.0, 0.0};
        inner.mu = surface.mu;
        inner.m = surface.end_m;
        MeshEnd outer;
        outer.boundary = "outer";
        outer.ideal_infinity = true;
        outer.mu = surface.mu;
        outer.m = surface.end_m;
        mesh.ends = {inner, outer};
    }
    return mesh;
}

SurfaceMesh mesh_flat_horosphere(int nx, int ny, double extent, double height) {
    SurfaceMesh mesh;
    mesh.nu = nx;
    mesh.nv = ny;
    mesh.surface_name = "flat-horosphere";
    mesh.vertices.resize(static_cast<size_t>(nx) * ny);
    mesh.param_u.resize(nx);
    mesh.param_v.resize(ny);
    for (int i = 0; i < nx; ++i) mesh.param_u[i] = -extent + 2.0 * extent * i / (nx - 1);
    for (int j = 0; j < ny; ++j) mesh.param_v[j] = -extent + 2.0 * extent * j / (ny - 1);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            mesh.vertices[mesh.index(i, j)] = {mesh.param_u[i], mesh.param_v[j], height};
    add_quad_faces(mesh);
    compute_grid_normals(mesh);
    // every boundary of the plane x3 = height limits to the ideal point at
    // infinity
    for (const char* side : {"inner", "outer", "side_v0", "side_v1"}) {
        MeshEnd e;
        e.boundary = side;
        e.ideal_infinity = true;
        e.mu = 0.0;
        e.m = 1;
        mesh.ends.push_back(e);
    }
    return mesh;
}

double hyperbolic_distance(const std::array<double, 3>& p, const std::array<double, 3>& q) {
    const auto d = sub(p, q);
    const double arg = 1.0 + dot(d, d) / (2.0 * p[2] * q[2]);
    return std::acosh(std::max(1.0, arg));
}

double mesh_angle_defect_curvature(const SurfaceMesh& mesh, int iu, int iv) {
    if (iu <= 0 || iu + 1 >= mesh.nu || (!mesh.wrap_v && (iv <= 0 || iv + 1 >= mesh.nv)))
        throw std::invalid_argument("mesh_angle_defect_curvature: interior vertices only");
    const int center = mesh.index(iu, iv);
    double angle_sum = 0.0;
    double area_sum = 0.0;
    for (const auto& f : mesh.faces) {
        int k = -1;
        if (f[0] == center) k = 0;
        else if (f[1] == center) k = 1;
        else if (f[2] == center) k = 2;
        if (k < 0) continue;
        const int a = f[k], b = f[(k + 1) % 3], c = f[(k + 2) % 3];
        const double ab = hyperbolic_distance(mesh.vertices[a], mesh.vertices[b]);
        const double ac = hyperbolic_distance(mesh.vertices[a], mesh.vertices[c]);
        const double bc = hyperbolic_distance(mesh.vertices[b], mesh.vertices[c]);
        // flat law of cosines on the hyperbolic lengths; fine at mesh scale
        const double cosA = (ab * ab + ac * ac - bc * bc) / (2.0 * ab * ac);
        angle_sum += std::acos(std::clamp(cosA, -1.0, 1.0));
        const double s = 0.5 * (ab + ac + bc);
        area_sum += std::sqrt(std::max(0.0, s * (s - ab) * (s - ac) * (s - bc)));
    }
    if (area_sum == 0.0) throw std::domain_error("mesh_angle_defect_curvature: zero area star");
    return (kTwoPi - angle_sum) / (area_sum / 3.0);
}

RectGridSpec refine(const RectGridSpec& s) {
    RectGridSpec r = s;
    r.nx = 2 * s.nx - 1;
    r.ny = 2 * s.ny - 1;
    return r;
}

AnnulusGridSpec refine(const AnnulusGridSpec& s) {
    AnnulusGridSpec r = s;
    r.nr = 2 * s.nr - 1;
    r.ntheta = 2 * s.ntheta;
    return r;
}

}  // namespace cmc1
