#ifndef CMC1_MESH_HPP
#define CMC1_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "cmc1/catalog.hpp"

namespace cmc1 {

// Which ideal point a mesh boundary ring approaches, with the end exponents.
struct MeshEnd {
    std::string boundary;  // "inner" or "outer"
    bool ideal_infinity = false;
    std::array<double, 3> ideal{0.0, 0.0, 0.0};
    double mu = 0.0;
    int m = 0;
};

// Sampled surface in upper-half-space coordinates.  Vertices are stored
// row-major: index(iu, iv) = iu * nv + iv.  For annular grids u is s = ln r
// and v = theta wraps around.
struct SurfaceMesh {
    int nu = 0;
    int nv = 0;
    bool wrap_v = false;
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<double, 3>> normals;
    std::vector<std::array<int, 3>> faces;
    std::vector<double> param_u;
    std::vector<double> param_v;
    std::vector<MeshEnd> ends;
    std::string surface_name;
    double conformality_defect = 0.0;
    double seam_defect = 0.0;  // closure error of the angular direction

    int index(int iu, int iv) const { return iu * nv + iv; }
};

struct RectGridSpec {
    int nx = 10, ny = 10;
    double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
};

struct AnnulusGridSpec {
    int nr = 24, ntheta = 24;
    double rmin = 0.01, rmax = 100.0;
};

// Frame integration over a spanning tree of the grid, then conversion to the
// upper-half model.  Direct (f, g) data with F(z0) = identity gauge.
SurfaceMesh mesh_generate_rect(const CatalogSurface& surface, const RectGridSpec& spec);

// Annular mesh for dual-data surfaces; the start frame is the closed dual
// frame at the base point, so the catalog positioning (ends at the ideal
// origin and infinity) is preserved.
SurfaceMesh mesh_generate_annulus(const CatalogSurface& surface, const AnnulusGridSpec& spec);

// Euclidean unit normals averaged from incident faces, oriented by
// (d/du x d/dv).  Throws when the mesh has no faces.
void compute_normals(SurfaceMesh& mesh);

// Normals from central-difference grid tangents d/du x d/dv (one-sided at
// open boundaries, wrapped in v for annuli).  Exact for the symmetries of
// revolution meshes; used by the generators.
void compute_grid_normals(SurfaceMesh& mesh);

// Synthetic flat horosphere {x3 = height} over a rectangle, for tests.
SurfaceMesh mesh_flat_horosphere(int nx, int ny, double extent, double height);

// Hyperbolic distance between upper-half-space points.
double hyperbolic_distance(const std::array<double, 3>& p, const std::array<double, 3>& q);

// Discrete Gaussian curvature at an interior vertex: angle defect of the
// hyperbolic edge lengths over the averaged triangle area.
double mesh_angle_defect_curvature(const SurfaceMesh& mesh, int iu, int iv);

// Refined copy (each grid interval halved).
RectGridSpec refine(const RectGridSpec& s);
AnnulusGridSpec refine(const AnnulusGridSpec& s);

}  // namespace cmc1

#endif
