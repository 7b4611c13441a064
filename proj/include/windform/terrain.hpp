#pragma once

#include <windform/geometry.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace windform::terrain {

class LoadError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A point on the mesh: triangle index plus barycentric weights that are
/// non-negative and sum to one.
struct SurfacePoint
{
    int tri = 0;
    std::array<double, 3> bary{1.0, 0.0, 0.0};

    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// Reads the Wavefront OBJ subset `v`, `vt`, `f` (triangles and quads, 1-based or
/// negative indices, `v`, `v/vt`, `v/vt/vn`, `v//vn` corners).
///
/// Quads are split along the (0, 2) diagonal. Output vertices are one per distinct
/// (position, texcoord) pair, ordered by position index and then by first use, so a
/// position referenced with two different texcoords is duplicated. Positions no face
/// references are dropped. With `require_uvs` every corner must carry a texcoord;
/// otherwise texcoords are kept only when all corners carry one.
///
/// Unsupported records are skipped and reported through `warnings`.
Mesh read_obj(std::string_view text, bool require_uvs, std::vector<std::string>* warnings = nullptr);

/// Closest point on triangle (a, b, c) to p, returned as barycentric weights.
std::array<double, 3> closest_barycentric(const Vec3& p, const Vec3& a, const Vec3& b,
    const Vec3& c);

/// UV-mapped triangulated terrain with a bounding volume hierarchy for nearest-point
/// queries and a bucket grid for UV-space lookups. Immutable after construction.
class TerrainMesh
{
public:
    /// Validates indices, triangle areas and UVs, flips every winding when most
    /// triangle normals point to -Z, then builds the acceleration structures.
    explicit TerrainMesh(Mesh mesh, std::optional<Rect> uv_bounds_world = std::nullopt);

    const std::vector<Vec3>& vertices() const { return m_mesh.vertices; }
    const std::vector<Triangle>& triangles() const { return m_mesh.triangles; }
    const std::vector<Vec2>& uvs() const { return m_mesh.uvs; }
    const Mesh& mesh() const { return m_mesh; }
    int triangle_count() const { return static_cast<int>(m_mesh.triangles.size()); }

    const std::optional<Rect>& uv_bounds_world() const { return m_uv_bounds_world; }
    void set_uv_bounds_world(std::optional<Rect> r) { m_uv_bounds_world = r; }

    const Vec3& triangle_normal(int tri) const { return m_normals[static_cast<size_t>(tri)]; }
    Bounds3 bounds() const;

    /// Nearest surface point to `p`; exact ties go to the lowest triangle index.
    SurfacePoint nearest(const Vec3& p) const;

    /// Surface point whose UV equals `uv`, or nothing when `uv` lies outside the chart.
    /// When several triangles contain `uv` the lowest index wins.
    std::optional<SurfacePoint> locate_uv(const Vec2& uv) const;

private:
    struct BvhNode
    {
        Bounds3 box;
        int left = -1; ///< child index, or -1 for leaves
        int right = -1;
        int first = 0; ///< leaf range into m_bvh_tris
        int count = 0;
    };

    int build_node(int first, int count, std::vector<Vec3>& centroids);

    Mesh m_mesh;
    std::optional<Rect> m_uv_bounds_world;
    std::vector<Vec3> m_normals;
    std::vector<BvhNode> m_nodes;
    std::vector<int> m_bvh_tris;

    // UV bucket grid
    Vec2 m_uv_min = Vec2::Zero();
    Vec2 m_uv_max = Vec2::Zero();
    int m_uv_res = 1;
    std::vector<std::vector<int>> m_uv_cells;
};

TerrainMesh load_mesh(std::string_view obj_text, std::vector<std::string>* warnings = nullptr);

Vec3 world_position(const TerrainMesh& mesh, const SurfacePoint& sp);
/// Geometric normal of the containing triangle (unit length).
Vec3 surface_normal(const TerrainMesh& mesh, const SurfacePoint& sp);
Vec2 surface_uv(const TerrainMesh& mesh, const SurfacePoint& sp);

SurfacePoint project_to_surface(const TerrainMesh& mesh, const Vec3& p);

/// Removes the normal component of `v` at `sp`.
Vec3 tangent_project(const TerrainMesh& mesh, const SurfacePoint& sp, const Vec3& v);

/// Moves along the surface: the displacement is flattened onto the tangent plane at
/// `sp`, applied to the world position and the result re-projected onto the mesh.
/// This approximates geodesic walking and is exact on planar regions.
SurfacePoint step_on_surface(const TerrainMesh& mesh, const SurfacePoint& sp,
    const Vec3& displacement);

/// Orthonormal frame at a surface point. `forward` is world +Y flattened onto the
/// tangent plane (world +X when the normal is parallel to Y); right = forward x normal.
struct TangentFrame
{
    Vec3 right;
    Vec3 forward;
    Vec3 normal;
};

TangentFrame tangent_frame(const TerrainMesh& mesh, const SurfacePoint& sp);

/// Affine map between mesh UV space and raster world XY.
struct UvBinding
{
    Rect world;

    Vec2 to_world(const Vec2& uv) const
    {
        return {world.min_x + uv.x() * world.width(), world.min_y + uv.y() * world.height()};
    }
    Vec2 to_uv(const Vec2& xy) const
    {
        return {(xy.x() - world.min_x) / world.width(), (xy.y() - world.min_y) / world.height()};
    }
};

/// Uses the mesh's explicit UV rectangle when present, else `raster_extent`.
UvBinding make_uv_binding(const TerrainMesh& mesh, const Rect& raster_extent);

/// Maps a raster-world XY point onto the terrain and returns the surface position
/// lowered by `z_offset`. Nothing when the point falls outside the UV chart.
std::optional<Vec3> lift_to_terrain(const TerrainMesh& mesh, const UvBinding& binding,
    const Vec2& xy, double z_offset);

} // namespace windform::terrain
