#pragma once

#include <windform/geometry.hpp>

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace windform::formout {

class ExportError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct TrailPoint
{
    double t = 0.0;
    Vec3 position = Vec3::Zero();
};

/// Time-stamped polyline per agent; times strictly increase within a trail.
struct TrailSet
{
    std::vector<std::vector<TrailPoint>> trails;
};

struct InstanceEntry
{
    std::shared_ptr<const Mesh> mesh;
    Affine transform = Affine::Identity();
};

/// Meshes placed by affine transforms. Transforms must be invertible.
struct InstanceSet
{
    std::vector<InstanceEntry> instances;

    void add(std::shared_ptr<const Mesh> mesh, const Affine& transform);
    size_t size() const { return instances.size(); }
};

/// Applies `transform` to every vertex of `mesh`.
Mesh bake(const Mesh& mesh, const Affine& transform);

/// One baked mesh per instance, in instance order.
std::vector<Mesh> bake_all(const InstanceSet& set);

/// Drops consecutive points closer than 1e-12.
std::vector<Vec3> remove_duplicate_points(const std::vector<Vec3>& polyline);

/// Ring frame used by the sweep: one per (deduplicated) polyline point.
struct SweepFrame
{
    Vec3 center;
    Vec3 tangent;
    Vec3 normal;
    Vec3 binormal;
};

/// Rotation-minimizing frames along the polyline. The first normal is the world axis
/// with the smallest component along the first segment, orthogonalized. Interior
/// tangents bisect the adjoining segments; end tangents follow the end segments.
std::vector<SweepFrame> transport_frames(const std::vector<Vec3>& polyline);

/// Circular tube around `polyline` with flat end caps. Produces
/// `sides * point_count + 2` vertices (ring vertices first, then the two cap centers),
/// and a closed, consistently oriented triangle surface.
Mesh sweep_tube(const std::vector<Vec3>& polyline, double radius, int sides);

struct SceneObject
{
    std::string name;
    Mesh mesh;
};

/// Ordered list of named meshes, one OBJ group each.
struct Scene
{
    std::vector<SceneObject> objects;

    void add(std::string name, Mesh mesh) { objects.push_back({std::move(name), std::move(mesh)}); }
    void add_instances(const std::string& prefix, const InstanceSet& set);
    bool empty() const { return objects.empty(); }
};

/// Area-weighted per-vertex normals.
std::vector<Vec3> vertex_normals(const Mesh& mesh);

std::string format_obj(const Scene& scene);
std::string format_ply(const Mesh& mesh);

void write_obj(const Scene& scene, const std::filesystem::path& path);
void write_ply(const Mesh& mesh, const std::filesystem::path& path);

/// Count of undirected edges whose incident face count differs from two.
size_t non_manifold_edge_count(const Mesh& mesh);

} // namespace windform::formout
