#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace windform {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Affine = Eigen::Affine3d;

using Triangle = std::array<int, 3>;

/// Axis-aligned planar rectangle.
struct Rect
{
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    bool overlaps(const Rect& other) const
    {
        return min_x <= other.max_x && other.min_x <= max_x && min_y <= other.max_y &&
               other.min_y <= max_y;
    }
};

struct Bounds3
{
    Vec3 min = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 max = Vec3::Constant(-std::numeric_limits<double>::infinity());

    void extend(const Vec3& p)
    {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }
    void extend(const Bounds3& b)
    {
        min = min.cwiseMin(b.min);
        max = max.cwiseMax(b.max);
    }
    bool empty() const { return (min.array() > max.array()).any(); }
};

/// Plain indexed triangle mesh. `uvs` is either empty or one entry per vertex.
struct Mesh
{
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
    std::vector<Vec2> uvs;

    bool has_uvs() const { return !uvs.empty() && uvs.size() == vertices.size(); }
    Bounds3 bounds() const
    {
        Bounds3 b;
        for (const auto& v : vertices) b.extend(v);
        return b;
    }
};

/// Returns `v / |v|`, or zero when `|v| <= eps`.
inline Vec3 normalized_or_zero(const Vec3& v, double eps = 1e-12)
{
    const double n = v.norm();
    return n > eps ? Vec3(v / n) : Vec3::Zero();
}

/// Shortest round-trip decimal representation of `value`.
std::string format_number(double value);

} // namespace windform
