#pragma once

#include <windform/fieldkit.hpp>
#include <windform/formout.hpp>
#include <windform/terrain.hpp>

#include <optional>
#include <vector>

namespace windform::morphscatter {

/// K topologically identical targets placed at equally spaced keyframes over
/// frames [0, frame_count - 1].
class MorphTargetSet
{
public:
    /// Throws std::invalid_argument unless K >= 2, 2 <= K <= frame_count and all
    /// targets share vertex count and index buffer.
    MorphTargetSet(std::vector<Mesh> targets, int frame_count);

    const std::vector<Mesh>& targets() const { return m_targets; }
    int frame_count() const { return m_frame_count; }
    double max_frame() const { return m_frame_count - 1; }

private:
    std::vector<Mesh> m_targets;
    int m_frame_count;
};

/// Piecewise-linear blend between the two targets bracketing `frame`.
Mesh morph_evaluate(const MorphTargetSet& set, double frame);

/// scale multiplier = intercept + slope * speed
struct SpeedScaleMap
{
    double slope = 0.0;
    double intercept = 1.0;
};

struct ScatterSpec
{
    int nx = 10;
    int ny = 10;
    double base_scale = 1.0;
    std::optional<SpeedScaleMap> scale_from_speed;
    Vec3 pivot_offset = Vec3::Zero();
    bool bind_frame = true; ///< frame from wind speed; otherwise `fixed_frame`
    bool bind_yaw = true;   ///< yaw from wind direction; otherwise 0
    double fixed_frame = 0.0;
};

struct Instance
{
    terrain::SurfacePoint sp;
    double yaw = 0.0; ///< radians, counter-clockwise about the surface normal
    double scale = 1.0;
    double frame = 0.0;
    Vec3 pivot_offset = Vec3::Zero();
};

/// Yaw that turns an instance's local +Y (forward) onto the planar wind direction.
/// Compass bearing theta maps to yaw = -theta.
double yaw_from_direction(const Vec2& dir);

/// One instance per UV grid node ((i + 0.5) / nx, (j + 0.5) / ny), row-major with
/// j (v) outer. Nodes outside the UV chart are skipped. Frames normalize the sampled
/// speed by the raster-wide speed range.
std::vector<Instance> scatter_instances(const terrain::TerrainMesh& mesh,
    const fieldkit::FieldRaster& raster, const MorphTargetSet& set, const ScatterSpec& spec);

/// Local-to-world transform of an instance: scale, rotate by yaw about the normal
/// axis through `pivot_offset`, then place in the surface tangent frame at `sp`.
Affine instance_transform(const terrain::TerrainMesh& mesh, const Instance& inst);

/// Evaluates each instance's morph frame and pairs it with its transform.
formout::InstanceSet bake_instances(const terrain::TerrainMesh& mesh,
    const std::vector<Instance>& instances, const MorphTargetSet& set);

} // namespace windform::morphscatter
