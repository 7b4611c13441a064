#pragma once

#include <windform/formout.hpp>
#include <windform/geometry.hpp>

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace windform::iktrail {

/// Serial chain of rigid bones. joints[0] is the root, joints[N] the end effector.
struct JointChain
{
    std::vector<double> bone_lengths;
    std::vector<Vec3> joints;

    /// Chain laid out along `direction` from `root`.
    static JointChain straight(std::vector<double> bone_lengths, const Vec3& root,
        const Vec3& direction = Vec3::UnitX());

    const Vec3& root() const { return joints.front(); }
    const Vec3& end_effector() const { return joints.back(); }
    double reach() const;
    int bone_count() const { return static_cast<int>(bone_lengths.size()); }
};

struct IkResult
{
    JointChain chain;
    int iterations = 0;
    double error = 0.0; ///< final end effector distance to target
};

/// FABRIK with the root pinned. Targets at or beyond full reach (less `tol`) yield a
/// chain fully extended along root -> target. After 20 passes without converging the
/// pose is reseeded once with a planar layout that ends on the target (an equal-turn
/// arc, or three straight groups folded around one bone when arcs cannot bend that far),
/// bent toward the side the current pose leans to; passes then continue from it.
IkResult solve_ik(const JointChain& chain, const Vec3& target, double tol, int max_iters);

/// Parametric curves evaluated on t in [0, 1] (t is clamped).
namespace curves {

struct Line
{
    Vec3 start = Vec3::Zero();
    Vec3 end = Vec3::UnitX();
};

/// center + radius * (cos(a) * axis_u + sin(a) * axis_v), a from start to end angle.
struct Arc
{
    Vec3 center = Vec3::Zero();
    double radius = 1.0;
    double start_angle = 0.0;
    double end_angle = 3.14159265358979323846;
    Vec3 axis_u = Vec3::UnitX();
    Vec3 axis_v = Vec3::UnitY();
};

/// Full turn starting at `phase`.
struct Circle
{
    Vec3 center = Vec3::Zero();
    double radius = 1.0;
    double phase = 0.0;
    Vec3 axis_u = Vec3::UnitX();
    Vec3 axis_v = Vec3::UnitY();
};

/// center + amplitude_k * sin(2 pi frequency_k t + phase_k) per axis.
struct Lissajous
{
    Vec3 center = Vec3::Zero();
    Vec3 amplitude = Vec3(1.0, 1.0, 0.0);
    Vec3 frequency = Vec3(1.0, 2.0, 0.0);
    Vec3 phase = Vec3::Zero();
};

/// Arc-length parameterized polyline.
struct Polyline
{
    std::vector<Vec3> points;
};

} // namespace curves

class ParamCurve
{
public:
    using Kind = std::variant<curves::Line, curves::Arc, curves::Circle, curves::Lissajous,
        curves::Polyline>;

    ParamCurve(Kind kind); // NOLINT(google-explicit-constructor)

    Vec3 evaluate(double t) const;
    const Kind& kind() const { return m_kind; }

private:
    Kind m_kind;
    std::vector<double> m_cumulative; ///< polyline arc length per point
};

struct SubShape
{
    int joint = 0;
    std::shared_ptr<const Mesh> mesh;
};

struct SweepJob
{
    JointChain chain;
    ParamCurve effector_curve{curves::Line{}};
    std::optional<ParamCurve> root_curve;
    std::vector<SubShape> sub_shapes;
    int frames = 1;
    double tolerance = 1e-6;
    int max_iterations = 50;
};

/// Frame of joint `joint`: origin at the joint, local +X along its bone (the last
/// bone for the end effector), local +Z toward global +Z (or +X when the bone is
/// within 1e-6 of vertical).
Affine joint_frame(const JointChain& chain, int joint);

struct SweepResult
{
    formout::InstanceSet instances; ///< ordered by (frame, joint)
    std::vector<JointChain> poses;  ///< solved pose per frame
};

/// Animates the job over `frames` samples and accumulates every sub-shape placement
/// into one set. Each frame warm-starts from the previous solution; frame 0 starts
/// from `job.chain` (moved onto the root curve when one is given).
SweepResult snapshot_sweep(const SweepJob& job);

} // namespace windform::iktrail
