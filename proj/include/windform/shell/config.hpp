#pragma once

#include <windform/fieldkit.hpp>
#include <windform/iktrail.hpp>
#include <windform/morphscatter.hpp>
#include <windform/swarm.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace windform::shell {

/// Every problem found in a config, each prefixed with its field path.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return m_issues; }

private:
    std::vector<std::string> m_issues;
};

struct RasterPaths
{
    std::filesystem::path speed;
    std::filesystem::path dir_x;
    std::filesystem::path dir_y;
};

/// Grid layout for station interpolation: either derived from the station box
/// (ncols, nrows, pad) or explicit when `origin` and `cell_size` are given.
struct GridConfig
{
    int ncols = 64;
    int nrows = 64;
    double pad = 0.1;
    std::optional<fieldkit::GridSpec> explicit_grid;
};

struct FieldConfig
{
    std::optional<std::filesystem::path> stations;
    std::optional<RasterPaths> rasters;
    fieldkit::IdwParams idw;
    GridConfig grid;
};

struct ScatterJobConfig
{
    std::string name;
    std::vector<std::filesystem::path> targets;
    int frame_count = 25;
    morphscatter::ScatterSpec spec;
};

struct SubShapeConfig
{
    int joint = 0;
    std::filesystem::path mesh;
};

struct SweepJobConfig
{
    std::string name;
    std::vector<double> bones;
    Vec3 root = Vec3::Zero();
    iktrail::ParamCurve effector{iktrail::curves::Line{}};
    std::optional<iktrail::ParamCurve> root_curve;
    std::vector<SubShapeConfig> sub_shapes;
    int frames = 1;
    double tolerance = 1e-6;
    int max_iterations = 50;
};

/// Attractor defined by keyframes, or by a streamline through the wind field.
struct TrackConfig
{
    double weight = 1.0;
    std::vector<swarm::Keyframe> keyframes;
    std::optional<swarm::StreamlineSpec> streamline;
};

struct SwarmJobConfig
{
    std::string name;
    int agents = 100;
    uint64_t seed = 0;
    Rect spawn_uv{0.0, 0.0, 1.0, 1.0};
    swarm::BoidParams params;
    int steps = 100;
    int stride = 1;
    double tube_radius = 0.1;
    int tube_sides = 6;
    std::vector<TrackConfig> tracks;
};

struct ProjectConfig
{
    std::filesystem::path base_dir; ///< relative paths resolve against this
    std::filesystem::path terrain;
    std::optional<Rect> uv_bounds_world;
    FieldConfig field;
    std::filesystem::path output_dir;
    std::vector<ScatterJobConfig> scatter;
    std::vector<SweepJobConfig> sweeps;
    std::vector<SwarmJobConfig> swarms;
};

/// Parses and validates a config document. Relative paths resolve against
/// `base_dir`, referenced files must exist, and exactly one field source
/// (stations or rasters) must be given. All problems are reported together.
/// WINDFORM_OUTPUT_DIR, when set, replaces the output directory.
ProjectConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);

ProjectConfig load_config(const std::filesystem::path& path);

/// Field paths such as "params.v_max" for every invalid parameter in `params`.
std::vector<std::string> param_issues(const swarm::BoidParams& params, const std::string& prefix);

/// Applies the keys of `patch` onto `params`. Unknown keys and non-numeric values
/// are reported with `prefix` field paths; the result is validated as a whole.
std::vector<std::string> patch_params(swarm::BoidParams& params, const nlohmann::json& patch,
    const std::string& prefix);

nlohmann::json params_to_json(const swarm::BoidParams& params);

} // namespace windform::shell
