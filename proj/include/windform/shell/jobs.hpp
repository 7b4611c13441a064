#pragma once

#include <windform/shell/config.hpp>

#include <windform/formout.hpp>
#include <windform/terrain.hpp>

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace windform::shell {

/// Terrain and wind field shared by every job of a project.
struct Workspace
{
    std::shared_ptr<const terrain::TerrainMesh> terrain;
    fieldkit::FieldRaster raster;
    terrain::UvBinding binding;
    std::vector<std::string> diagnostics;
};

Workspace load_workspace(const ProjectConfig& config);

/// `<job>_<kind>_<index>.<ext>` inside `dir`.
std::filesystem::path output_path(const std::filesystem::path& dir, const std::string& job,
    const std::string& kind, int index, const std::string& ext = "obj");

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

Mesh load_shape(const std::filesystem::path& path);

formout::InstanceSet run_scatter(const Workspace& ws, const ScatterJobConfig& job);
formout::InstanceSet run_sweep(const SweepJobConfig& job);

swarm::AttractorTrack build_track(const Workspace& ws, const TrackConfig& track);
swarm::SwarmSim build_swarm(const Workspace& ws, const SwarmJobConfig& job);

/// Header and one row per sampled state: step,time,polarization,mean_nn_distance,mean_height.
/// mean_nn_distance is left empty for single-agent swarms.
std::string metrics_header();
std::string metrics_row(const swarm::SwarmSim& sim);

/// One tube per trail with at least two distinct points, grouped as `<prefix>_<agent>`.
formout::Scene trail_scene(const formout::TrailSet& trails, const std::string& prefix,
    double radius, int sides);

struct SwarmOutputs
{
    std::filesystem::path trails;
    std::filesystem::path metrics;
};

/// Runs a swarm job for `steps` steps and writes the trail OBJ and metrics CSV.
SwarmOutputs run_swarm(const Workspace& ws, const SwarmJobConfig& job,
    const std::filesystem::path& out_dir);

} // namespace windform::shell
