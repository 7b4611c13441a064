#pragma once

#include <windform/fieldkit.hpp>
#include <windform/formout.hpp>
#include <windform/terrain.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace windform::swarm {

/// Reynolds-rule parameters. Radii are in mesh units, weights dimensionless.
/// Defaults are the reference set used by the bundled scenarios.
struct BoidParams
{
    double r_sep = 1.0;
    double r_align = 2.5;
    double r_coh = 5.0;
    double w_sep = 1.5;
    double w_align = 1.0;
    double w_coh = 1.0;
    double w_attract = 1.0;
    double v_max = 2.0;
    double a_max = 4.0;
    double dt = 0.05;
};

struct ParamIssue
{
    std::string field; ///< e.g. "v_max"
    std::string message;
};

std::vector<ParamIssue> validate(const BoidParams& params);

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, increment 0x9E3779B97F4A7C15,
/// output mix with the 30/27/31 xor-shift multipliers. Doubles take the top 53 bits.
class SplitMix64
{
public:
    static constexpr const char* name = "splitmix64/v1";

    explicit SplitMix64(uint64_t seed) : m_state(seed) {}

    uint64_t next()
    {
        uint64_t z = (m_state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t m_state;
};

struct AgentState
{
    int id = 0;
    terrain::SurfacePoint sp;
    Vec3 velocity = Vec3::Zero();
};

struct Keyframe
{
    double t = 0.0;
    Vec3 position = Vec3::Zero();
};

/// Animated attractor (positive weight) or detractor (negative weight).
struct AttractorTrack
{
    std::vector<Keyframe> keyframes;
    double weight = 1.0;
};

/// Throws std::invalid_argument unless keyframes are non-empty with strictly
/// increasing times.
void validate(const AttractorTrack& track);

/// Piecewise-linear in time, clamped to the first and last keys.
Vec3 attractor_position(const AttractorTrack& track, double t);

struct StreamlineSpec
{
    Vec2 seed = Vec2::Zero(); ///< raster world XY
    int steps = 1;            ///< keyframe count
    double step_len = 1.0;    ///< raster world units at the raster's peak speed
    double z_offset = 0.0;    ///< depth below the terrain surface
    double key_interval = 1.0;
    double start_time = 0.0;
};

/// Forward-Euler streamline through the raster direction field. Each step advances
/// `step_len * speed / max_speed` along the local direction; every sample is lifted
/// onto the terrain through its UV binding and lowered by `z_offset`. The track
/// ends early if it leaves the UV chart.
AttractorTrack streamline_track(const fieldkit::FieldRaster& raster,
    const terrain::TerrainMesh& mesh, const StreamlineSpec& spec, double weight = 1.0);

enum class NeighborSearch { SpatialHash, AllPairs };

/// Terrain-bound boids. Agents live on the mesh as surface points; every step reads
/// a snapshot of the previous state and writes all agents at once.
class SwarmSim
{
public:
    SwarmSim(std::shared_ptr<const terrain::TerrainMesh> terrain, BoidParams params,
        std::vector<AgentState> agents, uint64_t seed);

    const std::vector<AgentState>& agents() const { return m_agents; }
    const BoidParams& params() const { return m_params; }
    const terrain::TerrainMesh& terrain() const { return *m_terrain; }
    std::shared_ptr<const terrain::TerrainMesh> terrain_ptr() const { return m_terrain; }
    const std::vector<AttractorTrack>& tracks() const { return m_tracks; }
    uint64_t seed() const { return m_seed; }
    /// step_index * dt, rebased whenever dt changes.
    double time() const { return m_time_base + (m_step_index - m_step_base) * m_params.dt; }
    int64_t step_index() const { return m_step_index; }

    /// Throws std::invalid_argument listing the offending fields.
    void set_params(const BoidParams& params);
    void add_track(AttractorTrack track);

    NeighborSearch neighbor_search = NeighborSearch::SpatialHash;

    void step();

    /// SHA-256 over step index, time and every agent's id, triangle, barycentrics and
    /// velocity (IEEE bit patterns), hex encoded.
    std::string digest() const;

private:
    void gather_neighbors(size_t self, const std::vector<Vec3>& positions,
        std::vector<int>& out) const;

    std::shared_ptr<const terrain::TerrainMesh> m_terrain;
    BoidParams m_params;
    std::vector<AgentState> m_agents;
    std::vector<AttractorTrack> m_tracks;
    uint64_t m_seed;
    int64_t m_step_index = 0;
    int64_t m_step_base = 0;
    double m_time_base = 0.0;

    // spatial hash scratch, rebuilt every step
    struct CellRange
    {
        uint64_t key;
        int begin;
        int end;
    };
    std::vector<CellRange> m_cells;
    std::vector<int> m_sorted;
};

/// Places `n` agents uniformly in the UV rectangle `spawn_uv` (rejecting samples
/// outside the chart) with random tangent headings at speed v_max / 2. Random draws
/// per attempt, in agent id order: u, v, heading angle.
SwarmSim init_swarm(int n, uint64_t seed, const Rect& spawn_uv,
    std::shared_ptr<const terrain::TerrainMesh> terrain, const BoidParams& params);

inline void step(SwarmSim& sim)
{
    sim.step();
}

/// Runs `steps` steps, sampling every agent's world position at the start and after
/// every `stride`-th step. `on_step` is called after each step.
formout::TrailSet record_trails(SwarmSim& sim, int steps, int stride,
    const std::function<void(const SwarmSim&)>& on_step = {});

std::vector<Vec3> world_positions(const std::vector<AgentState>& agents,
    const terrain::TerrainMesh& terrain);

/// |sum of unit headings| / N over agents with nonzero speed; 0 when none move.
double polarization(const std::vector<AgentState>& agents);

/// Mean distance from each agent to its nearest other agent. Needs >= 2 agents.
double mean_nn_distance(const std::vector<AgentState>& agents, const terrain::TerrainMesh& terrain);

double mean_height(const std::vector<AgentState>& agents, const terrain::TerrainMesh& terrain);

} // namespace windform::swarm
