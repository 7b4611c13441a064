#pragma once

#include <windform/shell/jobs.hpp>

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace windform::shell {

/// Failure with an HTTP status: 404 unknown session, 409 run conflict, 422 validation.
class ApiError : public std::runtime_error
{
public:
    ApiError(int status, const std::string& message, std::vector<std::string> issues = {})
        : std::runtime_error(message)
        , status(status)
        , issues(std::move(issues))
    {
    }

    int status;
    std::vector<std::string> issues;

    nlohmann::json body() const;
};

/// What a session was created from; together with the command log it determines the
/// simulation state.
struct SessionSpec
{
    std::shared_ptr<const ProjectConfig> config;
    std::shared_ptr<const Workspace> workspace;
    SwarmJobConfig scenario;
};

/// One interactive swarm. Stroke and parameter commands are queued and applied at the
/// next step boundary (immediately when idle); run and export are exclusive and fail
/// with 409 while a run is in progress. Every applied command is logged with the step
/// index it took effect at, so replaying the log on a fresh session reproduces the state.
class Session
{
public:
    Session(std::string id, SessionSpec spec);

    const std::string& id() const { return m_id; }
    const SessionSpec& spec() const { return m_spec; }

    /// {points: [[x, y], ...], duration_s, weight, z_offset} -> track index.
    int add_stroke(const nlohmann::json& body);
    /// Partial BoidParams -> new revision.
    int64_t patch_params(const nlohmann::json& body);
    /// Advances `steps` steps (or until closed); returns step_index, metrics and revision.
    nlohmann::json run(const nlohmann::json& body);
    nlohmann::json export_files(const nlohmann::json& body);

    nlohmann::json state() const;
    nlohmann::json log() const;
    int64_t revision() const;
    /// Digest of agents, tracks and params.
    std::string digest() const;

    /// Replays a log produced by `log()` on this (fresh) session.
    void replay(const nlohmann::json& log);

    /// Blocks until a step newer than `seen` is committed, the session closes or the
    /// timeout passes. Returns the newest state payload, skipping intermediate steps.
    std::optional<std::string> wait_for_state(int64_t& seen, std::chrono::milliseconds timeout);
    /// State payload for a new stream subscriber, with its step sequence number.
    std::string subscribe(int64_t& seen);
    void unsubscribe();

    void close();
    bool closed() const { return m_closed; }
    bool running() const;

private:
    struct Pending
    {
        enum class Kind { Stroke, Params } kind;
        nlohmann::json body;
        std::vector<Vec3> stroke_points;
        swarm::BoidParams params;
    };

    void apply_locked(const Pending& cmd);
    void drain_locked();
    void advance_locked(int64_t to_step);
    void step_locked();
    nlohmann::json state_locked() const;
    std::string digest_locked() const;
    std::vector<Vec3> lift_stroke(const nlohmann::json& body, std::vector<std::string>& issues) const;

    std::string m_id;
    SessionSpec m_spec;
    mutable std::mutex m_mutex;
    std::condition_variable m_cv;
    swarm::SwarmSim m_sim;
    formout::TrailSet m_trails;
    std::deque<Pending> m_pending;
    swarm::BoidParams m_pending_params;
    size_t m_pending_strokes = 0;
    nlohmann::json m_log = nlohmann::json::array();
    int64_t m_revision = 0;
    int m_exports = 0;
    bool m_running = false;
    std::atomic<bool> m_closed{false};
    int m_subscribers = 0;
    int64_t m_published_seq = 0;
    std::string m_published;
};

/// Owns the live sessions. Sessions are created from an inline config or the served
/// default config.
class SessionManager
{
public:
    explicit SessionManager(std::optional<ProjectConfig> default_config = std::nullopt,
        std::filesystem::path base_dir = ".");

    /// Body: {config?: ProjectConfig document, scenario?: swarm job name, seed?: integer}.
    std::shared_ptr<Session> create(const nlohmann::json& body);
    std::shared_ptr<Session> get(const std::string& id) const;
    void remove(const std::string& id);
    /// Fresh session built from `id`'s creation spec with its log replayed.
    std::shared_ptr<Session> replay(const std::string& id);

    void close_all();
    size_t size() const;

private:
    std::shared_ptr<Session> make(SessionSpec spec);

    std::optional<ProjectConfig> m_default;
    std::shared_ptr<const Workspace> m_default_workspace;
    std::filesystem::path m_base_dir;
    mutable std::mutex m_mutex;
    std::map<std::string, std::shared_ptr<Session>> m_sessions;
};

} // namespace windform::shell
