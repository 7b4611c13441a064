#pragma once

#include <windform/shell/session.hpp>

#include <atomic>
#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace windform::shell {

/// HTTP+JSON front end over a SessionManager.
///
///   POST   /sessions                 {config?, scenario?, seed?} -> {session_id, ...}
///   POST   /sessions/{id}/strokes    {points, duration_s, weight, z_offset} -> {track_index, revision}
///   PATCH  /sessions/{id}/params     {partial params} -> {revision, params}
///   POST   /sessions/{id}/run        {steps} -> {step_index, time, metrics, revision}
///   GET    /sessions/{id}/state      -> agents, attractors, metrics, revision
///   GET    /sessions/{id}/stream     -> text/event-stream of state payloads, one per step
///   POST   /sessions/{id}/export     {kind: trails|scene, radius, sides} -> {paths}
///   DELETE /sessions/{id}
///   GET    /sessions/{id}/log        -> applied command log
///   POST   /sessions/{id}/replay     -> {session_id, digest} of a fresh replayed session
class Service
{
public:
    explicit Service(SessionManager& sessions);
    ~Service();

    /// Binds to `host` on `port` (0 picks a free port) and returns the bound port, or -1.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    bool listen();
    void stop();

private:
    void routes();

    SessionManager& m_sessions;
    std::unique_ptr<httplib::Server> m_server;
    std::atomic<bool> m_stopping{false};
};

/// Terrain heightfield and wind overlay decimated to at most `max_cells` per side, in
/// raster world XY, for viewers that do not load the mesh.
nlohmann::json overview(const Workspace& ws, int max_cells = 64);

} // namespace windform::shell
