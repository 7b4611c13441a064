#pragma once

#include <windform/geometry.hpp>

#include <functional>
#include <string>
#include <vector>

/// Procedural assets: test terrains, the bundled demo landscape and avian shapes.
namespace windform::synthetic {

/// Regular heightfield over `extent` with `nx` x `ny` quads, each split along its
/// (0, 2) diagonal. UVs span [0, 1]^2 over the extent.
Mesh heightfield(int nx, int ny, const Rect& extent,
    const std::function<double(double, double)>& height);

/// Flat square [0, size]^2 at z = 0.
Mesh flat_terrain(double size, int cells);

/// Paraboloid z = curvature * r^2 over [-half, half]^2; minimum at the origin.
Mesh bowl_terrain(double half, int cells, double curvature);

/// The bundled 100 m x 100 m landscape: rolling hills and a shallow valley.
Mesh hills_terrain();

/// Three bird-like shapes sharing one topology (wings raised, gliding, swept down).
std::vector<Mesh> avian_targets();

/// Slim feather blade along local +X, for IK sub-shapes.
Mesh feather();

/// The seven-station wind table used throughout the examples and tests.
std::string reference_stations_csv();

} // namespace windform::synthetic
