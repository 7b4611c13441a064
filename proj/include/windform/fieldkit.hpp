#pragma once

#include <windform/geometry.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace windform::fieldkit {

/// One wind observation. Directions use the compass convention: 0 degrees points
/// north (+Y) and angles grow clockwise, so 90 degrees points east (+X).
struct StationRecord
{
    std::string id;
    double easting = 0.0;
    double northing = 0.0;
    double direction_deg = 0.0;
    double speed = 0.0;
};

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Parses a station table with the header `Station,UTMX,UTMY,Direction,Speed`
/// (case-insensitive, any column order). Rows are returned in file order.
/// A direction of exactly 360 is folded to 0; anything else outside [0, 360)
/// is rejected. Errors carry the 1-based row number of the offending line.
std::vector<StationRecord> parse_stations(std::string_view text);

/// Unit vector (east, north) for a compass bearing in degrees.
Vec2 compass_to_vector(double direction_deg);

/// Compass bearing in [0, 360) for a planar direction vector.
double vector_to_compass(const Vec2& dir);

struct IdwParams
{
    double power = 2.0;
    double coincidence_radius = 1e-9;
};

struct GridSpec
{
    int ncols = 64;
    int nrows = 64;
    double origin_x = 0.0; ///< lower-left corner
    double origin_y = 0.0;
    double cell_size = 1.0;
};

/// Square-cell grid of `ncols` x `nrows` covering the station bounding box padded
/// by `pad` (fraction of the box extent) on every side, centered on the box.
GridSpec default_grid(const std::vector<StationRecord>& stations, int ncols = 64, int nrows = 64,
    double pad = 0.1);

/// Regular grid of wind speed and unit direction. Row 0 is the southernmost row;
/// cell (col, row) is centered at origin + (col + 0.5, row + 0.5) * cell_size.
class FieldRaster
{
public:
    FieldRaster() = default;
    explicit FieldRaster(const GridSpec& grid);

    int ncols() const { return m_grid.ncols; }
    int nrows() const { return m_grid.nrows; }
    const GridSpec& grid() const { return m_grid; }
    double cell_size() const { return m_grid.cell_size; }

    Vec2 cell_center(int col, int row) const;
    Rect extent() const;

    double speed(int col, int row) const { return m_speed[index(col, row)]; }
    Vec2 direction(int col, int row) const
    {
        const auto i = index(col, row);
        return {m_dir_x[i], m_dir_y[i]};
    }

    void set(int col, int row, double speed, const Vec2& dir);

    const std::vector<double>& speed_channel() const { return m_speed; }
    const std::vector<double>& dir_x_channel() const { return m_dir_x; }
    const std::vector<double>& dir_y_channel() const { return m_dir_y; }

    double min_speed() const;
    double max_speed() const;

    size_t index(int col, int row) const
    {
        return static_cast<size_t>(row) * static_cast<size_t>(m_grid.ncols) +
               static_cast<size_t>(col);
    }

private:
    GridSpec m_grid;
    std::vector<double> m_speed;
    std::vector<double> m_dir_x;
    std::vector<double> m_dir_y;
};

struct IdwSample
{
    double speed = 0.0;
    Vec2 dir = Vec2::UnitY();
    bool fallback = false; ///< direction came from the nearest station
};

/// Shepard interpolation at a single point.
IdwSample idw_at(const std::vector<StationRecord>& stations, const IdwParams& params, double x,
    double y);

/// Interpolates speed and direction onto every cell center of `grid`.
/// Cells where the weighted direction vector cancels out take the nearest station's
/// direction; each such cell appends a message to `diagnostics` when provided.
FieldRaster idw_interpolate(const std::vector<StationRecord>& stations, const IdwParams& params,
    const GridSpec& grid, std::vector<std::string>* diagnostics = nullptr);

struct FieldSample
{
    double speed = 0.0;
    Vec2 dir = Vec2::UnitY();
};

/// Bilinear sample over cell centers with clamp-to-edge addressing.
FieldSample sample_field(const FieldRaster& raster, double x, double y);

enum class Channel { Speed, DirX, DirY };

std::string_view channel_name(Channel channel);

/// Single-channel grid as read from ESRI ASCII text. `values` is stored
/// bottom row first, like FieldRaster.
struct AsciiGrid
{
    GridSpec grid;
    double nodata = -9999.0;
    std::vector<double> values;

    double at(int col, int row) const
    {
        return values[static_cast<size_t>(row) * static_cast<size_t>(grid.ncols) +
                      static_cast<size_t>(col)];
    }
};

std::string write_raster(const FieldRaster& raster, Channel channel);
AsciiGrid read_raster(std::string_view text);

/// Rebuilds a field from three single-channel grids sharing one geometry.
/// Directions are renormalized to unit length.
FieldRaster raster_from_channels(const AsciiGrid& speed, const AsciiGrid& dir_x,
    const AsciiGrid& dir_y);

} // namespace windform::fieldkit
