#pragma once
#include <stdexcept>

namespace ws {

inline constexpr double kMetersPerDegLat = 111320.0;

/// Local equirectangular projection around a reference point. Good to
/// centimetres over the few-km extents this pipeline works with.
struct LocalProjection {
    double ref_lat = 0;
    double ref_lon = 0;
    double m_per_deg_east = kMetersPerDegLat;  // scaled by cos(ref_lat)

    static LocalProjection around(double lat, double lon);

    /// Degrees -> local meters (x east, y north). Throws on positions more
    /// than 10 km from the reference.
    void project(double lat, double lon, double& x, double& y) const;

    /// Local meters -> degrees.
    void unproject(double x, double y, double& lat, double& lon) const;
};

}  // namespace ws
