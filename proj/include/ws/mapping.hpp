#pragma once
#include <map>
#include <string>

#include "ws/roadsim.hpp"
#include "ws/types.hpp"

namespace ws {

struct AccessibilityBin {
    int index = 0;            // bin number along the route arc
    double s_mid = 0;         // arc length of the bin midpoint
    double lat = 0, lon = 0;  // bin midpoint on the route
    double value = 0;         // max normalized error over users/windows, in [0,1]
    int samples = 0;          // windows aggregated into this bin
};

struct ClusterPlotPoint {
    double lat = 0, lon = 0;
    int cluster = 0;
    int user = 0, lap = 0;
};

struct Rgb {
    int r = 0, g = 0, b = 0;
};

/// Per-user min-max normalization to [0,1]; a constant sequence maps to 0.
std::vector<double> minmax_normalize_per_user(const std::vector<double>& errors,
                                              const std::vector<int>& users);

struct ScoredWindow {
    double lat = 0, lon = 0;
    double normalized_error = 0;
};

/// Aggregate normalized errors into 5 m arc-length bins; a bin's value is
/// the maximum over every user and window that falls into it. Windows more
/// than `max_offroute_m` from the route are dropped (count reported).
std::vector<AccessibilityBin> bin_max_aggregate(const std::vector<ScoredWindow>& windows,
                                                const RouteGeometry& route,
                                                double bin_m, double max_offroute_m,
                                                int* dropped = nullptr);

/// Blue (0) to red (1): R = round(255 r), G = 0, B = round(255 (1 - r)).
Rgb color_scale(double ratio);
std::string color_hex(const Rgb& c);

/// Fixed 16-color palette for cluster plots.
const std::vector<std::string>& cluster_palette();

/// RFC 7946 FeatureCollection of point features, deterministic order/bytes.
void emit_geojson_bins(const std::vector<AccessibilityBin>& bins, const std::string& path);
void emit_geojson_clusters(const std::vector<ClusterPlotPoint>& points,
                           const std::string& path);

/// Standalone SVG overview: route polyline, colored points, legend.
void emit_svg_bins(const std::vector<AccessibilityBin>& bins, const RouteGeometry& route,
                   const std::string& path);
void emit_svg_clusters(const std::vector<ClusterPlotPoint>& points,
                       const RouteGeometry& route, const std::string& path);

}  // namespace ws
