#pragma once
#include <optional>

#include "ws/geo.hpp"
#include "ws/rng.hpp"
#include "ws/types.hpp"

namespace ws {

enum class SegmentKind : uint8_t {
    GRAV = 0, TILE, BLK1, BLK2, CONC1, CONC2,
    CURB, ASC_SLP, DESC_SLP, GENT_ASC_SLP, GENT_DESC_SLP, TACTILE,
};
inline constexpr int kNumSegmentKinds = 12;

const char* segment_kind_name(SegmentKind k);
SegmentKind segment_kind_from_name(const std::string& name);

/// Surface class of a segment kind (forward traversal; laps handle sign).
SurfaceLabel segment_surface_class(SegmentKind k);

struct SegmentSpec {
    SegmentKind kind = SegmentKind::CONC1;
    double length_m = 0;
    double heading_deg = 0;     // direction of travel, degrees clockwise from north
    double angle_deg = 0;       // slope kinds
    double roughness = 0;       // pavement noise amplitude, m/s^2 (0 = kind default)
    double bump_spacing_m = 0;  // tactile kinds (0 = default 0.3)
};

struct RouteSpec {
    double origin_lat = 0;
    double origin_lon = 0;
    std::vector<SegmentSpec> segments;

    double total_length() const;
};

/// Arc-length parameterized polyline built from a RouteSpec.
class RouteGeometry {
public:
    explicit RouteGeometry(const RouteSpec& spec);

    double length() const { return length_; }
    const RouteSpec& spec() const { return spec_; }
    const LocalProjection& projection() const { return proj_; }

    /// Position at arc length s (clamped to [0, length]).
    void position_at(double s, double& lat, double& lon) const;
    void local_at(double s, double& x, double& y) const;

    /// Segment index containing arc length s.
    int segment_index_at(double s) const;
    SegmentKind kind_at(double s) const { return spec_.segments[segment_index_at(s)].kind; }

    /// Arc length of the nearest point of the polyline to a position, plus
    /// the distance to it in meters.
    double project_arc(double lat, double lon, double* distance_m = nullptr) const;

    /// Arc-length midpoints of every CURB segment.
    std::vector<double> curb_positions() const;

    /// Start arc length of segment i.
    double segment_start(int i) const { return seg_start_[i]; }

private:
    RouteSpec spec_;
    LocalProjection proj_;
    double length_ = 0;
    std::vector<double> seg_start_;           // per segment
    std::vector<double> vx_, vy_;             // polyline vertices (local m)
    std::vector<double> vert_s_;              // arc length at each vertex
};

struct UserProfile {
    int id = 0;
    bool electric = false;
    double speed_mps = 1.0;        // in [0.6, 1.6]
    double vibration_gain = 1.0;   // > 0
    double sensor_tilt_deg = 0;    // mount rotation about the lateral axis, <= 10
    double noise_floor = 0.1;      // white noise sigma, m/s^2
};

inline constexpr double kGravity = 9.80665;

/// Instantaneous 3-axis contribution of a surface at time t into a segment,
/// excluding the shared noise floor. `noise` must be the low-pass-filtered
/// unit-variance roughness process at this sample.
void surface_signal(SegmentKind kind, const SegmentSpec& seg, const UserProfile& profile,
                    bool reversed, double t_in_segment, double noise,
                    double& ax, double& ay, double& az);

/// Default pavement roughness amplitude for a kind, m/s^2 (0 for non-pavement).
double pavement_roughness(SegmentKind k);

/// Synthesize one lap. Lap 2 traverses the route in reverse, which flips the
/// slope signs exactly as a counterclockwise lap would.
RunRecording synthesize_run(const RouteGeometry& route, const UserProfile& profile,
                            int lap, uint64_t seed);

/// The checked-in default route (also shipped as configs/route_default.json).
RouteSpec default_route();

/// Default nine users: six manual, three electric, parameters jittered from
/// `seed`. Other counts keep the 2:1 manual:electric mix.
std::vector<UserProfile> default_profiles(uint64_t seed, int count = 9);

/// 9 users x 3 laps over a route. Per-recording RNG streams are derived
/// from the master seed, so recordings are independent and reproducible.
std::vector<RunRecording> run_experiment(const RouteGeometry& route,
                                         const std::vector<UserProfile>& profiles,
                                         uint64_t seed);

std::vector<RunRecording> default_experiment(uint64_t seed);

/// Seconds around a curb crossing labeled Curb. The physical curb is
/// ~0.3 m, but the crossing disturbs the chair long enough that windows
/// centered on it must win the majority vote (see window_majority_label).
inline constexpr double kCurbEventSeconds = 5.0;

/// Half-sine curb impulse length.
inline constexpr double kCurbImpulseSeconds = 0.2;

// Route file I/O (JSON).
RouteSpec load_route(const std::string& path);
void save_route(const RouteSpec& spec, const std::string& path);
std::string route_to_json(const RouteSpec& spec);
RouteSpec route_from_json(const std::string& text);

}  // namespace ws
