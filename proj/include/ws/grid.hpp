#pragma once
#include <unordered_map>

#include "ws/geo.hpp"
#include "ws/types.hpp"

namespace ws {

/// 5 m geo-mesh over the route. Cells are aligned to multiples of the cell
/// width in the local projection; only traversed cells get class IDs, which
/// are assigned in order of first traversal.
class GridIndex {
public:
    GridIndex(LocalProjection proj, double cell_m) : proj_(proj), cell_m_(cell_m) {}

    int count() const { return static_cast<int>(id_to_cell_.size()); }
    double cell_width() const { return cell_m_; }
    const LocalProjection& projection() const { return proj_; }

    /// Cell ID of a position, -1 if the covering cell was never traversed.
    int id_at(double lat, double lon) const;

    /// Cell ID with nearest-cell fallback within `fallback_m` meters of a
    /// cell center; -1 when nothing qualifies.
    int id_near(double lat, double lon, double fallback_m) const;

    /// Registers the covering cell if new; returns its ID.
    int add_position(double lat, double lon);

    const std::vector<std::pair<int, int>>& cells() const { return id_to_cell_; }
    void add_cell(int row, int col);  // used by the loader

private:
    static uint64_t key(int row, int col) {
        return (static_cast<uint64_t>(static_cast<uint32_t>(row)) << 32) |
               static_cast<uint32_t>(col);
    }
    void cell_of(double lat, double lon, int& row, int& col) const;

    LocalProjection proj_;
    double cell_m_;
    std::unordered_map<uint64_t, int> lookup_;
    std::vector<std::pair<int, int>> id_to_cell_;  // (row, col) by ID
};

/// Build the index from positions in first-traversal order.
GridIndex build_grid_index(const std::vector<std::pair<double, double>>& lat_lon,
                           const LocalProjection& proj, double cell_m = 5.0);

struct GridAssignment {
    int direct = 0;    // windows inside a known cell
    int fallback = 0;  // snapped to the nearest cell within range
    int dropped = 0;   // no cell within range; grid_id stays -1
};

/// Label windows by the cell of their center position.
GridAssignment assign_grid_labels(std::vector<Window>& windows, const GridIndex& grid,
                                  double fallback_m = 10.0);

/// Plain-text table: projection parameters, then one "row col id" line per cell.
void save_grid(const GridIndex& grid, const std::string& path);
GridIndex load_grid(const std::string& path);

}  // namespace ws
