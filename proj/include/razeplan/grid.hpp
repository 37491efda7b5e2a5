#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace razeplan {

// Column/row index of one grid cell; x grows to the right, y grows downward.
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Deterministic ordering used for every tie-break in the library:
// scan order of the map file (top row first, left to right).
constexpr bool row_major_less(Cell a, Cell b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

enum class Connectivity { four = 4, eight = 8 };

// Immutable occupancy map. Removing an obstacle produces a new Grid;
// existing Grid values are safe to share across threads.
class Grid {
public:
    Grid(int width, int height);
    Grid(int width, int height, std::vector<std::uint8_t> blocked);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t cell_count() const noexcept { return blocked_.size(); }

    bool in_bounds(Cell c) const noexcept {
        return c.x >= 0 && c.x < width_ && c.y >= 0 && c.y < height_;
    }
    std::size_t index(Cell c) const noexcept {
        return static_cast<std::size_t>(c.y) * width_ + c.x;
    }
    bool blocked(Cell c) const noexcept { return blocked_[index(c)] != 0; }
    bool blocked_at(int x, int y) const noexcept {
        return blocked_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }

    int blocked_count() const noexcept;
    const std::vector<std::uint8_t>& cells() const noexcept { return blocked_; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> blocked_;
};

// Per-cell obstacle identifiers: 0 for free cells, 1..count for blocked
// cells, one id per connected component of blocked cells.
struct ObstacleLabels {
    int width = 0;
    int height = 0;
    int count = 0;
    std::vector<int> label;

    int at(Cell c) const noexcept {
        return label[static_cast<std::size_t>(c.y) * width + c.x];
    }
};

// Raised when an obstacle has no free cell around it that an agent could
// stand on (the obstacle covers the whole reachable area).
struct NoApproachCellError : std::runtime_error {
    explicit NoApproachCellError(int id);
    int obstacle_id;
};

// Labels connected components of blocked cells. Components are numbered in
// scan order: the component whose first cell appears earliest gets id 1.
ObstacleLabels label_obstacles(const Grid& grid, Connectivity conn = Connectivity::eight);

// New grid with every cell of the given obstacle unblocked.
Grid remove_obstacle(const Grid& grid, const ObstacleLabels& labels, int id);

// Same, for a set of obstacles in one pass.
Grid remove_obstacles(const Grid& grid, const ObstacleLabels& labels,
                      const std::vector<int>& ids);

// Free cells 8-adjacent to at least one cell of the obstacle, sorted in
// row-major order. Throws NoApproachCellError if there are none.
std::vector<Cell> boundary_cells(const Grid& grid, const ObstacleLabels& labels, int id);

}  // namespace razeplan
