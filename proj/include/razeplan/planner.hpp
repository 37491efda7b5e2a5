#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "razeplan/geometry.hpp"
#include "razeplan/grid.hpp"

namespace razeplan {

// Ordered cell centers joined by straight segments.
struct Path {
    std::vector<Cell> vertices;
    double length = 0.0;

    bool empty() const noexcept { return vertices.empty(); }
    friend bool operator==(const Path&, const Path&) = default;
};

double path_length(std::span<const Cell> vertices);
Path make_path(std::vector<Cell> vertices);

// Per-obstacle tally of how many times the search tried to step into that
// obstacle. Ids run 1..obstacle_count; every id is present from the start.
class HitHistogram {
public:
    HitHistogram() = default;
    explicit HitHistogram(int obstacle_count) : counts_(obstacle_count, 0) {}

    int obstacle_count() const noexcept { return static_cast<int>(counts_.size()); }
    std::uint64_t count(int id) const;
    void add_hit(int id);
    std::uint64_t total() const noexcept;

    // counts()[id - 1] is the tally for obstacle id.
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

    friend bool operator==(const HitHistogram&, const HitHistogram&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

struct PlanResult {
    bool found = false;
    Path path;           // empty unless found
    HitHistogram hits;   // complete whether or not a path was found
    std::uint64_t nodes_created = 0;   // distinct cells ever pushed to OPEN
    std::uint64_t nodes_expanded = 0;  // cells moved to CLOSED
    double elapsed_ms = 0.0;
};

// Any-angle search over the grid. Expansion generates the 8 neighbours of
// the current cell; a neighbour inside an obstacle is discarded and counted
// in the hit histogram. When a neighbour is relaxed, it is re-parented
// straight to the current cell's parent whenever that parent has line of
// sight to it, which is what produces the any-angle shortcuts.
//
// weight >= 1 scales the Euclidean heuristic; 1 keeps the search
// near-optimal, larger values make it greedier.
PlanResult theta_star(const Grid& grid, const ObstacleLabels& labels,
                      Cell start, Cell goal, double weight = 1.0);

}  // namespace razeplan
