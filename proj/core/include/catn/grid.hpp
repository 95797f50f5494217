#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "catn/errors.hpp"

namespace catn {

// Square spatial grid of side*side cells, row-major flat indexing.
struct SpatialGrid {
    int side = 1;

    explicit SpatialGrid(int side_ = 1) : side(side_) {
        if (side < 1) throw InvalidInputError("SpatialGrid: side must be >= 1");
    }

    int cells() const noexcept { return side * side; }
    int flat(int row, int col) const noexcept { return row * side + col; }
    std::pair<int, int> row_col(int index) const noexcept {
        return {index / side, index % side};
    }
    bool operator==(const SpatialGrid&) const = default;
};

// Row-major layout of a cell domain. Square grids are the production case;
// a flat 1xN layout admits group partitions that are not square blocks.
struct GridShape {
    int rows = 1;
    int cols = 1;

    GridShape() = default;
    GridShape(int r, int c) : rows(r), cols(c) {
        if (r < 1 || c < 1) throw InvalidInputError("GridShape: sides must be >= 1");
    }
    explicit GridShape(const SpatialGrid& g) : rows(g.side), cols(g.side) {}
    static GridShape flat(int n) { return GridShape(1, n); }

    int cells() const noexcept { return rows * cols; }
    bool square() const noexcept { return rows == cols; }
    bool operator==(const GridShape&) const = default;
};

// Nonnegative, normalized distribution over a grid. The constructor
// renormalizes when |sum - 1| <= kNormalizationTolerance and rejects
// otherwise, so softmax round-off is absorbed without masking real bugs.
class ProbabilityMap {
public:
    static constexpr double kNormalizationTolerance = 1e-9;

    ProbabilityMap(GridShape shape, std::vector<double> values);
    ProbabilityMap(const SpatialGrid& grid, std::vector<double> values)
        : ProbabilityMap(GridShape(grid), std::move(values)) {}

    static ProbabilityMap uniform(GridShape shape);
    static ProbabilityMap delta(GridShape shape, int cell);

    const GridShape& shape() const noexcept { return shape_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](int i) const noexcept { return values_[static_cast<std::size_t>(i)]; }
    int size() const noexcept { return shape_.cells(); }

    // Floors every entry at eps and renormalizes. Keeps strictly positive
    // inputs essentially unchanged; used before KL-based computations.
    ProbabilityMap smoothed(double eps = 1e-12) const;

private:
    GridShape shape_;
    std::vector<double> values_;
};

// Partition of a fine grid's cells into one group per coarse cell.
class NeighborhoodMap {
public:
    // Block partition: each coarse cell covers the r x r block of fine cells
    // spatially under it, r = fine_side / coarse_side. Throws when
    // coarse_side does not divide fine_side.
    static NeighborhoodMap blocks(int fine_side, int coarse_side);

    // Contiguous ratio partition on flat layouts: group i covers fine cells
    // [i*r, (i+1)*r), r = fine_count / coarse_count.
    static NeighborhoodMap contiguous(int fine_count, int coarse_count);

    // Explicit partition. Validates disjointness and coverage.
    static NeighborhoodMap from_groups(GridShape fine, GridShape coarse,
                                       std::vector<std::vector<int>> groups);

    const GridShape& fine() const noexcept { return fine_; }
    const GridShape& coarse() const noexcept { return coarse_; }
    int fine_cells() const noexcept { return fine_.cells(); }
    int coarse_cells() const noexcept { return coarse_.cells(); }

    const std::vector<std::vector<int>>& groups() const noexcept { return groups_; }
    const std::vector<int>& group(int coarse_index) const { return groups_.at(static_cast<std::size_t>(coarse_index)); }
    // Coarse parent of a fine cell.
    int parent(int fine_index) const { return parent_.at(static_cast<std::size_t>(fine_index)); }
    std::span<const int> parents() const noexcept { return parent_; }

private:
    NeighborhoodMap(GridShape fine, GridShape coarse, std::vector<std::vector<int>> groups);

    GridShape fine_;
    GridShape coarse_;
    std::vector<std::vector<int>> groups_;
    std::vector<int> parent_;
};

// Block partition over square grids; the canonical constructor.
NeighborhoodMap build_neighborhood(int fine_side, int coarse_side);

// Per-group sums of an arbitrary (not necessarily normalized) vector.
std::vector<double> marginalize_raw(std::span<const double> fine_values,
                                    const NeighborhoodMap& nmap);

// Coarse distribution with mass summed over each group.
ProbabilityMap marginalize(const ProbabilityMap& p, const NeighborhoodMap& nmap);

// sum_i p_i log(p_i / q_i), with 0 log(0/q) = 0. Returns +infinity when p
// puts mass where q has none; that is a deliberate result, not an overflow.
double kl_divergence(const ProbabilityMap& p, const ProbabilityMap& q);
double kl_divergence_raw(std::span<const double> p, std::span<const double> q);

} // namespace catn
