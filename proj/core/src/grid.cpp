#include "catn/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace catn {

ProbabilityMap::ProbabilityMap(GridShape shape, std::vector<double> values)
    : shape_(shape), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.cells())
        throw InvalidInputError("ProbabilityMap: value count does not match grid");
    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= 0.0))  // also rejects NaN
            throw InvalidInputError("ProbabilityMap: negative or non-finite value");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance)
        throw InvalidInputError("ProbabilityMap: values sum to " + std::to_string(sum) +
                                ", outside the normalization tolerance");
    for (double& v : values_) v /= sum;
}

ProbabilityMap ProbabilityMap::uniform(GridShape shape) {
    return ProbabilityMap(shape, std::vector<double>(static_cast<std::size_t>(shape.cells()),
                                                     1.0 / shape.cells()));
}

ProbabilityMap ProbabilityMap::delta(GridShape shape, int cell) {
    if (cell < 0 || cell >= shape.cells())
        throw InvalidInputError("ProbabilityMap::delta: cell out of range");
    std::vector<double> v(static_cast<std::size_t>(shape.cells()), 0.0);
    v[static_cast<std::size_t>(cell)] = 1.0;
    return ProbabilityMap(shape, std::move(v));
}

ProbabilityMap ProbabilityMap::smoothed(double eps) const {
    std::vector<double> v(values_);
    double sum = 0.0;
    for (double& x : v) {
        x = std::max(x, eps);
        sum += x;
    }
    for (double& x : v) x /= sum;
    return ProbabilityMap(shape_, std::move(v));
}

NeighborhoodMap::NeighborhoodMap(GridShape fine, GridShape coarse,
                                 std::vector<std::vector<int>> groups)
    : fine_(fine), coarse_(coarse), groups_(std::move(groups)) {
    if (static_cast<int>(groups_.size()) != coarse_.cells())
        throw InvalidInputError("NeighborhoodMap: group count must equal coarse cell count");
    parent_.assign(static_cast<std::size_t>(fine_.cells()), -1);
    for (int i = 0; i < static_cast<int>(groups_.size()); ++i) {
        for (int j : groups_[static_cast<std::size_t>(i)]) {
            if (j < 0 || j >= fine_.cells())
                throw InvalidInputError("NeighborhoodMap: fine index out of range");
            if (parent_[static_cast<std::size_t>(j)] != -1)
                throw InvalidInputError("NeighborhoodMap: groups overlap at fine cell " +
                                        std::to_string(j));
            parent_[static_cast<std::size_t>(j)] = i;
        }
    }
    for (int j = 0; j < fine_.cells(); ++j)
        if (parent_[static_cast<std::size_t>(j)] == -1)
            throw InvalidInputError("NeighborhoodMap: fine cell " + std::to_string(j) +
                                    " not covered by any group");
}

NeighborhoodMap NeighborhoodMap::blocks(int fine_side, int coarse_side) {
    if (fine_side < 1 || coarse_side < 1)
        throw InvalidInputError("NeighborhoodMap::blocks: sides must be >= 1");
    if (fine_side % coarse_side != 0)
        throw InvalidInputError("NeighborhoodMap::blocks: " + std::to_string(coarse_side) +
                                " does not divide " + std::to_string(fine_side));
    const int r = fine_side / coarse_side;
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(coarse_side * coarse_side));
    for (int cr = 0; cr < coarse_side; ++cr) {
        for (int cc = 0; cc < coarse_side; ++cc) {
            auto& g = groups[static_cast<std::size_t>(cr * coarse_side + cc)];
            g.reserve(static_cast<std::size_t>(r * r));
            for (int dr = 0; dr < r; ++dr)
                for (int dc = 0; dc < r; ++dc)
                    g.push_back((cr * r + dr) * fine_side + (cc * r + dc));
        }
    }
    return NeighborhoodMap(GridShape(fine_side, fine_side), GridShape(coarse_side, coarse_side),
                           std::move(groups));
}

NeighborhoodMap NeighborhoodMap::contiguous(int fine_count, int coarse_count) {
    if (fine_count < 1 || coarse_count < 1)
        throw InvalidInputError("NeighborhoodMap::contiguous: counts must be >= 1");
    if (fine_count % coarse_count != 0)
        throw InvalidInputError("NeighborhoodMap::contiguous: " + std::to_string(coarse_count) +
                                " does not divide " + std::to_string(fine_count));
    const int r = fine_count / coarse_count;
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(coarse_count));
    for (int i = 0; i < coarse_count; ++i) {
        groups[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(r));
        std::iota(groups[static_cast<std::size_t>(i)].begin(),
                  groups[static_cast<std::size_t>(i)].end(), i * r);
    }
    return NeighborhoodMap(GridShape::flat(fine_count), GridShape::flat(coarse_count),
                           std::move(groups));
}

NeighborhoodMap NeighborhoodMap::from_groups(GridShape fine, GridShape coarse,
                                             std::vector<std::vector<int>> groups) {
    return NeighborhoodMap(fine, coarse, std::move(groups));
}

NeighborhoodMap build_neighborhood(int fine_side, int coarse_side) {
    return NeighborhoodMap::blocks(fine_side, coarse_side);
}

std::vector<double> marginalize_raw(std::span<const double> fine_values,
                                    const NeighborhoodMap& nmap) {
    if (static_cast<int>(fine_values.size()) != nmap.fine_cells())
        throw InvalidInputError("marginalize: value count does not match fine grid");
    std::vector<double> out(static_cast<std::size_t>(nmap.coarse_cells()), 0.0);
    for (int i = 0; i < nmap.coarse_cells(); ++i)
        for (int j : nmap.group(i))
            out[static_cast<std::size_t>(i)] += fine_values[static_cast<std::size_t>(j)];
    return out;
}

ProbabilityMap marginalize(const ProbabilityMap& p, const NeighborhoodMap& nmap) {
    if (p.shape() != nmap.fine())
        throw InvalidInputError("marginalize: map shape does not match the partition's fine grid");
    return ProbabilityMap(nmap.coarse(), marginalize_raw(p.values(), nmap));
}

double kl_divergence_raw(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw InvalidInputError("kl_divergence: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;  // 0 log(0/q) = 0 by convention
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        sum += p[i] * std::log(p[i] / q[i]);
    }
    // Round-off can leave a tiny negative sum for p ~ q.
    return std::max(sum, 0.0);
}

double kl_divergence(const ProbabilityMap& p, const ProbabilityMap& q) {
    if (p.shape() != q.shape())
        throw InvalidInputError("kl_divergence: maps live on different grids");
    return kl_divergence_raw(p.values(), q.values());
}

} // namespace catn
