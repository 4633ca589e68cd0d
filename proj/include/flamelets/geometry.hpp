#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace flam {

enum class Metric { euclidean };

/// Finite set of points in R^D, stored row-major.
class PointCloud {
public:
    PointCloud(std::vector<double> coords, std::size_t dim);
    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const PointCloud&) const = default;

private:
    std::vector<double> coords_;
    std::size_t dim_;
};

struct Frame {
    double t;
    PointCloud cloud;
    bool operator==(const Frame&) const = default;
};

/// Time-indexed point clouds X(t), t strictly increasing in [0,1].
class DynamicPointCloud {
public:
    explicit DynamicPointCloud(std::vector<Frame> frames);

    const std::vector<Frame>& frames() const { return frames_; }
    std::size_t dim() const { return frames_.front().cloud.dim(); }

    bool operator==(const DynamicPointCloud&) const = default;

private:
    std::vector<Frame> frames_;
};

/// Symmetric distance matrix, lower triangle stored.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * (n - 1) / 2, 0.0) {}

    double operator()(std::size_t i, std::size_t j) const {
        return i == j ? 0.0 : i < j ? data_[idx(j, i)] : data_[idx(i, j)];
    }
    void set(std::size_t i, std::size_t j, double v) {
        if (i != j) data_[i < j ? idx(j, i) : idx(i, j)] = v;
    }
    std::size_t size() const { return n_; }

private:
    std::size_t idx(std::size_t i, std::size_t j) const { return i * (i - 1) / 2 + j; }
    std::size_t n_;
    std::vector<double> data_;
};

double point_distance(std::span<const double> a, std::span<const double> b);

DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric = Metric::euclidean);

/// max of the two directed sup-inf distances.
double hausdorff(const PointCloud& a, const PointCloud& b);

/// Trapezoid rule for the Hausdorff distance integrated over the common
/// t-range; per-frame distances are linearly interpolated onto the union
/// of the two t-grids.
double integrated_hausdorff(const DynamicPointCloud& a, const DynamicPointCloud& b);

}  // namespace flam
