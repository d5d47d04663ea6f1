#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinvnet/linalg.hpp"

namespace pinvnet {

struct Dataset {
    std::vector<Vector> features;  // uniform dimension
    std::vector<int> labels;       // each in [0, class_count)
    int class_count = 0;

    std::size_t size() const { return features.size(); }
    std::size_t dim() const { return features.empty() ? 0 : features.front().size(); }
};

struct SplitDataset {
    Dataset train;
    Dataset validation;
};

// Two intertwined spirals, points_per_class each: angle i*pi/16, radius
// 6.5*(4n - 4i)/(4n), the second class the point reflection of the first.
Dataset gen_two_spirals(std::size_t points_per_class = 193, double noise_std = 0.0,
                        std::uint64_t seed = 0);

// Two concentric circles with uniformly spaced angles, the inner one scaled
// by inner_factor (must be in (0,1)).
Dataset gen_circles(std::size_t points_per_class = 100, double inner_factor = 0.5,
                    double noise_std = 0.0, std::uint64_t seed = 0);

// Points uniform on [-1,1]^2, class 0 when the coordinates share a sign.
// Coordinates with |value| < 1e-9 are re-drawn so the sign rule is well-posed.
Dataset gen_xor(std::size_t count = 1000, std::uint64_t seed = 0);

// UCI breast-cancer-wisconsin.data loader: 11 comma-separated columns
// (sample ID, nine integer features in 1..10, class 2=benign / 4=malignant).
// Rows containing "?" are dropped; features are scaled to [0.1, 1.0] by
// dividing by 10; classes map 2 -> 0 and 4 -> 1.
// Throws IoError, MalformedRowError, EmptyDatasetError.
Dataset load_wbc_csv(const std::string& path);

// Length class_count, 1 at label, 0 elsewhere. Throws LabelOutOfRangeError.
Vector one_hot(int label, int class_count);

// Target as the output layer sees it: one_hot when output_dim == class_count,
// the bare label when the network has a single output (2-class data only).
Vector encode_target(int label, int class_count, std::size_t output_dim);

// Deterministic shuffled partition; validation gets round(fraction * n) rows.
// Throws DegenerateSplitError when either part would be empty.
SplitDataset split(const Dataset& d, double validation_fraction, std::uint64_t seed);

// CSV with header "x0,...,x<d-1>,label"; doubles printed with 17 significant
// digits so a load after save is bitwise identical.
void write_dataset_csv(const Dataset& d, const std::string& path);
Dataset load_dataset_csv(const std::string& path);

}  // namespace pinvnet
