#pragma once

#include <string>
#include <vector>

#include "pinvnet/datasets.hpp"
#include "pinvnet/network.hpp"

namespace pinvnet {

struct Box {
    double min_x = 0.0, max_x = 0.0;
    double min_y = 0.0, max_y = 0.0;
};

// Bounding box of a 2-D dataset grown by expand_fraction of each axis range
// (split evenly between the two sides). Throws DimensionMismatchError for
// non-2-D data.
Box expanded_bounds(const Dataset& d, double expand_fraction);

// Predicted class at every node of a steps-by-steps grid spanning the box,
// row-major from min_y to max_y. The default is the OpenMP kernel; the
// serial variant is the reference it must match exactly.
std::vector<int> predict_grid(const Network& net, const Box& box, std::size_t steps);
std::vector<int> predict_grid_serial(const Network& net, const Box& box, std::size_t steps);

// "x,y,predicted_class" rows for the same grid.
void write_grid_csv(const Network& net, const Box& box, std::size_t steps,
                    const std::string& path);

// Scatter of the dataset colored by predicted class, emitted as standalone
// SVG.
void write_scatter_svg(const Dataset& d, const std::vector<int>& predicted, const Box& box,
                       const std::string& path);

}  // namespace pinvnet
