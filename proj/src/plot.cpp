#include "pinvnet/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "pinvnet/errors.hpp"
#include "pinvnet/trainer.hpp"

namespace pinvnet {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

double grid_coord(double lo, double hi, std::size_t i, std::size_t steps) {
    if (steps == 1)
        return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

Box expanded_bounds(const Dataset& d, double expand_fraction) {
    if (d.dim() != 2)
        throw DimensionMismatchError("expanded_bounds: dataset must be 2-D");
    Box box{d.features[0][0], d.features[0][0], d.features[0][1], d.features[0][1]};
    for (const Vector& p : d.features) {
        box.min_x = std::min(box.min_x, p[0]);
        box.max_x = std::max(box.max_x, p[0]);
        box.min_y = std::min(box.min_y, p[1]);
        box.max_y = std::max(box.max_y, p[1]);
    }
    const double pad_x = (box.max_x - box.min_x) > 0.0
                             ? 0.5 * expand_fraction * (box.max_x - box.min_x)
                             : 1.0;
    const double pad_y = (box.max_y - box.min_y) > 0.0
                             ? 0.5 * expand_fraction * (box.max_y - box.min_y)
                             : 1.0;
    box.min_x -= pad_x;
    box.max_x += pad_x;
    box.min_y -= pad_y;
    box.max_y += pad_y;
    return box;
}

std::vector<int> predict_grid_serial(const Network& net, const Box& box, std::size_t steps) {
    if (net.input_dim != 2)
        throw DimensionMismatchError("predict_grid: network input must be 2-D");
    std::vector<int> classes(steps * steps);
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const std::size_t iy = k / steps;
        const std::size_t ix = k % steps;
        classes[k] = predict_class(net, {grid_coord(box.min_x, box.max_x, ix, steps),
                                         grid_coord(box.min_y, box.max_y, iy, steps)});
    }
    return classes;
}

std::vector<int> predict_grid(const Network& net, const Box& box, std::size_t steps) {
    if (net.input_dim != 2)
        throw DimensionMismatchError("predict_grid: network input must be 2-D");
    std::vector<int> classes(steps * steps);
    const auto total = static_cast<std::ptrdiff_t>(classes.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
        const auto iy = static_cast<std::size_t>(k) / steps;
        const auto ix = static_cast<std::size_t>(k) % steps;
        classes[k] = predict_class(net, {grid_coord(box.min_x, box.max_x, ix, steps),
                                         grid_coord(box.min_y, box.max_y, iy, steps)});
    }
    return classes;
}

void write_grid_csv(const Network& net, const Box& box, std::size_t steps,
                    const std::string& path) {
    const std::vector<int> classes = predict_grid(net, box, steps);
    std::string text = "x,y,predicted_class\n";
    char buf[96];
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const std::size_t iy = k / steps;
        const std::size_t ix = k % steps;
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%d\n",
                      grid_coord(box.min_x, box.max_x, ix, steps),
                      grid_coord(box.min_y, box.max_y, iy, steps), classes[k]);
        text += buf;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("write_grid_csv: cannot write " + path);
}

void write_scatter_svg(const Dataset& d, const std::vector<int>& predicted, const Box& box,
                       const std::string& path) {
    if (d.dim() != 2)
        throw DimensionMismatchError("write_scatter_svg: dataset must be 2-D");
    if (predicted.size() != d.size())
        throw DimensionMismatchError("write_scatter_svg: one prediction per row required");

    constexpr double kSize = 640.0;
    constexpr double kMargin = 40.0;
    const double span = kSize - 2.0 * kMargin;
    const double range_x = box.max_x - box.min_x;
    const double range_y = box.max_y - box.min_y;

    std::string text;
    text += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    text += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
            "viewBox=\"0 0 640 640\">\n";
    text += "  <rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n";
    char buf[160];
    for (std::size_t s = 0; s < d.size(); ++s) {
        const double sx = kMargin + (d.features[s][0] - box.min_x) / range_x * span;
        const double sy = kSize - kMargin - (d.features[s][1] - box.min_y) / range_y * span;
        const char* color =
            kPalette[static_cast<std::size_t>(predicted[s]) % (sizeof kPalette / sizeof *kPalette)];
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n", sx, sy,
                      color);
        text += buf;
    }
    text += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("write_scatter_svg: cannot write " + path);
}

}  // namespace pinvnet
