#include "pinvnet/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pinvnet/errors.hpp"
#include "pinvnet/rng.hpp"

namespace pinvnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r')
        s.pop_back();
    return s;
}

int parse_int_field(const std::string& s, const std::string& context) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw MalformedRowError(context + ": unparseable value '" + s + "'");
    }
    if (pos != s.size())
        throw MalformedRowError(context + ": unparseable value '" + s + "'");
    return value;
}

double parse_double_field(const std::string& s, const std::string& context) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw MalformedRowError(context + ": unparseable value '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(value))
        throw MalformedRowError(context + ": unparseable value '" + s + "'");
    return value;
}

void append_format_g17(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

Dataset gen_two_spirals(std::size_t points_per_class, double noise_std, std::uint64_t seed) {
    if (points_per_class == 0)
        throw ConfigError("gen_two_spirals: points_per_class must be positive");
    if (noise_std < 0.0)
        throw ConfigError("gen_two_spirals: noise_std must be >= 0");

    RandomStream rng(seed);
    Dataset d;
    d.class_count = 2;
    d.features.reserve(2 * points_per_class);
    d.labels.reserve(2 * points_per_class);
    const double n4 = static_cast<double>(points_per_class) * 4.0;
    for (std::size_t i = 0; i < points_per_class; ++i) {
        const double phi = static_cast<double>(i) * kPi / 16.0;
        const double r = 6.5 * (n4 - static_cast<double>(i) * 4.0) / n4;
        const double x = r * std::sin(phi);
        const double y = r * std::cos(phi);
        Vector p0{x, y};
        Vector p1{-x, -y};
        if (noise_std > 0.0) {
            p0[0] += noise_std * rng.gaussian();
            p0[1] += noise_std * rng.gaussian();
            p1[0] += noise_std * rng.gaussian();
            p1[1] += noise_std * rng.gaussian();
        }
        d.features.push_back(std::move(p0));
        d.labels.push_back(0);
        d.features.push_back(std::move(p1));
        d.labels.push_back(1);
    }
    return d;
}

Dataset gen_circles(std::size_t points_per_class, double inner_factor, double noise_std,
                    std::uint64_t seed) {
    if (points_per_class == 0)
        throw ConfigError("gen_circles: points_per_class must be positive");
    if (!(inner_factor > 0.0 && inner_factor < 1.0))
        throw ConfigError("gen_circles: inner_factor must be in (0, 1)");
    if (noise_std < 0.0)
        throw ConfigError("gen_circles: noise_std must be >= 0");

    RandomStream rng(seed);
    Dataset d;
    d.class_count = 2;
    d.features.reserve(2 * points_per_class);
    d.labels.reserve(2 * points_per_class);
    for (std::size_t i = 0; i < points_per_class; ++i) {
        const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(points_per_class);
        const double cx = std::cos(theta);
        const double cy = std::sin(theta);
        Vector outer{cx, cy};
        Vector inner{inner_factor * cx, inner_factor * cy};
        if (noise_std > 0.0) {
            outer[0] += noise_std * rng.gaussian();
            outer[1] += noise_std * rng.gaussian();
            inner[0] += noise_std * rng.gaussian();
            inner[1] += noise_std * rng.gaussian();
        }
        d.features.push_back(std::move(outer));
        d.labels.push_back(0);
        d.features.push_back(std::move(inner));
        d.labels.push_back(1);
    }
    return d;
}

Dataset gen_xor(std::size_t count, std::uint64_t seed) {
    if (count == 0)
        throw ConfigError("gen_xor: count must be positive");

    RandomStream rng(seed);
    auto draw = [&rng] {
        double v = rng.uniform(-1.0, 1.0);
        while (std::abs(v) < 1e-9)
            v = rng.uniform(-1.0, 1.0);
        return v;
    };

    Dataset d;
    d.class_count = 2;
    d.features.reserve(count);
    d.labels.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double x = draw();
        const double y = draw();
        d.features.push_back({x, y});
        d.labels.push_back(x * y > 0.0 ? 0 : 1);
    }
    return d;
}

Dataset load_wbc_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("load_wbc_csv: cannot open " + path);

    Dataset d;
    d.class_count = 2;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        const std::string context = path + ":" + std::to_string(line_no);
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 11)
            throw MalformedRowError(context + ": expected 11 columns, got " +
                                    std::to_string(fields.size()));
        // drop_row policy for missing values
        const bool missing = std::any_of(fields.begin() + 1, fields.end(),
                                         [](const std::string& f) { return f == "?"; });
        if (missing)
            continue;

        Vector features(9);
        for (std::size_t i = 0; i < 9; ++i) {
            const int v = parse_int_field(fields[i + 1], context);
            if (v < 1 || v > 10)
                throw MalformedRowError(context + ": feature out of range 1..10");
            features[i] = static_cast<double>(v) / 10.0;
        }
        const int cls = parse_int_field(fields[10], context);
        if (cls != 2 && cls != 4)
            throw MalformedRowError(context + ": class must be 2 or 4");

        d.features.push_back(std::move(features));
        d.labels.push_back(cls == 2 ? 0 : 1);
    }
    if (d.features.empty())
        throw EmptyDatasetError("load_wbc_csv: no usable rows in " + path);
    return d;
}

Vector one_hot(int label, int class_count) {
    if (label < 0 || label >= class_count)
        throw LabelOutOfRangeError("one_hot: label " + std::to_string(label) +
                                   " outside [0, " + std::to_string(class_count) + ")");
    Vector v(static_cast<std::size_t>(class_count), 0.0);
    v[static_cast<std::size_t>(label)] = 1.0;
    return v;
}

Vector encode_target(int label, int class_count, std::size_t output_dim) {
    if (output_dim == static_cast<std::size_t>(class_count))
        return one_hot(label, class_count);
    if (output_dim == 1 && class_count == 2) {
        if (label < 0 || label >= class_count)
            throw LabelOutOfRangeError("encode_target: label out of range");
        return {static_cast<double>(label)};
    }
    throw DimensionMismatchError("encode_target: output size " + std::to_string(output_dim) +
                                 " incompatible with " + std::to_string(class_count) +
                                 " classes");
}

SplitDataset split(const Dataset& d, double validation_fraction, std::uint64_t seed) {
    if (!(validation_fraction > 0.0 && validation_fraction < 1.0))
        throw DegenerateSplitError("split: validation_fraction must be in (0, 1)");
    const std::size_t n = d.size();
    const auto val_n = static_cast<std::size_t>(
        std::lround(validation_fraction * static_cast<double>(n)));
    if (val_n == 0 || val_n >= n)
        throw DegenerateSplitError("split: both parts must be non-empty");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    RandomStream rng(seed);
    rng.shuffle(order);

    SplitDataset out;
    out.train.class_count = d.class_count;
    out.validation.class_count = d.class_count;
    for (std::size_t k = 0; k < n; ++k) {
        Dataset& part = k < val_n ? out.validation : out.train;
        part.features.push_back(d.features[order[k]]);
        part.labels.push_back(d.labels[order[k]]);
    }
    return out;
}

void write_dataset_csv(const Dataset& d, const std::string& path) {
    std::string text;
    for (std::size_t i = 0; i < d.dim(); ++i) {
        text += "x" + std::to_string(i) + ",";
    }
    text += "label\n";
    for (std::size_t s = 0; s < d.size(); ++s) {
        for (double v : d.features[s]) {
            append_format_g17(text, v);
            text += ',';
        }
        text += std::to_string(d.labels[s]);
        text += '\n';
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("write_dataset_csv: cannot write " + path);
}

Dataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("load_dataset_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line))
        throw EmptyDatasetError("load_dataset_csv: empty file " + path);
    line = strip_cr(line);
    const std::vector<std::string> header = split_fields(line);
    if (header.size() < 2 || header.back() != "label")
        throw MalformedRowError(path + ": header must be x0,...,label");
    for (std::size_t i = 0; i + 1 < header.size(); ++i)
        if (header[i] != "x" + std::to_string(i))
            throw MalformedRowError(path + ": header must be x0,...,label");
    const std::size_t dim = header.size() - 1;

    Dataset d;
    std::size_t line_no = 1;
    int max_label = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty())
            continue;
        const std::string context = path + ":" + std::to_string(line_no);
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != dim + 1)
            throw MalformedRowError(context + ": expected " + std::to_string(dim + 1) +
                                    " columns");
        Vector features(dim);
        for (std::size_t i = 0; i < dim; ++i)
            features[i] = parse_double_field(fields[i], context);
        const int label = parse_int_field(fields[dim], context);
        if (label < 0)
            throw MalformedRowError(context + ": negative label");
        max_label = std::max(max_label, label);
        d.features.push_back(std::move(features));
        d.labels.push_back(label);
    }
    if (d.features.empty())
        throw EmptyDatasetError("load_dataset_csv: no rows in " + path);
    d.class_count = std::max(max_label + 1, 2);
    return d;
}

}  // namespace pinvnet
