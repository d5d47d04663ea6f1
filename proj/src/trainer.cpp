#include "pinvnet/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "pinvnet/errors.hpp"
#include "pinvnet/rng.hpp"

namespace pinvnet {

namespace {

// Distinct stream for the epoch shuffles so they do not replay the
// initialization draws.
constexpr std::uint64_t kOrderStreamSalt = 0x9e3779b97f4a7c15ULL;

void check_compatible(const Network& net, const Dataset& data) {
    if (data.size() == 0)
        throw EmptyDatasetError("evaluate: empty dataset");
    // every row is validated up front so nothing can throw inside a parallel loop
    for (const Vector& row : data.features)
        if (row.size() != net.input_dim)
            throw DimensionMismatchError(
                "evaluate: feature dimension does not match network input");
    const std::size_t out = net.output_dim();
    if (out != static_cast<std::size_t>(data.class_count) && !(out == 1 && data.class_count == 2))
        throw DimensionMismatchError("evaluate: output layer incompatible with class count");
}

int class_from_output(const Vector& out) {
    if (out.size() == 1)
        return out[0] >= 0.5 ? 1 : 0;
    return static_cast<int>(std::max_element(out.begin(), out.end()) - out.begin());
}

// Per-sample contribution; both evaluate variants use this so their sums are
// bitwise identical.
void sample_metrics(const Network& net, const Dataset& data, std::size_t s, double* sq_err,
                    unsigned char* correct) {
    const Vector out = forward(net, data.features[s]);
    const Vector target = encode_target(data.labels[s], data.class_count, out.size());
    double err = 0.0;
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double diff = out[j] - target[j];
        err += diff * diff;
    }
    *sq_err = err / static_cast<double>(out.size());
    *correct = class_from_output(out) == data.labels[s] ? 1 : 0;
}

}  // namespace

std::string_view trainer_kind_name(TrainerKind kind) {
    return kind == TrainerKind::Pinv ? "pinv" : "gd";
}

TrainerKind parse_trainer_kind(const std::string& name) {
    if (name == "pinv") return TrainerKind::Pinv;
    if (name == "gd") return TrainerKind::Gd;
    throw ConfigError("unknown trainer kind: " + name);
}

void validate_config(const TrainConfig& config, const SplitDataset& data) {
    if (config.layer_sizes.empty())
        throw ConfigError("config: layer_sizes must be non-empty");
    for (std::size_t size : config.layer_sizes)
        if (size == 0)
            throw ConfigError("config: layer sizes must be positive");
    if (config.epochs == 0)
        throw ConfigError("config: epochs must be positive");
    if (!(config.learning_rate > 0.0) || !std::isfinite(config.learning_rate))
        throw ConfigError("config: learning_rate must be positive and finite");
    if (!(config.validation_fraction > 0.0 && config.validation_fraction < 1.0))
        throw ConfigError("config: validation_fraction must be in (0, 1)");

    const Activation act = parse_activation(config.activation);
    if (config.trainer_kind == TrainerKind::Pinv && !has_inverse(act))
        throw UnsupportedInverseError("config: activation '" + config.activation +
                                      "' has no usable inverse for the pinv trainer");

    if (data.train.size() == 0 || data.validation.size() == 0)
        throw EmptyDatasetError("config: both splits must be non-empty");
    if (data.train.dim() != data.validation.dim())
        throw DimensionMismatchError("config: train/validation dimensions differ");
    if (data.train.class_count != data.validation.class_count)
        throw DimensionMismatchError("config: train/validation class counts differ");

    const std::size_t out = config.layer_sizes.back();
    const auto classes = static_cast<std::size_t>(data.train.class_count);
    if (out != classes && out != 1)
        throw DimensionMismatchError("config: last layer must have 1 or class_count neurons");
    if (out == 1 && classes != 2)
        throw DimensionMismatchError("config: single-output networks require 2 classes");
}

TrainResult train(const SplitDataset& data, const TrainConfig& config) {
    validate_config(config, data);
    const Activation act = parse_activation(config.activation);
    const bool pinv = config.trainer_kind == TrainerKind::Pinv;

    Network net = init_network(config.layer_sizes, data.train.dim(), act, config.seed);

    const std::size_t n = data.train.size();
    std::vector<Vector> targets;
    targets.reserve(n);
    for (std::size_t s = 0; s < n; ++s)
        targets.push_back(
            encode_target(data.train.labels[s], data.train.class_count, net.output_dim()));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    RandomStream order_rng(config.seed ^ kOrderStreamSalt);

    std::vector<EpochMetrics> history;
    history.reserve(config.epochs);
    ForwardTrace trace;
    for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
        if (config.shuffle_each_epoch)
            order_rng.shuffle(order);
        for (std::size_t s : order) {
            forward(net, data.train.features[s], &trace);
            if (pinv)
                backward(net, trace, targets[s], config.learning_rate);
            else
                gd_backward(net, trace, targets[s], config.learning_rate);
        }
        const Metrics train_m = evaluate(net, data.train);
        const Metrics val_m = evaluate(net, data.validation);
        history.push_back({epoch, train_m.mse, val_m.mse, val_m.accuracy});
    }
    return {std::move(net), std::move(history)};
}

Metrics evaluate_serial(const Network& net, const Dataset& data) {
    check_compatible(net, data);
    const std::size_t n = data.size();
    double mse_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t s = 0; s < n; ++s) {
        double sq_err = 0.0;
        unsigned char ok = 0;
        sample_metrics(net, data, s, &sq_err, &ok);
        mse_sum += sq_err;
        correct += ok;
    }
    return {mse_sum / static_cast<double>(n),
            static_cast<double>(correct) / static_cast<double>(n)};
}

Metrics evaluate(const Network& net, const Dataset& data) {
    check_compatible(net, data);
    const std::size_t n = data.size();
    std::vector<double> sq_err(n);
    std::vector<unsigned char> correct(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s)
        sample_metrics(net, data, static_cast<std::size_t>(s), &sq_err[s], &correct[s]);

    // fixed-order reduction: same sums as the serial reference, bit for bit
    double mse_sum = 0.0;
    std::size_t n_correct = 0;
    for (std::size_t s = 0; s < n; ++s) {
        mse_sum += sq_err[s];
        n_correct += correct[s];
    }
    return {mse_sum / static_cast<double>(n),
            static_cast<double>(n_correct) / static_cast<double>(n)};
}

int predict_class(const Network& net, const Vector& input) {
    return class_from_output(forward(net, input));
}

const EpochMetrics& best_epoch(const std::vector<EpochMetrics>& history) {
    if (history.empty())
        throw EmptyHistoryError("best_epoch: empty history");
    const EpochMetrics* best = &history.front();
    for (const EpochMetrics& m : history)
        if (m.val_accuracy > best->val_accuracy)
            best = &m;
    return *best;
}

void write_history_csv(const std::vector<EpochMetrics>& history, const std::string& path) {
    std::string text = "epoch,train_mse,val_mse,val_accuracy\n";
    char buf[128];
    for (const EpochMetrics& m : history) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g,%.10g\n", m.epoch, m.train_mse,
                      m.val_mse, m.val_accuracy);
        text += buf;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("write_history_csv: cannot write " + path);
}

}  // namespace pinvnet
