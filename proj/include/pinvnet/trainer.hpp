#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pinvnet/datasets.hpp"
#include "pinvnet/network.hpp"

namespace pinvnet {

enum class TrainerKind { Pinv, Gd };

struct TrainConfig {
    std::vector<std::size_t> layer_sizes;
    std::string activation = "softplus";
    double learning_rate = 1e-4;
    std::size_t epochs = 100;
    std::uint64_t seed = 0;
    double validation_fraction = 0.25;
    TrainerKind trainer_kind = TrainerKind::Pinv;
    bool shuffle_each_epoch = true;
};

struct EpochMetrics {
    std::size_t epoch = 0;  // 1-based
    double train_mse = 0.0;
    double val_mse = 0.0;
    double val_accuracy = 0.0;
};

struct Metrics {
    double mse = 0.0;
    double accuracy = 0.0;
};

struct TrainResult {
    Network net;
    std::vector<EpochMetrics> history;
};

std::string_view trainer_kind_name(TrainerKind kind);
TrainerKind parse_trainer_kind(const std::string& name);

// Throws ConfigError for bad values, DimensionMismatchError when the config
// does not fit the data, UnsupportedInverseError for pinv + tanh.
void validate_config(const TrainConfig& config, const SplitDataset& data);

// Online training: every epoch visits each training sample once (order
// reshuffled per epoch from the seed stream) and applies one backward pass
// per sample. History gets exactly one entry per epoch, measured after the
// epoch's updates. Deterministic per (data, config).
TrainResult train(const SplitDataset& data, const TrainConfig& config);

// MSE of outputs against encoded targets plus argmax accuracy (single-output
// networks predict class 1 at output >= 0.5). The default is the OpenMP
// kernel; the serial variant is the reference it must match bitwise.
Metrics evaluate(const Network& net, const Dataset& data);
Metrics evaluate_serial(const Network& net, const Dataset& data);

int predict_class(const Network& net, const Vector& input);

// Highest val_accuracy, earliest epoch on ties. Throws EmptyHistoryError.
const EpochMetrics& best_epoch(const std::vector<EpochMetrics>& history);

// "epoch,train_mse,val_mse,val_accuracy" with 10 significant digits.
void write_history_csv(const std::vector<EpochMetrics>& history, const std::string& path);

}  // namespace pinvnet
