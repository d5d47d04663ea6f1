#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "pinvnet/datasets.hpp"
#include "pinvnet/trainer.hpp"

namespace pinvnet::cli {

// Bundled experiment recipes; config and dataset recipe are fixed per name,
// only the seed varies.
struct ExperimentPreset {
    std::string name;
    TrainConfig config;
};

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
ExperimentPreset preset(const std::string& name);

// Dataset belonging to a preset; wbc needs the path to the UCI CSV.
Dataset preset_dataset(const std::string& name, std::uint64_t seed,
                       const std::string& data_path);

// TrainConfig JSON file with the field names verbatim; unknown keys are an
// error so typos cannot silently fall back to defaults.
TrainConfig load_train_config(const std::string& path);

// Entry point behind the binary: args exclude the program name. Exit codes:
// 0 ok, 2 unknown dataset / invalid config, 3 I/O failure, 4 dimension
// mismatch, 5 activation without inverse under the pinv trainer, 6 plot on
// non-2-D features.
int run(std::vector<std::string> args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace pinvnet::cli
