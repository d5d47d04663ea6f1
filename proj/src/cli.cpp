#include "pinvnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinvnet/errors.hpp"
#include "pinvnet/model_io.hpp"
#include "pinvnet/plot.hpp"

namespace fs = std::filesystem;

namespace pinvnet::cli {

namespace {

namespace exit_code {
constexpr int ok = 0;
constexpr int bad_config = 2;
constexpr int io = 3;
constexpr int dims = 4;
constexpr int no_inverse = 5;
constexpr int not_2d = 6;
}  // namespace exit_code

nlohmann::json metrics_json(const EpochMetrics& m) {
    return {{"epoch", m.epoch},
            {"train_mse", m.train_mse},
            {"val_mse", m.val_mse},
            {"val_accuracy", m.val_accuracy}};
}

nlohmann::json config_json(const TrainConfig& c) {
    return {{"layer_sizes", c.layer_sizes},
            {"activation", c.activation},
            {"learning_rate", c.learning_rate},
            {"epochs", c.epochs},
            {"seed", c.seed},
            {"validation_fraction", c.validation_fraction},
            {"trainer_kind", std::string(trainer_kind_name(c.trainer_kind))},
            {"shuffle_each_epoch", c.shuffle_each_epoch}};
}

struct GenerateArgs {
    std::string name;
    std::string out_path;
    std::uint64_t seed = 0;
    std::size_t points = 0;  // 0 keeps the preset count
    double noise = 0.0;
    double inner_factor = 0.5;
};

struct TrainArgs {
    std::string target;  // preset name or config JSON path
    std::string data_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> trainer;
    std::optional<std::string> activation;
    std::optional<std::size_t> epochs;
    std::optional<double> learning_rate;
};

struct EvalArgs {
    std::string model_path;
    std::string data_path;
};

struct PlotArgs {
    std::string model_path;
    std::string data_path;
    std::string out_svg = "plot.svg";
    std::size_t grid_steps = 200;
};

int run_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    Dataset d;
    if (a.name == "spirals")
        d = gen_two_spirals(a.points ? a.points : 193, a.noise, a.seed);
    else if (a.name == "circles")
        d = gen_circles(a.points ? a.points : 100, a.inner_factor, a.noise, a.seed);
    else if (a.name == "xor")
        d = gen_xor(a.points ? a.points : 1000, a.seed);
    else {
        err << "generate: unknown dataset '" << a.name << "' (try spirals, circles, xor)\n";
        return exit_code::bad_config;
    }

    const std::string path = a.out_path.empty() ? a.name + ".csv" : a.out_path;
    try {
        write_dataset_csv(d, path);
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    }
    out << "wrote " << d.size() << " rows (" << d.class_count << " classes) to " << path
        << "\n";
    return exit_code::ok;
}

int run_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
    try {
        TrainConfig config;
        Dataset dataset;
        std::string run_name;
        if (is_preset(a.target)) {
            config = preset(a.target).config;
            if (a.seed)
                config.seed = *a.seed;
            dataset = preset_dataset(a.target, config.seed, a.data_path);
            run_name = a.target;
        } else if (fs::exists(a.target)) {
            config = load_train_config(a.target);
            if (a.seed)
                config.seed = *a.seed;
            if (a.data_path.empty())
                throw ConfigError("train: --data is required with a config file");
            dataset = load_dataset_csv(a.data_path);
            run_name = fs::path(a.target).stem().string();
        } else {
            err << "train: '" << a.target << "' is neither a preset nor a config file\n";
            return exit_code::bad_config;
        }

        if (a.trainer)
            config.trainer_kind = parse_trainer_kind(*a.trainer);
        if (a.activation)
            config.activation = *a.activation;
        if (a.epochs)
            config.epochs = *a.epochs;
        if (a.learning_rate)
            config.learning_rate = *a.learning_rate;

        const SplitDataset parts = split(dataset, config.validation_fraction, config.seed);
        const TrainResult result = train(parts, config);

        const fs::path dir = a.out_dir.empty() ? fs::path("runs") / run_name : fs::path(a.out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);

        save_model(result.net, (dir / "model.json").string());
        write_history_csv(result.history, (dir / "history.csv").string());
        write_dataset_csv(parts.train, (dir / "train.csv").string());
        write_dataset_csv(parts.validation, (dir / "validation.csv").string());

        const EpochMetrics& final_m = result.history.back();
        const EpochMetrics& best_m = best_epoch(result.history);
        nlohmann::json summary = {{"final", metrics_json(final_m)},
                                  {"best", metrics_json(best_m)},
                                  {"config", config_json(config)}};
        std::ofstream summary_out(dir / "summary.json", std::ios::binary);
        if (!summary_out || !(summary_out << summary.dump(2) << "\n"))
            throw IoError("train: cannot write summary.json");

        out << "trained " << result.history.size() << " epochs; final val_accuracy "
            << final_m.val_accuracy << ", best " << best_m.val_accuracy << " at epoch "
            << best_m.epoch << "; outputs in " << dir.string() << "\n";
        return exit_code::ok;
    } catch (const UnsupportedInverseError& e) {
        err << e.what() << "\n";
        return exit_code::no_inverse;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return exit_code::bad_config;
    } catch (const DegenerateSplitError& e) {
        err << e.what() << "\n";
        return exit_code::bad_config;
    } catch (const DimensionMismatchError& e) {
        err << e.what() << "\n";
        return exit_code::dims;
    } catch (const EmptyDatasetError& e) {
        err << e.what() << "\n";
        return exit_code::dims;
    } catch (const MalformedRowError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    }
}

int run_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    try {
        const Network net = load_model(a.model_path);
        const Dataset data = load_dataset_csv(a.data_path);
        const Metrics m = evaluate(net, data);
        nlohmann::json j = {{"mse", m.mse}, {"accuracy", m.accuracy}};
        out << j.dump() << "\n";
        return exit_code::ok;
    } catch (const DimensionMismatchError& e) {
        err << e.what() << "\n";
        return exit_code::dims;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return exit_code::bad_config;
    } catch (const MalformedRowError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    } catch (const EmptyDatasetError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    }
}

int run_plot(const PlotArgs& a, std::ostream& out, std::ostream& err) {
    try {
        if (a.grid_steps == 0)
            throw ConfigError("plot: --grid-steps must be positive");
        const Network net = load_model(a.model_path);
        const Dataset data = load_dataset_csv(a.data_path);
        if (data.dim() != 2 || net.input_dim != 2) {
            err << "plot: needs 2-D features (dataset is " << data.dim() << "-D, model takes "
                << net.input_dim << "-D)\n";
            return exit_code::not_2d;
        }

        const Box box = expanded_bounds(data, 0.10);
        std::vector<int> predicted(data.size());
        for (std::size_t s = 0; s < data.size(); ++s)
            predicted[s] = predict_class(net, data.features[s]);

        write_scatter_svg(data, predicted, box, a.out_svg);
        fs::path grid_path(a.out_svg);
        grid_path.replace_extension();
        grid_path += "_grid.csv";
        write_grid_csv(net, box, a.grid_steps, grid_path.string());

        out << "wrote " << a.out_svg << " and " << grid_path.string() << " ("
            << a.grid_steps * a.grid_steps << " grid rows)\n";
        return exit_code::ok;
    } catch (const ConfigError& e) {
        err << e.what() << "\n";
        return exit_code::bad_config;
    } catch (const MalformedRowError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    } catch (const EmptyDatasetError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return exit_code::io;
    }
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"spirals", "circles", "xor", "wbc"};
    return names;
}

bool is_preset(const std::string& name) {
    const auto& names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentPreset preset(const std::string& name) {
    ExperimentPreset p;
    p.name = name;
    p.config.activation = "softplus";
    p.config.validation_fraction = 0.25;
    p.config.trainer_kind = TrainerKind::Pinv;
    if (name == "spirals") {
        p.config.layer_sizes = {16, 32, 64, 32, 2};
        p.config.learning_rate = 2e-4;
        p.config.epochs = 1000;
    } else if (name == "circles") {
        p.config.layer_sizes = {16, 64, 32, 2};
        p.config.learning_rate = 1e-5;
        p.config.epochs = 1000;
    } else if (name == "xor") {
        p.config.layer_sizes = {4, 8, 16, 32, 1};
        p.config.learning_rate = 1e-4;
        p.config.epochs = 100;
    } else if (name == "wbc") {
        p.config.layer_sizes = {16, 2};
        p.config.learning_rate = 1e-4;
        p.config.epochs = 1000;
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return p;
}

Dataset preset_dataset(const std::string& name, std::uint64_t seed,
                       const std::string& data_path) {
    if (name == "spirals")
        return gen_two_spirals(193, 0.0, seed);
    if (name == "circles")
        return gen_circles(100, 0.5, 0.0, seed);
    if (name == "xor")
        return gen_xor(1000, seed);
    if (name == "wbc") {
        if (data_path.empty())
            throw ConfigError("wbc preset needs --data <breast-cancer-wisconsin.data>");
        return load_wbc_csv(data_path);
    }
    throw ConfigError("unknown preset: " + name);
}

TrainConfig load_train_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("config: cannot open " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ConfigError("config: " + path + " is not a JSON object");

    static const std::vector<std::string> known{
        "layer_sizes", "activation",          "learning_rate", "epochs",
        "seed",        "validation_fraction", "trainer_kind",  "shuffle_each_epoch"};
    for (const auto& [key, value] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError("config: unknown key '" + key + "'");

    auto require_unsigned = [&path](const nlohmann::json& j, const char* key) {
        if (!j.is_number_unsigned())
            throw ConfigError("config: " + path + ": " + key +
                              " must be a non-negative integer");
        return j.get<std::uint64_t>();
    };

    TrainConfig c;
    try {
        if (!doc.contains("layer_sizes"))
            throw ConfigError("config: layer_sizes is required");
        if (!doc["layer_sizes"].is_array())
            throw ConfigError("config: " + path + ": layer_sizes must be an array");
        for (const auto& size : doc["layer_sizes"])
            c.layer_sizes.push_back(static_cast<std::size_t>(require_unsigned(size, "layer_sizes")));
        if (doc.contains("activation")) c.activation = doc["activation"].get<std::string>();
        if (doc.contains("learning_rate")) c.learning_rate = doc["learning_rate"].get<double>();
        if (doc.contains("epochs"))
            c.epochs = static_cast<std::size_t>(require_unsigned(doc["epochs"], "epochs"));
        if (doc.contains("seed")) c.seed = require_unsigned(doc["seed"], "seed");
        if (doc.contains("validation_fraction"))
            c.validation_fraction = doc["validation_fraction"].get<double>();
        if (doc.contains("trainer_kind"))
            c.trainer_kind = parse_trainer_kind(doc["trainer_kind"].get<std::string>());
        if (doc.contains("shuffle_each_epoch"))
            c.shuffle_each_epoch = doc["shuffle_each_epoch"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: " + path + ": " + e.what());
    }
    return c;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"feedforward networks trained by pseudoinverse block corrections",
                 "pinvnet"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "write a synthetic dataset CSV");
    gen->add_option("name", gen_args.name, "spirals | circles | xor")->required();
    gen->add_option("-o,--out", gen_args.out_path, "output CSV path (default <name>.csv)");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--points", gen_args.points, "points per class (xor: total points)");
    gen->add_option("--noise", gen_args.noise, "Gaussian noise stddev");
    gen->add_option("--inner-factor", gen_args.inner_factor, "circles: inner radius factor");

    TrainArgs train_args;
    CLI::App* tr = app.add_subcommand("train", "train a network and write run artifacts");
    tr->add_option("target", train_args.target, "preset (spirals|circles|xor|wbc) or config JSON")
        ->required();
    tr->add_option("-o,--out", train_args.out_dir, "output directory (default runs/<name>)");
    tr->add_option("--data", train_args.data_path, "dataset file (UCI CSV for wbc)");
    tr->add_option("--seed", train_args.seed, "random seed");
    tr->add_option("--trainer", train_args.trainer, "pinv | gd");
    tr->add_option("--activation", train_args.activation,
                   "identity | softplus | leaky_relu | tanh");
    tr->add_option("--epochs", train_args.epochs, "epoch count override");
    tr->add_option("--lr", train_args.learning_rate, "learning rate override");

    EvalArgs eval_args;
    CLI::App* ev = app.add_subcommand("eval", "print mse/accuracy of a model on a dataset");
    ev->add_option("model", eval_args.model_path, "model JSON")->required();
    ev->add_option("dataset", eval_args.data_path, "dataset CSV")->required();

    PlotArgs plot_args;
    CLI::App* pl = app.add_subcommand("plot", "write SVG scatter and decision-grid CSV");
    pl->add_option("model", plot_args.model_path, "model JSON")->required();
    pl->add_option("dataset", plot_args.data_path, "dataset CSV")->required();
    pl->add_option("-o,--out", plot_args.out_svg, "output SVG path");
    pl->add_option("--grid-steps", plot_args.grid_steps, "grid resolution per axis");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (gen->parsed()) return run_generate(gen_args, out, err);
    if (tr->parsed()) return run_train(train_args, out, err);
    if (ev->parsed()) return run_eval(eval_args, out, err);
    if (pl->parsed()) return run_plot(plot_args, out, err);
    return exit_code::ok;
}

}  // namespace pinvnet::cli
