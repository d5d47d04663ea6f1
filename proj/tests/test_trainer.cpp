#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pinvnet/errors.hpp"
#include "pinvnet/trainer.hpp"

using namespace pinvnet;
namespace fs = std::filesystem;

namespace {

SplitDataset xor_split(std::uint64_t seed, std::size_t count = 200) {
    return split(gen_xor(count, seed), 0.25, seed);
}

TrainConfig small_config() {
    TrainConfig cfg;
    cfg.layer_sizes = {4, 2};
    cfg.activation = "softplus";
    cfg.learning_rate = 1e-3;
    cfg.epochs = 5;
    cfg.seed = 1;
    return cfg;
}

bool histories_identical(const std::vector<EpochMetrics>& a,
                         const std::vector<EpochMetrics>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].epoch != b[i].epoch || a[i].train_mse != b[i].train_mse ||
            a[i].val_mse != b[i].val_mse || a[i].val_accuracy != b[i].val_accuracy)
            return false;
    return true;
}

Network constant_network(const Vector& outputs, std::size_t input_dim) {
    Network net;
    net.input_dim = input_dim;
    Layer layer;
    layer.activation = identity();
    for (double o : outputs) {
        NeuronParams p;
        p.weights.assign(input_dim, 0.0);
        p.biases.assign(input_dim, 0.0);
        p.biases[0] = o;
        layer.neurons.push_back(std::move(p));
    }
    net.layers.push_back(std::move(layer));
    return net;
}

}  // namespace

TEST_CASE("train is deterministic for a fixed config") {
    const SplitDataset data = xor_split(3);
    const TrainConfig cfg = small_config();
    const TrainResult a = train(data, cfg);
    const TrainResult b = train(data, cfg);
    CHECK(histories_identical(a.history, b.history));
    for (std::size_t k = 0; k < a.net.layers.size(); ++k)
        for (std::size_t j = 0; j < a.net.layers[k].neurons.size(); ++j) {
            CHECK(a.net.layers[k].neurons[j].weights == b.net.layers[k].neurons[j].weights);
            CHECK(a.net.layers[k].neurons[j].biases == b.net.layers[k].neurons[j].biases);
        }

    TrainConfig other = cfg;
    other.seed = 2;
    CHECK(!histories_identical(a.history, train(data, other).history));
}

TEST_CASE("one repeated sample is fit exactly after the first epoch") {
    SplitDataset data;
    data.train.class_count = 2;
    data.validation.class_count = 2;
    for (int i = 0; i < 8; ++i) {
        data.train.features.push_back({2.0});
        data.train.labels.push_back(1);
    }
    data.validation.features.push_back({2.0});
    data.validation.labels.push_back(1);

    TrainConfig cfg;
    cfg.layer_sizes = {1};
    cfg.activation = "identity";
    cfg.learning_rate = 1.0;
    cfg.epochs = 3;
    cfg.seed = 7;
    cfg.trainer_kind = TrainerKind::Pinv;

    const TrainResult r = train(data, cfg);
    CHECK(r.history.front().train_mse <= 1e-18);
    CHECK(r.history.front().val_accuracy == 1.0);
}

TEST_CASE("history has one entry per epoch with sane metrics") {
    const TrainResult r = train(xor_split(5), small_config());
    REQUIRE(r.history.size() == 5);
    for (std::size_t i = 0; i < r.history.size(); ++i) {
        CHECK(r.history[i].epoch == i + 1);
        CHECK(r.history[i].train_mse >= 0.0);
        CHECK(r.history[i].val_mse >= 0.0);
        CHECK(r.history[i].val_accuracy >= 0.0);
        CHECK(r.history[i].val_accuracy <= 1.0);
    }
}

TEST_CASE("train works with the gd baseline and rejects pinv with tanh") {
    const SplitDataset data = xor_split(9);
    TrainConfig cfg = small_config();
    cfg.activation = "tanh";
    cfg.trainer_kind = TrainerKind::Gd;
    CHECK_NOTHROW(train(data, cfg));

    cfg.trainer_kind = TrainerKind::Pinv;
    CHECK_THROWS_AS(train(data, cfg), UnsupportedInverseError);
}

TEST_CASE("config validation") {
    const SplitDataset data = xor_split(11);
    TrainConfig cfg = small_config();

    cfg.epochs = 0;
    CHECK_THROWS_AS(validate_config(cfg, data), ConfigError);

    cfg = small_config();
    cfg.learning_rate = 0.0;
    CHECK_THROWS_AS(validate_config(cfg, data), ConfigError);

    cfg = small_config();
    cfg.layer_sizes.clear();
    CHECK_THROWS_AS(validate_config(cfg, data), ConfigError);

    cfg = small_config();
    cfg.validation_fraction = 1.5;
    CHECK_THROWS_AS(validate_config(cfg, data), ConfigError);

    cfg = small_config();
    cfg.activation = "swish";
    CHECK_THROWS_AS(validate_config(cfg, data), ConfigError);

    // last layer must have 1 or class_count neurons
    cfg = small_config();
    cfg.layer_sizes = {4, 3};
    CHECK_THROWS_AS(validate_config(cfg, data), DimensionMismatchError);

    cfg = small_config();
    cfg.layer_sizes = {4, 1};
    CHECK_NOTHROW(validate_config(cfg, data));
}

TEST_CASE("evaluate scores a perfect one-hot network") {
    // identity passthrough of 2-D one-hot features
    Network net;
    net.input_dim = 2;
    Layer layer;
    layer.activation = identity();
    layer.neurons.push_back({{1.0, 0.0}, {0.0, 0.0}});
    layer.neurons.push_back({{0.0, 1.0}, {0.0, 0.0}});
    net.layers.push_back(layer);

    Dataset d;
    d.class_count = 2;
    d.features = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}};
    d.labels = {0, 1, 0};

    const Metrics m = evaluate(net, d);
    CHECK(m.mse == 0.0);
    CHECK(m.accuracy == 1.0);
}

TEST_CASE("evaluate of a constant network on balanced data is 0.5") {
    const Network net = constant_network({0.9, 0.1}, 2);
    Dataset d;
    d.class_count = 2;
    for (int i = 0; i < 10; ++i) {
        d.features.push_back({double(i), double(-i)});
        d.labels.push_back(i % 2);
    }
    CHECK(evaluate(net, d).accuracy == doctest::Approx(0.5));
}

TEST_CASE("single-output networks threshold at 0.5") {
    const Network net = constant_network({0.7}, 1);
    Dataset d;
    d.class_count = 2;
    d.features = {{3.0}};
    d.labels = {1};
    const Metrics m = evaluate(net, d);
    CHECK(m.accuracy == 1.0);
    CHECK(m.mse == doctest::Approx(0.09));

    d.labels = {0};
    CHECK(evaluate(net, d).accuracy == 0.0);
}

TEST_CASE("evaluate is read-only and matches the serial reference bitwise") {
    const SplitDataset data = xor_split(13, 400);
    const TrainResult r = train(data, small_config());
    const Network net = r.net;

    const Metrics parallel = evaluate(net, data.validation);
    const Metrics serial = evaluate_serial(net, data.validation);
    CHECK(parallel.mse == serial.mse);
    CHECK(parallel.accuracy == serial.accuracy);

    for (std::size_t k = 0; k < net.layers.size(); ++k)
        for (std::size_t j = 0; j < net.layers[k].neurons.size(); ++j) {
            CHECK(net.layers[k].neurons[j].weights == r.net.layers[k].neurons[j].weights);
            CHECK(net.layers[k].neurons[j].biases == r.net.layers[k].neurons[j].biases);
        }
}

TEST_CASE("evaluate validates dimensions") {
    const Network net = constant_network({0.5, 0.5}, 3);
    Dataset d;
    d.class_count = 2;
    d.features = {{1.0, 2.0}};
    d.labels = {0};
    CHECK_THROWS_AS(evaluate(net, d), DimensionMismatchError);

    Dataset three;
    three.class_count = 3;
    three.features = {{1.0, 2.0, 3.0}};
    three.labels = {2};
    CHECK_THROWS_AS(evaluate(net, three), DimensionMismatchError);
}

TEST_CASE("best_epoch picks the highest accuracy, earliest on ties") {
    std::vector<EpochMetrics> history{{1, 0, 0, 0.6}, {2, 0, 0, 0.9}, {3, 0, 0, 0.8}};
    CHECK(best_epoch(history).epoch == 2);

    std::vector<EpochMetrics> flat{{1, 0, 0, 0.7}, {2, 0, 0, 0.7}, {3, 0, 0, 0.7}};
    CHECK(best_epoch(flat).epoch == 1);

    std::vector<EpochMetrics> one{{1, 0, 0, 0.5}};
    CHECK(best_epoch(one).epoch == 1);

    CHECK_THROWS_AS(best_epoch({}), EmptyHistoryError);
}

TEST_CASE("history CSV carries 10 significant digits") {
    const fs::path path =
        fs::temp_directory_path() / "pinvnet_trainer_tests" / "history.csv";
    fs::create_directories(path.parent_path());
    std::vector<EpochMetrics> history{{1, 1.0 / 3.0, 2.0 / 3.0, 0.125}};
    write_history_csv(history, path.string());

    std::ifstream in(path);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "epoch,train_mse,val_mse,val_accuracy");
    CHECK(row == "1,0.3333333333,0.6666666667,0.125");
}

TEST_CASE("trainer kinds parse and print") {
    CHECK(parse_trainer_kind("pinv") == TrainerKind::Pinv);
    CHECK(parse_trainer_kind("gd") == TrainerKind::Gd);
    CHECK_THROWS_AS(parse_trainer_kind("adam"), ConfigError);
    CHECK(trainer_kind_name(TrainerKind::Pinv) == "pinv");
    CHECK(trainer_kind_name(TrainerKind::Gd) == "gd");
}
