#include "pinvnet/network.hpp"

#include <cmath>
#include <utility>

#include "pinvnet/errors.hpp"
#include "pinvnet/rng.hpp"

namespace pinvnet {

namespace {

constexpr double kMinWeight = 1e-6;

// Required inputs divide by the weight; weights inside (-1e-6, 1e-6) are
// pushed to the nearest bound, with sign(0) taken as +1.
double clamp_away_from_zero(double w) {
    if (w >= kMinWeight || w <= -kMinWeight)
        return w;
    return w < 0.0 ? -kMinWeight : kMinWeight;
}

}  // namespace

Network init_network(const std::vector<std::size_t>& layer_sizes, std::size_t input_dim,
                     const Activation& activation, std::uint64_t seed) {
    if (layer_sizes.empty())
        throw ConfigError("init_network: layer_sizes must be non-empty");
    if (input_dim == 0)
        throw ConfigError("init_network: input_dim must be positive");

    RandomStream rng(seed);
    Network net;
    net.input_dim = input_dim;
    net.layers.reserve(layer_sizes.size());

    std::size_t fan_in = input_dim;
    for (std::size_t size : layer_sizes) {
        if (size == 0)
            throw ConfigError("init_network: layer sizes must be positive");
        Layer layer;
        layer.activation = activation;
        layer.neurons.resize(size);
        for (NeuronParams& p : layer.neurons) {
            p.weights.resize(fan_in);
            p.biases.resize(fan_in);
            for (double& w : p.weights) w = rng.uniform(-0.5, 0.5);
            for (double& b : p.biases) b = rng.uniform(-0.5, 0.5);
        }
        net.layers.push_back(std::move(layer));
        fan_in = size;
    }
    return net;
}

Vector forward(const Network& net, const Vector& input, ForwardTrace* trace) {
    if (input.size() != net.input_dim)
        throw DimensionMismatchError("forward: input length does not match input_dim");
    if (trace) {
        trace->clear();
        trace->reserve(net.layers.size());
    }

    Vector current = input;
    for (const Layer& layer : net.layers) {
        Vector preact(layer.size());
        Vector postact(layer.size());
        for (std::size_t j = 0; j < layer.size(); ++j) {
            const NeuronParams& p = layer.neurons[j];
            double sum = 0.0;
            for (std::size_t i = 0; i < p.fan_in(); ++i)
                sum += current[i] * p.weights[i] + p.biases[i];
            preact[j] = sum;
            postact[j] = apply(layer.activation, sum);
        }
        if (trace)
            trace->push_back({std::move(current), std::move(preact), postact});
        current = std::move(postact);
    }
    return current;
}

BlockCorrection block_correction(double c, double w, double b, double block_target) {
    const double residual = (c * w + b) - block_target;
    const double denom = c * c + 1.0;  // the row [c 1] is never all-zero
    return {c * residual / denom, residual / denom};
}

Vector neuron_backward(NeuronParams& params, const Vector& input, double preact_target,
                       double lr) {
    const std::size_t n = params.fan_in();
    if (input.size() != n)
        throw DimensionMismatchError("neuron_backward: input length does not match fan_in");

    const double block_target = preact_target / static_cast<double>(n);
    Vector dw(n), db(n), required(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BlockCorrection corr =
            block_correction(input[i], params.weights[i], params.biases[i], block_target);
        dw[i] = corr.dw;
        db[i] = corr.db;
        required[i] = (block_target - params.biases[i]) / clamp_away_from_zero(params.weights[i]);
    }
    params.weights = scale_sub(params.weights, dw, lr);
    params.biases = scale_sub(params.biases, db, lr);
    return required;
}

Vector layer_backward(Layer& layer, const Vector& input, const Vector& postact_targets,
                      double lr) {
    if (postact_targets.size() != layer.size())
        throw DimensionMismatchError("layer_backward: one target per neuron required");
    if (input.size() != layer.fan_in())
        throw DimensionMismatchError("layer_backward: input length does not match fan_in");

    Vector mean_required(layer.fan_in(), 0.0);
    for (std::size_t j = 0; j < layer.size(); ++j) {
        const double preact_target = invert(layer.activation, postact_targets[j]);
        const Vector required = neuron_backward(layer.neurons[j], input, preact_target, lr);
        for (std::size_t i = 0; i < required.size(); ++i)
            mean_required[i] += required[i];
    }
    for (double& r : mean_required)
        r /= static_cast<double>(layer.size());
    return mean_required;
}

void backward(Network& net, const ForwardTrace& trace, const Vector& target_output,
              double lr) {
    if (trace.size() != net.layers.size())
        throw DimensionMismatchError("backward: trace does not match network depth");
    if (target_output.size() != net.output_dim())
        throw DimensionMismatchError("backward: target length does not match output layer");

    Vector targets = target_output;
    for (std::size_t k = net.layers.size(); k-- > 0;)
        targets = layer_backward(net.layers[k], trace[k].input, targets, lr);
}

void gd_backward(Network& net, const ForwardTrace& trace, const Vector& target_output,
                 double lr) {
    if (trace.size() != net.layers.size())
        throw DimensionMismatchError("gd_backward: trace does not match network depth");
    if (target_output.size() != net.output_dim())
        throw DimensionMismatchError("gd_backward: target length does not match output layer");

    // d(0.5*sum((out - t)^2)) / d(postact)
    Vector post_grad(net.output_dim());
    for (std::size_t j = 0; j < post_grad.size(); ++j)
        post_grad[j] = trace.back().postact[j] - target_output[j];

    for (std::size_t k = net.layers.size(); k-- > 0;) {
        Layer& layer = net.layers[k];
        const LayerTrace& lt = trace[k];

        Vector delta(layer.size());
        for (std::size_t j = 0; j < layer.size(); ++j)
            delta[j] = post_grad[j] * derivative(layer.activation, lt.preact[j]);

        // propagate through the pre-update weights before touching them
        if (k > 0) {
            Vector prev(layer.fan_in(), 0.0);
            for (std::size_t j = 0; j < layer.size(); ++j)
                for (std::size_t i = 0; i < layer.fan_in(); ++i)
                    prev[i] += delta[j] * layer.neurons[j].weights[i];
            post_grad = std::move(prev);
        }

        for (std::size_t j = 0; j < layer.size(); ++j) {
            NeuronParams& p = layer.neurons[j];
            for (std::size_t i = 0; i < p.fan_in(); ++i) {
                p.weights[i] -= lr * delta[j] * lt.input[i];
                p.biases[i] -= lr * delta[j];
            }
        }
    }
}

}  // namespace pinvnet
