#pragma once

#include <cstdint>
#include <vector>

#include "pinvnet/activations.hpp"
#include "pinvnet/linalg.hpp"

namespace pinvnet {

// One neuron holds a weight AND a bias per input coordinate: input i
// contributes c_i*w_i + b_i to the pre-activation sum. The per-input bias is
// what makes each (w_i, b_i) block independently correctable.
struct NeuronParams {
    Vector weights;
    Vector biases;

    std::size_t fan_in() const { return weights.size(); }
};

struct Layer {
    std::vector<NeuronParams> neurons;
    Activation activation;

    std::size_t size() const { return neurons.size(); }
    std::size_t fan_in() const { return neurons.front().fan_in(); }
};

struct Network {
    std::vector<Layer> layers;
    std::size_t input_dim = 0;

    std::size_t output_dim() const { return layers.back().size(); }
};

// Everything the backward passes need from one forward evaluation.
struct LayerTrace {
    Vector input;    // what entered the layer
    Vector preact;   // per-neuron sum of block outputs
    Vector postact;  // preact after the activation
};
using ForwardTrace = std::vector<LayerTrace>;

// Weights and biases drawn independently uniform on [-0.5, 0.5); identical
// seeds give bitwise-identical networks.
Network init_network(const std::vector<std::size_t>& layer_sizes, std::size_t input_dim,
                     const Activation& activation, std::uint64_t seed);

// Propagates input through every layer; when trace is non-null it is filled
// with one LayerTrace per layer. Read-only on the network.
Vector forward(const Network& net, const Vector& input, ForwardTrace* trace = nullptr);

struct BlockCorrection {
    double dw = 0.0;
    double db = 0.0;
};

// Minimum-norm solution of c*dw + db = (c*w + b) - block_target, i.e. the
// row pseudoinverse of [c 1] applied to the block's output error.
BlockCorrection block_correction(double c, double w, double b, double block_target);

// Splits the pre-activation target equally across the fan_in blocks, applies
// the learning-rate-scaled corrections, and returns the input each block
// would have needed under the PRE-update parameters: (target_i - b_i) / w_i
// with |w_i| floored at 1e-6 to keep the division finite.
Vector neuron_backward(NeuronParams& params, const Vector& input, double preact_target,
                       double lr);

// Inverts the activation per neuron, corrects every neuron against the given
// post-activation targets, and returns the per-input mean of the neurons'
// required inputs (equal weightage across neurons).
Vector layer_backward(Layer& layer, const Vector& input, const Vector& postact_targets,
                      double lr);

// Pseudoinverse backward pass over the whole network, last layer first; each
// earlier layer's targets are the required inputs of the layer after it.
// Layer inputs are read from the trace, so updates never feed on themselves.
void backward(Network& net, const ForwardTrace& trace, const Vector& target_output,
              double lr);

// Gradient-descent baseline on the same architecture: exact analytic
// gradients of 0.5*sum((output - target)^2) through the per-input-bias
// neurons.
void gd_backward(Network& net, const ForwardTrace& trace, const Vector& target_output,
                 double lr);

}  // namespace pinvnet
