#pragma once

#include <string>

#include "pinvnet/network.hpp"

namespace pinvnet {

// Versioned JSON model document: input_dim, per-layer activation (with its
// parameters) and per-neuron weight/bias arrays. Doubles are printed with 17
// significant digits, so parse-then-serialize reproduces the file byte for
// byte and the parameters bit for bit.
std::string model_to_json(const Network& net);
Network model_from_json(const std::string& text);

void save_model(const Network& net, const std::string& path);
Network load_model(const std::string& path);

}  // namespace pinvnet
