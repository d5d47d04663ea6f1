#include "pinvnet/model_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pinvnet/errors.hpp"

namespace pinvnet {

namespace {

constexpr int kModelVersion = 1;

void append_g17(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void append_vector(std::string& out, const Vector& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        append_g17(out, v[i]);
    }
    out += ']';
}

double finite_number(const nlohmann::json& j, const char* what) {
    if (!j.is_number())
        throw ConfigError(std::string("model: ") + what + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw ConfigError(std::string("model: ") + what + " must be finite");
    return v;
}

Vector number_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw ConfigError(std::string("model: ") + what + " must be a non-empty array");
    Vector out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(finite_number(e, what));
    return out;
}

}  // namespace

std::string model_to_json(const Network& net) {
    std::string out;
    out += "{\n";
    out += "  \"format\": \"pinvnet-model\",\n";
    out += "  \"version\": " + std::to_string(kModelVersion) + ",\n";
    out += "  \"input_dim\": " + std::to_string(net.input_dim) + ",\n";
    out += "  \"layers\": [\n";
    for (std::size_t k = 0; k < net.layers.size(); ++k) {
        const Layer& layer = net.layers[k];
        out += "    {\n";
        out += "      \"activation\": \"";
        out += activation_name(layer.activation.kind);
        out += "\",\n";
        out += "      \"leaky_slope\": ";
        append_g17(out, layer.activation.leaky_slope);
        out += ",\n      \"clamp_epsilon\": ";
        append_g17(out, layer.activation.clamp_epsilon);
        out += ",\n      \"neurons\": [\n";
        for (std::size_t j = 0; j < layer.neurons.size(); ++j) {
            const NeuronParams& p = layer.neurons[j];
            out += "        {\"weights\": ";
            append_vector(out, p.weights);
            out += ", \"biases\": ";
            append_vector(out, p.biases);
            out += j + 1 < layer.neurons.size() ? "},\n" : "}\n";
        }
        out += "      ]\n";
        out += k + 1 < net.layers.size() ? "    },\n" : "    }\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

Network model_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ConfigError("model: not valid JSON");
    if (!doc.is_object() || doc.value("format", "") != "pinvnet-model")
        throw ConfigError("model: missing format marker");
    if (doc.value("version", -1) != kModelVersion)
        throw ConfigError("model: unsupported version");
    if (!doc.contains("input_dim") || !doc["input_dim"].is_number_unsigned() ||
        doc["input_dim"].get<std::size_t>() == 0)
        throw ConfigError("model: input_dim must be a positive integer");
    if (!doc.contains("layers") || !doc["layers"].is_array() || doc["layers"].empty())
        throw ConfigError("model: layers must be a non-empty array");

    Network net;
    net.input_dim = doc["input_dim"].get<std::size_t>();
    std::size_t fan_in = net.input_dim;
    for (const auto& jl : doc["layers"]) {
        Activation act = parse_activation(jl.at("activation").get<std::string>());
        if (jl.contains("leaky_slope"))
            act.leaky_slope = finite_number(jl["leaky_slope"], "leaky_slope");
        if (jl.contains("clamp_epsilon"))
            act.clamp_epsilon = finite_number(jl["clamp_epsilon"], "clamp_epsilon");

        Layer layer;
        layer.activation = act;
        if (!jl.contains("neurons") || !jl["neurons"].is_array() || jl["neurons"].empty())
            throw ConfigError("model: each layer needs a non-empty neurons array");
        for (const auto& jn : jl["neurons"]) {
            NeuronParams p;
            p.weights = number_array(jn.at("weights"), "weights");
            p.biases = number_array(jn.at("biases"), "biases");
            if (p.weights.size() != p.biases.size())
                throw ConfigError("model: weights/biases length mismatch");
            if (p.weights.size() != fan_in)
                throw ConfigError("model: neuron fan_in does not chain between layers");
            layer.neurons.push_back(std::move(p));
        }
        fan_in = layer.neurons.size();
        net.layers.push_back(std::move(layer));
    }
    return net;
}

void save_model(const Network& net, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << model_to_json(net)))
        throw IoError("save_model: cannot write " + path);
}

Network load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("load_model: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

}  // namespace pinvnet
