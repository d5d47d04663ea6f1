#include "pinvnet/activations.hpp"

#include <cmath>

#include "pinvnet/errors.hpp"

namespace pinvnet {

Activation identity() {
    return {ActKind::Identity};
}

Activation softplus(double clamp_epsilon) {
    if (!(clamp_epsilon > 0.0))
        throw ConfigError("softplus: clamp_epsilon must be > 0");
    Activation a{ActKind::Softplus};
    a.clamp_epsilon = clamp_epsilon;
    return a;
}

Activation leaky_relu(double slope) {
    if (!(slope > 0.0 && slope < 1.0))
        throw ConfigError("leaky_relu: slope must be in (0, 1)");
    Activation a{ActKind::LeakyRelu};
    a.leaky_slope = slope;
    return a;
}

Activation tanh_activation() {
    return {ActKind::Tanh};
}

double apply(const Activation& a, double x) {
    switch (a.kind) {
    case ActKind::Identity:
        return x;
    case ActKind::Softplus:
        // ln(1+e^x) in the overflow-safe form max(x,0) + ln(1+e^-|x|)
        return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
    case ActKind::LeakyRelu:
        return x >= 0.0 ? x : a.leaky_slope * x;
    case ActKind::Tanh:
        return std::tanh(x);
    }
    throw ConfigError("apply: unknown activation kind");
}

double invert(const Activation& a, double y) {
    switch (a.kind) {
    case ActKind::Identity:
        return y;
    case ActKind::Softplus: {
        // ln(e^y' - 1) with y' floored at clamp_epsilon, in the stable form
        // y' + ln(1 - e^-y')
        const double yc = std::max(y, a.clamp_epsilon);
        return yc + std::log(-std::expm1(-yc));
    }
    case ActKind::LeakyRelu:
        return y >= 0.0 ? y : y / a.leaky_slope;
    case ActKind::Tanh:
        throw UnsupportedInverseError(
            "tanh: inverse domain is (-1,1), not usable for target back-transformation");
    }
    throw ConfigError("invert: unknown activation kind");
}

double derivative(const Activation& a, double x) {
    switch (a.kind) {
    case ActKind::Identity:
        return 1.0;
    case ActKind::Softplus:
        return 1.0 / (1.0 + std::exp(-x));
    case ActKind::LeakyRelu:
        return x >= 0.0 ? 1.0 : a.leaky_slope;
    case ActKind::Tanh: {
        const double t = std::tanh(x);
        return 1.0 - t * t;
    }
    }
    throw ConfigError("derivative: unknown activation kind");
}

bool has_inverse(const Activation& a) {
    return a.kind != ActKind::Tanh;
}

std::string_view activation_name(ActKind kind) {
    switch (kind) {
    case ActKind::Identity: return "identity";
    case ActKind::Softplus: return "softplus";
    case ActKind::LeakyRelu: return "leaky_relu";
    case ActKind::Tanh: return "tanh";
    }
    return "unknown";
}

Activation parse_activation(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "softplus") return softplus();
    if (name == "leaky_relu") return leaky_relu();
    if (name == "tanh") return tanh_activation();
    throw ConfigError("unknown activation: " + name);
}

}  // namespace pinvnet
