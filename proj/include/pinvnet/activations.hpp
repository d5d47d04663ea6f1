#pragma once

#include <string>
#include <string_view>

namespace pinvnet {

enum class ActKind { Identity, Softplus, LeakyRelu, Tanh };

// A named nonlinearity with a forward map, an inverse map used to transform
// required outputs back into pre-activation space, and a derivative for the
// gradient-descent baseline. Tanh is forward/derivative only: its inverse
// domain is (-1,1), which the correction method cannot use.
struct Activation {
    ActKind kind = ActKind::Identity;
    double leaky_slope = 0.01;    // LeakyRelu only, in (0,1)
    double clamp_epsilon = 0.05;  // Softplus inverse floor, > 0
};

Activation identity();
Activation softplus(double clamp_epsilon = 0.05);
Activation leaky_relu(double slope = 0.01);
Activation tanh_activation();

double apply(const Activation& a, double x);

// Inverse of apply. Softplus targets are floored at clamp_epsilon first so
// the one-hot 0 target maps to a finite pre-activation instead of -inf.
// Throws UnsupportedInverseError for Tanh.
double invert(const Activation& a, double y);

double derivative(const Activation& a, double x);

bool has_inverse(const Activation& a);

// Config-file names: "identity", "softplus", "leaky_relu", "tanh".
std::string_view activation_name(ActKind kind);
Activation parse_activation(const std::string& name);

}  // namespace pinvnet
