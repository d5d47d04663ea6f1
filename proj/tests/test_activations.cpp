#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pinvnet/activations.hpp"
#include "pinvnet/errors.hpp"
#include "pinvnet/rng.hpp"

using namespace pinvnet;

TEST_CASE("apply matches the defining formulas") {
    CHECK(apply(softplus(), 0.0) == doctest::Approx(std::log(2.0)));
    CHECK(apply(leaky_relu(0.01), -2.0) == doctest::Approx(-0.02));
    CHECK(apply(leaky_relu(0.01), 3.0) == 3.0);
    CHECK(apply(identity(), -7.5) == -7.5);
    CHECK(apply(tanh_activation(), 1.0) == doctest::Approx(std::tanh(1.0)));
}

TEST_CASE("softplus apply stays finite for large inputs") {
    const double y = apply(softplus(), 50.0);
    CHECK(std::isfinite(y));
    CHECK(y == doctest::Approx(50.0 + std::log1p(std::exp(-50.0))));
    CHECK(std::isfinite(apply(softplus(), 800.0)));
    CHECK(apply(softplus(), 800.0) == 800.0);
    CHECK(apply(softplus(), -800.0) == 0.0);
}

TEST_CASE("invert undoes apply on exact examples") {
    CHECK(std::abs(invert(softplus(), std::log(2.0))) < 1e-12);
    CHECK(invert(softplus(), 1.0) == doctest::Approx(std::log(std::exp(1.0) - 1.0)));
    CHECK(invert(identity(), 4.25) == 4.25);
    CHECK(invert(leaky_relu(0.01), -0.02) == doctest::Approx(-2.0));
    CHECK(invert(leaky_relu(0.01), 5.0) == 5.0);
}

TEST_CASE("softplus invert floors targets at clamp_epsilon") {
    // the one-hot 0 target lands at the clamp floor instead of -inf
    const double at_floor = std::log(std::exp(0.05) - 1.0);
    CHECK(invert(softplus(), 0.0) == doctest::Approx(at_floor));
    CHECK(invert(softplus(), 0.0) == doctest::Approx(-2.9706).epsilon(1e-4));
    CHECK(invert(softplus(), -100.0) == invert(softplus(), 0.0));
    CHECK(invert(softplus(), 0.05) == invert(softplus(), 0.0));
}

TEST_CASE("tanh has no usable inverse") {
    CHECK_THROWS_AS(invert(tanh_activation(), 0.5), UnsupportedInverseError);
    CHECK(has_inverse(tanh_activation()) == false);
    CHECK(has_inverse(softplus()));
    CHECK(has_inverse(identity()));
    CHECK(has_inverse(leaky_relu()));
}

TEST_CASE("derivative matches the defining formulas") {
    CHECK(derivative(softplus(), 0.0) == doctest::Approx(0.5));
    CHECK(derivative(identity(), 7.0) == 1.0);
    CHECK(derivative(leaky_relu(0.01), -1.0) == doctest::Approx(0.01));
    CHECK(derivative(leaky_relu(0.01), 1.0) == 1.0);
    CHECK(derivative(tanh_activation(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("round trip invert(apply(x)) recovers x") {
    const std::vector<Activation> kinds{identity(), leaky_relu(0.01)};
    for (const Activation& a : kinds)
        for (double x = -30.0; x <= 30.0; x += 0.01)
            CHECK(std::abs(invert(a, apply(a, x)) - x) <= 1e-7);

    // softplus round-trips wherever the output clears the clamp floor
    const Activation sp = softplus();
    const double x_floor = invert(sp, sp.clamp_epsilon);
    for (double x = -30.0; x <= 30.0; x += 0.01)
        if (x >= x_floor)
            CHECK(std::abs(invert(sp, apply(sp, x)) - x) <= 1e-7);
}

TEST_CASE("apply is strictly increasing") {
    const std::vector<Activation> kinds{identity(), softplus(), leaky_relu(0.01),
                                        tanh_activation()};
    RandomStream rng(5);
    for (const Activation& a : kinds) {
        std::vector<double> xs(64);
        for (double& x : xs)
            x = rng.uniform(-10, 10);
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (xs[i] - xs[i - 1] < 1e-6)
                continue;
            CHECK(apply(a, xs[i]) > apply(a, xs[i - 1]));
        }
    }
}

TEST_CASE("derivative agrees with a central finite difference") {
    const std::vector<Activation> kinds{identity(), softplus(), leaky_relu(0.01),
                                        tanh_activation()};
    const double h = 1e-5;
    RandomStream rng(17);
    for (const Activation& a : kinds) {
        for (int iter = 0; iter < 500; ++iter) {
            const double x = rng.uniform(-10, 10);
            if (a.kind == ActKind::LeakyRelu && std::abs(x) < 1e-3)
                continue;  // kink
            const double fd = (apply(a, x + h) - apply(a, x - h)) / (2 * h);
            CHECK(std::abs(derivative(a, x) - fd) <= 1e-4 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(leaky_relu(0.0), ConfigError);
    CHECK_THROWS_AS(leaky_relu(1.0), ConfigError);
    CHECK_THROWS_AS(leaky_relu(-0.5), ConfigError);
    CHECK_THROWS_AS(softplus(0.0), ConfigError);
    CHECK_THROWS_AS(softplus(-1.0), ConfigError);
}

TEST_CASE("names parse and print") {
    CHECK(parse_activation("identity").kind == ActKind::Identity);
    CHECK(parse_activation("softplus").kind == ActKind::Softplus);
    CHECK(parse_activation("leaky_relu").kind == ActKind::LeakyRelu);
    CHECK(parse_activation("tanh").kind == ActKind::Tanh);
    CHECK_THROWS_AS(parse_activation("sigmoid"), ConfigError);
    for (const char* name : {"identity", "softplus", "leaky_relu", "tanh"})
        CHECK(activation_name(parse_activation(name).kind) == name);
}
