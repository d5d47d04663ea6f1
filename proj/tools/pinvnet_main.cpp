#include "pinvnet/cli.hpp"

int main(int argc, char** argv) {
    return pinvnet::cli::run({argv + 1, argv + argc});
}
