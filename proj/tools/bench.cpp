// Compares the serial reference kernels against the OpenMP ones on a
// deliberately oversized workload and checks that both give identical
// results. Build and run:
//   cmake --build build --target pinvnet_bench && ./build/tools/pinvnet_bench
#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pinvnet/datasets.hpp"
#include "pinvnet/network.hpp"
#include "pinvnet/plot.hpp"
#include "pinvnet/trainer.hpp"

using namespace pinvnet;

namespace {

constexpr int kRuns = 5;

template <typename F>
double best_seconds(F&& f) {
    double best = 1e300;
    for (int r = 0; r < kRuns; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t rows = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 50000;
    const std::size_t grid_steps = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 320;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    const Dataset data = gen_xor(rows, 1);
    const Network net = init_network({64, 64, 2}, 2, softplus(), 7);

    Metrics serial_m, parallel_m;
    const double t_eval_serial = best_seconds([&] { serial_m = evaluate_serial(net, data); });
    const double t_eval_parallel = best_seconds([&] { parallel_m = evaluate(net, data); });
    if (serial_m.mse != parallel_m.mse || serial_m.accuracy != parallel_m.accuracy) {
        std::cerr << "FAIL: evaluate results diverge between serial and OpenMP\n";
        return 1;
    }

    const Box box = expanded_bounds(data, 0.10);
    std::vector<int> serial_grid, parallel_grid;
    const double t_grid_serial =
        best_seconds([&] { serial_grid = predict_grid_serial(net, box, grid_steps); });
    const double t_grid_parallel =
        best_seconds([&] { parallel_grid = predict_grid(net, box, grid_steps); });
    if (serial_grid != parallel_grid) {
        std::cerr << "FAIL: grid predictions diverge between serial and OpenMP\n";
        return 1;
    }

    std::cout << "evaluate      " << rows << " rows:  serial " << t_eval_serial * 1e3
              << " ms, openmp " << t_eval_parallel * 1e3 << " ms, speedup "
              << t_eval_serial / t_eval_parallel << "x\n";
    std::cout << "predict_grid  " << grid_steps << "x" << grid_steps << ":  serial "
              << t_grid_serial * 1e3 << " ms, openmp " << t_grid_parallel * 1e3
              << " ms, speedup " << t_grid_serial / t_grid_parallel << "x\n";
    std::cout << "results identical across both paths\n";
    return 0;
}
