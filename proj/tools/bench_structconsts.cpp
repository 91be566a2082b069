// Times the structure-constant table build of A_{n,k}, serial against the
// OpenMP-parallel path, and checks that both produce identical tables.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forkalg/json_io.hpp"

using namespace forkalg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = 5, k = 3;
    if (argc >= 3) {
        n = std::atoi(argv[1]);
        k = std::atoi(argv[2]);
    }
    std::cout << "A_{" << n << "," << k << "}" << std::endl;

    DiagramAlgebra serial(n, k);
    std::cout << "dim = " << serial.dim() << ", compatible pairs = "
              << serial.compatible_pair_count() << std::endl;

    auto t0 = std::chrono::steady_clock::now();
    serial.build_table(false);
    double ts = seconds_since(t0);
    std::cout << "serial build:   " << ts << " s" << std::endl;

    DiagramAlgebra parallel(n, k);
    t0 = std::chrono::steady_clock::now();
    parallel.build_table(true);
    double tp = seconds_since(t0);
#ifdef _OPENMP
    std::cout << "parallel build: " << tp << " s on " << omp_get_max_threads()
              << " threads (speedup " << ts / tp << "x)" << std::endl;
#else
    std::cout << "parallel build: " << tp << " s (compiled without OpenMP)" << std::endl;
#endif

    if (dump_algebra(serial) != dump_algebra(parallel)) {
        std::cout << "MISMATCH between serial and parallel tables" << std::endl;
        return 1;
    }
    std::cout << "tables identical" << std::endl;
    return 0;
}
