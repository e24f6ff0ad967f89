// Compares the serial and OpenMP schedules of the fraction-free elimination
// kernel and of the degree-parallel Betti table. Results must agree exactly;
// only the timings differ.

#include <chrono>
#include <iostream>
#include <random>

#include "sullivan/cohomology.hpp"
#include "sullivan/corpus.hpp"
#include "sullivan/linalg.hpp"

using namespace sullivan;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int size = argc > 1 ? std::atoi(argv[1]) : 140;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-9, 9);

    linalg::MatQ m(size, size + 20);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = Rat(entry(rng));

    auto t0 = Clock::now();
    int rank_serial = linalg::rank(m, linalg::Exec::Serial);
    double serial = seconds_since(t0);

    t0 = Clock::now();
    int rank_parallel = linalg::rank(m, linalg::Exec::Parallel);
    double parallel = seconds_since(t0);

    std::cout << "bareiss rank, " << m.rows << "x" << m.cols << " matrix\n";
    std::cout << "  serial:   rank " << rank_serial << "  " << serial << " s\n";
    std::cout << "  parallel: rank " << rank_parallel << "  " << parallel << " s\n";
    if (rank_serial != rank_parallel) {
        std::cout << "MISMATCH\n";
        return 1;
    }

    Model model = build_named_model("thmD:n3p4:W2zero");
    int window = model_invariants(model).fd_predicted;

    t0 = Clock::now();
    CohomologyReport rs = betti_table(model, window, linalg::Exec::Serial);
    double tserial = seconds_since(t0);

    t0 = Clock::now();
    CohomologyReport rp = betti_table(model, window, linalg::Exec::Parallel);
    double tparallel = seconds_since(t0);

    std::cout << "betti table, " << model.name() << " up to degree " << window << "\n";
    std::cout << "  serial:   total " << rs.total_dim << "  " << tserial << " s\n";
    std::cout << "  parallel: total " << rp.total_dim << "  " << tparallel << " s\n";
    for (int k = 0; k <= window; ++k) {
        if (rs.slice(k).betti != rp.slice(k).betti) {
            std::cout << "MISMATCH at degree " << k << "\n";
            return 1;
        }
    }
    return 0;
}
