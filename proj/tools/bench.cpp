// Times the OpenMP grid kernels against their serial reference
// implementations on random inputs and checks that both routes agree.

#include "gaidec/kary.hpp"
#include "gaidec/parallel.hpp"
#include "gaidec/rational.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

gaidec::kary::MobiusMap random_mobius(int n, int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator_log(0, 3);
    std::uniform_int_distribution<int> keep(0, 9);

    gaidec::kary::MobiusMap m;
    m.n = n;
    m.k = k;
    const gaidec::LevelGrid grid = gaidec::LevelGrid::uniform(n, k);
    gaidec::GridPoint p = grid.origin();
    do {
        if (keep(rng) == 0) { // ~10% fill
            const int num = numerator(rng);
            if (num != 0) m.coeffs[p] = gaidec::Rat(num) / (1 << denominator_log(rng));
        }
    } while (grid.next(p));
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare parallel grid kernels with their serial references"};
    int n = 6, k = 4, trials = 3;
    std::uint64_t seed = 20240917;
    app.add_option("--n", n, "number of axes")->check(CLI::PositiveNumber);
    app.add_option("--k", k, "levels per axis (0..k)")->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "repetitions per kernel")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    const gaidec::kary::MobiusMap m = random_mobius(n, k, seed);
    std::printf("grid {0..%d}^%d, %zu points, %zu nonzero coefficients, %d trial(s)\n", k, n,
                gaidec::LevelGrid::uniform(n, k).size(), m.coeffs.size(), trials);

    gaidec::kary::KaryGame game;
    double serial_ms = 0.0, parallel_ms = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto start = Clock::now();
        gaidec::kary::KaryGame reference = gaidec::kary::zeta_serial(m);
        serial_ms += ms_since(start);
        start = Clock::now();
        game = gaidec::kary::zeta(m);
        parallel_ms += ms_since(start);
        if (game.values != reference.values) {
            std::fprintf(stderr, "zeta: parallel and serial results differ\n");
            return 1;
        }
    }
    std::printf("%-8s serial %10.2f ms   parallel %10.2f ms   speedup %.2fx\n", "zeta", serial_ms / trials,
                parallel_ms / trials, serial_ms / parallel_ms);

    serial_ms = parallel_ms = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto start = Clock::now();
        gaidec::kary::MobiusMap reference = gaidec::kary::mobius_serial(game);
        serial_ms += ms_since(start);
        start = Clock::now();
        gaidec::kary::MobiusMap fast = gaidec::kary::mobius(game);
        parallel_ms += ms_since(start);
        if (fast.coeffs != reference.coeffs || fast.coeffs != m.coeffs) {
            std::fprintf(stderr, "mobius: routes disagree\n");
            return 1;
        }
    }
    std::printf("%-8s serial %10.2f ms   parallel %10.2f ms   speedup %.2fx\n", "mobius", serial_ms / trials,
                parallel_ms / trials, serial_ms / parallel_ms);
    return 0;
}
