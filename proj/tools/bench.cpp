// benchmark comparing the serial reference kernels against the OpenMP ones
#include <chrono>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "cohopf/matrix.hpp"

using namespace cohopf;
using Clock = std::chrono::steady_clock;

namespace {

Mat random_mat(const Field& f, std::size_t n, std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_int(i, j, dist(rng));
    return m;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohopf_bench: serial reference kernels vs the OpenMP kernels"};
    std::size_t size = 96;
    int iters = 3;
    app.add_option("--size", size, "square matrix dimension");
    app.add_option("--iters", iters, "repetitions per measurement");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(12345);
    std::cout << "kernel            field      size   serial(ms)  parallel(ms)  speedup  equal\n";

    for (auto field : {Field::rational(), Field::prime(7)}) {
        Mat a = random_mat(field, size, rng, -3, 3);
        Mat b = random_mat(field, size, rng, -3, 3);

        double ts = 0, tp = 0;
        Mat cs, cp;
        for (int i = 0; i < iters; ++i) {
            auto t0 = Clock::now();
            cs = Mat::mul_serial(a, b);
            ts += ms_since(t0);
            t0 = Clock::now();
            cp = Mat::mul_parallel(a, b);
            tp += ms_since(t0);
        }
        std::printf("matmul            %-9s  %4zu   %10.2f  %12.2f  %7.2f  %s\n", field.str().c_str(), size,
                    ts / iters, tp / iters, ts / tp, cs == cp ? "yes" : "NO");

        ts = tp = 0;
        RrefResult rs, rp;
        for (int i = 0; i < iters; ++i) {
            auto t0 = Clock::now();
            rs = rref_serial(a);
            ts += ms_since(t0);
            t0 = Clock::now();
            rp = rref_parallel(a);
            tp += ms_since(t0);
        }
        std::printf("rref              %-9s  %4zu   %10.2f  %12.2f  %7.2f  %s\n", field.str().c_str(), size,
                    ts / iters, tp / iters, ts / tp, rs.R == rp.R && rs.pivots == rp.pivots ? "yes" : "NO");
    }
    return 0;
}
