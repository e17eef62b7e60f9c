// Serial reference kernels against their OpenMP versions.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "confobs/be_complex.hpp"
#include "confobs/cochain.hpp"

namespace {

double seconds(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    using namespace confobs;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial s", "omp s", "speedup", "same");

    for (auto [k, t, l] : {std::tuple{4, 2, 6}, std::tuple{4, 3, 4}, std::tuple{4, 3, 5}}) {
        std::vector<PermRank> a, b;
        const double ts = seconds([&] { a = enumerate_serial(k, t, l).flat(); });
        const double tp = seconds([&] { b = enumerate(k, t, l).flat(); });
        char name[64];
        std::snprintf(name, sizeof name, "enumerate(%d,%d,%d)", k, t, l);
        std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, a == b ? "yes" : "NO");
    }

    for (auto [k, t, l] : {std::tuple{4, 2, 2}, std::tuple{4, 2, 4}, std::tuple{4, 3, 2}}) {
        complex_table(k, t, l);
        complex_table(k, t, l + 1);
        gf2::BitMatrix a, b;
        const double ts = seconds([&] { a = coboundary_matrix_serial(k, t, l); });
        const double tp = seconds([&] { b = coboundary_matrix(k, t, l); });
        char name[64];
        std::snprintf(name, sizeof name, "coboundary_matrix(%d,%d,%d)", k, t, l);
        std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
}
