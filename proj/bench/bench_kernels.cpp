// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical output.

#include <omp.h>

#include <cstdio>
#include <vector>

#include "zafa/group.hpp"
#include "zafa/kernels.hpp"
#include "zafa/su2.hpp"

using namespace zafa;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
                name, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
                identical ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());

    {
        const int k = 384;
        std::vector<cplx> rows(static_cast<std::size_t>(k) * k);
        std::uint64_t state = 1;
        for (auto& v : rows)
            v = cplx(2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0);
        std::vector<double> a(rows.size()), b(rows.size());
        const double ts = best_of(3, [&] { kernels::gram_abs_serial(rows, k, k, a); });
        const double tp = best_of(3, [&] { kernels::gram_abs_parallel(rows, k, k, b); });
        report("gram_abs k=384", ts, tp, a == b);
    }

    for (const char* name : {"S6", "S4xS4"}) {
        const auto g = catalog_group(name);
        const auto cd = conjugacy_classes(g);
        ClassConstants a, b;
        const double ts = best_of(3, [&] { a = kernels::class_constants_serial(g, cd); });
        const double tp = best_of(3, [&] { b = kernels::class_constants_parallel(g, cd); });
        char label[64];
        std::snprintf(label, sizeof(label), "class_constants %s", name);
        report(label, ts, tp, a.a == b.a);
    }

    {
        std::vector<long> levels;
        for (long l = 0; l <= 1500; ++l) levels.push_back(l);
        std::vector<double> thetas;
        for (int t = 0; t < 128; ++t) thetas.push_back(0.15 + 2.8 * t / 127.0);
        std::vector<su2::DerivationSample> a, b;
        const double ts =
            best_of(3, [&] { a = su2::derivation_bound_sweep(levels, thetas, Exec::serial); });
        const double tp =
            best_of(3, [&] { b = su2::derivation_bound_sweep(levels, thetas, Exec::parallel); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = a[i].magnitude == b[i].magnitude && a[i].slack == b[i].slack;
        report("derivation sweep l<=1500", ts, tp, same);
    }
    return 0;
}
