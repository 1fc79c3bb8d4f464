#include "zafa/group.hpp"
#include "zafa/kernels.hpp"

namespace zafa::kernels {

ClassConstants class_constants_parallel(const FiniteGroup& g, const ConjugacyData& cd) {
    const int n = g.order();
    const int k = cd.k();
    ClassConstants cc;
    cc.k = k;
    cc.a.assign(static_cast<std::size_t>(k) * k * k, 0);
    // classes write disjoint slices a[.,.,m]
#pragma omp parallel for schedule(dynamic)
    for (int m = 0; m < k; ++m) {
        const int z = cd.representatives[m];
        for (int x = 0; x < n; ++x) {
            const int y = g.multiply(g.inverse(x), z);
            ++cc.a[(static_cast<std::size_t>(cd.class_of[x]) * k + cd.class_of[y]) * k + m];
        }
    }
    return cc;
}

void gram_abs_parallel(std::span<const cplx> rows, int nrows, int dim,
                       std::span<double> out) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < nrows; ++j) {
            cplx s = 0.0;
            const cplx* a = rows.data() + static_cast<std::size_t>(i) * dim;
            const cplx* b = rows.data() + static_cast<std::size_t>(j) * dim;
            for (int d = 0; d < dim; ++d) s += a[d] * std::conj(b[d]);
            out[static_cast<std::size_t>(i) * nrows + j] = std::abs(s);
        }
}

}  // namespace zafa::kernels
