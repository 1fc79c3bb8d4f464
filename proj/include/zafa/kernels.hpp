#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zafa/numeric.hpp"

namespace zafa {

class FiniteGroup;
struct ConjugacyData;
struct ClassConstants;

// Data-parallel inner loops, each in a serial reference form and an OpenMP
// form.  Both forms of a kernel produce bit-identical output: every output
// cell is computed independently with a fixed-order inner loop, so the
// parallel schedule cannot change the result.
namespace kernels {

ClassConstants class_constants_serial(const FiniteGroup& g, const ConjugacyData& cd);
ClassConstants class_constants_parallel(const FiniteGroup& g, const ConjugacyData& cd);

/// Magnitudes of the Gram matrix of `nrows` complex rows of length `dim`:
/// out[i*nrows + j] = |sum_d rows[i][d] * conj(rows[j][d])|.
/// Both amenability-constant sums reduce to this.
void gram_abs_serial(std::span<const cplx> rows, int nrows, int dim,
                     std::span<double> out);
void gram_abs_parallel(std::span<const cplx> rows, int nrows, int dim,
                       std::span<double> out);

inline void gram_abs(std::span<const cplx> rows, int nrows, int dim,
                     std::span<double> out, Exec exec) {
    if (exec == Exec::serial)
        gram_abs_serial(rows, nrows, dim, out);
    else
        gram_abs_parallel(rows, nrows, dim, out);
}

}  // namespace kernels
}  // namespace zafa
