#include "zafa/amenability.hpp"

#include <cmath>
#include <stdexcept>

#include "zafa/kernels.hpp"
#include "zafa/za.hpp"

namespace zafa {

double am_za(const CharacterTable& ct, Exec exec) {
    const int k = ct.k;
    std::vector<cplx> rows(static_cast<std::size_t>(k) * k);
    for (int p = 0; p < k; ++p)
        for (int j = 0; j < k; ++j)
            rows[static_cast<std::size_t>(p) * k + j] =
                static_cast<double>(ct.class_sizes[j]) * ct.at(p, j);

    std::vector<double> mags(static_cast<std::size_t>(k) * k);
    kernels::gram_abs(rows, k, k, mags, exec);

    KahanSum acc;
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            acc.add(static_cast<double>(ct.degrees[p]) * ct.degrees[q] *
                    mags[static_cast<std::size_t>(p) * k + q]);
    const double n = static_cast<double>(ct.group_order);
    return acc.value() / (n * n);
}

double am_zl1(const CharacterTable& ct, Exec exec) {
    const int k = ct.k;
    std::vector<cplx> rows(static_cast<std::size_t>(k) * k);
    for (int j = 0; j < k; ++j)
        for (int p = 0; p < k; ++p)
            rows[static_cast<std::size_t>(j) * k + p] =
                static_cast<double>(ct.degrees[p]) * ct.at(p, j);

    std::vector<double> mags(static_cast<std::size_t>(k) * k);
    kernels::gram_abs(rows, k, k, mags, exec);

    KahanSum acc;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            acc.add(static_cast<double>(ct.class_sizes[i]) * ct.class_sizes[j] *
                    mags[static_cast<std::size_t>(i) * k + j]);
    const double n = static_cast<double>(ct.group_order);
    return acc.value() / (n * n);
}

double am_za_product(const std::vector<double>& factors) {
    double out = 1.0;
    for (double v : factors) {
        if (v < 1.0) throw std::invalid_argument("amenability constants are >= 1");
        out *= v;
    }
    return out;
}

double am_za_diagonal_lower_bound(const CharacterTable& ct) {
    const int k = ct.k;
    KahanSum acc;
    for (int p = 0; p < k; ++p) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) {
            const double w = static_cast<double>(ct.class_sizes[j]);
            s += w * w * std::norm(ct.at(p, j));
        }
        acc.add(static_cast<double>(ct.degrees[p]) * ct.degrees[p] * s);
    }
    const double n = static_cast<double>(ct.group_order);
    return acc.value() / (n * n);
}

DivergenceCertificate product_divergence_certificate(int n, const CharacterTable& factor) {
    if (factor.k == factor.group_order)
        throw std::runtime_error("certificate vacuous: AM = 1");
    const double am = am_za(factor);
    const double bound = stan_lower_bound();
    DivergenceCertificate cert;
    double ap = 1.0, bp = 1.0;
    for (int j = 1; j <= n; ++j) {
        ap *= am;
        bp *= bound;
        cert.am_powers.push_back(ap);
        cert.bound_powers.push_back(bp);
    }
    cert.monotone = true;
    cert.dominates = true;
    for (int j = 0; j < n; ++j) {
        if (j > 0 && cert.am_powers[j] <= cert.am_powers[j - 1]) cert.monotone = false;
        if (cert.am_powers[j] < cert.bound_powers[j] - 1e-12) cert.dominates = false;
    }
    return cert;
}

AmenabilityReport amenability_report(const TablePtr& table, Exec exec) {
    const CharacterTable& ct = *table;
    AmenabilityReport r;
    r.group = ct.group_label;
    r.order = ct.group_order;
    r.k = ct.k;
    r.am_za = am_za(ct, exec);
    r.am_zl1 = am_zl1(ct, exec);
    r.is_abelian = (static_cast<std::int64_t>(ct.k) == ct.group_order);
    r.diagonal_norm = za_norm(diagonal_element(table));
    r.lower_bound_ok = r.is_abelian ? std::abs(r.am_za - 1.0) <= 1e-9
                                    : r.am_za >= stan_lower_bound() - 1e-9;
    return r;
}

}  // namespace zafa
