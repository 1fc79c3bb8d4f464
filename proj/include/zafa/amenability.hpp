#pragma once

#include <string>
#include <vector>

#include "zafa/char_table.hpp"

namespace zafa {

/// AM(ZA(G)): the normalized double sum over pairs of irreducibles of
/// d_pi d_pi' |sum_C |C|^2 chi_pi(C) conj(chi_pi'(C))|.
double am_za(const CharacterTable& ct, Exec exec = Exec::parallel);

/// AM(ZL1(G)): the normalized double sum over pairs of classes of
/// |C||C'| |sum_pi d_pi^2 chi_pi(C) conj(chi_pi(C'))|.
double am_zl1(const CharacterTable& ct, Exec exec = Exec::parallel);

/// Amenability constant of a finite product from the factor constants.
double am_za_product(const std::vector<double>& factors);

/// Debug statistic: the pi == pi' restriction of the am_za double sum,
/// a lower bound for it.  Not part of any report.
double am_za_diagonal_lower_bound(const CharacterTable& ct);

inline double stan_lower_bound() { return 2.0 / std::sqrt(3.0); }

/// Power sequences certifying that repeated non-abelian factors force the
/// amenability constant to diverge.
struct DivergenceCertificate {
    std::vector<double> am_powers;     // AM(ZA(factor))^j, j = 1..n
    std::vector<double> bound_powers;  // (2/sqrt(3))^j
    bool monotone = false;             // am_powers strictly increasing
    bool dominates = false;            // am_powers[j] >= bound_powers[j]
};

/// Throws "certificate vacuous: AM = 1" for an abelian factor.
DivergenceCertificate product_divergence_certificate(int n, const CharacterTable& factor);

struct AmenabilityReport {
    std::string group;
    std::int64_t order = 1;
    int k = 1;
    double am_za = 1.0;
    double am_zl1 = 1.0;
    bool is_abelian = true;
    bool lower_bound_ok = true;  // am_za >= 2/sqrt(3) - 1e-9 when non-abelian
    double diagonal_norm = 1.0;  // recomputed through the diagonal element
};

AmenabilityReport amenability_report(const TablePtr& table, Exec exec = Exec::parallel);

}  // namespace zafa
