#pragma once

#include <map>
#include <vector>

#include "zafa/numeric.hpp"

namespace zafa::su2 {

/// Point of the unit circle labelling a conjugacy class C_zeta.
struct CirclePoint {
    cplx z;
    double theta;  // arg z

    static CirclePoint from_angle(double theta);
    /// Validates |z| = 1 within 1e-12.
    static CirclePoint from_complex(cplx z);

    /// z^m evaluated as exp(i m theta), so powers stay on the circle.
    cplx power(long m) const;
};

/// Character of pi_l at C_zeta: the finite sum over zeta^{l-2k} near the
/// singular points +-1, the closed two-term ratio elsewhere.
cplx chi(long l, const CirclePoint& zeta);

/// Levels of pi_l (x) pi_m: |l-m|, |l-m|+2, ..., l+m, multiplicity one each.
std::vector<long> clebsch_gordan(long l, long m);

/// Central trigonometric polynomial sum_l alpha_l chi_l.  The so3 flag
/// restricts the support to even levels (the SO(3) spectrum).
class CentralTrigPoly {
public:
    static constexpr long kLevelCap = 10000;

    explicit CentralTrigPoly(bool so3 = false) : so3_(so3) {}

    static CentralTrigPoly character(long l, bool so3 = false) {
        CentralTrigPoly u(so3);
        u.set(l, 1.0);
        return u;
    }

    CentralTrigPoly& set(long l, cplx alpha);
    cplx coeff(long l) const {
        auto it = coeffs_.find(l);
        return it == coeffs_.end() ? cplx(0.0) : it->second;
    }
    CentralTrigPoly& add(long l, cplx alpha) { return set(l, coeff(l) + alpha); }
    const std::map<long, cplx>& coeffs() const { return coeffs_; }
    bool so3() const { return so3_; }

private:
    std::map<long, cplx> coeffs_;
    bool so3_;
};

/// ZA norm: sum_l |alpha_l| (l + 1).
double norm(const CentralTrigPoly& u);

cplx evaluate(const CentralTrigPoly& u, const CirclePoint& zeta);

/// Product decomposition through the Clebsch-Gordan rule.
CentralTrigPoly multiply(const CentralTrigPoly& u, const CentralTrigPoly& v);

/// D_z chi_l = (l(z^{l+2}-z^{-l-2}) - (l+2)(z^l-z^{-l})) / (z-z^{-1})^2.
/// Requires Im z > 0.
cplx derivation_chi(long l, const CirclePoint& z);

/// Sharp bound (4l+4)/|z-z^{-1}|^2 on |D_z chi_l|.
double derivation_bound(long l, const CirclePoint& z);

/// Point derivation at C_z, extended linearly over the support of u.
/// Throws "derivation undefined on the real-eigenvalue locus" if Im z <= 0.
cplx point_derivation(const CirclePoint& z, const CentralTrigPoly& u);

/// |D_z(uv) - u(C_z) D_z v - (D_z u) v(C_z)|.
double derivation_identity_deviation(const CirclePoint& z, const CentralTrigPoly& u,
                                     const CentralTrigPoly& v);

/// Independent oracle: fourth-order central difference of t -> u(C_{z e^{it}}).
cplx derivation_finite_difference(const CirclePoint& z, const CentralTrigPoly& u,
                                  double step = 1e-5);

struct DerivationSample {
    long l;
    double theta;
    double magnitude;  // |D_z chi_l|
    double bound;
    double slack;  // bound - magnitude
};

/// Grid sweep of the derivation bound over levels x angles.
std::vector<DerivationSample> derivation_bound_sweep(const std::vector<long>& levels,
                                                     const std::vector<double>& thetas,
                                                     Exec exec = Exec::parallel);

}  // namespace zafa::su2
