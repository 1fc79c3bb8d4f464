#include "zafa/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace zafa::su2 {

namespace {

constexpr double kSingularWindow = 1e-6;  // switch to the finite sum near +-1

bool near_real_axis_poles(const CirclePoint& zeta) {
    return std::abs(zeta.z - 1.0) < kSingularWindow ||
           std::abs(zeta.z + 1.0) < kSingularWindow;
}

}  // namespace

CirclePoint CirclePoint::from_angle(double theta) {
    return CirclePoint{std::polar(1.0, theta), theta};
}

CirclePoint CirclePoint::from_complex(cplx z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::invalid_argument("point is not on the unit circle");
    return CirclePoint{z, std::arg(z)};
}

cplx CirclePoint::power(long m) const {
    return std::polar(1.0, static_cast<double>(m) * theta);
}

cplx chi(long l, const CirclePoint& zeta) {
    if (l < 0) throw std::invalid_argument("negative level");
    if (near_real_axis_poles(zeta)) {
        cplx s = 0.0;
        for (long k = 0; k <= l; ++k) s += zeta.power(l - 2 * k);
        return s;
    }
    return (zeta.power(l + 1) - zeta.power(-l - 1)) / (zeta.z - zeta.power(-1));
}

std::vector<long> clebsch_gordan(long l, long m) {
    if (l < 0 || m < 0) throw std::invalid_argument("negative level");
    std::vector<long> out;
    for (long s = std::abs(l - m); s <= l + m; s += 2) out.push_back(s);
    return out;
}

CentralTrigPoly& CentralTrigPoly::set(long l, cplx alpha) {
    if (l < 0 || l > kLevelCap) throw std::invalid_argument("level outside support cap");
    if (so3_ && l % 2 != 0)
        throw std::invalid_argument("odd level in an SO(3)-restricted polynomial");
    if (alpha == cplx(0.0))
        coeffs_.erase(l);
    else
        coeffs_[l] = alpha;
    return *this;
}

double norm(const CentralTrigPoly& u) {
    KahanSum acc;
    for (const auto& [l, alpha] : u.coeffs())
        acc.add(std::abs(alpha) * static_cast<double>(l + 1));
    return acc.value();
}

cplx evaluate(const CentralTrigPoly& u, const CirclePoint& zeta) {
    cplx s = 0.0;
    for (const auto& [l, alpha] : u.coeffs()) s += alpha * chi(l, zeta);
    return s;
}

CentralTrigPoly multiply(const CentralTrigPoly& u, const CentralTrigPoly& v) {
    CentralTrigPoly out(u.so3() && v.so3());
    for (const auto& [l, a] : u.coeffs())
        for (const auto& [m, b] : v.coeffs())
            for (long s : clebsch_gordan(l, m)) out.add(s, a * b);
    return out;
}

cplx derivation_chi(long l, const CirclePoint& z) {
    if (z.z.imag() <= 0.0)
        throw std::runtime_error("derivation undefined on the real-eigenvalue locus");
    if (near_real_axis_poles(z)) {
        cplx s = 0.0;
        for (long k = 0; k <= l; ++k)
            s += static_cast<double>(l - 2 * k) * z.power(l - 2 * k);
        return s;
    }
    const cplx w = z.z - z.power(-1);
    const cplx num = static_cast<double>(l) * (z.power(l + 2) - z.power(-l - 2)) -
                     static_cast<double>(l + 2) * (z.power(l) - z.power(-l));
    return num / (w * w);
}

double derivation_bound(long l, const CirclePoint& z) {
    return (4.0 * static_cast<double>(l) + 4.0) / std::norm(z.z - z.power(-1));
}

cplx point_derivation(const CirclePoint& z, const CentralTrigPoly& u) {
    if (z.z.imag() <= 0.0)
        throw std::runtime_error("derivation undefined on the real-eigenvalue locus");
    cplx s = 0.0;
    for (const auto& [l, alpha] : u.coeffs()) s += alpha * derivation_chi(l, z);
    return s;
}

double derivation_identity_deviation(const CirclePoint& z, const CentralTrigPoly& u,
                                     const CentralTrigPoly& v) {
    const cplx lhs = point_derivation(z, multiply(u, v));
    const cplx rhs = evaluate(u, z) * point_derivation(z, v) +
                     point_derivation(z, u) * evaluate(v, z);
    return std::abs(lhs - rhs);
}

cplx derivation_finite_difference(const CirclePoint& z, const CentralTrigPoly& u,
                                  double step) {
    auto f = [&](double t) { return evaluate(u, CirclePoint::from_angle(z.theta + t)); };
    const cplx dt = (-f(2 * step) + 8.0 * f(step) - 8.0 * f(-step) + f(-2 * step)) /
                    (12.0 * step);
    return dt / cplx(0.0, 1.0);
}

std::vector<DerivationSample> derivation_bound_sweep(const std::vector<long>& levels,
                                                     const std::vector<double>& thetas,
                                                     Exec exec) {
    const std::int64_t nl = static_cast<std::int64_t>(levels.size());
    const std::int64_t nt = static_cast<std::int64_t>(thetas.size());
    std::vector<DerivationSample> out(static_cast<std::size_t>(nl * nt));

    auto fill = [&](std::int64_t idx) {
        const long l = levels[static_cast<std::size_t>(idx / nt)];
        const double theta = thetas[static_cast<std::size_t>(idx % nt)];
        const CirclePoint z = CirclePoint::from_angle(theta);
        const double mag = std::abs(derivation_chi(l, z));
        const double bnd = derivation_bound(l, z);
        out[static_cast<std::size_t>(idx)] = {l, theta, mag, bnd, bnd - mag};
    };

    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < nl * nt; ++i) fill(i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < nl * nt; ++i) fill(i);
    }
    return out;
}

}  // namespace zafa::su2
