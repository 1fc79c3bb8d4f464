#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>

namespace zafa {

using cplx = std::complex<double>;

/// Execution policy for the kernels that exist in both a serial reference
/// form and an OpenMP form.
enum class Exec { serial, parallel };

/// Neumaier-compensated accumulator.  Summation order is fixed by the
/// caller, so results are reproducible bit-for-bit.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

/// splitmix64: tiny portable PRNG used where reproducibility across
/// standard-library implementations matters.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Uniform double in [0,1), derived portably from splitmix64 bits.
inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64_u32(std::uint32_t v, std::uint64_t h) {
    return fnv1a64(&v, sizeof(v), h);
}

}  // namespace zafa
