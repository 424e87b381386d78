#include "wiretap/rng.hpp"

#include <cmath>

namespace wiretap {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t RandomStream::derive_key(std::uint64_t seed, std::uint64_t a,
                                       std::uint64_t b) {
    std::uint64_t k = mix64(seed + kGamma);
    k = mix64(k ^ (a + kGamma));
    k = mix64(k ^ (b + kGamma));
    return k;
}

std::uint64_t RandomStream::next_u64() {
    return mix64(key_ + (++counter_) * kGamma);
}

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

cxd RandomStream::next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return cxd(re * M_SQRT1_2, im * M_SQRT1_2);
}

Matrix RandomStream::complex_gaussian(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = next_complex_normal();
    return m;
}

}  // namespace wiretap
