#include "streameval/simd/kernels.hpp"

namespace streameval::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void standardize_scalar(double* out, const double* x, const double* mean,
                        const double* inv_std, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - mean[i]) * inv_std[i];
}

void add_scaled_scalar(double* out, const double* x, double a, const double* z,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * z[i];
}

void mask_scalar(double* x, const std::uint8_t* bits, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (bits[i] == 0) x[i] = 0.0;
    }
}

std::size_t count_equal_scalar(const std::int32_t* a, const std::int32_t* b,
                               std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += (a[i] == b[i]) ? 1u : 0u;
    return c;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{dot_scalar,       axpy_scalar, standardize_scalar,
                           add_scaled_scalar, mask_scalar, count_equal_scalar};
    return k;
}

}  // namespace streameval::simd
