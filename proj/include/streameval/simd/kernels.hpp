#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace streameval::simd {

// Data-parallel inner loops used by the learners, the standardizer and the
// noise-variability sampler. Each entry has a scalar reference implementation
// and, on x86-64 with AVX2, a vectorized variant selected at runtime. The
// scalar versions define the semantics; the vector versions are equivalence-
// tested against them (exactly for elementwise ops, to tolerance for
// reductions, whose summation order differs).
struct Kernels {
    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    // out[i] = (x[i] - mean[i]) * inv_std[i]
    void (*standardize)(double* out, const double* x, const double* mean,
                        const double* inv_std, std::size_t n);
    // out[i] = x[i] + a * z[i]
    void (*add_scaled)(double* out, const double* x, double a, const double* z,
                       std::size_t n);
    // x[i] = 0 where bits[i] == 0
    void (*mask)(double* x, const std::uint8_t* bits, std::size_t n);
    // number of indices with a[i] == b[i]
    std::size_t (*count_equal)(const std::int32_t* a, const std::int32_t* b,
                               std::size_t n);
};

const Kernels& scalar_kernels();

// Returns nullptr when the build or the CPU lacks AVX2.
const Kernels* avx2_kernels();

// Active backend. Honors STREAMEVAL_SIMD=scalar|avx2|auto (default auto) on
// first use; force_backend overrides it, mainly for tests.
const Kernels& active();
std::string_view active_name();
void force_backend(std::string_view name);

}  // namespace streameval::simd
