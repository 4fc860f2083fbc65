#include "streameval/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstring>

namespace streameval::simd {
namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void standardize_avx2(double* out, const double* x, const double* mean,
                      const double* inv_std, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(mean + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, _mm256_loadu_pd(inv_std + i)));
    }
    for (; i < n; ++i) out[i] = (x[i] - mean[i]) * inv_std[i];
}

void add_scaled_avx2(double* out, const double* x, double a, const double* z,
                     std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(z + i), _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = x[i] + a * z[i];
}

void mask_avx2(double* x, const std::uint8_t* bits, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        std::int32_t packed;
        std::memcpy(&packed, bits + i, 4);
        __m256i w = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
        __m256i zero = _mm256_cmpeq_epi64(w, _mm256_setzero_si256());
        __m256d kept = _mm256_andnot_pd(_mm256_castsi256_pd(zero), _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(x + i, kept);
    }
    for (; i < n; ++i) {
        if (bits[i] == 0) x[i] = 0.0;
    }
}

std::size_t count_equal_avx2(const std::int32_t* a, const std::int32_t* b,
                             std::size_t n) {
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i eq = _mm256_cmpeq_epi32(
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        c += static_cast<std::size_t>(
            _mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
    }
    for (; i < n; ++i) c += (a[i] == b[i]) ? 1u : 0u;
    return c;
}

}  // namespace

const Kernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Kernels k{dot_avx2,       axpy_avx2, standardize_avx2,
                           add_scaled_avx2, mask_avx2, count_equal_avx2};
    return &k;
}

}  // namespace streameval::simd

#else

namespace streameval::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace streameval::simd

#endif
