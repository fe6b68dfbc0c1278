// AVX2 kernel variants. Compiled with -mavx2 and -ffp-contract=off; no FMA is
// used so every lane performs the same multiply/add sequence as the scalar
// reference and results match it bit for bit.

#include "pfolio/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define PFOLIO_X86 1
#else
#define PFOLIO_X86 0
#endif

#if PFOLIO_X86
#include <immintrin.h>

namespace pfolio::kernels {
namespace {

inline double pow_u32(double base, std::uint32_t e) {
    double result = 1.0;
    double b = base;
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

inline __m256d pow_u32_pd(__m256d base, std::uint32_t e) {
    __m256d result = _mm256_set1_pd(1.0);
    __m256d b = base;
    while (e != 0) {
        if (e & 1u) result = _mm256_mul_pd(result, b);
        e >>= 1;
        if (e != 0) b = _mm256_mul_pd(b, b);
    }
    return result;
}

// (l0 + l1) + (l2 + l3), matching the scalar lane combine.
inline double combine_lanes(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void mul_pow_avx2(double* acc, const double* q, std::size_t n, std::uint32_t e) {
    if (e == 0) return;
    std::size_t i = 0;
    if (e == 1) {
        for (; i + 4 <= n; i += 4) {
            const __m256d a = _mm256_loadu_pd(acc + i);
            const __m256d b = _mm256_loadu_pd(q + i);
            _mm256_storeu_pd(acc + i, _mm256_mul_pd(a, b));
        }
        for (; i < n; ++i) acc[i] *= q[i];
        return;
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(acc + i);
        const __m256d p = pow_u32_pd(_mm256_loadu_pd(q + i), e);
        _mm256_storeu_pd(acc + i, _mm256_mul_pd(a, p));
    }
    for (; i < n; ++i) acc[i] *= pow_u32(q[i], e);
}

double mean_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    double sum = combine_lanes(acc);
    for (; i < n; ++i) sum += v[i];
    return sum / static_cast<double>(n);
}

double mean_one_minus_avx2(const double* a, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_sub_pd(one, _mm256_loadu_pd(a + i)));
    }
    double sum = combine_lanes(acc);
    for (; i < n; ++i) sum += 1.0 - a[i];
    return sum / static_cast<double>(n);
}

double mean_one_minus_mul_avx2(const double* a, const double* q, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(q + i));
        acc = _mm256_add_pd(acc, _mm256_sub_pd(one, prod));
    }
    double sum = combine_lanes(acc);
    for (; i < n; ++i) sum += 1.0 - a[i] * q[i];
    return sum / static_cast<double>(n);
}

std::size_t count_positive_avx2(const double* v, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(v + i), zero, _CMP_GT_OQ);
        count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(gt)));
    }
    for (; i < n; ++i) count += v[i] > 0.0 ? 1 : 0;
    return count;
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Ops ops{mul_pow_avx2,        mean_avx2,           mean_one_minus_avx2,
                         mean_one_minus_mul_avx2, count_positive_avx2, "avx2"};
    return &ops;
}

}  // namespace pfolio::kernels

#else  // !PFOLIO_X86

namespace pfolio::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace pfolio::kernels

#endif
