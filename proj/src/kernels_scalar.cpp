// Scalar reference kernels. Reductions mirror the 4-lane structure of the
// SIMD variants (see kernels.hpp) so every variant returns identical bits.

#include "pfolio/kernels.hpp"

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

void mul_pow_scalar(double* acc, const double* q, std::size_t n, std::uint32_t e) {
    if (e == 0) return;
    if (e == 1) {
        for (std::size_t i = 0; i < n; ++i) acc[i] *= q[i];
        return;
    }
    for (std::size_t i = 0; i < n; ++i) acc[i] *= pow_u32(q[i], e);
}

double mean_scalar(const double* v, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lane[0] += v[i];
        lane[1] += v[i + 1];
        lane[2] += v[i + 2];
        lane[3] += v[i + 3];
    }
    double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) sum += v[i];
    return sum / static_cast<double>(n);
}

double mean_one_minus_scalar(const double* acc, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lane[0] += 1.0 - acc[i];
        lane[1] += 1.0 - acc[i + 1];
        lane[2] += 1.0 - acc[i + 2];
        lane[3] += 1.0 - acc[i + 3];
    }
    double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) sum += 1.0 - acc[i];
    return sum / static_cast<double>(n);
}

double mean_one_minus_mul_scalar(const double* acc, const double* q, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lane[0] += 1.0 - acc[i] * q[i];
        lane[1] += 1.0 - acc[i + 1] * q[i + 1];
        lane[2] += 1.0 - acc[i + 2] * q[i + 2];
        lane[3] += 1.0 - acc[i + 3] * q[i + 3];
    }
    double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) sum += 1.0 - acc[i] * q[i];
    return sum / static_cast<double>(n);
}

std::size_t count_positive_scalar(const double* v, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += v[i] > 0.0 ? 1 : 0;
    return count;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{mul_pow_scalar,        mean_scalar,           mean_one_minus_scalar,
                         mean_one_minus_mul_scalar, count_positive_scalar, "scalar"};
    return ops;
}

}  // namespace pfolio::kernels
