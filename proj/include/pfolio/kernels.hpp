#pragma once

// Inner loops of the performance metric, as runtime-dispatched kernels.
// A portfolio evaluation is elementwise arithmetic over the precision axis,
// so each kernel has a scalar reference and an AVX2 variant.
//
// Contract for bit-identical results across variants:
//   - mul_pow raises each element by left-to-right (LSB-first) binary
//     exponentiation, the same multiply sequence in every variant;
//   - reductions accumulate into 4 stride-lanes combined as (l0+l1)+(l2+l3),
//     with the tail folded in sequentially afterwards.
// Variants are equivalence-tested for exact equality in test_kernels.

#include <cstddef>
#include <cstdint>
#include <string>

namespace pfolio::kernels {

struct Ops {
    // acc[i] *= q[i]^e  (e == 0 is a no-op)
    void (*mul_pow)(double* acc, const double* q, std::size_t n, std::uint32_t e);
    // (1/n) * sum(v[i])
    double (*mean)(const double* v, std::size_t n);
    // (1/n) * sum(1 - acc[i])
    double (*mean_one_minus)(const double* acc, std::size_t n);
    // (1/n) * sum(1 - acc[i] * q[i]); the fused single-candidate lookahead
    double (*mean_one_minus_mul)(const double* acc, const double* q, std::size_t n);
    // #{ i : v[i] > 0 }
    std::size_t (*count_positive)(const double* v, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when the CPU or build lacks AVX2

// Active kernel set. Defaults to the best supported variant; the
// PFOLIO_KERNELS env var ("scalar", "avx2", "auto") overrides at startup.
const Ops& active();

// Force a variant by name ("scalar", "avx2", "auto"); throws ConfigError on
// unknown or unsupported names. Intended for tests and the CLI flag.
void force(const std::string& name);

}  // namespace pfolio::kernels
